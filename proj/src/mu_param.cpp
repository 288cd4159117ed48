#include "llspec/mu_param.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <string>

#include "llspec/error.hpp"

namespace llspec {

namespace {

double form_value(const MuParam::Form& f) {
  constexpr double pi = std::numbers::pi;
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FloatForm>) {
          return v.x;
        } else if constexpr (std::is_same_v<T, RationalForm>) {
          return static_cast<double>(v.p) / static_cast<double>(v.q);
        } else if constexpr (std::is_same_v<T, B1Form>) {
          const double t = pi * static_cast<double>(v.p) / static_cast<double>(v.q);
          // n p mod 2q keeps the cotangent argument small.
          const auto r = (v.n * v.p) % (2 * v.q);
          const double nt = pi * static_cast<double>(r) / static_cast<double>(v.q);
          return -std::cos(t) - std::sin(t) * std::cos(nt) / std::sin(nt);
        } else {
          return 2.0 * std::cos(pi * static_cast<double>(v.j) / static_cast<double>(v.k + 1));
        }
      },
      f);
}

void validate(const MuParam::Form& f) {
  if (const auto* r = std::get_if<RationalForm>(&f)) {
    if (r->q <= 0) throw DomainError("rational mu needs a positive denominator");
    if (std::gcd(r->p, r->q) != 1) throw DomainError("rational mu must be in lowest terms");
  } else if (const auto* b = std::get_if<B1Form>(&f)) {
    if (b->p <= 0 || b->q <= 0 || b->p >= b->q) throw DomainError("b1 form needs 0 < p < q");
    if (std::gcd(b->p, b->q) != 1) throw DomainError("b1 form needs coprime p, q");
    if (b->n < 1) throw DomainError("b1 form needs n >= 1");
    if (b->n % b->q == 0) throw DomainError("b1 form: cot(n p pi/q) undefined when q divides n");
  } else if (const auto* c = std::get_if<B2Form>(&f)) {
    if (c->k < 1 || c->j < 1 || c->j > c->k) throw DomainError("b2 form needs 1 <= j <= k");
  }
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty())
    throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return v;
}

double parse_double(std::string_view s) {
  const std::string str(s);
  char* end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size() || !std::isfinite(v))
    throw ParseError("expected a finite real number, got '" + str + "'");
  return v;
}

std::pair<std::string_view, std::string_view> split(std::string_view s, char sep) {
  const auto pos = s.find(sep);
  if (pos == std::string_view::npos) return {s, {}};
  return {s.substr(0, pos), s.substr(pos + 1)};
}

}  // namespace

MuParam::MuParam(Form form) : form_(form) {
  validate(form_);
  value_ = form_value(form_);
}

MuParam MuParam::rational(std::int64_t p, std::int64_t q) {
  if (q == 0) throw DomainError("rational mu with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  return MuParam(RationalForm{p / g, q / g});
}

MuParam MuParam::b1(std::int64_t p, std::int64_t q, std::int64_t n) {
  return MuParam(B1Form{p, q, n});
}

MuParam MuParam::b2(std::int64_t j, std::int64_t k) { return MuParam(B2Form{j, k}); }

MuParam MuParam::parse(std::string_view text) {
  const auto [tag, rest] = split(text, ':');
  try {
    if (rest.empty() && tag == text) return from_double(parse_double(text));
    if (tag == "float") return from_double(parse_double(rest));
    if (tag == "rat") {
      const auto [num, den] = split(rest, '/');
      return rational(parse_int(num), den.empty() ? 1 : parse_int(den));
    }
    if (tag == "b1") {
      const auto [frac, n] = split(rest, ':');
      const auto [p, q] = split(frac, '/');
      if (q.empty() || n.empty()) throw ParseError("b1 form is b1:p/q:n");
      return b1(parse_int(p), parse_int(q), parse_int(n));
    }
    if (tag == "b2") {
      const auto [j, k] = split(rest, '/');
      if (k.empty()) throw ParseError("b2 form is b2:j/k");
      return b2(parse_int(j), parse_int(k));
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid mu '") + std::string(text) + "': " + e.what());
  }
  throw ParseError("unknown mu form '" + std::string(text) + "'");
}

std::string MuParam::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FloatForm>) {
          char buf[40];
          std::snprintf(buf, sizeof buf, "float:%.17g", v.x);
          return buf;
        } else if constexpr (std::is_same_v<T, RationalForm>) {
          return "rat:" + std::to_string(v.p) + "/" + std::to_string(v.q);
        } else if constexpr (std::is_same_v<T, B1Form>) {
          return "b1:" + std::to_string(v.p) + "/" + std::to_string(v.q) + ":" + std::to_string(v.n);
        } else {
          return "b2:" + std::to_string(v.j) + "/" + std::to_string(v.k);
        }
      },
      form_);
}

std::optional<mpq_class> MuParam::exact() const {
  if (const auto* r = std::get_if<RationalForm>(&form_)) {
    mpq_class v(mpz_class(std::to_string(r->p)), mpz_class(std::to_string(r->q)));
    v.canonicalize();
    return v;
  }
  return std::nullopt;
}

}  // namespace llspec
