#include "llspec/bipoly.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "llspec/error.hpp"
#include "llspec/lamplighter_rep.hpp"

namespace llspec {

BiPoly::BiPoly(std::int64_t constant) {
  if (constant != 0) terms_[{0, 0}] = constant;
}

BiPoly BiPoly::lambda() {
  BiPoly p;
  p.terms_[{1, 0}] = 1;
  return p;
}

BiPoly BiPoly::mu() {
  BiPoly p;
  p.terms_[{0, 1}] = 1;
  return p;
}

std::int64_t BiPoly::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? 0 : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

double BiPoly::evaluate(double lambda, double mu) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_)
    s += static_cast<double>(c) * std::pow(lambda, e.first) * std::pow(mu, e.second);
  return s;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [i, j] = it->first;
    const std::int64_t c = it->second;
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || (i == 0 && j == 0)) os << a;
    if (i > 0) os << "l" << (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) os << "m" << (j > 1 ? "^" + std::to_string(j) : "");
    first = false;
  }
  return os.str();
}

void BiPoly::add_term(Exponents e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

BiPoly g_symbolic(int k) {
  if (k < 0) throw DomainError("g_symbolic: negative index");
  const BiPoly l = BiPoly::lambda();
  const BiPoly m = BiPoly::mu();
  BiPoly prev(1);
  BiPoly cur = m - l;
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    BiPoly next = (-l - m) * cur - BiPoly(4) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BiPoly phi_symbolic(int n) {
  if (n < 0 || n > 4) throw CapacityError("phi_symbolic: supported for 0 <= n <= 4");
  const LevelRep rep = build_level(n, 4);
  const std::size_t dim = rep.dim();

  // Symbolic entries of M_n(mu) - lambda I, stored sparsely per row.
  std::vector<std::vector<std::pair<std::size_t, BiPoly>>> rows(dim);
  {
    std::vector<std::map<std::size_t, BiPoly>> acc(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      acc[i][rep.a[i]] += BiPoly(1);
      acc[rep.a[i]][i] += BiPoly(1);
      acc[i][rep.b[i]] += BiPoly(1);
      acc[rep.b[i]][i] += BiPoly(1);
      acc[i][rep.c[i]] -= BiPoly::mu();
      acc[i][i] -= BiPoly::lambda();
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (auto& [j, p] : acc[i])
        if (!p.is_zero()) rows[i].emplace_back(j, p);
  }

  // Laplace expansion along the last used row, memoized on column subsets.
  std::unordered_map<std::uint32_t, BiPoly> memo;
  auto minor = [&](auto&& self, std::uint32_t cols) -> BiPoly {
    if (cols == 0) return BiPoly(1);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t r = static_cast<std::size_t>(std::popcount(cols)) - 1;
    BiPoly total;
    for (const auto& [j, entry] : rows[r]) {
      const std::uint32_t bit = 1u << j;
      if (!(cols & bit)) continue;
      const int greater = std::popcount(cols & ~((bit << 1) - 1));
      BiPoly term = entry * self(self, cols & ~bit);
      if (greater % 2) total -= term;
      else total += term;
    }
    memo.emplace(cols, total);
    return total;
  };
  return minor(minor, static_cast<std::uint32_t>((1ull << dim) - 1));
}

}  // namespace llspec
