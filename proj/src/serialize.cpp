#include "llspec/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace llspec {

using nlohmann::ordered_json;

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

std::string measure_to_json(const AtomicMeasure& m) {
  ordered_json j;
  j["mu"] = m.mu.to_string();
  j["mu_value"] = m.mu.value();
  j["depth"] = m.depth;
  j["tail_mass"] = format_rational(m.tail_mass);
  ordered_json atoms = ordered_json::array();
  for (const auto& a : m.atoms) {
    ordered_json r;
    r["position"] = a.position;
    r["mass"] = format_rational(a.mass);
    r["indices"] = a.indices;
    r["class"] = to_string(a.cls);
    atoms.push_back(std::move(r));
  }
  j["atoms"] = std::move(atoms);
  return j.dump(2) + "\n";
}

std::string classification_to_json(const MuParam& mu, const Classification& c) {
  auto flag = [](const Membership& m) {
    return ordered_json{{"member", m.member}, {"exact", m.exact}};
  };
  ordered_json j;
  j["mu"] = mu.to_string();
  j["mu_value"] = mu.value();
  j["B1"] = flag(c.b1);
  if (c.b1_witness)
    j["B1"]["witness"] = {{"p", c.b1_witness->p},
                          {"q", c.b1_witness->q},
                          {"n", c.b1_witness->n},
                          {"position", c.b1_witness->position}};
  j["B2"] = flag(c.b2);
  if (c.b2.member) j["B2"]["k"] = c.b2_k;
  j["B3"] = flag(c.b3);
  if (c.b3.member) j["B3"]["k"] = c.b3_k;
  j["heuristic"] = c.heuristic();
  j["diagnostics"] = c.diagnostics;
  return j.dump(2) + "\n";
}

std::string ids_to_csv(const EmpiricalIDS& e) {
  std::ostringstream os;
  os << "eigenvalue,cumulative_weight\n";
  const double n = static_cast<double>(e.site_count);
  for (std::size_t i = 0; i < e.eigenvalues.size(); ++i) {
    if (i + 1 < e.eigenvalues.size() && e.eigenvalues[i + 1] == e.eigenvalues[i]) continue;
    os << format_real(e.eigenvalues[i]) << ',' << format_real(static_cast<double>(i + 1) / n)
       << '\n';
  }
  return os.str();
}

std::string comparison_to_json(const IdsComparison& c, double mu, std::size_t sites,
                               std::uint64_t seed, int depth) {
  ordered_json j;
  j["mu"] = mu;
  j["sites"] = sites;
  j["seed"] = seed;
  j["depth"] = depth;
  j["sup_deviation"] = c.sup_deviation;
  j["truncation_width"] = c.truncation_width;
  ordered_json rows = ordered_json::array();
  for (const auto& r : c.rows)
    rows.push_back({{"x", r.x},
                    {"empirical", r.empirical},
                    {"theory_lo", r.theory_lo},
                    {"theory_hi", r.theory_hi}});
  j["checkpoints"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string gaps_to_csv(const GapSequence& g) {
  std::ostringstream os;
  os << "m,x_m,gap,log2_gap\n";
  for (const auto& e : g.entries)
    os << e.m << ',' << format_real(e.x_m) << ',' << format_real(e.gap) << ','
       << format_real(e.log_gap / std::log(2.0)) << '\n';
  return os.str();
}

std::string ns_to_json(const GapSequence& g, const NSInvariant& inv, double rate) {
  ordered_json j;
  j["mu"] = g.mu;
  j["closed_form"] = inv.closed_form;
  j["empirical"] = inv.empirical;
  j["decay_rate"] = rate;
  j["expected_rate"] = 1.0 / (g.mu * g.mu);
  ordered_json rows = ordered_json::array();
  for (const auto& e : g.entries)
    rows.push_back({{"m", e.m}, {"x_m", e.x_m}, {"gap", e.gap}, {"log_gap", e.log_gap}});
  j["gaps"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace llspec
