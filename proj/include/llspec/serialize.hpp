#pragma once

#include <string>

#include "llspec/anderson.hpp"
#include "llspec/classify.hpp"
#include "llspec/novikov_shubin.hpp"
#include "llspec/spectral_measure.hpp"

namespace llspec {

/// %.17g, so doubles round-trip.
std::string format_real(double x);

/// "p/q" (or "p" for integers).
std::string format_rational(const mpq_class& q);

std::string measure_to_json(const AtomicMeasure& m);
std::string classification_to_json(const MuParam& mu, const Classification& c);

/// Columns eigenvalue,cumulative_weight; one row per distinct eigenvalue.
std::string ids_to_csv(const EmpiricalIDS& e);
std::string comparison_to_json(const IdsComparison& c, double mu, std::size_t sites,
                               std::uint64_t seed, int depth);

/// Columns m,x_m,gap,log2_gap.
std::string gaps_to_csv(const GapSequence& g);
std::string ns_to_json(const GapSequence& g, const NSInvariant& inv, double rate);

}  // namespace llspec
