#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "germforge/jetmorse.hpp"

namespace germforge {

/// Directions used by random_deformation: monomial multiples of the
/// I/τ_{I,e}(f) basis of degree <= degree_bound. A bound <= 0 picks the
/// largest basis degree. Basis elements above the bound are kept.
std::vector<Polynomial> deformation_directions(const Polynomial& f, const Ideal& I, int degree_bound = 0);

/// f + sum c_j h_j over deformation_directions with seeded coefficients
/// c_j = ±p/q, 1 <= p, q <= 13. Reproducible for a given seed.
Polynomial random_deformation(const Polynomial& f, const Ideal& I, int degree_bound, std::uint64_t seed);

struct CriticalPoints {
  /// (J_g : I^∞) in the polynomial ring
  Ideal saturated;
  /// number of critical points off V(I), with multiplicity
  std::size_t count = 0;
  bool all_morse = false;
};
/// POSITIVE_DIMENSIONAL_CRITICAL_LOCUS when the count is infinite. For
/// I = (1) the saturation is the identity.
CriticalPoints critical_points_outside(const Polynomial& g, const Ideal& I);

struct LocatedPoint {
  std::vector<Rational> point;
  std::size_t codim = 0;
};

/// One deformation g and its tally. The primary counts are local: they
/// follow the ray f + t (g - f) for small generic t and count what stays
/// near the origin (length of the t-saturated family at t = 0). The global
/// counts of g itself are kept alongside.
struct SplittingRun {
  std::uint64_t seed = 0;
  Polynomial deformation;
  std::map<std::size_t, std::size_t> sigma;
  std::size_t corrected = 0;
  std::size_t morse = 0;
  bool all_morse = false;
  std::size_t corrected_global = 0;
  std::size_t morse_global = 0;
  /// rational points of V(I) where the deformation has positive codimension
  std::vector<LocatedPoint> points_on_support;
  /// every point of V(I) in the locus was rational and accounted for
  bool located_all = true;
  /// counts unchanged when the degree bound is raised by one
  bool drift_free = true;
};

/// Number of critical points off V(I) of f + t (g - f) tending to the
/// origin as t -> 0, and whether they are all nondegenerate.
struct LocalCount {
  std::size_t count = 0;
  bool all_morse = true;
};
LocalCount local_critical_count(const Polynomial& f, const Polynomial& g, const Ideal& I);
/// Sum of extended codimensions of f + t (g - f) at points tending to the
/// origin.
std::size_t local_corrected_codim(const Polynomial& f, const Polynomial& g, const Ideal& I);

struct SplittingReport {
  std::size_t c_ext = 0;
  std::map<std::size_t, std::size_t> sigma;
  std::size_t corrected = 0;
  std::size_t morse = 0;
  std::vector<std::uint64_t> seeds;
  bool stable = true;
  std::vector<SplittingRun> runs;
  std::vector<std::string> flags;
};

/// GENERICITY_SUSPECT when the seeds disagree or a deformation has a
/// degenerate critical point off V(I); NOT_FINITE_CODIM.
SplittingReport empirical_splitting(const Polynomial& f, const Ideal& I, const std::vector<std::uint64_t>& seeds,
                                    int degree_bound = 0);

struct ConservationReport {
  bool holds = false;
  std::size_t expected = 0;
  /// same sum along the family near the origin, t-saturated
  std::vector<std::size_t> local_totals;
  std::vector<Rational> t_values;
  std::vector<std::size_t> totals;
  std::vector<std::string> flags;
};

/// For `trials` deformations F_t = f + t (g - f) compares the total
/// intersection number of ρ_{F_t} with the Morse component (summed over all
/// points, GLOBAL_COUNT) against i_O(ρ_f, M).
ConservationReport conservation_check(const Polynomial& f, const Ideal& I, int trials,
                                      RadicalMode mode = RadicalMode::Radical, std::uint64_t seed = 11);

}  // namespace germforge
