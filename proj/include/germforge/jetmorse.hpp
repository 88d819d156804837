#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germforge/invariants.hpp"

namespace germforge {

/// Jet ring Q[z_1..z_n, a^j_α] for the generators g_1..g_r of an ideal and
/// |α| <= k, with J1 = (Q_1..Q_n) and J2 = (g_1(z)..g_r(z)).
/// Variables: z1..zn, then for each j the a{j}_{α_1}_..._{α_n} in the order
/// of `multi_indices` (degree ascending, lexicographically descending).
struct JetContext {
  RingPtr base;
  RingPtr ring;
  std::size_t n = 0;
  std::size_t r = 0;
  int k = 1;
  std::vector<Polynomial> generators;
  std::vector<Monomial> multi_indices;
  std::vector<Polynomial> Q;
  Ideal J1;
  Ideal J2;

  std::size_t jet_variable(std::size_t j, std::size_t alpha) const { return n + j * multi_indices.size() + alpha; }
  std::size_t alpha_index(const Monomial& alpha) const;
  /// g(z) for g in the base ring.
  Polynomial at_z(const Polynomial& g) const;
};

JetContext jet_context(const Ideal& I, int k);

enum class RadicalMode {
  /// √J1, only when it can be computed or J1 is certified reduced
  Radical,
  /// J1 taken as reduced on the caller's word
  AssumeReduced,
  /// (J1 : J2^∞) in place of (√J1 : J2)
  Saturation,
};
const char* radical_mode_name(RadicalMode m);

struct MorseComponent {
  Ideal ideal;
  RadicalMode mode = RadicalMode::Radical;
  /// J1 is a complete intersection that is smooth in codimension zero.
  bool certified_reduced = false;
  std::vector<std::string> notes;
};

/// J_M' = (√J1 : J2). RADICAL_UNAVAILABLE in Radical mode when J1 is neither
/// zero-dimensional nor certified reduced.
MorseComponent morse_component_ideal(const JetContext& ctx, RadicalMode mode = RadicalMode::Radical);

/// Complete intersection with singular locus of smaller dimension; such an
/// ideal is radical.
bool certify_reduced(const Ideal& J);

/// f = sum f_j g_j. Exact when f lies in the polynomial ideal; otherwise a
/// local lift, correct modulo m^truncation.
struct Lifting {
  std::vector<Polynomial> coefficients;
  bool exact = true;
  int truncation = 0;
};
Lifting lift_germ(const Polynomial& f, const Ideal& I, int truncation = 12);

/// Substitutes z -> x and a^j_α -> (∂^α f_j / α!)(x) into the generators of
/// V; the result is an ideal of the local base ring.
Ideal jet_pullback(const JetContext& ctx, const Ideal& V, const Lifting& lifting);
Ideal jet_pullback(const Polynomial& f, const Ideal& I, const JetContext& ctx, const Ideal& V);

enum class MultiplicityMethod { CohenMacaulay, Koszul };

std::size_t intersection_multiplicity(const Polynomial& f, const Ideal& I, const JetContext& ctx, const Ideal& V,
                                      MultiplicityMethod method, const std::optional<Lifting>& lifting = {});

enum class MorseMethod { Jet, Oracle };

/// ℳ_I(f). JET uses the Morse component with the given radical mode; ORACLE
/// counts critical points of seeded deformations.
std::size_t morse_number(const Polynomial& f, const Ideal& I, MorseMethod method,
                         RadicalMode mode = RadicalMode::Radical, const std::vector<std::uint64_t>& seeds = {11, 13});

}  // namespace germforge
