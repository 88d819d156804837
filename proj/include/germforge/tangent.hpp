#pragma once

#include <optional>
#include <vector>

#include "germforge/stdbasis.hpp"

namespace germforge {

/// Vector field sum a_i d/dx_i stored as (a_1, ..., a_n).
using VectorField = FreeVector;

enum class ThetaMode { Preserving, Vanishing };

/// Submodule of Q[x]^n (localized for LOCAL orders) of vector fields.
struct VectorFieldModule {
  Submodule module;
  ThetaMode mode;

  std::size_t nvars() const { return module.rank(); }
  const std::vector<VectorField>& generators() const { return module.generators(); }
  bool contains(const VectorField& X) const { return module.contains(X); }
};

/// X(f) = sum a_i df/dx_i.
Polynomial apply(const VectorField& X, const Polynomial& f);
/// [X, Y]_i = X(Y_i) - Y(X_i).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// Θ_{I,e}: fields with X(I) ⊆ I. ZERO_IDEAL for I = 0.
VectorFieldModule theta_preserving(const Ideal& I);
/// Θ_I = m·Θ ∩ Θ_{I,e}.
VectorFieldModule theta_vanishing(const Ideal& I);
/// m·Θ, generated by x_i d/dx_j.
Submodule maximal_ideal_fields(const RingPtr& ring, const MonomialOrder& order);
/// The whole module Θ.
Submodule all_fields(const RingPtr& ring, const MonomialOrder& order);

/// Ideal generated by X(f) over the generators X.
Ideal tangent_ideal(const Polynomial& f, const VectorFieldModule& theta);

struct PrimitiveIdeal {
  Ideal ideal;
  /// Valid modulo m^(truncation + 1) only.
  int truncation = 0;
  /// Set when the argument is generated by variables: whether the result
  /// matches the square of that ideal up to the truncation.
  std::optional<bool> matches_square;
};

/// Truncated primitive ideal: the ideal generated by
/// {f : deg f <= N, f ∈ I' + m^(N+1), df/dx_i ∈ I' + m^N}.
PrimitiveIdeal primitive_ideal(const Ideal& Iprime, int N);

/// Indices of variables when every generator of I is a single variable.
std::optional<std::vector<std::size_t>> variable_generators(const Ideal& I);

}  // namespace germforge
