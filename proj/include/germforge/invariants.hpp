#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germforge/tangent.hpp"

namespace germforge {

/// F(x, s): a polynomial over base variables plus parameters. The base ring
/// consists of the non-parameter variables of `total`, in order.
class Unfolding {
 public:
  Unfolding(RingPtr total, std::vector<std::size_t> parameters, Polynomial F);
  /// f + sum s_i h_i over a fresh ring base + (s1..sr).
  static Unfolding linear(const Polynomial& f, const std::vector<Polynomial>& directions);

  const RingPtr& total_ring() const noexcept { return total_; }
  const RingPtr& base_ring() const noexcept { return base_; }
  const std::vector<std::size_t>& parameters() const noexcept { return params_; }
  const Polynomial& polynomial() const noexcept { return F_; }
  std::size_t parameter_count() const noexcept { return params_.size(); }

  /// F with all parameters set to zero, as a germ on the base ring.
  Polynomial base_germ() const;
  /// dF/ds_i at s = 0.
  Polynomial parameter_derivative(std::size_t i) const;
  /// F at the given parameter values.
  Polynomial specialize(const std::vector<Rational>& values) const;
  /// Coefficients of the monomials in s of F - f, as base polynomials.
  std::vector<Polynomial> parameter_coefficients() const;

 private:
  Polynomial to_base(const Polynomial& p) const;

  RingPtr total_;
  RingPtr base_;
  std::vector<std::size_t> params_;
  std::vector<std::size_t> base_index_;  // total index of each base variable
  Polynomial F_;
};

struct CodimResult {
  QuotientDim value;
  Ideal tau;
  VectorFieldModule theta;
};

/// c_{I,e}(f) = dim I / τ_{I,e}(f). F_NOT_IN_IDEAL when f ∉ I.
CodimResult extended_codim(const Polynomial& f, const Ideal& I);
/// c_I(f) = dim I / τ_I(f).
CodimResult plain_codim(const Polynomial& f, const Ideal& I);
/// Extended codimension of the germ of f at a rational point.
QuotientDim extended_codim_at(const Polynomial& f, const Ideal& I, const std::vector<Rational>& point);
/// dim O / J_f (infinite for non-isolated singularities).
QuotientDim milnor_number(const Polynomial& f);

/// Least m with m^m I ⊆ τ_{I,e}(f). NOT_FINITE_CODIM if c_{I,e} is infinite.
int determinacy_bound(const Polynomial& f, const Ideal& I);

/// τ_{I,e}(f) + span{dF/ds_i at 0} = I. F_NOT_UNFOLDING when F - f ∉ I.
bool versality_check(const Unfolding& F, const Ideal& I);
/// f + sum s_i h_i with h_i a monomial-times-generator basis of I/τ_{I,e}(f).
Unfolding build_versal_unfolding(const Polynomial& f, const Ideal& I);

/// (τ_{I,e}(f) : I) in the polynomial ring; its zeros are the points where
/// f has positive extended codimension.
Ideal positive_codim_locus(const Polynomial& f, const Ideal& I);

enum class DdkVerdict { IsDdk, NotDdk, NotApplicable };
const char* verdict_name(DdkVerdict v);

struct DdkClass {
  int d = 0;
  int k = 0;
  DdkVerdict verdict = DdkVerdict::NotApplicable;
  /// Linear forms l_ij (i <= j) of the degenerate block, as polynomials.
  std::vector<Polynomial> forms;
};

/// J must be generated by variables (the y's); the other variables are the
/// x's. F_NOT_IN_JSQUARED, NON_ADAPTED_COORDINATES.
DdkClass classify_Ddk(const Polynomial& f, const Ideal& J);

}  // namespace germforge
