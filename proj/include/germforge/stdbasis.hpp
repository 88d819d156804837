#pragma once

#include <optional>
#include <vector>

#include "germforge/ideal.hpp"

namespace germforge {

/// Dimension of a quotient over Q: finite with the standard monomials as
/// witness (one list per free-module component), or infinite.
struct QuotientDim {
  bool finite = false;
  std::size_t value = 0;
  std::vector<std::vector<Monomial>> witness;

  static QuotientDim infinite() { return {}; }
  bool operator==(std::size_t v) const { return finite && value == v; }
};

std::vector<Polynomial> std_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order);
Polynomial normal_form(const Polynomial& p, const Ideal& I);

/// {a in R^k : sum a_i columns_i in relations * R^r}, where every column has
/// length r. `relations` may be empty.
Submodule kernel_mod(const RingPtr& ring, std::size_t r, const std::vector<FreeVector>& columns,
                     const std::vector<Polynomial>& relations, const MonomialOrder& order);

/// Kernel of R^k -> R^r sending e_i to vectors[i].
Submodule module_syzygies(const RingPtr& ring, std::size_t r, const std::vector<FreeVector>& vectors,
                          const MonomialOrder& order);

Submodule module_intersection(const Submodule& a, const Submodule& b);
Ideal intersect(const Ideal& a, const Ideal& b);

/// (I : J), postchecked by membership.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);

struct Saturation {
  Ideal ideal;
  int iterations = 0;
};
/// (I : J^oo) by iterated quotients.
Saturation saturation(const Ideal& I, const Ideal& J);

QuotientDim quotient_dimension(const Ideal& I);
/// Standard terms of R^r / M under the module order.
QuotientDim module_quotient_dimension(const Submodule& M);
/// Dimension of V(I) (at the origin for LOCAL orders), read off the leading
/// monomials as the largest set of variables supporting none of them; -1 for
/// the unit ideal.
int krull_dimension(const Ideal& I);
/// Same, from an already computed standard basis.
QuotientDim staircase_dimension(const std::vector<sb::Vec>& basis, std::size_t rank, std::size_t nvars);

/// Expresses elements of the module generated by `generators` as
/// combinations of them. In a local order the combination is exact up to a
/// unit: u * v = sum a_i generators_i.
class Lifter {
 public:
  Lifter(RingPtr ring, std::size_t rank, std::vector<FreeVector> generators, MonomialOrder order);

  struct Raw {
    Polynomial unit;
    std::vector<Polynomial> coefficients;
  };
  /// nullopt when v is not in the module.
  std::optional<Raw> lift_raw(const FreeVector& v) const;
  /// Coefficients a with v = sum a_i g_i. Exact for GLOBAL orders; for LOCAL
  /// orders exact modulo m^truncate (the unit is inverted as a series).
  std::optional<std::vector<Polynomial>> lift(const FreeVector& v, int truncate) const;

  std::size_t size() const noexcept { return gens_.size(); }
  const std::vector<FreeVector>& generators() const noexcept { return gens_; }
  /// Relations among the generators.
  Submodule syzygies() const;

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::vector<FreeVector> gens_;
  sb::ModuleOrder order_;
  std::vector<sb::Vec> basis_;  // standard basis of [g_i ; e_i] in rank r + k
};

/// Inverse of a unit modulo m^truncate.
Polynomial series_inverse(const Polynomial& unit, int truncate);

/// Finite-dimensional quotient K/L of submodules L ⊆ K ⊆ R^r, where K is
/// given by generators. Elements of K get coordinates in the basis
/// {monomial * generator} read off the staircase.
class QuotientSpace {
 public:
  QuotientSpace(RingPtr ring, std::size_t rank, std::vector<FreeVector> k_generators,
                std::vector<FreeVector> l_generators, MonomialOrder order);
  static QuotientSpace of_ideals(const Ideal& I, const Ideal& J);

  const QuotientDim& dimension() const noexcept { return dim_; }
  /// Basis elements as (generator index, monomial).
  const std::vector<std::pair<std::size_t, Monomial>>& basis() const noexcept { return basis_; }
  /// The basis element as a vector of R^r.
  FreeVector basis_element(std::size_t i) const;
  /// Coordinates of v in K/L; requires finite dimension and v in K.
  std::vector<Rational> coordinates(const FreeVector& v) const;
  /// Coordinates of an element already written in generator coefficients.
  std::vector<Rational> coordinates_of_coefficients(const std::vector<Polynomial>& coeffs) const;

 private:
  RingPtr ring_;
  std::size_t rank_;
  MonomialOrder order_;
  Lifter lifter_;
  std::optional<Submodule> relations_;
  QuotientDim dim_;
  std::vector<std::pair<std::size_t, Monomial>> basis_;
};

/// Coordinates of p in R/I over the standard monomials of `d`, which must
/// be quotient_dimension(I) and finite.
std::vector<Rational> standard_coordinates(const Polynomial& p, const Ideal& I, const QuotientDim& d);

/// dim I/J for J ⊆ I; PRECONDITION_VIOLATED otherwise.
QuotientDim relative_quotient_dimension(const Ideal& I, const Ideal& J);

/// dim I / (I ∩ m^(m+1)).
std::size_t hilbert_samuel(const Ideal& I, int m);

/// Radical of a zero-dimensional ideal (Seidenberg).
Ideal zero_dim_radical(const Ideal& I);

/// Minimal polynomial of x_var in R/I (coefficients ascending, monic);
/// requires finite quotient dimension.
std::vector<Rational> minimal_polynomial(const Ideal& I, std::size_t var);

/// I ∩ m^(m+λ) ⊆ m^m I for m = 1..m_max, decided exactly. `degree_bound`
/// is kept for interface compatibility and only validated.
bool artin_rees_check(const Ideal& I, int lambda, int m_max, int degree_bound);

/// Univariate helpers on ascending coefficient vectors.
namespace univariate {
using Poly = std::vector<Rational>;
void trim(Poly& p);
Poly derivative(const Poly& p);
Poly remainder(Poly a, const Poly& b);
Poly quotient(Poly a, const Poly& b);
Poly gcd(Poly a, Poly b);
Poly squarefree_part(const Poly& p);
/// Rational roots, each listed once.
std::vector<Rational> rational_roots(const Poly& p);
}  // namespace univariate

}  // namespace germforge
