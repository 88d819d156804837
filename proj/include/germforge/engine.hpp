#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "germforge/polynomial.hpp"

// Standard bases of submodules of free modules Q[x]^r (GLOBAL orders) or of
// their localizations at the origin (LOCAL orders). Ideals are the rank-one
// case. Everything else in the library is expressed through this engine.
namespace germforge::sb {

/// Position-over-term refinement of a ring order: the term with the smaller
/// component index is larger; within a component the ring order decides.
struct ModuleOrder {
  MonomialOrder ring;

  int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const noexcept {
    if (ca != cb) return ca < cb ? 1 : -1;
    return ring.cmp(a, b);
  }
  bool is_global() const noexcept { return ring.is_global(); }
};

struct Term {
  Monomial mon;
  std::uint32_t comp;
  Rational coef;
};

/// Sparse module element with terms sorted descending in a fixed ModuleOrder.
struct Vec {
  std::vector<Term> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  /// Largest total degree among terms.
  int max_degree() const noexcept;
  /// max_degree() minus the degree of the leading monomial.
  int ecart() const noexcept { return terms.empty() ? 0 : max_degree() - lead().mon.degree(); }
};

Vec to_vec(const std::vector<Polynomial>& components, const ModuleOrder& order);
Vec to_vec(const Polynomial& p, const ModuleOrder& order, std::uint32_t comp = 0);
std::vector<Polynomial> from_vec(const Vec& v, std::size_t rank, const RingPtr& ring);
Polynomial component(const Vec& v, std::uint32_t comp, const RingPtr& ring);

/// h - c * m * g, all sorted in `order`.
Vec sub_mul(const Vec& h, const Rational& c, const Monomial& m, const Vec& g, const ModuleOrder& order);
Vec scale(const Vec& v, const Rational& c);
Vec make_monic(Vec v);

struct NormalFormOptions {
  /// Stop as soon as the leading component index reaches this value.
  std::optional<std::uint32_t> stop_component;
};

/// Weak normal form. GLOBAL orders: leading-term division, so f - result
/// lies in the module. LOCAL orders: Mora's algorithm with ecart-minimal
/// reducer selection, so u*f - result lies in the module for a unit u.
/// Either way the result is zero iff f is a member when `basis` is a
/// standard basis.
Vec normal_form(Vec f, const std::vector<Vec>& basis, const ModuleOrder& order,
                const NormalFormOptions& opts = {});

/// Reduces every term (not only the leading one). For LOCAL orders this
/// only terminates with `truncate_at`: terms of total degree >= that bound
/// are discarded, which is sound when m^bound * F lies in the module.
Vec reduce_fully(Vec f, const std::vector<Vec>& basis, const ModuleOrder& order,
                 std::optional<int> truncate_at = std::nullopt);

struct BasisStats {
  std::size_t pairs_considered = 0;
  std::size_t zero_reductions = 0;
};

/// Interreduced standard basis: Buchberger with the Gebauer-Moeller criteria
/// and sugar selection; Mora normal form for LOCAL orders. Leading terms are
/// pairwise non-dividing and every element is monic. For GLOBAL orders the
/// result is the reduced Groebner basis.
std::vector<Vec> standard_basis(std::vector<Vec> generators, const ModuleOrder& order,
                                BasisStats* stats = nullptr);

/// Leading terms as (component, monomial) pairs.
struct LeadingTerm {
  std::uint32_t comp;
  Monomial mon;
};
std::vector<LeadingTerm> leading_terms(const std::vector<Vec>& basis);

}  // namespace germforge::sb
