#pragma once

// Test-side reference computations. They use only dense linear algebra over
// monomials of bounded degree and never touch the standard-basis engine.

#include <map>
#include <random>
#include <vector>

#include "germforge/linalg.hpp"
#include "germforge/polynomial.hpp"

namespace oracle {

using namespace germforge;

/// Every monomial of total degree < bound, indexed.
struct MonomialIndex {
  std::vector<Monomial> monos;
  std::map<std::vector<int>, std::size_t> index;

  MonomialIndex(std::size_t nvars, int bound) {
    for (int d = 0; d < bound; ++d)
      for (auto& m : monomials_of_degree(nvars, d)) {
        index[m.exponents()] = monos.size();
        monos.push_back(m);
      }
  }
  std::size_t size() const { return monos.size(); }
  /// Coefficient vector of p with terms of degree >= bound dropped.
  linalg::Row row(const Polynomial& p) const {
    linalg::Row r(monos.size(), 0);
    for (const auto& t : p.terms()) {
      auto it = index.find(t.mon.exponents());
      if (it != index.end()) r[it->second] = t.coef;
    }
    return r;
  }
};

/// Span of (I + m^bound)/m^bound inside O/m^bound: all x^b g truncated.
inline linalg::RowSpace truncated_ideal_span(const std::vector<Polynomial>& gens, const MonomialIndex& idx,
                                             std::size_t nvars, int bound) {
  linalg::RowSpace space(idx.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int start = g.order();
    for (const auto& m : idx.monos) {
      if (m.degree() + start >= bound) continue;
      space.insert(idx.row(g.mul_term(m, 1)));
    }
  }
  (void)nvars;
  return space;
}

/// p ∈ I + m^bound in the local ring.
inline bool member_mod_power(const Polynomial& p, const std::vector<Polynomial>& gens, int bound) {
  std::size_t n = p.nvars();
  MonomialIndex idx(n, bound);
  auto space = truncated_ideal_span(gens, idx, n, bound);
  return space.contains(idx.row(p));
}

/// dim O/(I + m^bound).
inline std::size_t quotient_dim_mod_power(const std::vector<Polynomial>& gens, std::size_t nvars, int bound) {
  MonomialIndex idx(nvars, bound);
  auto space = truncated_ideal_span(gens, idx, nvars, bound);
  return idx.size() - space.dimension();
}

/// Small random polynomial with terms of degree in [min_deg, max_deg].
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int min_deg, int max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<PolyTerm> out;
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  for (int t = 0; t < terms; ++t) {
    int d = deg(rng);
    auto monos = monomials_of_degree(ring->size(), d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    out.push_back({monos[pick(rng)], Rational(coef(rng))});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace oracle

namespace oracle {

/// Space of vector fields with polynomial components of degree <= D such
/// that X(g) ∈ I + m^M for every generator g. Rows are coefficient vectors
/// over (component, monomial of degree <= D).
inline std::vector<linalg::Row> preserving_fields_truncated(const std::vector<Polynomial>& gens, std::size_t n,
                                                            int D, int M) {
  MonomialIndex coords(n, M);
  auto space = truncated_ideal_span(gens, coords, n, M);
  MonomialIndex field_monos(n, D + 1);
  const RingPtr& ring = gens.front().ring();
  const std::size_t unknowns = n * field_monos.size();
  const std::size_t cond = gens.size() * coords.size();
  linalg::Matrix A(cond, linalg::Row(unknowns, 0));
  for (std::size_t comp = 0; comp < n; ++comp)
    for (std::size_t k = 0; k < field_monos.size(); ++k) {
      std::size_t col = comp * field_monos.size() + k;
      Polynomial a = Polynomial::monomial(ring, field_monos.monos[k]);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        auto res = space.reduce(coords.row(a * gens[j].derive(comp)));
        for (std::size_t r = 0; r < res.size(); ++r) A[j * coords.size() + r][col] = res[r];
      }
    }
  return linalg::nullspace(std::move(A), unknowns);
}

/// Coefficient row of a field truncated to degree <= D.
inline linalg::Row field_row(const std::vector<Polynomial>& X, int D) {
  std::size_t n = X.size();
  MonomialIndex idx(n, D + 1);
  linalg::Row out;
  for (const auto& a : X) {
    auto r = idx.row(a);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace oracle
