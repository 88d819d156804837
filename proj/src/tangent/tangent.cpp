#include "germforge/tangent.hpp"

#include <stdexcept>

#include "germforge/error.hpp"
#include "germforge/linalg.hpp"

namespace germforge {

Polynomial apply(const VectorField& X, const Polynomial& f) {
  if (X.size() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "vector field and function rings differ");
  Polynomial out(f.ring());
  for (std::size_t i = 0; i < X.size(); ++i)
    if (!X[i].is_zero()) out += X[i] * f.derive(i);
  return out;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  if (X.size() != Y.size()) throw Error(ErrorCode::DimensionMismatch, "vector fields of different rank");
  VectorField out;
  for (std::size_t i = 0; i < X.size(); ++i) out.push_back(apply(X, Y[i]) - apply(Y, X[i]));
  return out;
}

Submodule maximal_ideal_fields(const RingPtr& ring, const MonomialOrder& order) {
  const std::size_t n = ring->size();
  std::vector<FreeVector> gens;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      FreeVector v(n, Polynomial(ring));
      v[j] = Polynomial::variable(ring, i);
      gens.push_back(std::move(v));
    }
  return Submodule(ring, n, std::move(gens), order);
}

Submodule all_fields(const RingPtr& ring, const MonomialOrder& order) {
  const std::size_t n = ring->size();
  std::vector<FreeVector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    FreeVector v(n, Polynomial(ring));
    v[j] = Polynomial::constant(ring, 1);
    gens.push_back(std::move(v));
  }
  return Submodule(ring, n, std::move(gens), order);
}

VectorFieldModule theta_preserving(const Ideal& I) {
  if (I.is_zero()) throw Error(ErrorCode::ZeroIdeal, "vector fields preserving the zero ideal are not computed");
  const auto& ring = I.ring();
  const std::size_t n = ring->size();
  const auto& g = I.generators();
  const std::size_t r = g.size();
  // X = (a_i) preserves I iff sum_i a_i dg_j/dx_i ∈ I for every j.
  std::vector<FreeVector> columns;
  for (std::size_t i = 0; i < n; ++i) {
    FreeVector c;
    for (std::size_t j = 0; j < r; ++j) c.push_back(g[j].derive(i));
    columns.push_back(std::move(c));
  }
  Submodule theta = kernel_mod(ring, r, columns, g, I.order());
  for (const auto& X : theta.generators())
    for (const auto& gj : g)
      if (!I.contains(apply(X, gj))) throw std::logic_error("preserving-field postcheck failed");
  return {std::move(theta), ThetaMode::Preserving};
}

VectorFieldModule theta_vanishing(const Ideal& I) {
  VectorFieldModule pres = theta_preserving(I);
  Submodule mtheta = maximal_ideal_fields(I.ring(), I.order());
  Submodule v = module_intersection(pres.module, mtheta);
  if (!pres.module.contains(v) || !mtheta.contains(v)) throw std::logic_error("vanishing-field postcheck failed");
  return {std::move(v), ThetaMode::Vanishing};
}

Ideal tangent_ideal(const Polynomial& f, const VectorFieldModule& theta) {
  std::vector<Polynomial> gens;
  for (const auto& X : theta.generators()) gens.push_back(apply(X, f));
  return Ideal(f.ring(), std::move(gens), theta.module.order());
}

std::optional<std::vector<std::size_t>> variable_generators(const Ideal& I) {
  std::vector<std::size_t> vars;
  for (const auto& g : I.generators()) {
    if (g.size() != 1 || g.terms()[0].mon.degree() != 1) return std::nullopt;
    const auto& m = g.terms()[0].mon;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] == 1) vars.push_back(i);
  }
  return vars;
}

PrimitiveIdeal primitive_ideal(const Ideal& Iprime, int N) {
  if (N < 1) throw Error(ErrorCode::PreconditionViolated, "primitive ideal needs truncation degree >= 1");
  const auto& ring = Iprime.ring();
  const std::size_t n = ring->size();
  const MonomialOrder& order = Iprime.order();
  Ideal value_ideal = Iprime + Ideal::maximal_power(ring, N + 1, order);
  Ideal deriv_ideal = Iprime + Ideal::maximal_power(ring, N, order);
  QuotientDim dv = quotient_dimension(value_ideal);
  QuotientDim dd = quotient_dimension(deriv_ideal);

  std::vector<Monomial> monos;
  for (int d = 0; d <= N; ++d)
    for (auto& m : monomials_of_degree(n, d)) monos.push_back(std::move(m));
  // One column per monomial; rows are the coordinates of f and of each
  // derivative in the respective finite quotients.
  const std::size_t rows = dv.value + n * dd.value;
  linalg::Matrix M(rows, linalg::Row(monos.size(), 0));
  for (std::size_t c = 0; c < monos.size(); ++c) {
    Polynomial p = Polynomial::monomial(ring, monos[c]);
    auto v = standard_coordinates(p, value_ideal, dv);
    for (std::size_t k = 0; k < v.size(); ++k) M[k][c] = v[k];
    for (std::size_t i = 0; i < n; ++i) {
      auto w = standard_coordinates(p.derive(i), deriv_ideal, dd);
      for (std::size_t k = 0; k < w.size(); ++k) M[dv.value + i * dd.value + k][c] = w[k];
    }
  }
  std::vector<Polynomial> gens;
  for (const auto& v : linalg::nullspace(std::move(M), monos.size())) {
    std::vector<PolyTerm> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (v[c] != 0) terms.push_back({monos[c], v[c]});
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  PrimitiveIdeal out;
  Ideal raw(ring, std::move(gens), order);
  out.ideal = Ideal(ring, raw.standard_basis_polys(), order);
  out.truncation = N;
  if (auto vars = variable_generators(Iprime); vars && !vars->empty()) {
    std::vector<Polynomial> sq;
    for (std::size_t a = 0; a < vars->size(); ++a)
      for (std::size_t b = a; b < vars->size(); ++b)
        sq.push_back(Polynomial::variable(ring, (*vars)[a]) * Polynomial::variable(ring, (*vars)[b]));
    Ideal tail = Ideal::maximal_power(ring, N + 1, order);
    Ideal lhs = out.ideal + tail;
    Ideal rhs = Ideal(ring, std::move(sq), order) + tail;
    out.matches_square = lhs.equals(rhs);
  }
  return out;
}

}  // namespace germforge
