#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "germforge/error.hpp"
#include "germforge/linalg.hpp"
#include "germforge/stdbasis.hpp"

namespace germforge {

std::vector<Polynomial> std_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) return {};
  return Ideal(gens.front().ring(), gens, order).standard_basis_polys();
}

Polynomial normal_form(const Polynomial& p, const Ideal& I) { return I.normal_form(p); }

namespace {

// Shifts the components >= `from` of v down by `from`; terms below `from`
// must not be present.
FreeVector project_tail(const sb::Vec& v, std::uint32_t from, std::size_t k, const RingPtr& ring) {
  std::vector<std::vector<PolyTerm>> parts(k);
  for (const auto& t : v.terms) {
    if (t.comp < from) throw std::logic_error("projection of an element with a head part");
    parts[t.comp - from].push_back({t.mon, t.coef});
  }
  FreeVector out;
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

sb::Vec stacked(const std::vector<std::pair<std::uint32_t, const Polynomial*>>& parts, const sb::ModuleOrder& order) {
  sb::Vec v;
  for (const auto& [comp, p] : parts)
    for (const auto& t : p->terms()) v.terms.push_back({t.mon, comp, t.coef});
  std::sort(v.terms.begin(), v.terms.end(), [&](const sb::Term& a, const sb::Term& b) {
    return order.cmp(a.mon, a.comp, b.mon, b.comp) > 0;
  });
  return v;
}

}  // namespace

Submodule kernel_mod(const RingPtr& ring, std::size_t r, const std::vector<FreeVector>& columns,
                     const std::vector<Polynomial>& relations, const MonomialOrder& order) {
  const std::size_t k = columns.size();
  // Kernels commute with localization, so the computation always runs in
  // the polynomial ring; Mora's algorithm on these extended modules can
  // grow without bound because the identity components are never covered.
  const sb::ModuleOrder mo{MonomialOrder::global()};
  const Polynomial one = Polynomial::constant(ring, 1);
  std::vector<sb::Vec> gens;
  for (std::size_t i = 0; i < k; ++i) {
    if (columns[i].size() != r) throw Error(ErrorCode::DimensionMismatch, "column length differs");
    std::vector<std::pair<std::uint32_t, const Polynomial*>> parts;
    for (std::size_t j = 0; j < r; ++j) parts.push_back({static_cast<std::uint32_t>(j), &columns[i][j]});
    parts.push_back({static_cast<std::uint32_t>(r + i), &one});
    gens.push_back(stacked(parts, mo));
  }
  for (const auto& g : relations) {
    if (g.is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) gens.push_back(sb::to_vec(g, mo, static_cast<std::uint32_t>(j)));
  }
  auto basis = sb::standard_basis(std::move(gens), mo);
  std::vector<FreeVector> kernel;
  for (const auto& b : basis)
    if (b.lead().comp >= r) kernel.push_back(project_tail(b, static_cast<std::uint32_t>(r), k, ring));
  return Submodule(ring, k, std::move(kernel), order);
}

Submodule module_syzygies(const RingPtr& ring, std::size_t r, const std::vector<FreeVector>& vectors,
                          const MonomialOrder& order) {
  return kernel_mod(ring, r, vectors, {}, order);
}

Submodule module_intersection(const Submodule& a, const Submodule& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::DimensionMismatch, "intersection of modules of different rank");
  const std::size_t n = a.rank();
  const auto& ring = a.ring();
  // as in kernel_mod: intersections commute with localization
  const sb::ModuleOrder mo{MonomialOrder::global()};
  std::vector<sb::Vec> gens;
  for (const auto& u : a.generators()) {
    std::vector<std::pair<std::uint32_t, const Polynomial*>> parts;
    for (std::size_t j = 0; j < n; ++j) {
      parts.push_back({static_cast<std::uint32_t>(j), &u[j]});
      parts.push_back({static_cast<std::uint32_t>(n + j), &u[j]});
    }
    gens.push_back(stacked(parts, mo));
  }
  for (const auto& w : b.generators()) gens.push_back(sb::to_vec(w, mo));
  auto basis = sb::standard_basis(std::move(gens), mo);
  std::vector<FreeVector> out;
  for (const auto& v : basis)
    if (v.lead().comp >= n) out.push_back(project_tail(v, static_cast<std::uint32_t>(n), n, ring));
  return Submodule(ring, n, std::move(out), a.order());
}

namespace {

Submodule as_module(const Ideal& I) {
  std::vector<FreeVector> gens;
  for (const auto& g : I.generators()) gens.push_back({g});
  return Submodule(I.ring(), 1, std::move(gens), I.order());
}

Ideal as_ideal(const Submodule& M) {
  std::vector<Polynomial> gens;
  for (const auto& g : M.generators()) gens.push_back(g[0]);
  return Ideal(M.ring(), std::move(gens), M.order());
}

// Smaller generating set: the standard basis of an ideal read back as
// polynomials.
Ideal tidy(const Ideal& I) { return Ideal(I.ring(), I.standard_basis_polys(), I.order()); }

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring(), a.order());
  return tidy(as_ideal(module_intersection(as_module(a), as_module(b))));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(I.ring(), I.order());
  Ideal q = tidy(as_ideal(kernel_mod(I.ring(), 1, {{f}}, I.generators(), I.order())));
  for (const auto& h : q.generators())
    if (!I.contains(h * f)) throw std::logic_error("ideal quotient postcheck failed");
  return q;
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) return Ideal::unit(I.ring(), I.order());
  std::optional<Ideal> acc;
  for (const auto& f : J.generators()) {
    Ideal q = ideal_quotient(I, f);
    acc = acc ? intersect(*acc, q) : q;
    if (acc->is_zero()) break;
  }
  return *acc;
}

Saturation saturation(const Ideal& I, const Ideal& J) {
  Saturation s{tidy(I), 0};
  for (;;) {
    Ideal next = ideal_quotient(s.ideal, J);
    ++s.iterations;
    if (s.ideal.contains(next)) return s;
    s.ideal = std::move(next);
  }
}

QuotientDim staircase_dimension(const std::vector<sb::Vec>& basis, std::size_t rank, std::size_t nvars) {
  std::vector<std::vector<Monomial>> lead(rank);
  for (const auto& b : basis) lead[b.lead().comp].push_back(b.lead().mon);
  QuotientDim out;
  out.finite = true;
  for (std::size_t c = 0; c < rank; ++c) {
    const auto& L = lead[c];
    // Finite iff each variable occurs alone to some power.
    for (std::size_t v = 0; v < nvars; ++v) {
      bool pure = std::any_of(L.begin(), L.end(), [&](const Monomial& m) { return m[v] == m.degree(); });
      if (!pure) return QuotientDim::infinite();
    }
    if (L.empty()) {
      if (nvars > 0) return QuotientDim::infinite();
    }
  }
  auto divisible = [](const std::vector<Monomial>& L, const Monomial& m) {
    return std::any_of(L.begin(), L.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  for (std::size_t c = 0; c < rank; ++c) {
    const auto& L = lead[c];
    std::vector<Monomial> found;
    Monomial one(nvars);
    if (!divisible(L, one)) {
      std::unordered_set<Monomial, MonomialHash> seen{one};
      std::deque<Monomial> queue{one};
      while (!queue.empty()) {
        Monomial m = std::move(queue.front());
        queue.pop_front();
        found.push_back(m);
        for (std::size_t v = 0; v < nvars; ++v) {
          Monomial next = m;
          next.set(v, m[v] + 1);
          if (divisible(L, next) || seen.count(next)) continue;
          seen.insert(next);
          queue.push_back(std::move(next));
        }
      }
    }
    std::sort(found.begin(), found.end(),
              [](const Monomial& a, const Monomial& b) { return canonical_order().cmp(a, b) < 0; });
    out.value += found.size();
    out.witness.push_back(std::move(found));
  }
  return out;
}

QuotientDim quotient_dimension(const Ideal& I) { return staircase_dimension(I.standard_basis(), 1, I.nvars()); }

int krull_dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  const std::size_t n = I.nvars();
  std::vector<std::uint64_t> supports;
  for (const auto& m : I.leading_monomials()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) s |= std::uint64_t{1} << i;
    supports.push_back(s);
  }
  if (n > 40) throw Error(ErrorCode::PreconditionViolated, "too many variables for a dimension count");
  // Depth-first over variable sets, keeping only sets avoiding every support.
  int best = 0;
  std::function<void(std::size_t, std::uint64_t, int)> grow = [&](std::size_t from, std::uint64_t set, int size) {
    best = std::max(best, size);
    if (size + static_cast<int>(n - from) <= best) return;
    for (std::size_t i = from; i < n; ++i) {
      std::uint64_t next = set | (std::uint64_t{1} << i);
      bool ok = std::none_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & ~next) == 0; });
      if (ok) grow(i + 1, next, size + 1);
    }
  };
  grow(0, 0, 0);
  return best;
}

QuotientDim module_quotient_dimension(const Submodule& M) {
  return staircase_dimension(M.standard_basis(), M.rank(), M.ring()->size());
}

Lifter::Lifter(RingPtr ring, std::size_t rank, std::vector<FreeVector> generators, MonomialOrder order)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(generators)), order_{std::move(order)} {
  const Polynomial one = Polynomial::constant(ring_, 1);
  std::vector<sb::Vec> ext;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].size() != rank_) throw Error(ErrorCode::DimensionMismatch, "generator length differs");
    std::vector<std::pair<std::uint32_t, const Polynomial*>> parts;
    for (std::size_t j = 0; j < rank_; ++j) parts.push_back({static_cast<std::uint32_t>(j), &gens_[i][j]});
    parts.push_back({static_cast<std::uint32_t>(rank_ + i), &one});
    ext.push_back(stacked(parts, order_));
  }
  basis_ = sb::standard_basis(std::move(ext), order_);
}

std::optional<Lifter::Raw> Lifter::lift_raw(const FreeVector& v) const {
  if (v.size() != rank_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from module rank");
  const std::size_t k = gens_.size();
  const Polynomial one = Polynomial::constant(ring_, 1);
  std::vector<std::pair<std::uint32_t, const Polynomial*>> parts;
  for (std::size_t j = 0; j < rank_; ++j) parts.push_back({static_cast<std::uint32_t>(j), &v[j]});
  // Tracking component: records the unit the local normal form multiplies by.
  parts.push_back({static_cast<std::uint32_t>(rank_ + k), &one});
  sb::Vec h = stacked(parts, order_);
  h = sb::normal_form(std::move(h), basis_, order_, {static_cast<std::uint32_t>(rank_)});
  if (!h.is_zero() && h.lead().comp < rank_) return std::nullopt;
  Raw raw;
  raw.unit = sb::component(h, static_cast<std::uint32_t>(rank_ + k), ring_);
  for (std::size_t i = 0; i < k; ++i)
    raw.coefficients.push_back(-sb::component(h, static_cast<std::uint32_t>(rank_ + i), ring_));
  return raw;
}

Polynomial series_inverse(const Polynomial& unit, int truncate) {
  Rational u0 = unit.constant_term();
  if (u0 == 0) throw Error(ErrorCode::PreconditionViolated, "series inverse of a non-unit");
  const auto& ring = unit.ring();
  if (truncate <= 0) return Polynomial(ring);
  Rational inv0 = 1 / u0;
  Polynomial w = unit * inv0 - Polynomial::constant(ring, 1);
  Polynomial neg_w = -w;
  Polynomial acc = Polynomial::constant(ring, 1);
  Polynomial power = acc;
  for (int k = 1; k < truncate; ++k) {
    power = (power * neg_w).truncate(truncate - 1);
    if (power.is_zero()) break;
    acc += power;
  }
  return acc * inv0;
}

std::optional<std::vector<Polynomial>> Lifter::lift(const FreeVector& v, int truncate) const {
  auto raw = lift_raw(v);
  if (!raw) return std::nullopt;
  if (order_.is_global()) {
    Rational c = raw->unit.constant_term();
    for (auto& a : raw->coefficients) a = a * Rational(1 / c);
    return std::move(raw->coefficients);
  }
  Polynomial inv = series_inverse(raw->unit, truncate);
  for (auto& a : raw->coefficients) a = (a * inv).truncate(truncate - 1);
  return std::move(raw->coefficients);
}

Submodule Lifter::syzygies() const {
  std::vector<FreeVector> out;
  for (const auto& b : basis_)
    if (b.lead().comp >= rank_)
      out.push_back(project_tail(b, static_cast<std::uint32_t>(rank_), gens_.size(), ring_));
  return Submodule(ring_, gens_.size(), std::move(out), order_.ring);
}

QuotientSpace::QuotientSpace(RingPtr ring, std::size_t rank, std::vector<FreeVector> k_generators,
                             std::vector<FreeVector> l_generators, MonomialOrder order)
    : ring_(ring), rank_(rank), order_(order), lifter_(ring, rank, std::move(k_generators), order) {
  const std::size_t k = lifter_.size();
  std::vector<FreeVector> rels = lifter_.syzygies().generators();
  for (const auto& l : l_generators) {
    auto raw = lifter_.lift_raw(l);
    if (!raw) throw Error(ErrorCode::PreconditionViolated, "submodule is not contained in the ambient module");
    // The unit factor does not change the submodule generated.
    rels.push_back(std::move(raw->coefficients));
  }
  relations_.emplace(ring_, k, std::move(rels), order_);
  dim_ = module_quotient_dimension(*relations_);
  if (dim_.finite)
    for (std::size_t c = 0; c < dim_.witness.size(); ++c)
      for (const auto& m : dim_.witness[c]) basis_.push_back({c, m});
}

QuotientSpace QuotientSpace::of_ideals(const Ideal& I, const Ideal& J) {
  std::vector<FreeVector> kg, lg;
  for (const auto& g : I.generators()) kg.push_back({g});
  for (const auto& g : J.generators()) lg.push_back({g});
  return QuotientSpace(I.ring(), 1, std::move(kg), std::move(lg), I.order());
}

FreeVector QuotientSpace::basis_element(std::size_t i) const {
  const auto& [c, m] = basis_.at(i);
  FreeVector out;
  for (const auto& p : lifter_.generators()[c]) out.push_back(p.mul_term(m, 1));
  return out;
}

std::vector<Rational> QuotientSpace::coordinates_of_coefficients(const std::vector<Polynomial>& coeffs) const {
  if (!dim_.finite) throw Error(ErrorCode::NotFiniteCodim, "coordinates in an infinite-dimensional quotient");
  std::vector<Rational> out(basis_.size(), 0);
  if (basis_.empty()) return out;
  const sb::ModuleOrder mo{order_};
  std::optional<int> trunc;
  if (!order_.is_global()) trunc = static_cast<int>(dim_.value);
  sb::Vec red = sb::reduce_fully(sb::to_vec(coeffs, mo), relations_->standard_basis(), mo, trunc);
  for (const auto& t : red.terms) {
    auto it = std::find_if(basis_.begin(), basis_.end(),
                           [&](const auto& b) { return b.first == t.comp && b.second == t.mon; });
    if (it == basis_.end()) throw std::logic_error("reduced term outside the staircase");
    out[static_cast<std::size_t>(it - basis_.begin())] = t.coef;
  }
  return out;
}

std::vector<Rational> QuotientSpace::coordinates(const FreeVector& v) const {
  if (!dim_.finite) throw Error(ErrorCode::NotFiniteCodim, "coordinates in an infinite-dimensional quotient");
  auto a = lifter_.lift(v, static_cast<int>(dim_.value));
  if (!a) throw Error(ErrorCode::PreconditionViolated, "element is not in the ambient module");
  return coordinates_of_coefficients(*a);
}

QuotientDim relative_quotient_dimension(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.generators())
    if (!I.contains(g))
      throw Error(ErrorCode::PreconditionViolated, "J is not contained in I: " + g.to_string());
  QuotientDim dj = quotient_dimension(J);
  if (dj.finite) {
    QuotientDim di = quotient_dimension(I);
    QuotientDim out;
    out.finite = true;
    out.value = dj.value - di.value;
    return out;
  }
  return QuotientSpace::of_ideals(I, J).dimension();
}

std::size_t hilbert_samuel(const Ideal& I, int m) {
  if (m < 0) throw Error(ErrorCode::PreconditionViolated, "Hilbert-Samuel index must be non-negative");
  const std::size_t n = I.nvars();
  Integer full;
  mpz_bin_uiui(full.get_mpz_t(), n + static_cast<unsigned long>(m), n);
  QuotientDim q = quotient_dimension(I + Ideal::maximal_power(I.ring(), m + 1, I.order()));
  return full.get_ui() - q.value;
}

namespace univariate {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

namespace {
Poly divmod(Poly a, const Poly& b, Poly* quot) {
  trim(a);
  Poly q;
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  if (quot) *quot = std::move(q);
  return a;
}
}  // namespace

Poly remainder(Poly a, const Poly& b) { return divmod(std::move(a), b, nullptr); }

Poly quotient(Poly a, const Poly& b) {
  Poly q;
  divmod(std::move(a), b, &q);
  return q;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

Poly squarefree_part(const Poly& p) {
  Poly t = p;
  trim(t);
  if (t.size() <= 1) return t;
  Poly q = quotient(t, gcd(t, derivative(t)));
  Rational lc = q.back();
  for (auto& c : q) c /= lc;
  return q;
}

namespace {
std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}
}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  Poly t = p;
  trim(t);
  std::vector<Rational> roots;
  if (t.size() <= 1) return roots;
  std::size_t low = 0;
  while (t[low] == 0) ++low;
  if (low > 0) {
    roots.push_back(0);
    t.erase(t.begin(), t.begin() + static_cast<long>(low));
  }
  if (t.size() <= 1) return roots;
  Integer lcm_den = 1;
  for (const auto& c : t) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> z;
  for (const auto& c : t) z.push_back(Integer(c * lcm_den));
  static const Integer cap("1000000000000");
  Integer a0 = abs(z.front()), an = abs(z.back());
  if (a0 > cap || an > cap) throw Error(ErrorCode::NonrationalPoints, "coefficients too large for rational root search");
  auto ps = divisors(a0);
  auto qs = divisors(an);
  std::vector<Rational> cand;
  for (const auto& pp : ps)
    for (const auto& qq : qs)
      for (int s : {1, -1}) {
        Rational r(pp * s, qq);
        r.canonicalize();
        cand.push_back(r);
      }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (const auto& r : cand) {
    Rational v = 0;
    for (auto it = t.rbegin(); it != t.rend(); ++it) v = v * r + *it;
    if (v == 0) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace univariate

std::vector<Rational> standard_coordinates(const Polynomial& p, const Ideal& I, const QuotientDim& d) {
  const sb::ModuleOrder& mo = I.module_order();
  std::optional<int> trunc;
  if (!mo.is_global()) trunc = static_cast<int>(d.value);
  sb::Vec red = sb::reduce_fully(sb::to_vec(p, mo), I.standard_basis(), mo, trunc);
  const auto& w = d.witness.front();
  std::vector<Rational> out(w.size(), 0);
  for (const auto& t : red.terms) {
    auto it = std::find(w.begin(), w.end(), t.mon);
    if (it == w.end()) throw std::logic_error("reduced term outside the staircase");
    out[static_cast<std::size_t>(it - w.begin())] = t.coef;
  }
  return out;
}

std::vector<Rational> minimal_polynomial(const Ideal& I, std::size_t var) {
  QuotientDim d = quotient_dimension(I);
  if (!d.finite) throw Error(ErrorCode::NotZeroDimensional, "ideal is not zero-dimensional");
  if (d.value == 0) return {1};
  const auto& ring = I.ring();
  Polynomial x = Polynomial::variable(ring, var);
  std::vector<std::vector<Rational>> cols;
  Polynomial power = Polynomial::constant(ring, 1);
  for (std::size_t k = 0; k <= d.value; ++k) {
    cols.push_back(standard_coordinates(power, I, d));
    linalg::Matrix m(d.value, linalg::Row(cols.size()));
    for (std::size_t r = 0; r < d.value; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = cols[c][r];
    auto ns = linalg::nullspace(std::move(m), cols.size());
    if (!ns.empty()) {
      auto dep = ns.front();
      Rational lc = dep.back();
      for (auto& c : dep) c /= lc;
      return dep;
    }
    power = power * x;
  }
  throw std::logic_error("no dependency among powers in a finite quotient");
}

Ideal zero_dim_radical(const Ideal& I) {
  if (!quotient_dimension(I).finite) throw Error(ErrorCode::NotZeroDimensional, "radical needs a zero-dimensional ideal");
  if (I.is_unit()) return Ideal::unit(I.ring(), I.order());
  std::vector<Polynomial> gens = I.generators();
  const auto& ring = I.ring();
  for (std::size_t v = 0; v < I.nvars(); ++v) {
    auto sf = univariate::squarefree_part(minimal_polynomial(I, v));
    std::vector<PolyTerm> terms;
    for (std::size_t e = 0; e < sf.size(); ++e)
      if (sf[e] != 0) terms.push_back({Monomial::variable(ring->size(), v, static_cast<int>(e)), sf[e]});
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return tidy(Ideal(ring, std::move(gens), I.order()));
}

bool artin_rees_check(const Ideal& I, int lambda, int m_max, int degree_bound) {
  if (lambda < 0 || m_max < 1 || degree_bound < 0)
    throw Error(ErrorCode::PreconditionViolated, "artin_rees_check needs lambda >= 0, m_max >= 1");
  for (int m = 1; m <= m_max; ++m) {
    Ideal lhs = intersect(I, Ideal::maximal_power(I.ring(), m + lambda, I.order()));
    Ideal rhs = Ideal::maximal_power(I.ring(), m, I.order()) * I;
    if (!rhs.contains(lhs)) return false;
  }
  return true;
}

}  // namespace germforge
