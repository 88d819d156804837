#include "germforge/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "germforge/error.hpp"

namespace germforge {

std::vector<Polynomial> deformation_directions(const Polynomial& f, const Ideal& I, int degree_bound) {
  auto c = extended_codim(f, I);
  if (!c.value.finite) throw Error(ErrorCode::NotFiniteCodim, "extended codimension is infinite");
  if (c.value.value == 0) return {};
  auto QS = QuotientSpace::of_ideals(I, c.tau);
  std::vector<Polynomial> basis;
  int top = 0;
  for (std::size_t i = 0; i < QS.basis().size(); ++i) {
    basis.push_back(QS.basis_element(i)[0]);
    top = std::max(top, basis.back().degree());
  }
  if (degree_bound <= 0) degree_bound = top;
  std::vector<Polynomial> out;
  for (const auto& b : basis)
    for (int e = 0; e + b.degree() <= degree_bound; ++e)
      for (const auto& m : monomials_of_degree(f.nvars(), e)) {
        auto h = b.mul_term(m, 1);
        if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
      }
  // directions of too high degree still enter once, so the span stays versal
  for (const auto& b : basis)
    if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
  return out;
}

Polynomial random_deformation(const Polynomial& f, const Ideal& I, int degree_bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Polynomial g = f;
  for (const auto& h : deformation_directions(f, I, degree_bound)) {
    auto raw = rng() % 26;
    long num = raw < 13 ? static_cast<long>(raw) + 1 : -static_cast<long>(raw - 12);
    long den = static_cast<long>(rng() % 13) + 1;
    Rational c(num, den);
    c.canonicalize();
    g += h * c;
  }
  return g;
}

namespace {

Polynomial hessian_determinant_of(const std::vector<std::vector<Polynomial>>& H, const RingPtr& ring) {
  const std::size_t n = H.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Polynomial det(ring);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Polynomial term = Polynomial::constant(ring, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= H[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Polynomial hessian_determinant(const Polynomial& g) {
  std::vector<std::vector<Polynomial>> H(g.nvars());
  for (std::size_t i = 0; i < g.nvars(); ++i)
    for (std::size_t j = 0; j < g.nvars(); ++j) H[i].push_back(g.derive(i).derive(j));
  return hessian_determinant_of(H, g.ring());
}

}  // namespace

CriticalPoints critical_points_outside(const Polynomial& g, const Ideal& I) {
  if (!same_ring(g.ring(), I.ring())) throw Error(ErrorCode::DimensionMismatch, "germ and ideal rings differ");
  std::vector<Polynomial> grad;
  for (std::size_t i = 0; i < g.nvars(); ++i) grad.push_back(g.derive(i));
  Ideal Jg(g.ring(), std::move(grad), MonomialOrder::global());
  Ideal Ig = I.with_order(MonomialOrder::global());
  CriticalPoints out;
  out.saturated = Ig.is_unit() ? Jg : saturation(Jg, Ig).ideal;
  auto d = quotient_dimension(out.saturated);
  if (!d.finite)
    throw Error(ErrorCode::PositiveDimensionalCriticalLocus, "critical locus off V(I) is positive-dimensional");
  out.count = d.value;
  out.all_morse = out.count == 0 ||
                  (out.saturated + Ideal(g.ring(), {hessian_determinant(g)}, MonomialOrder::global())).is_unit();
  return out;
}

namespace {

std::vector<std::vector<Rational>> rational_points(const Ideal& S) {
  const std::size_t n = S.nvars();
  std::vector<std::vector<Rational>> coords(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto mp = minimal_polynomial(S, v);
    coords[v] = univariate::rational_roots(mp);
    if (coords[v].empty()) return {};
  }
  std::vector<std::vector<Rational>> out;
  std::vector<Rational> cur;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      for (const auto& g : S.generators())
        if (g.evaluate(cur) != 0) return;
      out.push_back(cur);
      return;
    }
    for (const auto& c : coords[v]) {
      cur.push_back(c);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Ring of f with one extra variable t for the deformation parameter.
struct Family {
  RingPtr ring;
  std::size_t t = 0;
  Polynomial G;
  std::vector<Polynomial> I;
};

Family family(const Polynomial& f, const Polynomial& g, const Ideal& I) {
  Family F;
  auto names = f.ring()->names();
  std::string t = "t";
  while (std::find(names.begin(), names.end(), t) != names.end()) t += "_";
  F.t = names.size();
  names.push_back(t);
  F.ring = Ring::make(std::move(names));
  auto tv = Polynomial::variable(F.ring, F.t);
  F.G = f.embed(F.ring) + tv * (g - f).embed(F.ring);
  for (const auto& h : I.generators()) F.I.push_back(h.embed(F.ring));
  return F;
}

Ideal without_t_torsion(const Ideal& J, const Family& F) {
  Ideal T(F.ring, {Polynomial::variable(F.ring, F.t)}, MonomialOrder::global());
  return saturation(J, T).ideal;
}

Ideal plus_t(const Ideal& J, const Family& F) {
  auto gens = J.generators();
  gens.push_back(Polynomial::variable(F.ring, F.t));
  return Ideal(F.ring, std::move(gens), MonomialOrder::local());
}

SplittingRun split_once(const Polynomial& f, const Ideal& I, int degree_bound, std::uint64_t seed) {
  SplittingRun run;
  run.seed = seed;
  run.deformation = random_deformation(f, I, degree_bound, seed);
  const Polynomial& g = run.deformation;

  auto local = local_critical_count(f, g, I);
  run.morse = local.count;
  run.all_morse = local.all_morse;
  run.corrected = local_corrected_codim(f, g, I);

  auto crit = critical_points_outside(g, I);
  run.morse_global = crit.count;
  Ideal Ig = I.with_order(MonomialOrder::global());
  auto total = relative_quotient_dimension(Ig, tangent_ideal(g, theta_preserving(Ig)));
  if (!total.finite) throw Error(ErrorCode::NotFiniteCodim, "the deformation has infinite global codimension");
  run.corrected_global = total.value;

  if (run.all_morse && run.morse > 0) run.sigma[1] += run.morse;
  if (run.corrected < run.morse) throw std::logic_error("critical points off V(I) exceed the local codimension");
  const std::size_t rest = run.corrected - run.morse;
  if (rest == 0) return run;

  // Points on V(I) are located on g itself and accepted when they account
  // for the local total exactly.
  Ideal support = positive_codim_locus(g, I) + Ig;
  if (support.is_unit() || !quotient_dimension(support).finite) {
    run.located_all = false;
    return run;
  }
  std::size_t located = 0;
  std::map<std::size_t, std::size_t> on_support;
  try {
    for (auto& p : rational_points(support)) {
      auto c = extended_codim_at(g, I, p);
      if (!c.finite) throw std::logic_error("infinite local codimension at a located point");
      if (c.value > 0) on_support[c.value] += 1;
      located += c.value;
      run.points_on_support.push_back({std::move(p), c.value});
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonrationalPoints) throw;
    run.located_all = false;
    return run;
  }
  run.located_all = located == rest;
  if (run.located_all)
    for (auto [k, c] : on_support) run.sigma[k] += c;
  return run;
}

bool same_counts(const SplittingRun& a, const SplittingRun& b) {
  return a.sigma == b.sigma && a.corrected == b.corrected && a.morse == b.morse;
}

}  // namespace

LocalCount local_critical_count(const Polynomial& f, const Polynomial& g, const Ideal& I) {
  auto F = family(f, g, I);
  const std::size_t n = f.nvars();
  std::vector<Polynomial> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(F.G.derive(i));
  Ideal J(F.ring, grad, MonomialOrder::global());
  Ideal IT(F.ring, F.I, MonomialOrder::global());
  Ideal crit = IT.is_unit() ? J : saturation(J, IT).ideal;
  crit = without_t_torsion(crit, F);
  LocalCount out;
  auto d = quotient_dimension(plus_t(crit, F));
  if (!d.finite)
    throw Error(ErrorCode::PositiveDimensionalCriticalLocus, "critical locus near the origin is positive-dimensional");
  out.count = d.value;
  // Nondegenerate near the origin: the Hessian vanishes on no branch.
  std::vector<std::vector<Polynomial>> H(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) H[i].push_back(grad[i].derive(j));
  Polynomial det = hessian_determinant_of(H, F.ring);
  auto gens = crit.generators();
  gens.push_back(det);
  out.all_morse = out.count == 0 || quotient_dimension(Ideal(F.ring, std::move(gens), MonomialOrder::local())).finite;
  return out;
}

std::size_t local_corrected_codim(const Polynomial& f, const Polynomial& g, const Ideal& I) {
  auto F = family(f, g, I);
  auto theta = theta_preserving(I);
  std::vector<Polynomial> tau;
  for (const auto& X : theta.generators()) {
    Polynomial v(F.ring);
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!X[i].is_zero()) v += X[i].embed(F.ring) * F.G.derive(i);
    tau.push_back(std::move(v));
  }
  Ideal IT(F.ring, F.I, MonomialOrder::global());
  Ideal S = without_t_torsion(Ideal(F.ring, tau, MonomialOrder::global()), F);
  auto L = intersect(S, IT).generators();
  auto tv = Polynomial::variable(F.ring, F.t);
  for (const auto& h : F.I) L.push_back(h * tv);
  auto d = relative_quotient_dimension(Ideal(F.ring, F.I, MonomialOrder::local()),
                                       Ideal(F.ring, std::move(L), MonomialOrder::local()));
  if (!d.finite) throw Error(ErrorCode::NotFiniteCodim, "positive-codimension locus near the origin is not finite");
  return d.value;
}

SplittingReport empirical_splitting(const Polynomial& f, const Ideal& I, const std::vector<std::uint64_t>& seeds,
                                    int degree_bound) {
  if (seeds.empty()) throw Error(ErrorCode::PreconditionViolated, "at least one seed is required");
  auto c = extended_codim(f, I);
  if (!c.value.finite) throw Error(ErrorCode::NotFiniteCodim, "extended codimension is infinite");
  SplittingReport report;
  report.c_ext = c.value.value;
  report.seeds = seeds;
  report.flags.push_back("LOCAL_RAY_COUNT");
  report.flags.push_back("GLOBAL_COUNT");
  int bound = degree_bound;
  if (bound <= 0) {
    bound = 0;
    if (report.c_ext > 0) {
      auto QS = QuotientSpace::of_ideals(I, c.tau);
      for (std::size_t i = 0; i < QS.basis().size(); ++i) bound = std::max(bound, QS.basis_element(i)[0].degree());
    }
  }
  for (auto seed : seeds) {
    auto run = split_once(f, I, bound, seed);
    auto wider = split_once(f, I, bound + 1, seed);
    run.drift_free = same_counts(run, wider);
    if (!run.all_morse)
      throw Error(ErrorCode::GenericitySuspect,
                  "seed " + std::to_string(seed) + " gives a degenerate critical point off V(I)");
    report.runs.push_back(std::move(run));
  }
  const auto& first = report.runs.front();
  for (const auto& r : report.runs)
    if (!same_counts(r, first)) {
      report.stable = false;
      throw Error(ErrorCode::GenericitySuspect, "seeds " + std::to_string(first.seed) + " and " +
                                                    std::to_string(r.seed) + " disagree");
    }
  report.sigma = first.sigma;
  report.corrected = first.corrected;
  report.morse = first.morse;
  bool located = std::all_of(report.runs.begin(), report.runs.end(), [](const auto& r) { return r.located_all; });
  if (!located) report.flags.push_back("NONRATIONAL_POINTS");
  bool differs = std::any_of(report.runs.begin(), report.runs.end(), [](const auto& r) {
    return r.morse_global != r.morse || r.corrected_global != r.corrected;
  });
  if (differs) report.flags.push_back("GLOBAL_COUNT_DIFFERS");
  bool drift = std::any_of(report.runs.begin(), report.runs.end(), [](const auto& r) { return !r.drift_free; });
  if (drift) report.flags.push_back("DEGREE_DRIFT");
  // Points entering from infinity can push the global tally past the local
  // bounds; that is reported, not hidden.
  bool excess = report.corrected > report.c_ext;
  for (const auto& [k, count] : report.sigma)
    if (k * count > report.c_ext) excess = true;
  if (excess) report.flags.push_back("EXCEEDS_LOCAL_BOUND");
  return report;
}

namespace {

// Pullback of V along the whole family F_t, t-saturated, then cut at t = 0:
// the number of intersection points that tend to the origin.
std::size_t family_pullback_length(const Polynomial& f, const Polynomial& g, const Ideal& I, const JetContext& ctx,
                                   const Ideal& V) {
  auto F = family(f, g, I);
  auto Lf = lift_germ(f, I);
  auto Lg = lift_germ(g, I);
  if (!Lf.exact || !Lg.exact)
    throw Error(ErrorCode::PreconditionViolated, "f must lie in the polynomial ideal for a family count");
  auto tv = Polynomial::variable(F.ring, F.t);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ctx.n; ++i) images.push_back(Polynomial::variable(F.ring, i));
  for (std::size_t j = 0; j < ctx.r; ++j) {
    Polynomial Fj = Lf.coefficients[j].embed(F.ring) + tv * (Lg.coefficients[j] - Lf.coefficients[j]).embed(F.ring);
    for (const auto& alpha : ctx.multi_indices) {
      Polynomial d = Fj;
      Rational fact = 1;
      for (std::size_t i = 0; i < ctx.n; ++i)
        for (int e = 1; e <= alpha[i]; ++e) {
          d = d.derive(i);
          fact *= e;
        }
      images.push_back(d * Rational(1 / fact));
    }
  }
  std::vector<Polynomial> gens;
  for (const auto& v : V.generators()) gens.push_back(v.substitute(images));
  Ideal P = without_t_torsion(Ideal(F.ring, std::move(gens), MonomialOrder::global()), F);
  auto d = quotient_dimension(plus_t(P, F));
  if (!d.finite) throw Error(ErrorCode::NotIsolated, "the family pullback is not finite near the origin");
  return d.value;
}

}  // namespace

ConservationReport conservation_check(const Polynomial& f, const Ideal& I, int trials, RadicalMode mode,
                                      std::uint64_t seed) {
  static const int denominators[] = {7, 11, 13, 17, 19, 23, 29, 31};
  if (trials < 1) throw Error(ErrorCode::PreconditionViolated, "at least one trial is required");
  auto c = extended_codim(f, I);
  if (!c.value.finite) throw Error(ErrorCode::NotFiniteCodim, "extended codimension is infinite");
  ConservationReport out;
  out.flags.push_back("GLOBAL_COUNT");
  out.flags.push_back("LOCAL_RAY_COUNT");
  auto ctx = jet_context(I, 1);
  auto M = morse_component_ideal(ctx, mode);
  for (const auto& note : M.notes) out.flags.push_back(note);
  out.expected = intersection_multiplicity(f, I, ctx, M.ideal, MultiplicityMethod::CohenMacaulay);
  out.holds = true;
  for (int t = 0; t < trials; ++t) {
    Rational tv(1, denominators[t % 8]);
    auto g = random_deformation(f, I, 0, seed + static_cast<std::uint64_t>(t));
    Polynomial Ft = f + (g - f) * tv;
    auto L = lift_germ(Ft, I);
    if (!L.exact) throw Error(ErrorCode::PreconditionViolated, "f must lie in the polynomial ideal for a global count");
    auto P = jet_pullback(ctx, M.ideal, L).with_order(MonomialOrder::global());
    auto d = quotient_dimension(P);
    out.t_values.push_back(tv);
    if (!d.finite) {
      out.holds = false;
      out.totals.push_back(0);
      out.flags.push_back("INFINITE_TOTAL");
      continue;
    }
    out.totals.push_back(d.value);
    if (d.value != out.expected) out.holds = false;
    auto near = family_pullback_length(f, g, I, ctx, M.ideal);
    out.local_totals.push_back(near);
    if (near != out.expected) out.holds = false;
  }
  return out;
}

}  // namespace germforge
