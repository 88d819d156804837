#include "germforge/jetmorse.hpp"

#include <stdexcept>

#include "germforge/error.hpp"
#include "germforge/koszul.hpp"
#include "germforge/oracle.hpp"

namespace germforge {

std::size_t JetContext::alpha_index(const Monomial& alpha) const {
  for (std::size_t i = 0; i < multi_indices.size(); ++i)
    if (multi_indices[i] == alpha) return i;
  throw Error(ErrorCode::IndexOutOfRange, "multi-index beyond the jet order");
}

Polynomial JetContext::at_z(const Polynomial& g) const {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(ring, i));
  return g.substitute(images);
}

JetContext jet_context(const Ideal& I, int k) {
  if (k < 1) throw Error(ErrorCode::PreconditionViolated, "jet order must be at least 1");
  if (I.is_zero()) throw Error(ErrorCode::ZeroIdeal, "jet context of the zero ideal");
  JetContext ctx;
  ctx.base = I.ring();
  ctx.n = I.nvars();
  ctx.k = k;
  ctx.generators = I.generators();
  ctx.r = ctx.generators.size();
  for (int d = 0; d <= k; ++d)
    for (auto& m : monomials_of_degree(ctx.n, d)) ctx.multi_indices.push_back(std::move(m));

  std::vector<std::string> names;
  for (std::size_t i = 0; i < ctx.n; ++i) names.push_back("z" + std::to_string(i + 1));
  for (std::size_t j = 0; j < ctx.r; ++j)
    for (const auto& a : ctx.multi_indices) {
      std::string name = "a" + std::to_string(j + 1);
      for (std::size_t i = 0; i < ctx.n; ++i) name += "_" + std::to_string(a[i]);
      names.push_back(std::move(name));
    }
  ctx.ring = Ring::make(std::move(names));

  std::vector<Polynomial> gz;
  for (const auto& g : ctx.generators) gz.push_back(ctx.at_z(g));
  const std::size_t beta0 = ctx.alpha_index(Monomial(ctx.n));
  for (std::size_t i = 0; i < ctx.n; ++i) {
    const std::size_t beta_i = ctx.alpha_index(Monomial::variable(ctx.n, i, 1));
    Polynomial Qi(ctx.ring);
    for (std::size_t j = 0; j < ctx.r; ++j) {
      Qi += Polynomial::variable(ctx.ring, ctx.jet_variable(j, beta0)) * ctx.at_z(ctx.generators[j].derive(i));
      Qi += Polynomial::variable(ctx.ring, ctx.jet_variable(j, beta_i)) * gz[j];
    }
    ctx.Q.push_back(std::move(Qi));
  }
  ctx.J1 = Ideal(ctx.ring, ctx.Q, MonomialOrder::global());
  ctx.J2 = Ideal(ctx.ring, gz, MonomialOrder::global());
  return ctx;
}

const char* radical_mode_name(RadicalMode m) {
  switch (m) {
    case RadicalMode::Radical: return "radical";
    case RadicalMode::AssumeReduced: return "assume-reduced";
    case RadicalMode::Saturation: return "saturation";
  }
  return "?";
}

namespace {

Polynomial determinant(std::vector<std::vector<Polynomial>> M) {
  const std::size_t c = M.size();
  if (c == 1) return M[0][0];
  Polynomial out(M[0][0].ring());
  for (std::size_t col = 0; col < c; ++col) {
    if (M[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < c; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < c; ++k)
        if (k != col) row.push_back(M[r][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = M[0][col] * determinant(std::move(minor));
    out += col % 2 ? -term : term;
  }
  return out;
}

}  // namespace

bool certify_reduced(const Ideal& J) {
  Ideal G = J.with_order(MonomialOrder::global());
  if (G.is_unit()) return true;
  const std::size_t N = G.nvars();
  const std::size_t c = G.generators().size();
  int dim = krull_dimension(G);
  if (dim != static_cast<int>(N) - static_cast<int>(c)) return false;
  std::vector<Polynomial> gens = G.generators();
  std::vector<std::size_t> cols(c);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> void {
    if (pos == c) {
      std::vector<std::vector<Polynomial>> M(c);
      for (std::size_t r = 0; r < c; ++r)
        for (auto col : cols) M[r].push_back(G.generators()[r].derive(col));
      auto d = determinant(std::move(M));
      if (!d.is_zero()) gens.push_back(std::move(d));
      return;
    }
    for (std::size_t i = from; i < N; ++i) {
      cols[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return krull_dimension(Ideal(G.ring(), std::move(gens), MonomialOrder::global())) < dim;
}

MorseComponent morse_component_ideal(const JetContext& ctx, RadicalMode mode) {
  MorseComponent out;
  out.mode = mode;
  if (mode == RadicalMode::Saturation) {
    auto sat = saturation(ctx.J1, ctx.J2);
    out.ideal = sat.ideal;
    out.notes.push_back("(J1 : J2^oo) used in place of (sqrt(J1) : J2)");
    return out;
  }
  Ideal rad = ctx.J1;
  if (krull_dimension(ctx.J1) <= 0) {
    rad = zero_dim_radical(ctx.J1);
  } else if (certify_reduced(ctx.J1)) {
    out.certified_reduced = true;
  } else if (mode == RadicalMode::AssumeReduced) {
    out.notes.push_back("J1 assumed reduced");
  } else {
    throw Error(ErrorCode::RadicalUnavailable,
                "J1 is positive-dimensional and could not be certified reduced; pass --assume-reduced or --saturate");
  }
  out.ideal = ideal_quotient(rad, ctx.J2);
  if (out.ideal.equals(rad)) out.ideal = rad;
  return out;
}

Lifting lift_germ(const Polynomial& f, const Ideal& I, int truncation) {
  std::vector<FreeVector> gens;
  for (const auto& g : I.generators()) gens.push_back({g});
  Lifter global(I.ring(), 1, gens, MonomialOrder::global());
  if (auto a = global.lift({f}, 0)) return {std::move(*a), true, 0};
  Lifter local(I.ring(), 1, gens, MonomialOrder::local());
  auto a = local.lift({f}, truncation);
  if (!a) throw Error(ErrorCode::FNotInIdeal, "f = " + f.to_string() + " is not in " + I.to_string());
  return {std::move(*a), false, truncation};
}

namespace {

Polynomial taylor_coefficient(const Polynomial& p, const Monomial& alpha) {
  Polynomial d = p;
  Rational fact = 1;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    for (int e = 1; e <= alpha[i]; ++e) {
      d = d.derive(i);
      fact *= e;
    }
  return d * Rational(1 / fact);
}

std::vector<Polynomial> pullback_images(const JetContext& ctx, const Lifting& lifting) {
  if (lifting.coefficients.size() != ctx.r) throw Error(ErrorCode::DimensionMismatch, "one lifting coefficient per generator");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ctx.n; ++i) images.push_back(Polynomial::variable(ctx.base, i));
  for (std::size_t j = 0; j < ctx.r; ++j)
    for (const auto& alpha : ctx.multi_indices) images.push_back(taylor_coefficient(lifting.coefficients[j], alpha));
  return images;
}

}  // namespace

Ideal jet_pullback(const JetContext& ctx, const Ideal& V, const Lifting& lifting) {
  if (!same_ring(V.ring(), ctx.ring)) throw Error(ErrorCode::DimensionMismatch, "V must live in the jet ring");
  auto images = pullback_images(ctx, lifting);
  std::vector<Polynomial> gens;
  for (const auto& v : V.generators()) gens.push_back(v.substitute(images));
  return Ideal(ctx.base, std::move(gens), MonomialOrder::local());
}

Ideal jet_pullback(const Polynomial& f, const Ideal& I, const JetContext& ctx, const Ideal& V) {
  return jet_pullback(ctx, V, lift_germ(f, I));
}

namespace {

std::size_t koszul_multiplicity(const JetContext& ctx, const Ideal& V, const Lifting& lifting) {
  auto images = pullback_images(ctx, lifting);
  // h_(j,α)(z) and the jet point over the origin
  std::vector<Polynomial> zs;
  for (std::size_t i = 0; i < ctx.n; ++i) zs.push_back(Polynomial::variable(ctx.ring, i));
  std::vector<Rational> point(ctx.ring->size(), Rational(0));
  std::vector<Polynomial> h;
  for (std::size_t v = ctx.n; v < ctx.ring->size(); ++v) {
    h.push_back(images[v].substitute(zs));
    point[v] = images[v].constant_term();
  }
  KoszulInstance inst;
  inst.ring = ctx.ring;
  inst.order = MonomialOrder::local();
  for (const auto& g : V.generators()) inst.relations.push_back(g.translate(point));
  for (std::size_t v = ctx.n; v < ctx.ring->size(); ++v) {
    const auto& hv = h[v - ctx.n];
    inst.sequence.push_back(Polynomial::variable(ctx.ring, v) - (hv - Polynomial::constant(ctx.ring, hv.constant_term())));
  }
  if (!koszul_complex_check(inst)) throw std::logic_error("Koszul differentials do not compose to zero");
  auto e = koszul_euler(inst);
  if (e.inclusive < 0) throw std::logic_error("negative Koszul Euler characteristic");
  return static_cast<std::size_t>(e.inclusive);
}

}  // namespace

std::size_t intersection_multiplicity(const Polynomial& f, const Ideal& I, const JetContext& ctx, const Ideal& V,
                                      MultiplicityMethod method, const std::optional<Lifting>& lifting) {
  Lifting L = lifting ? *lifting : lift_germ(f, I);
  for (;;) {
    Ideal P = jet_pullback(ctx, V, L);
    auto d = quotient_dimension(P);
    if (!d.finite) throw Error(ErrorCode::NotIsolated, "the origin is not isolated in the pulled-back zero set");
    // A truncated lift perturbs the generators by elements of m^(T-k); once
    // that lies in m^(d+1) ⊆ m·P the ideal is unchanged.
    if (!L.exact && L.truncation - ctx.k < static_cast<int>(d.value) + 1) {
      if (lifting) throw Error(ErrorCode::PreconditionViolated, "supplied lifting is truncated too low");
      L = lift_germ(f, I, static_cast<int>(d.value) + ctx.k + 2);
      continue;
    }
    if (method == MultiplicityMethod::CohenMacaulay) return d.value;
    return koszul_multiplicity(ctx, V, L);
  }
}

std::size_t morse_number(const Polynomial& f, const Ideal& I, MorseMethod method, RadicalMode mode,
                         const std::vector<std::uint64_t>& seeds) {
  auto c = extended_codim(f, I);
  if (!c.value.finite) throw Error(ErrorCode::NotFiniteCodim, "extended codimension is infinite");
  if (method == MorseMethod::Oracle) return empirical_splitting(f, I, seeds).morse;
  auto ctx = jet_context(I, 1);
  auto M = morse_component_ideal(ctx, mode);
  return intersection_multiplicity(f, I, ctx, M.ideal, MultiplicityMethod::CohenMacaulay);
}

}  // namespace germforge
