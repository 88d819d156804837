// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "germforge/koszul.hpp"
#include "germforge/oracle.hpp"
#include "germforge/parse.hpp"
#include "oracles.hpp"

using namespace germforge;

namespace {

/// Collects failed checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

RingPtr R2 = Ring::make({"x", "y"});

Polynomial P(const std::string& s, const RingPtr& r = R2) { return parse_poly(s, r); }
Ideal ideal(std::initializer_list<const char*> gens, const RingPtr& r = R2) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(P(s, r));
  return Ideal(r, g);
}

bool same_module(const Submodule& a, const Submodule& b) { return a.contains(b) && b.contains(a); }

const Polynomial cusp = P("y^2 + x^3");
const Ideal x2y = ideal({"x^2", "y"});

void cusp_regression(Check& check) {
  auto theta = theta_preserving(x2y);
  Submodule expected(R2, 2,
                     {{P("x"), P("0")}, {P("y"), P("0")}, {P("0"), P("x^2")}, {P("0"), P("y")}});
  check(same_module(theta.module, expected), "Theta_{I,e} differs from <x dx, y dx, x^2 dy, y dy>");
  auto tau = tangent_ideal(cusp, theta);
  check(tau.equals(ideal({"x^3", "x^2*y", "y^2"})), "tau_{I,e}(f) differs from (x^3, x^2 y, y^2)");
  check(extended_codim(cusp, x2y).value == 3u, "c_{I,e}(f) != 3");
  auto c1 = extended_codim(cusp, Ideal::unit(R2)).value;
  auto mu = milnor_number(cusp);
  check(c1 == 2u && mu == 2u, "c_{(1),e}(f) or mu != 2");
}

void strict_semicontinuity(Check& check) {
  auto r = empirical_splitting(cusp, x2y, {11, 13});
  check(r.corrected == 2, "corrected codimension " + std::to_string(r.corrected) + " != 2");
  check(r.c_ext == 3 && r.corrected < r.c_ext, "inequality not strict");
  check(r.morse == 2, "Morse number " + std::to_string(r.morse) + " != 2");
  check(r.stable, "seeds 11 and 13 disagree");
}

void maximal_powers(Check& check) {
  for (std::size_t n : {2u, 3u}) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    auto R = Ring::make(names);
    auto mTheta = maximal_ideal_fields(R, MonomialOrder::local());
    for (int k = 1; k <= 3; ++k) {
      auto theta = theta_preserving(Ideal::maximal_power(R, k));
      check(same_module(theta.module, mTheta),
            "Theta_{m^" + std::to_string(k) + ",e} != m Theta for n = " + std::to_string(n));
    }
  }
}

void smooth_case(Check& check) {
  for (int k : {1, 2}) {
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
    auto R = Ring::make(names);
    Polynomial f(R);
    std::vector<Polynomial> ys;
    for (int i = 0; i < k; ++i) {
      f += Polynomial::variable(R, i) * Polynomial::variable(R, k + i);
      ys.push_back(Polynomial::variable(R, k + i));
    }
    check(extended_codim(f, Ideal(R, ys)).value == 0u, "c_{(y),e}(sum x_i y_i) != 0 for k = " + std::to_string(k));
  }
  auto R3 = Ring::make({"x", "y1", "y2"});
  auto J = ideal({"y1", "y2"}, R3);
  auto a = classify_Ddk(P("y1^2 + y2^2", R3), J);
  check(a.verdict == DdkVerdict::IsDdk && a.d == 1 && a.k == 0, "y1^2 + y2^2 is not D(1,0)");
  auto b = classify_Ddk(P("x*y1^2 + y2^2", R3), J);
  check(b.verdict == DdkVerdict::IsDdk && b.d == 1 && b.k == 1, "x y1^2 + y2^2 is not D(1,1)");
}

bool same_generators(const Ideal& a, const Ideal& b) {
  auto sa = a.standard_basis_polys(), sb = b.standard_basis_polys();
  if (sa.size() != sb.size()) return false;
  for (const auto& p : sa)
    if (std::find(sb.begin(), sb.end(), p) == sb.end()) return false;
  return true;
}

void primitive(Check& check) {
  auto m = ideal({"x", "y"});
  auto P1 = primitive_ideal(m, 6);
  check(same_generators(P1.ideal, m * m), "int(x,y) != (x,y)^2 up to degree 6");
  auto P2 = primitive_ideal(ideal({"x"}), 6);
  check(same_generators(P2.ideal, ideal({"x^2"})), "int(x) != (x^2) up to degree 6");
}

void determinacy(Check& check) {
  int b = determinacy_bound(cusp, x2y);
  check(b == 2, "determinacy bound " + std::to_string(b) + " != 2");
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> coef(-9, 9), deg(6, 8);
  for (int trial = 0; trial < 10; ++trial) {
    // monomials of degree >= 6 in the monomial ideal (x^2, y) span m^6 ∩ I
    Polynomial h(R2);
    while (h.is_zero())
      for (int t = 0; t < 4; ++t) {
        auto monos = monomials_of_degree(2, deg(rng));
        auto& mono = monos[rng() % monos.size()];
        if (mono[0] < 2 && mono[1] < 1) continue;
        h += Polynomial::monomial(R2, mono, coef(rng));
      }
    auto c = extended_codim(cusp + h, x2y).value;
    check(c == 3u, "perturbation " + h.to_string() + " changes c_{I,e}");
  }
}

void versality(Check& check) {
  auto F = build_versal_unfolding(cusp, x2y);
  check(F.parameter_count() == 3, "versal unfolding has " + std::to_string(F.parameter_count()) + " parameters");
  check(versality_check(F, x2y), "built unfolding is not versal");
  for (std::size_t drop = 0; drop < F.parameter_count(); ++drop) {
    std::vector<Polynomial> dirs;
    for (std::size_t i = 0; i < F.parameter_count(); ++i)
      if (i != drop) dirs.push_back(F.parameter_derivative(i).embed(R2));
    check(!versality_check(Unfolding::linear(cusp, dirs), x2y),
          "dropping parameter " + std::to_string(drop + 1) + " keeps versality");
  }
}

void conservation(Check& check) {
  auto r = conservation_check(cusp, x2y, 3);
  check(r.holds && r.expected == 2, "conservation fails or value != 2");
  auto jet = morse_number(cusp, x2y, MorseMethod::Jet);
  auto orc = morse_number(cusp, x2y, MorseMethod::Oracle);
  check(jet == 2 && orc == 2, "jet/oracle on the cusp: " + std::to_string(jet) + "/" + std::to_string(orc));
  auto one = Ideal::unit(R2);
  for (auto [f, want] : {std::pair{P("x^2 + y^2"), std::size_t{1}}, std::pair{cusp, std::size_t{2}}}) {
    auto ctx = jet_context(one, 1);
    auto M = morse_component_ideal(ctx);
    auto cm = intersection_multiplicity(f, one, ctx, M.ideal, MultiplicityMethod::CohenMacaulay);
    auto j = morse_number(f, one, MorseMethod::Jet);
    auto o = morse_number(f, one, MorseMethod::Oracle);
    check(cm == want && j == want && o == want,
          f.to_string() + ": multiplicity " + std::to_string(cm) + ", jet " + std::to_string(j) + ", oracle " +
              std::to_string(o) + ", expected " + std::to_string(want));
  }
}

void coordinate_invariance(Check& check) {
  std::vector<Polynomial> phi{P("x"), P("y + x^2")};
  auto moved = cusp.substitute(phi);
  std::vector<Polynomial> gens;
  for (const auto& g : x2y.generators()) gens.push_back(g.substitute(phi));
  Ideal Iphi(R2, gens);
  check(Iphi.equals(x2y), "the substitution does not preserve I");
  check(extended_codim(moved, x2y).value == 3u, "c_{I,e} changes");
  check(morse_number(moved, x2y, MorseMethod::Jet) == 2, "jet Morse number changes");
  check(morse_number(moved, x2y, MorseMethod::Oracle) == 2, "oracle Morse number changes");
  auto a = empirical_splitting(cusp, x2y, {11, 13});
  auto b = empirical_splitting(moved, x2y, {11, 13});
  check(a.sigma == b.sigma && a.corrected == b.corrected, "splitting function changes");
}

void square_bound(Check& check) {
  auto R3 = Ring::make({"x1", "x2", "x3"});
  auto g = P("x1^2 + x2^3", R3);
  auto f = P("1 + x3^2", R3) * g * g;
  auto c = extended_codim(f, Ideal(R3, {g * g})).value;
  auto mu = milnor_number(P("x1^2 + x2^3", Ring::make({"x1", "x2"})));
  check(mu == 2u, "mu(g) != 2");
  check(c.finite && c.value <= mu.value, "c_{(g^2),e} = " + (c.finite ? std::to_string(c.value) : "inf") + " > mu(g)");
}

void properties(Check& check) {
  // Lie closure
  for (auto I : {x2y, ideal({"x*y"}), ideal({"x^2 + y^3"}), ideal({"x^3", "x*y", "y^2"})}) {
    auto theta = theta_preserving(I);
    const auto& gens = theta.generators();
    for (const auto& X : gens)
      for (const auto& Y : gens)
        check(theta.contains(lie_bracket(X, Y)), "bracket leaves Theta_{I,e} of " + I.to_string());
  }
  // membership against truncated linear algebra
  auto R = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pw(2, 4), coin(0, 1);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Polynomial> gens;
    int bound = -2;
    for (std::size_t v = 0; v < 3; ++v) {
      int e = pw(rng);
      bound += e;
      gens.push_back(Polynomial::monomial(R, Monomial::variable(3, v, e)));
    }
    for (int k = 0; k < 2; ++k) gens.push_back(oracle::random_poly(rng, R, 1, 5, 3));
    Polynomial p = oracle::random_poly(rng, R, 0, 5, 4);
    if (coin(rng)) {
      p = Polynomial(R);
      for (const auto& g : gens) p += g * oracle::random_poly(rng, R, 0, 2, 2);
      if (coin(rng)) p += oracle::random_poly(rng, R, 3, 5, 1);
    }
    agree += Ideal(R, gens).contains(p) == oracle::member_mod_power(p, gens, bound);
  }
  check(agree == 200, "membership agrees on " + std::to_string(agree) + "/200");
  // Koszul
  KoszulInstance reg{R2, {}, {P("x"), P("y")}};
  check(koszul_complex_check(reg), "d o d != 0 for (x, y)");
  auto dims = koszul_homology_dims(reg, 2);
  check(dims == std::vector<std::size_t>{1, 0, 0}, "regular sequence has higher homology");
  KoszulInstance mixed{R2, {P("x^2 + y^3")}, {P("x + y^2"), P("y")}};
  check(koszul_complex_check(mixed), "d o d != 0 with relations");
  // Hilbert-Samuel
  for (auto I : {x2y, ideal({"x*y"}), ideal({"x^2 + y^3", "x*y^2"}), Ideal::unit(R2)}) {
    std::size_t prev = 0;
    for (int m = 0; m <= 6; ++m) {
      auto h = hilbert_samuel(I, m);
      check(h >= prev, "Hilbert-Samuel decreases for " + I.to_string());
      prev = h;
    }
  }
}

struct Criterion {
  const char* name;
  std::function<void(Check&)> run;
  double limit_s;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"cusp relative to (x^2, y): Theta, tau, c = 3, mu = 2", cusp_regression, 1.0},
      {"strict semicontinuity: corrected 2 < 3, Morse 2, seeds 11 13", strict_semicontinuity, 0},
      {"Theta of m^k is m Theta, k = 1..3, n = 2, 3", maximal_powers, 0},
      {"smooth support: codimension 0, D(1,0) and D(1,1)", smooth_case, 0},
      {"primitive ideals of (x, y) and (x) to degree 6", primitive, 0},
      {"determinacy bound 2 and stability under m^6 perturbations", determinacy, 0},
      {"versal unfolding with 3 parameters, none removable", versality, 0},
      {"conservation of number and jet/oracle agreement", conservation, 0},
      {"invariance under (x, y) -> (x, y + x^2)", coordinate_invariance, 0},
      {"c of (1 + x3^2) g^2 relative to (g^2) is at most mu(g)", square_bound, 60.0},
      {"property suites", properties, 0},
  };
  int failed = 0;
  auto total_start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) {
      std::ostringstream ss;
      ss << "took " << secs << " s, limit " << c.limit_s << " s";
      check(false, ss.str());
    }
    bool ok = check.failures.empty();
    failed += !ok;
    std::printf("[%s] %2zu %s (%.2f s)\n", ok ? "PASS" : "FAIL", i + 1, c.name, secs);
    for (const auto& f : check.failures) std::printf("         %s\n", f.c_str());
  }
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
  std::printf("%zu/%zu passed in %.2f s\n", criteria.size() - failed, criteria.size(), total);
  if (total > 300) {
    std::printf("total time exceeds 300 s\n");
    return 1;
  }
  return failed ? 1 : 0;
}
