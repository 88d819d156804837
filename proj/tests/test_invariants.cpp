#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "germforge/error.hpp"
#include "germforge/invariants.hpp"
#include "germforge/parse.hpp"
#include "oracles.hpp"

using namespace germforge;

namespace {
RingPtr R2 = Ring::make({"x", "y"});
Polynomial P(const char* s, const RingPtr& r = R2) { return parse_poly(s, r); }
Ideal I(std::initializer_list<const char*> gens, const RingPtr& r = R2) {
  std::vector<Polynomial> g;
  for (auto s : gens) g.push_back(P(s, r));
  return Ideal(r, g);
}
const Polynomial cusp = P("y^2 + x^3");
const Ideal x2y = I({"x^2", "y"});
}  // namespace

TEST_CASE("extended and plain codimension of the cusp") {
  auto c = extended_codim(cusp, x2y);
  CHECK(c.value == 3u);
  CHECK(c.tau.equals(I({"x^3", "x^2*y", "y^2"})));
  CHECK(extended_codim(cusp, Ideal::unit(R2)).value == 2u);
  CHECK(milnor_number(cusp) == 2u);
  auto plain = plain_codim(cusp, x2y);
  REQUIRE(plain.value.finite);
  CHECK(plain.value.value >= 3);
  // the plain tangent ideal against a truncated oracle: I/τ_I has the
  // same dimension as (I + m^8)/(τ_I + m^8) once τ_I ⊇ m^8
  std::size_t dI = oracle::quotient_dim_mod_power(x2y.generators(), 2, 8);
  std::size_t dtau = oracle::quotient_dim_mod_power(plain.tau.generators(), 2, 8);
  CHECK(dtau - dI == plain.value.value);
  CHECK_FALSE(plain_codim(P("0"), x2y).value.finite);
  CHECK_THROWS_AS(extended_codim(P("x"), x2y), Error);
  try {
    extended_codim(P("x"), x2y);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FNotInIdeal);
  }
}

TEST_CASE("smooth ideals have zero codimension for the normal form") {
  auto R = Ring::make({"x1", "y1"});
  CHECK(extended_codim(P("x1*y1", R), I({"y1"}, R)).value == 0u);
  auto R4 = Ring::make({"x1", "x2", "y1", "y2"});
  auto c = extended_codim(P("x1*y1 + x2*y2", R4), I({"y1", "y2"}, R4));
  CHECK(c.value == 0u);
  CHECK(c.tau.equals(I({"y1", "y2"}, R4)));
}

TEST_CASE("finite plain iff finite extended") {
  std::vector<std::pair<Polynomial, Ideal>> cases = {
      {cusp, x2y},
      {P("x^2 + y^2"), Ideal::unit(R2)},
      {P("y^2"), I({"y^2"})},
      {P("x*y"), I({"x*y"})},
      {P("x^2*y"), I({"y"})},
      {P("x^3 + y^3"), I({"x", "y"})},
  };
  for (auto& [f, J] : cases) {
    auto e = extended_codim(f, J);
    auto p = plain_codim(f, J);
    CHECK(e.value.finite == p.value.finite);
    if (e.value.finite) {
      CHECK(p.value.value >= e.value.value);
      CHECK((e.value.value == 0) == e.tau.equals(J));
      CHECK(determinacy_bound(f, J) <= static_cast<int>(e.value.value));
    }
  }
}

TEST_CASE("determinacy") {
  CHECK(determinacy_bound(cusp, x2y) == 2);
  CHECK(determinacy_bound(P("x1*y1", Ring::make({"x1", "y1"})), I({"y1"}, Ring::make({"x1", "y1"}))) == 0);
  CHECK_THROWS_AS(determinacy_bound(P("0"), x2y), Error);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto a = oracle::random_poly(rng, R2, 4, 6, 3);
    auto b = oracle::random_poly(rng, R2, 5, 7, 3);
    auto g = a * P("x^2") + b * P("y");
    CHECK(g.order() >= 6);
    CHECK(extended_codim(cusp + g, x2y).value == 3u);
  }
}

TEST_CASE("versality") {
  auto F = build_versal_unfolding(cusp, x2y);
  CHECK(F.parameter_count() == 3);
  CHECK(versality_check(F, x2y));
  CHECK(F.base_germ() == cusp.embed(F.base_ring()));
  for (std::size_t drop = 0; drop < 3; ++drop) {
    std::vector<Polynomial> dirs;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != drop) dirs.push_back(F.parameter_derivative(i).embed(R2));
    CHECK_FALSE(versality_check(Unfolding::linear(cusp, dirs), x2y));
  }
  CHECK(versality_check(Unfolding::linear(cusp, {P("x^2"), P("y"), P("x*y")}), x2y));
  CHECK_FALSE(versality_check(Unfolding::linear(cusp, {P("x^2")}), x2y));
  CHECK_THROWS_AS(versality_check(Unfolding::linear(cusp, {P("x")}), x2y), Error);

  auto R = Ring::make({"x"});
  auto A2 = build_versal_unfolding(P("x^3", R), Ideal::unit(R));
  CHECK(A2.parameter_count() == 2);
  CHECK(versality_check(A2, Ideal::unit(R)));

  auto Rs = Ring::make({"x1", "y1"});
  auto trivial = build_versal_unfolding(P("x1*y1", Rs), I({"y1"}, Rs));
  CHECK(trivial.parameter_count() == 0);
  CHECK(versality_check(trivial, I({"y1"}, Rs)));
}

TEST_CASE("positive codimension locus") {
  auto loc = positive_codim_locus(cusp, x2y);
  CHECK(quotient_dimension(loc).finite);
  CHECK(loc.contains(P("x^2")));
  CHECK(loc.contains(P("y")));
  CHECK_FALSE(loc.is_unit());
  CHECK(positive_codim_locus(P("y^2"), I({"y^2"})).is_unit());
  CHECK(positive_codim_locus(P("0"), x2y).is_zero());
}

TEST_CASE("D(d,k) classification") {
  auto R3 = Ring::make({"x", "y1", "y2"});
  auto J = I({"y1", "y2"}, R3);
  auto a = classify_Ddk(P("y1^2 + y2^2", R3), J);
  CHECK(a.d == 1);
  CHECK(a.k == 0);
  CHECK(a.verdict == DdkVerdict::IsDdk);
  auto b = classify_Ddk(P("x*y1^2 + y2^2", R3), J);
  CHECK(b.d == 1);
  CHECK(b.k == 1);
  CHECK(b.verdict == DdkVerdict::IsDdk);
  REQUIRE(b.forms.size() == 1);
  CHECK(b.forms[0] == P("x", R3));
  auto bad = classify_Ddk(P("x^2*y1^2 + y2^2", R3), J);
  CHECK(bad.k == 1);
  CHECK(bad.verdict == DdkVerdict::NotDdk);

  auto Ry = Ring::make({"y1", "y2"});
  auto c = classify_Ddk(P("y1*y2", Ry), I({"y1", "y2"}, Ry));
  CHECK(c.d == 0);
  CHECK(c.k == 0);
  CHECK(c.verdict == DdkVerdict::IsDdk);

  CHECK_THROWS_AS(classify_Ddk(P("y1", R3), J), Error);
  CHECK_THROWS_AS(classify_Ddk(P("y1^2", R3), I({"y1 + x"}, R3)), Error);

  // IS_Ddk agrees with zero extended codimension relative to ∫J = J^2
  for (const char* f : {"y1^2 + y2^2", "x*y1^2 + y2^2", "x^2*y1^2 + y2^2"}) {
    auto g = P(f, R3);
    auto prim = primitive_ideal(J, 6);
    auto cls = classify_Ddk(g, J);
    auto c = extended_codim(g, prim.ideal);
    CHECK((cls.verdict == DdkVerdict::IsDdk) == (c.value == 0u));
  }
}

TEST_CASE("local codimension at a point") {
  // relative to (1) the extended codimension is the Milnor number
  auto f = P("x^2 - 2*x + 1 + y^2");
  CHECK(extended_codim_at(f, Ideal::unit(R2), {Rational(1), Rational(0)}) == 1u);
  CHECK(extended_codim_at(P("x^3 - 3*x^2 + 3*x - 1 + y^2"), Ideal::unit(R2), {Rational(1), Rational(0)}) == 2u);
}
