#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "germforge/error.hpp"
#include "germforge/oracle.hpp"
#include "germforge/parse.hpp"

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

bool has_flag(const std::vector<std::string>& flags, const std::string& f) {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

void check_report(const SplittingReport& r) {
  std::size_t total = 0;
  for (auto [k, count] : r.sigma) {
    CHECK(k * count <= r.c_ext);
    total += k * count;
  }
  CHECK(r.corrected <= r.c_ext);
  // every run either located all its points or says so
  for (const auto& run : r.runs)
    if (run.located_all) CHECK(total == run.corrected);
}
}  // namespace

TEST_CASE("random deformations") {
  auto g1 = random_deformation(cusp, x2y, 0, 11);
  auto g2 = random_deformation(cusp, x2y, 0, 11);
  CHECK(g1 == g2);
  CHECK(g1.to_string() == g2.to_string());
  CHECK(g1 != random_deformation(cusp, x2y, 0, 13));
  for (std::uint64_t seed : {1, 2, 3, 11, 13}) {
    auto g = random_deformation(cusp, x2y, 2, seed);
    CHECK(x2y.contains(g - cusp));
  }
  auto dirs = deformation_directions(cusp, x2y, 0);
  CHECK(dirs.size() >= 3);
  CHECK(random_deformation(P("x*y"), I({"y"}), 0, 5) == P("x*y"));
  CHECK_THROWS_AS(random_deformation(P("y^2"), I({"y"}), 0, 1), Error);
}

TEST_CASE("critical points off V(I)") {
  auto g = P("y^2 + y/7 + x^3 + x^2/11");
  auto c = critical_points_outside(g, x2y);
  CHECK(c.count == 2);
  CHECK(c.all_morse);
  CHECK(critical_points_outside(cusp, x2y).count == 0);
  CHECK(critical_points_outside(cusp, x2y).saturated.is_unit());
  // (1) saturates to the identity: the Morse point at the origin is kept
  CHECK(critical_points_outside(P("x^2 + y^2"), Ideal::unit(R2)).count == 1);
  CHECK_THROWS_AS(critical_points_outside(P("y^2"), Ideal::unit(R2)), Error);
  auto d = critical_points_outside(P("x^3 + y^2"), Ideal::unit(R2));
  CHECK(d.count == 2);
  CHECK_FALSE(d.all_morse);
}

TEST_CASE("local counts along a ray") {
  auto g = P("y^2 + y/7 + x^3 + x^2/11");
  auto lc = local_critical_count(cusp, g, x2y);
  CHECK(lc.count == 2);
  CHECK(lc.all_morse);
  CHECK(local_corrected_codim(cusp, g, x2y) == 2);
  // a point far away is not counted locally
  auto R1 = Ring::make({"x"});
  auto far = local_critical_count(P("x^2", R1), P("x^2 - x^3/3", R1), Ideal::unit(R1));
  CHECK(far.count == 1);
  CHECK(critical_points_outside(P("x^2 - x^3/3", R1), Ideal::unit(R1)).count == 2);
}

TEST_CASE("splitting function") {
  auto r = empirical_splitting(cusp, x2y, {11, 13});
  CHECK(r.c_ext == 3);
  CHECK(r.morse == 2);
  CHECK(r.corrected == 2);
  CHECK(r.corrected < r.c_ext);
  CHECK(r.stable);
  CHECK(r.sigma.at(1) == 2);
  CHECK(has_flag(r.flags, "GLOBAL_COUNT"));
  check_report(r);

  auto zero = empirical_splitting(P("x*y"), I({"y"}), {11});
  CHECK(zero.c_ext == 0);
  CHECK(zero.morse == 0);
  CHECK(zero.corrected == 0);
  CHECK(zero.sigma.empty());

  auto R1 = Ring::make({"x"});
  auto a2 = empirical_splitting(P("x^3", R1), Ideal::unit(R1), {11, 13});
  CHECK(a2.sigma.at(1) == 2);
  CHECK(a2.corrected == 2);
  CHECK(a2.morse == 2);
  check_report(a2);

  CHECK_THROWS_AS(empirical_splitting(cusp, x2y, {}), Error);
  CHECK_THROWS_AS(empirical_splitting(P("y^2"), I({"y"}), {11}), Error);
}

TEST_CASE("splitting additivity on regression germs") {
  auto R1 = Ring::make({"x"});
  struct Case {
    Polynomial f;
    Ideal I;
  };
  std::vector<Case> cases = {
      {cusp, x2y},
      {P("x^2 + y^2"), Ideal::unit(R2)},
      {P("x^4", R1), Ideal::unit(R1)},
      {P("x^2*y + y^3"), I({"x", "y"})},
  };
  for (const auto& c : cases) {
    CAPTURE(c.f.to_string());
    auto r = empirical_splitting(c.f, c.I, {11, 13});
    check_report(r);
    CHECK(r.morse <= r.corrected);
  }
}

TEST_CASE("conservation of number") {
  auto r = conservation_check(cusp, x2y, 3);
  CHECK(r.expected == 2);
  CHECK(r.holds);
  REQUIRE(r.totals.size() == 3);
  for (auto t : r.totals) CHECK(t == 2);
  for (auto t : r.local_totals) CHECK(t == 2);

  auto zero = conservation_check(P("x*y"), I({"y"}), 2);
  CHECK(zero.holds);
  CHECK(zero.expected == 0);
  CHECK_THROWS_AS(conservation_check(cusp, x2y, 0), Error);
}

TEST_CASE("codimension bound for squares") {
  auto R3 = Ring::make({"x1", "x2", "x3"});
  auto g = P("x1^2 + x2^3", R3);
  auto f = P("1 + x3^2", R3) * g * g;
  auto c = extended_codim(f, Ideal(R3, {g * g}));
  REQUIRE(c.value.finite);
  auto mu = milnor_number(P("x1^2 + x2^3", Ring::make({"x1", "x2"})));
  REQUIRE(mu.finite);
  CHECK(mu.value == 2);
  CHECK(c.value.value <= (2 - 1) * mu.value);
}

TEST_CASE("semicontinuity in the versal family") {
  auto F = build_versal_unfolding(cusp, x2y);
  REQUIRE(F.parameter_count() == 3);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> s;
    for (std::size_t i = 0; i < F.parameter_count(); ++i) {
      Rational q(static_cast<long>(rng() % 6) + 1, static_cast<long>(rng() % 13) + 1);
      q.canonicalize();
      s.push_back(q);
    }
    auto g = F.specialize(s).embed(R2);
    auto total = local_corrected_codim(cusp, g, x2y);
    CHECK(total <= 3);
    CHECK(total < 3);
  }
}
