#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "germforge/error.hpp"
#include "germforge/parse.hpp"
#include "oracles.hpp"

using namespace germforge;

namespace {
RingPtr xy() { return Ring::make({"x", "y"}); }
}  // namespace

TEST_CASE("parse basics") {
  auto R = xy();
  auto p = parse_poly("y^2 + x^3", R);
  CHECK(p.size() == 2);
  CHECK(parse_poly("0", R).is_zero());
  CHECK(parse_poly("2*x - x - x", R).is_zero());
  CHECK(parse_poly("3x^2*y", R) == parse_poly("3*x^2*y", R));
  CHECK(parse_poly("-(x+1)^2", R) == parse_poly("-x^2 - 2x - 1", R));
  CHECK(parse_poly("1/7*y + 2/14", R).to_string() == "1/7*y + 1/7");
}

TEST_CASE("parse errors carry positions") {
  auto R = xy();
  try {
    parse_poly("x + z", R);
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_poly("x +", R), ParseError);
  CHECK_THROWS_AS(parse_poly("(x", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x ^ y", R), ParseError);
}

TEST_CASE("print then parse is identity") {
  auto R = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto p = oracle::random_poly(rng, R, 0, 5, 6) * Rational(1, 1 + i % 4);
    CHECK(parse_poly(p.to_string(), R) == p);
  }
}

TEST_CASE("derive and truncate") {
  auto R = xy();
  auto f = parse_poly("y^2 + x^3", R);
  CHECK(f.derive(0) == parse_poly("3x^2", R));
  CHECK(parse_poly("5", R).derive(0).is_zero());
  CHECK(parse_poly("x*y", R).derive(1) == parse_poly("x", R));
  CHECK_THROWS_AS(f.derive(2), Error);
  CHECK(f.truncate(2) == parse_poly("y^2", R));
  CHECK(f.truncate(10) == f);
  CHECK(parse_poly("1 + x + x^2", R).truncate(0) == Polynomial::constant(R, 1));
}

TEST_CASE("monomial orders") {
  auto local = MonomialOrder::local();
  auto global = MonomialOrder::global();
  Monomial one{0, 0}, x{1, 0}, y{0, 1}, x2{2, 0}, xy1{1, 1};
  CHECK(local.compare(one, x) == Ordering::Greater);
  CHECK(global.compare(one, x) == Ordering::Less);
  CHECK(global.compare(x2, xy1) == Ordering::Greater);
  CHECK(global.compare(x, y) == Ordering::Greater);
  CHECK(local.compare(x, x) == Ordering::Equal);
  CHECK_THROWS_AS(local.compare(x, Monomial{1, 0, 0}), Error);
}

TEST_CASE("ring axioms on random polynomials") {
  auto R = Ring::make({"x", "y", "z"});
  std::mt19937_64 rng(17);
  auto local = MonomialOrder::local();
  for (int i = 0; i < 40; ++i) {
    auto p = oracle::random_poly(rng, R, 0, 6, 5);
    auto q = oracle::random_poly(rng, R, 0, 6, 5);
    auto r = oracle::random_poly(rng, R, 0, 6, 5);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    for (std::size_t v = 0; v < 3; ++v) CHECK((p * q).derive(v) == p.derive(v) * q + p * q.derive(v));
    CHECK(p.truncate(4).truncate(2) == p.truncate(2));
    CHECK(p.truncate(2).truncate(4) == p.truncate(2));
    if (!p.is_zero() && !q.is_zero()) {
      auto lp = p.leading_term(local).mon, lq = q.leading_term(local).mon;
      CHECK((p * q).leading_term(local).mon == lp * lq);
    }
  }
}

TEST_CASE("substitution and translation") {
  auto R = xy();
  auto f = parse_poly("x^2 + y", R);
  std::vector<Rational> pt{1, -2};
  CHECK(f.evaluate(pt) == -1);
  auto g = f.translate(pt);
  CHECK(g.constant_term() == -1);
  std::vector<Rational> zero{0, 0};
  CHECK(g.evaluate(zero) == f.evaluate(pt));
}

TEST_CASE("division by constants") {
  auto R = Ring::make({"x", "y"});
  CHECK(parse_poly("y/7 + x^2/11", R) == parse_poly("1/7*y + 1/11*x^2", R));
  CHECK(parse_poly("(x + y)/2/3", R) == parse_poly("1/6 x + 1/6 y", R));
  CHECK_THROWS_AS(parse_poly("x/y", R), Error);
  CHECK_THROWS_AS(parse_poly("x/(1-1)", R), Error);
}
