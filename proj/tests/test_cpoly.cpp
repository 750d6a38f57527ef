#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsato/cpoly.hpp"
#include "bsato/errors.hpp"

using namespace bsato;

static RingPtr R2() { return Ring::make({"x", "y"}); }
static RingPtr R3() { return Ring::make({"x", "y", "z"}); }

TEST_CASE("grevlex term storage puts leading term first") {
  auto R = R3();
  // x^2*z vs x*y^2: same degree, last differing position is z, so x*y^2 wins.
  CPoly p = CPoly::parse(R, "x^2*z+x*y^2");
  CHECK(R->name(0) == "x");
  Mono lead = p.lm();
  CHECK(lead == Mono{1, 2, 0});
  CHECK(p.str() == "x*y^2+x^2*z");
}

TEST_CASE("parse handles signs, rationals, powers") {
  auto R = R2();
  CPoly p = CPoly::parse(R, "-x^2+3/2*x*y-y+2");
  CHECK(p.coeff(Mono{2, 0}) == -1);
  CHECK(p.coeff(Mono{1, 1}) == make_rat(3, 2));
  CHECK(p.coeff(Mono{0, 1}) == -1);
  CHECK(p.constant_term() == 2);
  CHECK(CPoly::parse(R, "0").is_zero());
  CHECK(CPoly::parse(R, "x - x").is_zero());
  CHECK(CPoly::parse(R, "2*3") == CPoly(R, Rat(6)));
  CHECK(CPoly::parse(R, "x^0") == CPoly(R, Rat(1)));
  CHECK_THROWS_AS(CPoly::parse(R, "w+1"), domain_error);
  CHECK_THROWS_AS(CPoly::parse(R, "x^-1"), parse_error);
  CHECK_THROWS_AS(CPoly::parse(R, "x**y"), parse_error);
  CHECK_THROWS_AS(CPoly::parse(R, ""), parse_error);
  CHECK_THROWS_AS(CPoly::parse(R, "x+"), parse_error);
}

TEST_CASE("print round-trips through parse") {
  auto R = R3();
  for (const char* s : {"x", "1", "0", "-x+1", "x*y*z-1/2*z^3", "2*x^4-x*y+5/3",
                        "x^2+2*x*y+y^2", "-3*x"}) {
    CPoly p = CPoly::parse(R, s);
    CHECK(CPoly::parse(R, p.str()) == p);
  }
  CHECK(CPoly::parse(R3(), "y^2*x + z").str() == "x*y^2+z");
}

TEST_CASE("ring arithmetic") {
  auto R = R2();
  CPoly x = CPoly::variable(R, "x"), y = CPoly::variable(R, "y");
  CPoly p = (x + y).pow(3);
  CHECK(p == CPoly::parse(R, "x^3+3*x^2*y+3*x*y^2+y^3"));
  CHECK((x - y) * (x + y) == CPoly::parse(R, "x^2-y^2"));
  CHECK((p - p).is_zero());
  CPoly q = x * y - CPoly(R, Rat(1));
  CHECK(q.pow(0).is_one());
  CHECK_THROWS_AS(x + CPoly::variable(R3(), "x"), ring_error);
}

TEST_CASE("degrees and homogeneity") {
  auto R = R2();
  CPoly p = CPoly::parse(R, "x^3*y+x*y^2");
  CHECK(p.deg() == 4);
  CHECK(p.deg_in(0) == 3);
  CHECK(p.deg_in(1) == 2);
  CHECK(!p.is_homogeneous());
  CHECK(CPoly::parse(R, "x^2+x*y").is_homogeneous());
  CHECK(CPoly(R).deg() == -1);
  CHECK(p.is_homogeneous_in({0}) == false);
  CHECK(CPoly::parse(R, "x^2*y+x^2").is_homogeneous_in({0}));
}

TEST_CASE("derivative, eval, substitution") {
  auto R = R2();
  CPoly p = CPoly::parse(R, "x^3+x*y^2-2*y");
  CHECK(p.derivative("x") == CPoly::parse(R, "3*x^2+y^2"));
  CHECK(p.derivative("y") == CPoly::parse(R, "2*x*y-2"));
  CHECK(p.eval({Rat(2), Rat(3)}) == Rat(8 + 18 - 6));
  CHECK(p.eval_partial({{0, Rat(1)}}) == CPoly::parse(R, "y^2-2*y+1"));
  CPoly sub = p.substitute(1, CPoly::parse(R, "x+1"));
  CHECK(sub == CPoly::parse(R, "2*x^3+2*x^2-x-2"));
}

TEST_CASE("rename between rings") {
  auto R = R2();
  auto S = Ring::make({"y", "w", "x"});
  CPoly p = CPoly::parse(R, "x^2-y");
  CPoly q = p.rename_into(S);
  CHECK(q == CPoly::parse(S, "x^2-y"));
  CHECK(q.rename_into(R) == p);
  CHECK_THROWS_AS(CPoly::parse(R, "y").rename_into(Ring::make({"x"})), ring_error);
  // unused variables may be dropped
  CHECK(CPoly::parse(R, "x").rename_into(Ring::make({"x"})) ==
        CPoly::variable(Ring::make({"x"}), "x"));
}

TEST_CASE("coefficients_in views") {
  auto R = R2();
  CPoly p = CPoly::parse(R, "x^2*y+x^2+3*x*y^2-1");
  auto by_x = p.coefficients_in(0);
  CHECK(by_x.size() == 3);
  CHECK(by_x[2] == CPoly::parse(R, "y+1"));
  CHECK(by_x[1] == CPoly::parse(R, "3*y^2"));
  CHECK(by_x[0] == CPoly::parse(R, "-1"));
}

TEST_CASE("primitive scaling") {
  auto R = R2();
  CPoly p = CPoly::parse(R, "4/3*x^2-2*y");
  auto [unit, prim] = p.primitive_scaled();
  CHECK(prim == CPoly::parse(R, "2*x^2-3*y"));
  CHECK(unit == make_rat(2, 3));
  CHECK(unit * prim == p);
  auto [u2, p2] = CPoly::parse(R, "-x-y").primitive_scaled();
  CHECK(u2 == -1);
  CHECK(p2 == CPoly::parse(R, "x+y"));
  auto [u0, p0] = CPoly(R).primitive_scaled();
  CHECK(u0 == 1);
  CHECK(p0.is_zero());
}

TEST_CASE("deterministic comparison") {
  auto R = R2();
  CPoly a = CPoly::parse(R, "x^2");
  CPoly b = CPoly::parse(R, "x^2+1");
  CHECK(a.cmp(b) != 0);
  CHECK(a.cmp(b) == -b.cmp(a));
  CHECK(a.cmp(a) == 0);
}
