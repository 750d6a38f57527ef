#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsato/errors.hpp"
#include "bsato/weyl.hpp"

using namespace bsato;

namespace {

AlgebraSignature A1() {
  return AlgebraSignature::make(Ring::make({"x", "dx"}), {{"x", "dx"}});
}

AlgebraSignature A2s() {
  return AlgebraSignature::make(Ring::make({"x1", "x2", "dx1", "dx2", "s"}),
                                {{"x1", "dx1"}, {"x2", "dx2"}});
}

WeylElem W(const AlgebraSignature& sig, const std::string& s) { return WeylElem::parse(sig, s); }

}  // namespace

TEST_CASE("canonical commutation relation") {
  auto sig = A1();
  CHECK(W(sig, "dx*x") == W(sig, "x*dx+1"));
  CHECK(W(sig, "x*dx") == W(sig, "x*dx"));
  // dx^2 * x^2 = x^2 dx^2 + 4 x dx + 2
  CHECK(W(sig, "dx^2*x^2") == W(sig, "x^2*dx^2+4*x*dx+2"));
  // dx^3 * x = x dx^3 + 3 dx^2
  CHECK(W(sig, "dx^3*x") == W(sig, "x*dx^3+3*dx^2"));
}

TEST_CASE("central variables commute") {
  auto sig = A2s();
  CHECK(W(sig, "s*dx1") == W(sig, "dx1*s"));
  CHECK(W(sig, "s*x1") == W(sig, "x1*s"));
  CHECK(W(sig, "dx1*x2") == W(sig, "x2*dx1"));  // cross-pair commutes
  CHECK(W(sig, "dx1*x1") == W(sig, "x1*dx1+1"));
  CHECK(W(sig, "dx2*x2^2*x1") == W(sig, "x1*x2^2*dx2+2*x1*x2"));
}

TEST_CASE("commutator with a polynomial is its derivative") {
  auto sig = A1();
  WeylElem f = W(sig, "x^3+x");
  WeylElem lhs = weyl_mul(W(sig, "dx"), f) - weyl_mul(f, W(sig, "dx"));
  CHECK(lhs == W(sig, "3*x^2+1"));
}

TEST_CASE("associativity on random elements") {
  auto sig = A2s();
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
  auto rand_elem = [&]() {
    WeylElem out(sig);
    for (int t = 0; t < 3; ++t) {
      Mono m(5, 0);
      for (int i = 0; i < 5; ++i) m[i] = e(rng);
      int cc = c(rng);
      if (cc) out.add_term(m, Rat(cc));
    }
    return out;
  };
  for (int trial = 0; trial < 30; ++trial) {
    WeylElem a = rand_elem(), b = rand_elem(), d = rand_elem();
    CHECK(weyl_mul(weyl_mul(a, b), d) == weyl_mul(a, weyl_mul(b, d)));
    // distributivity
    CHECK(weyl_mul(a, b + d) == weyl_mul(a, b) + weyl_mul(a, d));
  }
}

TEST_CASE("parse and print round trips") {
  auto sig = A2s();
  for (const std::string txt :
       {"x1^2*dx1^2+4*x1*dx1+2", "s", "0", "-x1*dx2+1/2*s", "x1*x2*dx1*dx2"}) {
    WeylElem p = W(sig, txt);
    CHECK(W(sig, p.str()) == p);
  }
  // noncommutative parse order matters
  CHECK(W(sig, "dx1*x1").str() == "x1*dx1+1");
  CHECK_THROWS_AS(W(sig, "x1*q"), parse_error);
  CHECK_THROWS_AS(W(sig, "x1^-1"), parse_error);
}

TEST_CASE("from_cpoly maps by name") {
  auto sig = A2s();
  auto r = Ring::make({"x1", "x2"});
  CPoly f = CPoly::parse(r, "x1^2+3*x2");
  WeylElem w = WeylElem::from_cpoly(sig, f);
  CHECK(w == W(sig, "x1^2+3*x2"));
  auto bad = Ring::make({"z"});
  CHECK_THROWS_AS(WeylElem::from_cpoly(sig, CPoly::parse(bad, "z")), ring_error);
}

TEST_CASE("to_cpoly extracts by name") {
  auto sig = A2s();
  auto rs = Ring::make({"s"});
  WeylElem b = W(sig, "s^2+3/2*s+1/2");
  CPoly p = b.to_cpoly(rs);
  CHECK(p == CPoly::parse(rs, "s^2+3/2*s+1/2"));
  CHECK_THROWS_AS(W(sig, "x1*s").to_cpoly(rs), ring_error);
}

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(AlgebraSignature::make(Ring::make({"dx", "x"}), {{"x", "dx"}}), ring_error);
  CHECK_THROWS_AS(
      AlgebraSignature::make(Ring::make({"x", "dx", "y"}), {{"x", "dx"}, {"x", "y"}}),
      ring_error);
}

TEST_CASE("order admissibility for pairs") {
  auto sig = A1();
  // grevlex keeps the pair in one block: fine
  weyl_require_admissible(sig, MonomialOrder::grevlex(sig.ring));
  // splitting x from dx across elimination blocks is rejected
  CHECK_THROWS_AS(weyl_require_admissible(sig, MonomialOrder::elim(sig.ring, {{"x"}})),
                  ring_error);
  // a weight row with w(x)+w(dx) > 0 repairs the split
  MonomialOrder weighted(sig.ring, {{2, 1}}, {{0}, {1}});
  weyl_require_admissible(sig, weighted);
  // negative sum rejected
  MonomialOrder bad(sig.ring, {{-2, 1}}, {});
  CHECK_THROWS_AS(weyl_require_admissible(sig, bad), ring_error);
}

TEST_CASE("weyl power") {
  auto sig = A1();
  CHECK(weyl_pow(W(sig, "x*dx"), 2) == W(sig, "x^2*dx^2+x*dx"));
  CHECK(weyl_pow(W(sig, "x+dx"), 0) == WeylElem(sig, Rat(1)));
}
