#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsato/errors.hpp"
#include "bsato/factor.hpp"

using namespace bsato;

namespace {

RingPtr R2() { return Ring::make({"x", "y"}); }
RingPtr Rs() { return Ring::make({"s"}); }

CPoly P(const RingPtr& r, const std::string& s) { return CPoly::parse(r, s); }

bool factors_are(const FactorList& fl, const std::vector<std::pair<std::string, int>>& want,
                 const RingPtr& r) {
  if (fl.factors.size() != want.size()) return false;
  std::vector<std::pair<CPoly, int>> expect;
  for (const auto& [s, m] : want) expect.emplace_back(P(r, s), m);
  std::sort(expect.begin(), expect.end(),
            [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (fl.factors[i].second != expect[i].second) return false;
    if (fl.factors[i].first.cmp(expect[i].first) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("exact division") {
  auto r = R2();
  CPoly a = P(r, "x^2-y^2"), b = P(r, "x+y");
  auto q = try_divide(a, b);
  REQUIRE(q.has_value());
  CHECK(*q == P(r, "x-y"));
  CHECK(!try_divide(P(r, "x^2+y^2"), b).has_value());
  CHECK(!try_divide(a, CPoly(r)).has_value());
  auto z = try_divide(CPoly(r), b);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
  // divisor with rational unit
  auto q2 = try_divide(P(r, "x^2-y^2"), P(r, "1/2*x+1/2*y"));
  REQUIRE(q2.has_value());
  CHECK(*q2 == P(r, "2*x-2*y"));
}

TEST_CASE("gcd univariate and multivariate") {
  auto r = R2();
  CHECK(poly_gcd(P(r, "x^2-1"), P(r, "x^2-2*x+1")) == P(r, "x-1"));
  CHECK(poly_gcd(P(r, "x^2-y^2"), P(r, "x^2+2*x*y+y^2")) == P(r, "x+y"));
  CHECK(poly_gcd(P(r, "x^2+y^2"), P(r, "x+y")) == P(r, "1"));
  // content interplay: gcd(2x(x+y), 4y(x+y)) = x+y (primitive normalization)
  CHECK(poly_gcd(P(r, "2*x^2+2*x*y"), P(r, "4*x*y+4*y^2")) == P(r, "x+y"));
  // zero and constant arguments
  CHECK(poly_gcd(CPoly(r), P(r, "-3*x-3")) == P(r, "x+1"));
  CHECK(poly_gcd(P(r, "7"), P(r, "x")) == P(r, "1"));
  // negative leading coefficient normalized away
  CHECK(poly_gcd(P(r, "-x^2+y^2"), P(r, "-x-y")) == P(r, "x+y"));
  // many
  CHECK(poly_gcd_many({P(r, "x^2*y"), P(r, "x*y^2"), P(r, "x*y")}, r) == P(r, "x*y"));
}

TEST_CASE("difference of squares splits") {
  auto r = R2();
  FactorList fl = factor(P(r, "x^2-y^2"));
  CHECK(fl.unit == 1);
  CHECK(factors_are(fl, {{"x-y", 1}, {"x+y", 1}}, r));
}

TEST_CASE("b-polynomial style univariate") {
  auto r = Rs();
  FactorList fl = factor(P(r, "s^2+3/2*s+1/2"));
  CHECK(fl.unit == make_rat(1, 2));
  CHECK(factors_are(fl, {{"s+1", 1}, {"2*s+1", 1}}, r));
  CHECK(fl.expand(r) == P(r, "s^2+3/2*s+1/2"));
}

TEST_CASE("irreducible stays whole") {
  auto r = R2();
  FactorList fl = factor(P(r, "x^2+y^2"));
  CHECK(factors_are(fl, {{"x^2+y^2", 1}}, r));
  // irreducible despite reducible evaluations (x^2-y^2-1 at y=0 splits)
  FactorList fl2 = factor(P(r, "x^2-y^2-1"));
  CHECK(factors_are(fl2, {{"x^2-y^2-1", 1}}, r));
  // swinnerton-dyer style univariate: x^4-10x^2+1 irreducible over Q
  auto rs = Rs();
  FactorList fl3 = factor(P(rs, "s^4-10*s^2+1"));
  CHECK(factors_are(fl3, {{"s^4-10*s^2+1", 1}}, rs));
}

TEST_CASE("multiplicities and content") {
  auto r = R2();
  FactorList fl = factor(P(r, "x^3*y+2*x^2*y+x*y"));
  CHECK(fl.unit == 1);
  CHECK(factors_are(fl, {{"x", 1}, {"y", 1}, {"x+1", 2}}, r));

  FactorList fl2 = factor(P(r, "-4/3*x^2+4/3*y^2"));
  CHECK(fl2.unit == make_rat(-4, 3));
  CHECK(factors_are(fl2, {{"x-y", 1}, {"x+y", 1}}, r));

  FactorList fl3 = factor(P(r, "6"));
  CHECK(fl3.unit == 6);
  CHECK(fl3.factors.empty());

  CHECK_THROWS_AS(factor(CPoly(r)), domain_error);
}

TEST_CASE("trivariate factorization") {
  auto r = Ring::make({"x", "y", "z"});
  CPoly f = P(r, "x+y") * P(r, "x+z") * P(r, "y+z+1");
  FactorList fl = factor(f);
  CHECK(factors_are(fl, {{"x+y", 1}, {"x+z", 1}, {"y+z+1", 1}}, r));

  // x-y*z normalizes to y*z-x (positive leading coefficient), unit -1
  CPoly g = P(r, "x^2+y*z") * P(r, "x^2+y*z") * P(r, "x-y*z");
  FactorList fl2 = factor(g);
  CHECK(fl2.unit == -1);
  CHECK(factors_are(fl2, {{"x^2+y*z", 2}, {"y*z-x", 1}}, r));
  CHECK(fl2.expand(r) == g);
}

TEST_CASE("random product roundtrip") {
  auto r = R2();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<CPoly> atoms = {
      P(r, "x+y"),     P(r, "x-y"),   P(r, "x+1"),       P(r, "y-2"),
      P(r, "x^2+y^2"), P(r, "x*y+1"), P(r, "x^2+y+1"),   P(r, "x"),
      P(r, "y"),       P(r, "x+y+1"), P(r, "x^2-y^2-1"),
  };
  for (int trial = 0; trial < 25; ++trial) {
    CPoly prod(r, Rat(1));
    int nfac = 1 + trial % 3;
    for (int i = 0; i < nfac; ++i) {
      int pick = std::uniform_int_distribution<int>(0, atoms.size() - 1)(rng);
      int mult = 1 + trial % 2;
      prod = prod * atoms[pick].pow(mult);
    }
    int u = coef(rng);
    if (u == 0) u = 3;
    prod = prod * Rat(u);
    FactorList fl = factor(prod);
    CHECK(fl.expand(r) == prod);
    // every reported factor is nontrivial and divides the product
    for (const auto& [q, m] : fl.factors) {
      CHECK(!q.is_constant());
      CHECK(m >= 1);
      CHECK(try_divide(prod, q.pow(m)).has_value());
    }
  }
}

TEST_CASE("squarefree part") {
  auto r = R2();
  CHECK(squarefree_part(P(r, "x^2*y")) == P(r, "x*y"));
  CPoly p = P(r, "x+y").pow(3) * P(r, "x-y");
  CHECK(squarefree_part(p) == P(r, "x^2-y^2"));
  CHECK(squarefree_part(P(r, "5")) == P(r, "1"));
}

TEST_CASE("rational roots") {
  auto rs = Rs();
  CPoly b = P(rs, "s+1").pow(2) * P(rs, "s+2/3") * P(rs, "s+4/3");
  auto roots = rational_roots(b);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0] == make_rat(-4, 3));
  CHECK(roots[1] == -1);
  CHECK(roots[2] == -1);
  CHECK(roots[3] == make_rat(-2, 3));

  CHECK(rational_roots(P(rs, "7")).empty());
  CHECK_THROWS_AS(rational_roots(P(rs, "s^2+1")), incomplete_error);
  CHECK_THROWS_AS(rational_roots(CPoly(rs)), domain_error);
}

TEST_CASE("perfect squares") {
  auto r = R2();
  CPoly root(r);
  CHECK(poly_is_perfect_square(P(r, "x^2+2*x*y+y^2"), &root));
  CHECK(root == P(r, "x+y"));
  CHECK(poly_is_perfect_square(P(r, "4/9*x^2"), &root));
  CHECK(root == P(r, "2/3*x"));
  CHECK(!poly_is_perfect_square(P(r, "x^2+y^2")));
  CHECK(!poly_is_perfect_square(P(r, "-x^2")));
  CHECK(!poly_is_perfect_square(P(r, "2*x^2")));
  CHECK(poly_is_perfect_square(CPoly(r), &root));
  CHECK(root.is_zero());
}

TEST_CASE("larger univariate splits") {
  auto rs = Rs();
  // (s+1)(s+1/2)(s+3/2)(s+2) scaled: roots of typical b-polynomials
  CPoly b = P(rs, "s+1") * P(rs, "2*s+1") * P(rs, "2*s+3") * P(rs, "s+2");
  FactorList fl = factor(b);
  CHECK(factors_are(fl, {{"s+1", 1}, {"2*s+1", 1}, {"2*s+3", 1}, {"s+2", 1}}, rs));
  // cyclotomic-ish with repeated structure
  CPoly c = P(rs, "s^2+s+1") * P(rs, "s^2-s+1") * P(rs, "s-1").pow(2);
  FactorList fl2 = factor(c);
  CHECK(factors_are(fl2, {{"s^2+s+1", 1}, {"s^2-s+1", 1}, {"s-1", 2}}, rs));
}
