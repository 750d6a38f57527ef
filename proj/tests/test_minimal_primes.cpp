#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bsato/errors.hpp"
#include "bsato/minimal_primes.hpp"

using namespace bsato;

namespace {

CommIdeal ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
  return parse_ideal(r, gens);
}

bool has_component(const std::vector<CommIdeal>& primes, const CommIdeal& want) {
  for (const CommIdeal& p : primes)
    if (ideal_equal(p, want)) return true;
  return false;
}

}  // namespace

TEST_CASE("monomial product splits") {
  auto r = Ring::make({"x", "y"});
  auto primes = minimal_primes(ideal_of(r, {"x*y"}));
  REQUIRE(primes.size() == 2);
  CHECK(has_component(primes, ideal_of(r, {"x"})));
  CHECK(has_component(primes, ideal_of(r, {"y"})));
}

TEST_CASE("embedded component vanishes") {
  auto r = Ring::make({"x", "y"});
  auto primes = minimal_primes(ideal_of(r, {"x^2", "x*y"}));
  REQUIRE(primes.size() == 1);
  CHECK(has_component(primes, ideal_of(r, {"x"})));
}

TEST_CASE("irreducible principal stays prime") {
  auto r = Ring::make({"x", "y"});
  auto primes = minimal_primes(ideal_of(r, {"x^2+y^2"}));
  REQUIRE(primes.size() == 1);
  CHECK(has_component(primes, ideal_of(r, {"x^2+y^2"})));
}

TEST_CASE("difference of squares") {
  auto r = Ring::make({"x", "y"});
  auto primes = minimal_primes(ideal_of(r, {"x^2-y^2"}));
  REQUIRE(primes.size() == 2);
  CHECK(has_component(primes, ideal_of(r, {"x-y"})));
  CHECK(has_component(primes, ideal_of(r, {"x+y"})));
}

TEST_CASE("zero and unit ideals") {
  auto r = Ring::make({"x", "y"});
  auto z = minimal_primes(ideal_of(r, {}));
  REQUIRE(z.size() == 1);
  CHECK(z[0].gens.empty());
  CHECK(minimal_primes(ideal_of(r, {"x", "x-1"})).empty());
}

TEST_CASE("two independent branch components") {
  auto r = Ring::make({"x", "y", "z"});
  CPoly f1 = CPoly::parse(r, "x+y") * CPoly::parse(r, "x-z");
  CPoly f2 = CPoly::parse(r, "x+y") * CPoly::parse(r, "y-z-1");
  auto primes = minimal_primes(make_ideal(r, {f1, f2}));
  REQUIRE(primes.size() == 2);
  CHECK(has_component(primes, ideal_of(r, {"x+y"})));
  CHECK(has_component(primes, ideal_of(r, {"x-z", "y-z-1"})));
}

TEST_CASE("nested variety is pruned") {
  // V(x-z, y+z) sits inside V(x+y), so only x+y survives
  auto r = Ring::make({"x", "y", "z"});
  CPoly f1 = CPoly::parse(r, "x+y") * CPoly::parse(r, "x-z");
  CPoly f2 = CPoly::parse(r, "x+y") * CPoly::parse(r, "y+z");
  auto primes = minimal_primes(make_ideal(r, {f1, f2}));
  REQUIRE(primes.size() == 1);
  CHECK(has_component(primes, ideal_of(r, {"x+y"})));
}

TEST_CASE("linear substitution with constant coefficient") {
  auto r = Ring::make({"a00", "a01", "a02", "a11", "a20"});
  auto I = ideal_of(r, {"a00", "a11^2-4*a02*a20"});
  auto primes = minimal_primes(I);
  REQUIRE(primes.size() == 1);
  CHECK(has_component(primes, I));

  // substitution really rewrites the remaining generators
  auto J = ideal_of(r, {"a00-a01", "a00*a20-a01*a02"});
  auto jp = minimal_primes(J);
  REQUIRE(jp.size() == 2);
  CHECK(has_component(jp, ideal_of(r, {"a00", "a01"})));
  CHECK(has_component(jp, ideal_of(r, {"a00-a01", "a20-a02"})));
}

TEST_CASE("graph substitution pulls back") {
  // z = x*y and y*z = 0 force x*y^2 = 0
  auto r = Ring::make({"x", "y", "z"});
  auto primes = minimal_primes(ideal_of(r, {"x*y-z", "y*z"}));
  REQUIRE(primes.size() == 2);
  CHECK(has_component(primes, ideal_of(r, {"x", "z"})));
  CHECK(has_component(primes, ideal_of(r, {"y", "z"})));
}

TEST_CASE("saturation branch with nonconstant coefficient") {
  // x(y+1) = y^2 and x(y-1) = 1: on y = -1 the system is infeasible, and the
  // chart y+1 != 0 eliminates x onto the irreducible cubic y^3-y^2-y-1
  auto r = Ring::make({"x", "y"});
  auto primes = minimal_primes(ideal_of(r, {"x*y+x-y^2", "x*y-x-1"}));
  REQUIRE(primes.size() == 1);
  CHECK(in_ideal(CPoly::parse(r, "y^3-y^2-y-1"), primes[0]));
  CHECK(certify_minimal_primes(ideal_of(r, {"x*y+x-y^2", "x*y-x-1"}), primes));
}

TEST_CASE("certificate rejects wrong answers") {
  auto r = Ring::make({"x", "y"});
  auto I = ideal_of(r, {"x*y"});
  CHECK(certify_minimal_primes(I, {ideal_of(r, {"x"}), ideal_of(r, {"y"})}));
  // missing component: intersection (x) is not inside sqrt(xy)
  CHECK(!certify_minimal_primes(I, {ideal_of(r, {"x"})}));
  // non-minimal pair
  CHECK(!certify_minimal_primes(I, {ideal_of(r, {"x"}), ideal_of(r, {"x", "y"})}));
  // component not containing I
  CHECK(!certify_minimal_primes(I, {ideal_of(r, {"x"}), ideal_of(r, {"y-1"})}));
}

TEST_CASE("discriminant-style parameter ideal") {
  // the B-discriminant of a general conic: linear in a20 with nonconstant
  // coefficient, exercises the saturation path on six variables
  auto r = Ring::make({"a00", "a01", "a02", "a10", "a11", "a20"});
  CPoly delta = CPoly::parse(
      r, "a01^2*a20+a10^2*a02-a01*a10*a11+a00*a11^2-4*a00*a02*a20");
  auto primes = minimal_primes(make_ideal(r, {delta}));
  REQUIRE(primes.size() == 1);  // principal and irreducible
  CHECK(has_component(primes, make_ideal(r, {delta})));

  // joint locus with a00 = 0
  auto primes2 = minimal_primes(ideal_of(
      r, {"a00", "a01^2*a20+a10^2*a02-a01*a10*a11+a00*a11^2-4*a00*a02*a20"}));
  REQUIRE(primes2.size() == 1);
  CHECK(has_component(primes2, ideal_of(r, {"a00", "a01^2*a20+a10^2*a02-a01*a10*a11"})));
}
