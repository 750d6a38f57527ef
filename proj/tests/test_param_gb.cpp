#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bsato/dmod.hpp"
#include "bsato/param_gb.hpp"
#include "bsato/weyl_gb.hpp"

#include <map>
#include <string>
#include <vector>

using namespace bsato;

namespace {

// Generic (2,2) family: all conics a20*x1^2 + a11*x1*x2 + a02*x2^2 + a10*x1 + a01*x2 + a00.
struct Family22 {
  RingPtr C = Ring::make({"a00", "a01", "a02", "a10", "a11", "a20"});
  RingPtr big = Ring::make({"x1", "x2", "a00", "a01", "a02", "a10", "a11", "a20"});
  CPoly f = CPoly::parse(big, "a20*x1^2 + a11*x1*x2 + a02*x2^2 + a10*x1 + a01*x2 + a00");
  CPoly disc = CPoly::parse(C, "a02*a10^2 - a01*a10*a11 + a00*a11^2 + a01^2*a20 - 4*a00*a02*a20");
};

Rat eval_at(const CPoly& g, const std::vector<Rat>& pt) { return g.eval(pt); }

bool off_fence(const std::vector<CPoly>& factors, const std::vector<Rat>& pt) {
  for (auto& g : factors)
    if (eval_at(g, pt) == 0) return false;
  return true;
}

// Specialize the family polynomial at a coefficient point (values indexed like C's vars).
CPoly specialize_f(const Family22& fam, const std::vector<Rat>& a) {
  RingPtr X = Ring::make({"x1", "x2"});
  CPoly x1 = CPoly::variable(X, "x1"), x2 = CPoly::variable(X, "x2");
  return CPoly(X, a[5]) * x1 * x1 + CPoly(X, a[4]) * x1 * x2 + CPoly(X, a[2]) * x2 * x2 +
         CPoly(X, a[3]) * x1 + CPoly(X, a[1]) * x2 + CPoly(X, a[0]);
}

std::map<std::string, Rat> point_map(const RingPtr& C, const std::vector<Rat>& a) {
  std::map<std::string, Rat> m;
  for (size_t i = 0; i < C->size(); ++i) m[C->name(i)] = a[i];
  return m;
}

// Two generating sets span the same left ideal iff their reduced grevlex GBs agree.
bool same_left_ideal(const AlgebraSignature& sig, std::vector<WeylElem> A, std::vector<WeylElem> B) {
  MonomialOrder ord = MonomialOrder::grevlex(sig.ring);
  auto ga = weyl_groebner(A, ord).basis;
  auto gb = weyl_groebner(B, ord).basis;
  if (ga.size() != gb.size()) return false;
  for (size_t i = 0; i < ga.size(); ++i)
    if (!(ga[i].cmp(gb[i]) == 0)) return false;
  return true;
}

CPoly one_var_poly(const std::string& text) {
  return CPoly::parse(Ring::make({"s"}), text);
}

}  // namespace

TEST_CASE("param GB: h cuts out the locus where a*x*dx - 1 degenerates") {
  RingPtr R = Ring::make({"x", "dx", "a"});
  AlgebraSignature sig = AlgebraSignature::make(R, {{"x", "dx"}});
  RingPtr C = Ring::make({"a"});
  WeylElem g = WeylElem::parse(sig, "a*x*dx - 1");
  ParamGBResult res = param_weyl_gb({g}, {}, C, MonomialOrder::grevlex(R));
  REQUIRE(res.h_factors.size() == 1);
  CPoly a = CPoly::variable(C, "a");
  CHECK(res.h_factors[0].cmp(a) == 0);
  CHECK(res.h.cmp(a) == 0);
}

TEST_CASE("param GB: monic generators leave no fence") {
  RingPtr R = Ring::make({"x", "dx", "a"});
  AlgebraSignature sig = AlgebraSignature::make(R, {{"x", "dx"}});
  RingPtr C = Ring::make({"a"});
  WeylElem g = WeylElem::parse(sig, "x*dx - a");
  ParamGBResult res = param_weyl_gb({g}, {}, C, MonomialOrder::grevlex(R));
  CHECK(res.h_factors.empty());
  CHECK(res.h.is_one());
}

TEST_CASE("bsp_step: generic conic family has b = s + 1") {
  Family22 fam;
  StepResult r = bsp_step(fam.f, fam.C, {});
  CHECK(r.b.cmp(one_var_poly("s + 1")) == 0);
  // The discriminant must be fenced off: it is where b jumps.
  bool disc_in_fence = false;
  for (auto& g : r.h_factors)
    if (g.cmp(fam.disc) == 0) disc_in_fence = true;
  CHECK(disc_in_fence);
}

TEST_CASE("bsp_step: on the discriminant b = (s + 1)^2") {
  Family22 fam;
  StepResult r = bsp_step(fam.f, fam.C, {fam.disc});
  CHECK(r.b.cmp(one_var_poly("s^2 + 2*s + 1")) == 0);
}

TEST_CASE("bsp_step: b specializes to the pointwise b off the fence") {
  Family22 fam;

  // Generic stratum: smooth conics.
  StepResult gen = bsp_step(fam.f, fam.C, {});
  std::vector<std::vector<Rat>> pts = {
      {1, 2, 3, 4, 5, 6},
      {2, -1, 1, 3, 7, 2},
      {1, 1, 1, 1, 3, 1},
      {-3, 2, 5, 1, 9, 5},
      {1, 0, 2, 3, 1, 1},
  };
  for (auto& a : pts) {
    REQUIRE(off_fence(gen.h_factors, a));
    CPoly bf = bpoly(specialize_f(fam, a));
    CHECK(bf.cmp(gen.b) == 0);
  }

  // On the discriminant: pairs of distinct lines, still off the inner fence.
  StepResult deg = bsp_step(fam.f, fam.C, {fam.disc});
  std::vector<std::vector<Rat>> deg_pts = {
      // (x1 + 2*x2 + 3)(4*x1 + 5*x2 + 6)
      {18, 27, 10, 18, 13, 4},
      // (x1 + x2 + 1)(2*x1 - x2 + 1)
      {1, 0, -1, 3, 1, 2},
  };
  for (auto& a : deg_pts) {
    REQUIRE(eval_at(fam.disc, a) == 0);
    REQUIRE(off_fence(deg.h_factors, a));
    CPoly bf = bpoly(specialize_f(fam, a));
    CHECK(bf.cmp(deg.b) == 0);
  }
}

TEST_CASE("ann_step: generic annihilator specializes to Ann f^s") {
  Family22 fam;
  AnnStepResult ann = ann_step(fam.f, fam.C, {});
  std::vector<Rat> a = {1, 2, 3, 4, 5, 6};
  REQUIRE(off_fence(ann.h_factors, a));

  CPoly f0 = specialize_f(fam, a);
  AnnFsResult direct = ann_fs(f0);
  auto vals = point_map(fam.C, a);
  std::vector<WeylElem> spec;
  for (auto& g : ann.gens) spec.push_back(specialize(g, direct.sig, vals));
  CHECK(same_left_ideal(direct.sig, spec, direct.gens));
}

TEST_CASE("ann_step: squares of linear forms in x2 only") {
  Family22 fam;
  // a10 = a20 = a11 = 0 and a01^2 = 4*a00*a02: f = a02*(x2 + r)^2 up to scale.
  std::vector<CPoly> Q = {
      CPoly::variable(fam.C, "a10"), CPoly::variable(fam.C, "a20"),
      CPoly::variable(fam.C, "a11"),
      CPoly::parse(fam.C, "a01^2 - 4*a00*a02")};
  AnnStepResult ann = ann_step(fam.f, fam.C, Q);

  // Sample points (p + q*x2)^2: a00 = p^2, a01 = 2pq, a02 = q^2.
  std::vector<std::vector<Rat>> pts = {
      {1, 2, 1, 0, 0, 0},   // (1 + x2)^2
      {4, 4, 1, 0, 0, 0},   // (2 + x2)^2
      {1, 6, 9, 0, 0, 0},   // (1 + 3*x2)^2
      {9, -12, 4, 0, 0, 0}, // (3 - 2*x2)^2
  };
  bool checked_one = false;
  for (auto& a : pts) {
    if (!off_fence(ann.h_factors, a)) continue;
    checked_one = true;
    CPoly f0 = specialize_f(fam, a);
    AnnFsResult direct = ann_fs(f0);
    auto vals = point_map(fam.C, a);
    std::vector<WeylElem> spec;
    for (auto& g : ann.gens) spec.push_back(specialize(g, direct.sig, vals));
    CHECK(same_left_ideal(direct.sig, spec, direct.gens));

    // The annihilator here is (dx1, (x2 + r)*dx2 - 2*s) with r = a01/(2*a02).
    std::vector<WeylElem> expected = {
        WeylElem::parse(direct.sig, "dx1"),
        WeylElem::parse(direct.sig, "x2*dx2 - 2*s") +
            WeylElem::from_cpoly(direct.sig,
                                 CPoly(direct.sig.ring, a[1] / (2 * a[2])) *
                                     CPoly::variable(direct.sig.ring, "dx2"))};
    CHECK(same_left_ideal(direct.sig, spec, expected));
  }
  CHECK(checked_one);
}

TEST_CASE("bsp_step: constant stratum of the linear family has b = 1") {
  RingPtr C = Ring::make({"a0", "a1"});
  RingPtr big = Ring::make({"x1", "a0", "a1"});
  CPoly f = CPoly::parse(big, "a1*x1 + a0");
  CPoly a0 = CPoly::variable(C, "a0");
  CPoly a1 = CPoly::variable(C, "a1");

  // Generic: b = s + 1, fenced along a1 = 0.
  StepResult gen = bsp_step(f, C, {});
  CHECK(gen.b.cmp(one_var_poly("s + 1")) == 0);
  bool a1_in = false;
  for (auto& g : gen.h_factors)
    if (g.cmp(a1) == 0) a1_in = true;
  CHECK(a1_in);

  // On V(a1): f is the constant a0, so b = 1 away from a0 = 0.
  StepResult con = bsp_step(f, C, {a1});
  CHECK(con.b.cmp(one_var_poly("1")) == 0);
  bool a0_in = false;
  for (auto& g : con.h_factors)
    if (g.cmp(a0) == 0) a0_in = true;
  CHECK(a0_in);
}

TEST_CASE("bsp_step: f identically zero on V(Q) is rejected") {
  RingPtr C = Ring::make({"a0", "a1"});
  RingPtr big = Ring::make({"x1", "a0", "a1"});
  CPoly f = CPoly::parse(big, "a1*x1 + a0");
  CHECK_THROWS_AS(bsp_step(f, C, {CPoly::variable(C, "a0"), CPoly::variable(C, "a1")}),
                  domain_error);
}

TEST_CASE("bsp_step: homogeneous family yields homogeneous fence factors") {
  RingPtr C = Ring::make({"a02", "a11", "a20"});
  RingPtr big = Ring::make({"x1", "x2", "a02", "a11", "a20"});
  CPoly f = CPoly::parse(big, "a20*x1^2 + a11*x1*x2 + a02*x2^2");
  StepResult r = bsp_step(f, C, {});
  // Generic binary quadric is a product of two independent lines.
  CHECK(r.b.cmp(one_var_poly("s^2 + 2*s + 1")) == 0);
  REQUIRE(!r.h_factors.empty());
  for (auto& g : r.h_factors) CHECK(g.is_homogeneous());
}

TEST_CASE("specialize: parameter exponents fold into coefficients") {
  RingPtr R = Ring::make({"x", "dx", "a", "b"});
  AlgebraSignature sig = AlgebraSignature::make(R, {{"x", "dx"}});
  RingPtr X = Ring::make({"x", "dx"});
  AlgebraSignature tgt = AlgebraSignature::make(X, {{"x", "dx"}});
  WeylElem e = WeylElem::parse(sig, "a^2*x*dx + b*x - 3*a*b");
  WeylElem got = specialize(e, tgt, {{"a", Rat(2)}, {"b", Rat(-1)}});
  WeylElem want = WeylElem::parse(tgt, "4*x*dx - x + 6");
  CHECK(got.cmp(want) == 0);
}
