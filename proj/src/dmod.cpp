#include "bsato/dmod.hpp"

#include "bsato/errors.hpp"
#include "bsato/factor.hpp"
#include "bsato/fs_action.hpp"
#include "malgrange_impl.hpp"

namespace bsato {

using detail::MalgrangeRig;

namespace {

// pure-s elements of a GB under the [x,dx] >> [s] elimination order
int find_pure_s(const AnnFsResult& A, const std::vector<WeylElem>& basis) {
  int sidx = A.sig.ring->index_of(A.s_name);
  int found = -1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool pure = true;
    for (std::size_t v = 0; v < A.sig.ring->size(); ++v)
      if (static_cast<int>(v) != sidx && basis[i].uses_var(static_cast<int>(v))) pure = false;
    if (!pure) continue;
    if (found >= 0) throw error("bpoly: reduced basis has two pure s elements");
    found = static_cast<int>(i);
  }
  return found;
}

CPoly to_s_poly(const AnnFsResult& A, const WeylElem& g, const RingPtr& sring) {
  int sidx = A.sig.ring->index_of(A.s_name);
  CPoly out(sring);
  for (const auto& [m, c] : g.terms()) {
    Mono nm = mono_one(1);
    nm[0] = m[sidx];
    out.add_term(nm, c);
  }
  return out;
}

Rat top_s_coeff(const CPoly& b) {
  int k = b.deg_in(0);
  Mono m = mono_one(1);
  m[0] = k;
  return b.coeff(m);
}

MonomialOrder b_elim_order(const AnnFsResult& A) {
  std::vector<std::string> block;
  for (std::size_t v = 0; v < A.sig.ring->size(); ++v)
    if (A.sig.ring->name(v) != A.s_name) block.push_back(A.sig.ring->name(v));
  return MonomialOrder::elim(A.sig.ring, {block});
}

}  // namespace

AnnFsResult ann_fs(const CPoly& f, Budget* budget) {
  if (f.is_zero()) throw domain_error("ann_fs: f must be nonzero");
  MalgrangeRig M = detail::make_malgrange_rig(f.ring(), {});
  WeylGBOptions opt;
  opt.budget = budget;

  std::vector<WeylElem> ann;
  if (f.is_constant()) {
    // d_i annihilates c^s; no relations involve s
    for (std::size_t i = 0; i < M.n; ++i)
      ann.push_back(WeylElem::variable(M.ds, M.ds.ring->name(M.n + i)));
  } else {
    auto ord = MonomialOrder::elim(
        M.big.ring, {{M.big.ring->name(M.y1), M.big.ring->name(M.y2)}});
    auto gb = weyl_groebner(detail::malgrange_gens(M, f), ord, opt);
    for (const auto& g : gb.basis) {
      if (g.uses_var(M.y1) || g.uses_var(M.y2)) continue;
      ann.push_back(detail::s_rewrite(M, detail::weight_fix(M, g)));
    }
  }

  auto out = weyl_groebner(ann, MonomialOrder::grevlex(M.ds.ring), opt);
  return {M.ds, out.basis, M.sname};
}

CPoly bpoly(const CPoly& f, Budget* budget) {
  if (f.is_zero()) throw domain_error("zero polynomial has no Bernstein-Sato polynomial");
  AnnFsResult A = ann_fs(f, budget);
  std::vector<WeylElem> gens = A.gens;
  gens.push_back(WeylElem::from_cpoly(A.sig, f.rename_into(A.sig.ring)));
  WeylGBOptions opt;
  opt.budget = budget;
  auto gb = weyl_groebner(gens, b_elim_order(A), opt);
  int i = find_pure_s(A, gb.basis);
  if (i < 0) throw incomplete_error("bpoly: elimination produced no pure s element");
  CPoly b = to_s_poly(A, gb.basis[i], Ring::make({"s"}));
  return b * (Rat(1) / top_s_coeff(b));
}

BCertificate bpoly_with_certificate(const CPoly& f, Budget* budget) {
  if (f.is_zero()) throw domain_error("zero polynomial has no Bernstein-Sato polynomial");
  AnnFsResult A = ann_fs(f, budget);
  std::vector<WeylElem> gens = A.gens;
  gens.push_back(WeylElem::from_cpoly(A.sig, f.rename_into(A.sig.ring)));
  WeylGBOptions opt;
  opt.budget = budget;
  opt.track = true;
  auto gb = weyl_groebner(gens, b_elim_order(A), opt);
  int i = find_pure_s(A, gb.basis);
  if (i < 0) throw incomplete_error("bpoly: elimination produced no pure s element");

  CPoly braw = to_s_poly(A, gb.basis[i], Ring::make({"s"}));
  Rat inv = Rat(1) / top_s_coeff(braw);
  BCertificate cert{braw * inv, gb.reps[i].back() * inv};

  // exact check of b(s) f^s = P f^(s+1) in Q[x,s] f^s
  RingPtr fsR = fs_ring(A.sig);
  CPoly fe = f.rename_into(fsR);
  CPoly b_fs(fsR);
  for (const auto& [m, c] : cert.b.terms())
    b_fs.add_term([&] {
      Mono nm = mono_one(fsR->size());
      nm[fsR->index_of(A.s_name)] = m[0];
      return nm;
    }(), c);
  FsState lhs{b_fs, 0};
  FsState rhs = fs_apply(cert.P, fe, FsState{fe, 0});
  if (!fs_equal(fe, lhs, rhs)) throw error("bpoly: certificate failed exact verification");
  return cert;
}

std::vector<Rat> bs_roots(const CPoly& b) { return rational_roots(b); }

}  // namespace bsato
