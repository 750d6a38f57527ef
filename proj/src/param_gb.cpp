#include "bsato/param_gb.hpp"

#include <algorithm>

#include "bsato/errors.hpp"
#include "bsato/factor.hpp"
#include "malgrange_impl.hpp"

namespace bsato {

namespace {

std::vector<bool> param_mask(const RingPtr& big, const RingPtr& C) {
  std::vector<bool> mask(big->size(), false);
  for (std::size_t j = 0; j < C->size(); ++j) {
    int v = big->index_of(C->name(j));
    if (v < 0) throw ring_error("param_weyl_gb: parameter missing from the algebra ring");
    mask[v] = true;
  }
  return mask;
}

bool is_param_pure(const WeylElem& g, const std::vector<bool>& mask) {
  for (const auto& [m, c] : g.terms())
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0 && !mask[v]) return false;
  return true;
}

Mono strip_params(const Mono& m, const std::vector<bool>& mask) {
  Mono out = m;
  for (std::size_t v = 0; v < out.size(); ++v)
    if (mask[v]) out[v] = 0;
  return out;
}

// the parameter part of a term, as a monomial of C
Mono param_part(const Mono& m, const RingPtr& big, const RingPtr& C,
                const std::vector<bool>& mask) {
  Mono out = mono_one(C->size());
  for (std::size_t v = 0; v < m.size(); ++v)
    if (mask[v] && m[v] > 0) out[C->index_of(big->name(v))] = m[v];
  return out;
}

// coefficient (in C) of the leading non-parameter monomial of g
CPoly inC_star(const WeylElem& g, const RingPtr& C, const std::vector<bool>& mask,
               const MonomialOrder& ord) {
  const RingPtr& big = g.ring();
  bool have = false;
  Mono best;
  for (const auto& [m, c] : g.terms()) {
    Mono stripped = strip_params(m, mask);
    if (!have || ord.greater(stripped, best)) {
      best = stripped;
      have = true;
    }
  }
  CPoly out(C);
  for (const auto& [m, c] : g.terms())
    if (strip_params(m, mask) == best) out.add_term(param_part(m, big, C, mask), c);
  return out;
}

// view a parameter-pure element as a polynomial of C
CPoly as_c_poly(const WeylElem& g, const RingPtr& C, const std::vector<bool>& mask) {
  CPoly out(C);
  for (const auto& [m, c] : g.terms()) out.add_term(param_part(m, g.ring(), C, mask), c);
  return out;
}

// the s-coefficients of an (s, params)-pure element, as polynomials of C
std::map<int, CPoly> s_coefficients(const WeylElem& g, int sidx, const RingPtr& C,
                                    const std::vector<bool>& mask) {
  std::map<int, CPoly> out;
  for (const auto& [m, c] : g.terms()) {
    auto [it, fresh] = out.try_emplace(m[sidx], CPoly(C));
    it->second.add_term(param_part(m, g.ring(), C, mask), c);
  }
  return out;
}

struct ParamContext {
  detail::MalgrangeRig rig;
  RingPtr C;
  std::vector<CPoly> Fprime;          // renamed into C
  std::vector<CPoly> gbQ;             // commutative GB of Q over C
  MonomialOrder ordC;

  ParamContext(const CPoly& f_param, const RingPtr& C_, const std::vector<CPoly>& Fp)
      : C(C_), ordC(MonomialOrder::grevlex(C_)) {
    std::vector<std::string> xnames, pnames;
    for (std::size_t v = 0; v < C->size(); ++v) pnames.push_back(C->name(v));
    for (std::size_t v = 0; v < f_param.ring()->size(); ++v) {
      const std::string& nm = f_param.ring()->name(v);
      if (!C->has(nm)) xnames.push_back(nm);
    }
    rig = detail::make_malgrange_rig(Ring::make(xnames), pnames);
    for (const auto& q : Fp) Fprime.push_back(q.rename_into(C));
    gbQ = groebner(Fprime, ordC);
  }

  CPoly nfQ(const CPoly& p) const { return normal_form(p, gbQ, ordC); }

  // true when every coefficient of f_param (as a polynomial in x over C)
  // reduces to zero modulo Q
  bool f_vanishes_mod_Q(const CPoly& f_param, const std::vector<bool>& mask_f) const {
    std::map<Mono, CPoly, GrevlexGreater> coeffs;
    const RingPtr& Rf = f_param.ring();
    for (const auto& [m, c] : f_param.terms()) {
      Mono xpart = strip_params(m, mask_f);
      auto [it, fresh] = coeffs.try_emplace(xpart, CPoly(C));
      it->second.add_term(param_part(m, Rf, C, mask_f), c);
    }
    for (const auto& [xm, cp] : coeffs)
      if (!nfQ(cp).is_zero()) return false;
    return true;
  }
};

}  // namespace

ParamGBResult param_weyl_gb(const std::vector<WeylElem>& F, const std::vector<CPoly>& Fprime,
                            const RingPtr& C, const MonomialOrder& ord, Budget* budget) {
  if (F.empty()) throw domain_error("param_weyl_gb: empty generator list");
  const AlgebraSignature& sig = F.front().sig();
  std::vector<bool> mask = param_mask(sig.ring, C);

  std::vector<WeylElem> gens = F;
  for (const auto& q : Fprime)
    gens.push_back(WeylElem::from_cpoly(sig, q.rename_into(sig.ring)));

  WeylGBOptions opt;
  opt.budget = budget;
  auto gb = weyl_groebner(gens, ord, opt);

  std::vector<CPoly> gbQ;
  {
    std::vector<CPoly> FpC;
    for (const auto& q : Fprime) FpC.push_back(q.rename_into(C));
    gbQ = groebner(FpC, MonomialOrder::grevlex(C));
  }
  auto in_Q = [&](const CPoly& p) {
    return normal_form(p, gbQ, MonomialOrder::grevlex(C)).is_zero();
  };

  CPoly h_raw(C, Rat(1));
  for (const auto& g : gb.basis) {
    if (is_param_pure(g, mask)) {
      CPoly qc = as_c_poly(g, C, mask);
      if (in_Q(qc)) continue;  // lies in the ideal Q: excluded from the product
      h_raw *= qc;
    } else {
      h_raw *= inC_star(g, C, mask, ord);
    }
  }

  ParamGBResult out{std::move(gb.basis), CPoly(C, Rat(1)), {}};
  FactorList fl = factor(h_raw);
  for (const auto& [p, e] : fl.factors) {
    if (p.is_constant() || in_Q(p)) continue;
    bool seen = false;
    for (const auto& q : out.h_factors)
      if (q == p) seen = true;
    if (seen) continue;
    out.h_factors.push_back(p);
  }
  std::sort(out.h_factors.begin(), out.h_factors.end(),
            [](const CPoly& a, const CPoly& b) { return a.cmp(b) < 0; });
  for (const auto& p : out.h_factors) out.h *= p;
  return out;
}

namespace {

// run 1 of the one-step computation: parametric Malgrange elimination giving
// the annihilator generators over C and the exceptional data
struct AnnRun {
  std::vector<WeylElem> gens;  // in rig.ds, parameter-pure elements dropped
  ParamGBResult raw;
};

AnnRun run_ann(const ParamContext& ctx, const CPoly& f_param, Budget* budget) {
  const auto& M = ctx.rig;
  const RingPtr& B = M.big.ring;
  std::vector<std::string> mid;
  for (std::size_t i = 0; i < 2 * M.n; ++i) mid.push_back(B->name(i));
  mid.push_back(B->name(M.t));
  mid.push_back(B->name(M.dt));
  auto ord = MonomialOrder::elim(B, {{B->name(M.y1), B->name(M.y2)}, mid});

  auto pr = param_weyl_gb(detail::malgrange_gens(M, f_param), ctx.Fprime, ctx.C, ord, budget);

  std::vector<bool> mask = param_mask(B, ctx.C);
  AnnRun out{{}, std::move(pr)};
  for (const auto& g : out.raw.gb) {
    if (g.uses_var(M.y1) || g.uses_var(M.y2)) continue;
    if (is_param_pure(g, mask)) {
      if (!ctx.nfQ(as_c_poly(g, ctx.C, mask)).is_zero())
        throw incomplete_error(
            "ann-step: parameter-pure element outside Q (is Q really prime?)");
      continue;
    }
    out.gens.push_back(detail::s_rewrite(M, detail::weight_fix(M, g)));
  }
  std::sort(out.gens.begin(), out.gens.end(),
            [](const WeylElem& a, const WeylElem& b) { return a.cmp(b) < 0; });
  return out;
}

void merge_factors(std::vector<CPoly>& into, const std::vector<CPoly>& more) {
  for (const auto& p : more) {
    bool seen = false;
    for (const auto& q : into)
      if (q == p) seen = true;
    if (!seen) into.push_back(p);
  }
  std::sort(into.begin(), into.end(), [](const CPoly& a, const CPoly& b) { return a.cmp(b) < 0; });
}

}  // namespace

StepResult bsp_step(const CPoly& f_param, const RingPtr& C, const std::vector<CPoly>& Fprime,
                    Budget* budget) {
  if (f_param.is_zero()) throw domain_error("bsp_step: f must be nonzero");
  ParamContext ctx(f_param, C, Fprime);
  {
    std::vector<bool> mask_f = param_mask(f_param.ring(), C);
    if (ctx.f_vanishes_mod_Q(f_param, mask_f))
      throw domain_error("bsp_step: f vanishes identically on V(Q)");
  }

  AnnRun ann = run_ann(ctx, f_param, budget);

  // run 2: eliminate (x, dx) ahead of s ahead of the parameters
  const auto& ds = ctx.rig.ds;
  std::vector<WeylElem> gens2 = ann.gens;
  gens2.push_back(WeylElem::from_cpoly(ds, f_param.rename_into(ds.ring)));
  std::vector<std::string> xdx;
  for (std::size_t i = 0; i < 2 * ctx.rig.n; ++i) xdx.push_back(ds.ring->name(i));
  auto ord2 = MonomialOrder::elim(ds.ring, {xdx, {ctx.rig.sname}});
  auto pr2 = param_weyl_gb(gens2, ctx.Fprime, ctx.C, ord2, budget);

  // b-extraction: an (s, params)-pure element of minimal s-degree mod Q; its
  // normalized image must be a rational polynomial in s
  std::vector<bool> mask = param_mask(ds.ring, ctx.C);
  int sidx = ctx.rig.s;
  RingPtr S = Ring::make({"s"});
  CPoly best_b(S);
  int best_deg = -1;
  for (const auto& g : pr2.gb) {
    bool spure = true;
    for (std::size_t v = 0; v < ds.ring->size(); ++v)
      if (static_cast<int>(v) != sidx && !mask[v] && g.uses_var(static_cast<int>(v)))
        spure = false;
    if (!spure) continue;
    std::map<int, CPoly> nf;
    int deg = -1;
    for (const auto& [k, ck] : s_coefficients(g, sidx, ctx.C, mask)) {
      CPoly r = ctx.nfQ(ck);
      if (r.is_zero()) continue;
      nf[k] = r;
      deg = std::max(deg, k);
    }
    if (deg < 0) continue;  // zero modulo Q: no information
    if (best_deg >= 0 && deg > best_deg) continue;
    const CPoly& cD = nf.at(deg);
    CPoly b(S);
    for (const auto& [k, ck] : nf) {
      Rat rho = ck.lc() / cD.lc();
      if (ck != rho * cD)
        throw incomplete_error("b-extraction-failure: non-rational coefficient ratio");
      Mono m = mono_one(1);
      m[0] = k;
      b.add_term(m, rho);
    }
    if (deg == best_deg && b != best_b)
      throw incomplete_error("b-extraction-failure: ambiguous minimal element");
    best_b = b;
    best_deg = deg;
  }
  if (best_deg < 0) throw incomplete_error("b-extraction-failure: no s-pure element");

  StepResult out{best_b, CPoly(ctx.C, Rat(1)), ann.raw.h_factors};
  merge_factors(out.h_factors, pr2.h_factors);
  for (const auto& p : out.h_factors) out.h *= p;
  return out;
}

AnnStepResult ann_step(const CPoly& f_param, const RingPtr& C, const std::vector<CPoly>& Fprime,
                       Budget* budget) {
  if (f_param.is_zero()) throw domain_error("ann_step: f must be nonzero");
  ParamContext ctx(f_param, C, Fprime);
  AnnRun ann = run_ann(ctx, f_param, budget);
  return {ctx.rig.ds, ctx.rig.sname, std::move(ann.gens), ann.raw.h, ann.raw.h_factors};
}

WeylElem specialize(const WeylElem& e, const AlgebraSignature& target,
                    const std::map<std::string, Rat>& values) {
  WeylElem out(target);
  const RingPtr& R = e.ring();
  for (const auto& [m, c] : e.terms()) {
    Rat scale = c;
    Mono nm = mono_one(target.ring->size());
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      auto it = values.find(R->name(v));
      if (it != values.end()) {
        for (int k = 0; k < m[v]; ++k) scale *= it->second;
      } else {
        int j = target.ring->index_of(R->name(v));
        if (j < 0) throw ring_error("specialize: variable '" + R->name(v) + "' not in target");
        nm[j] = m[v];
      }
    }
    if (scale != Rat(0)) out.add_term(nm, scale);
  }
  return out;
}

}  // namespace bsato
