#include "bsato/weyl_gb.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bsato/errors.hpp"

namespace bsato {
namespace {

struct OrdGreater {
  const MonomialOrder* ord;
  bool operator()(const Mono& a, const Mono& b) const { return ord->cmp(a, b) > 0; }
};

using OMap = std::map<Mono, Rat, OrdGreater>;

OMap to_omap(const WeylElem& p, const MonomialOrder& ord) {
  OMap m{OrdGreater{&ord}};
  for (const auto& [mono, c] : p.terms()) m.emplace(mono, c);
  return m;
}

WeylElem from_omap(const AlgebraSignature& sig, const OMap& m) {
  WeylElem out(sig);
  for (const auto& [mono, c] : m) out.add_term(mono, c);
  return out;
}

void omap_sub(OMap& target, const WeylElem& p) {
  for (const auto& [m, c] : p.terms()) {
    auto [it, fresh] = target.emplace(m, -c);
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) target.erase(it);
    }
  }
}

struct BasisElem {
  WeylElem elem;
  Mono lm;
  Rat lc;
  std::vector<WeylElem> rep;
};

Mono lead_mono(const WeylElem& p, const MonomialOrder& ord) {
  const Mono* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    (void)c;
    if (!best || ord.greater(m, *best)) best = &m;
  }
  return *best;
}

BasisElem make_elem(const WeylElem& p, const MonomialOrder& ord, std::vector<WeylElem> rep) {
  Mono lm = lead_mono(p, ord);
  Rat lc = p.terms().at(lm);
  return {p, std::move(lm), std::move(lc), std::move(rep)};
}

// rational unit u with p/u integer-primitive and positive storage-leading
// coefficient (mirrors CPoly::primitive_scaled)
Rat weyl_unit(const WeylElem& p) {
  if (p.is_zero()) return Rat(1);
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    (void)m;
    Int n = c.get_num(), d = c.get_den();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rat unit = make_rat(num_gcd, den_lcm);
  if (p.terms().begin()->second < 0) unit = -unit;
  return unit;
}

WeylElem nf_impl(const WeylElem& p, const std::vector<BasisElem>& basis, const MonomialOrder& ord,
                 std::vector<WeylElem>* cof) {
  const AlgebraSignature& sig = p.sig();
  OMap work = to_omap(p, ord);
  WeylElem rem(sig);
  while (!work.empty()) {
    auto it = work.begin();
    const Mono m = it->first;
    const Rat c = it->second;
    const BasisElem* hit = nullptr;
    std::size_t hi = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (mono_divides(basis[i].lm, m)) {
        hit = &basis[i];
        hi = i;
        break;
      }
    if (!hit) {
      rem.add_term(m, c);
      work.erase(it);
      continue;
    }
    WeylElem u = WeylElem::monomial(sig, mono_div(m, hit->lm), c / hit->lc);
    omap_sub(work, weyl_mul(u, hit->elem));
    if (cof) (*cof)[hi] += u;
  }
  return rem;
}

WeylElem spoly(const BasisElem& f, const BasisElem& g, const MonomialOrder& ord,
               WeylElem* uf_out, WeylElem* ug_out) {
  const AlgebraSignature& sig = f.elem.sig();
  Mono L = mono_lcm(f.lm, g.lm);
  WeylElem uf = WeylElem::monomial(sig, mono_div(L, f.lm), 1 / f.lc);
  WeylElem ug = WeylElem::monomial(sig, mono_div(L, g.lm), 1 / g.lc);
  if (uf_out) *uf_out = uf;
  if (ug_out) *ug_out = ug;
  OMap acc{OrdGreater{&ord}};
  omap_sub(acc, -weyl_mul(uf, f.elem));
  omap_sub(acc, weyl_mul(ug, g.elem));
  return from_omap(sig, acc);
}

void require_admissible(const std::vector<WeylElem>& gens, const MonomialOrder& ord) {
  if (gens.empty()) return;
  weyl_require_admissible(gens.front().sig(), ord);
  if (ord.is_global()) return;
  for (const auto& row : ord.weight_rows()) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      bool first = true;
      std::int64_t w0 = 0;
      for (const auto& [m, c] : g.terms()) {
        (void)c;
        std::int64_t w = 0;
        for (std::size_t i = 0; i < m.size(); ++i) w += row[i] * m[i];
        if (first) {
          w0 = w;
          first = false;
        } else if (w != w0) {
          throw domain_error("non-global order on non-homogeneous input");
        }
      }
    }
  }
}

}  // namespace

WeylElem weyl_normal_form(const WeylElem& p, const std::vector<WeylElem>& basis,
                          const MonomialOrder& ord) {
  std::vector<BasisElem> b;
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(make_elem(g, ord, {}));
  return nf_impl(p, b, ord, nullptr);
}

WeylElem weyl_nf_cofactors(const WeylElem& p, const std::vector<WeylElem>& basis,
                           const MonomialOrder& ord, std::vector<WeylElem>& cof) {
  std::vector<BasisElem> b;
  for (const auto& g : basis) {
    if (g.is_zero()) throw domain_error("weyl_nf_cofactors: zero basis element");
    b.push_back(make_elem(g, ord, {}));
  }
  cof.assign(basis.size(), WeylElem(p.sig()));
  return nf_impl(p, b, ord, &cof);
}

bool weyl_contains_one(const std::vector<WeylElem>& basis) {
  for (const auto& g : basis)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

WeylGB weyl_groebner(const std::vector<WeylElem>& gens, const MonomialOrder& ord,
                     const WeylGBOptions& opt) {
  WeylGB result;
  std::vector<WeylElem> live;
  for (const auto& g : gens)
    if (!g.is_zero()) live.push_back(g);
  if (live.empty()) return result;
  require_admissible(live, ord);
  const AlgebraSignature& sig = live.front().sig();
  const std::size_t ngen = gens.size();

  std::vector<BasisElem> basis;
  struct PairKey {
    Mono lcm;
    int i, j;
  };
  struct PairCmp {
    const MonomialOrder* ord;
    bool operator()(const PairKey& a, const PairKey& b) const {
      int c = ord->cmp(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::set<PairKey, PairCmp> queue{PairCmp{&ord}};
  std::set<std::pair<int, int>> handled;

  auto push_elem = [&](const WeylElem& p, std::vector<WeylElem> rep) {
    Rat unit = weyl_unit(p);
    WeylElem scaled = p * (1 / unit);
    if (opt.track)
      for (auto& r : rep) r *= 1 / unit;
    BasisElem e = make_elem(scaled, ord, std::move(rep));
    int k = static_cast<int>(basis.size());
    for (int i = 0; i < k; ++i) queue.insert({mono_lcm(basis[i].lm, e.lm), i, k});
    basis.push_back(std::move(e));
    if (opt.stats && static_cast<long>(basis.size()) > opt.stats->basis_peak)
      opt.stats->basis_peak = static_cast<long>(basis.size());
  };

  for (std::size_t j = 0; j < ngen; ++j) {
    if (gens[j].is_zero()) continue;
    std::vector<WeylElem> rep;
    if (opt.track) {
      rep.assign(ngen, WeylElem(sig));
      rep[j] = WeylElem(sig, Rat(1));
    }
    push_elem(gens[j], std::move(rep));
  }

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    if (opt.budget) opt.budget->charge_pair();
    if (opt.stats) ++opt.stats->spairs_considered;
    handled.emplace(pk.i, pk.j);

    if (opt.chain_criterion) {
      bool skip = false;
      for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
        if (k == pk.i || k == pk.j) continue;
        if (!mono_divides(basis[k].lm, pk.lcm)) continue;
        auto key1 = std::minmax(pk.i, k);
        auto key2 = std::minmax(pk.j, k);
        if (handled.count({key1.first, key1.second}) && handled.count({key2.first, key2.second}))
          skip = true;
      }
      if (skip) continue;
    }

    WeylElem uf(sig), ug(sig);
    WeylElem s = spoly(basis[pk.i], basis[pk.j], ord, &uf, &ug);
    std::vector<WeylElem> cof;
    WeylElem r;
    if (opt.track) {
      cof.assign(basis.size(), WeylElem(sig));
      r = nf_impl(s, basis, ord, &cof);
    } else {
      r = nf_impl(s, basis, ord, nullptr);
    }
    if (opt.stats) ++opt.stats->spairs_reduced;
    if (r.is_zero()) {
      if (opt.stats) ++opt.stats->zero_reductions;
      continue;
    }
    std::vector<WeylElem> rep;
    if (opt.track) {
      // s = uf*basis_i - ug*basis_j; r = s - sum cof_k * basis_k
      rep.assign(ngen, WeylElem(sig));
      for (std::size_t j2 = 0; j2 < ngen; ++j2) {
        WeylElem acc(sig);
        if (!basis[pk.i].rep[j2].is_zero()) acc += weyl_mul(uf, basis[pk.i].rep[j2]);
        if (!basis[pk.j].rep[j2].is_zero()) acc -= weyl_mul(ug, basis[pk.j].rep[j2]);
        rep[j2] = std::move(acc);
      }
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (cof[k].is_zero()) continue;
        for (std::size_t j2 = 0; j2 < ngen; ++j2)
          if (!basis[k].rep[j2].is_zero()) rep[j2] -= weyl_mul(cof[k], basis[k].rep[j2]);
      }
    }
    push_elem(r, std::move(rep));
  }

  // minimal basis, then full tail reduction, then canonical sort
  std::vector<int> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return ord.cmp(basis[a].lm, basis[b].lm) < 0; });
  std::vector<BasisElem> minimal;
  for (int i : idx) {
    bool divisible = false;
    for (const auto& kept : minimal)
      if (mono_divides(kept.lm, basis[i].lm)) {
        divisible = true;
        break;
      }
    if (!divisible) minimal.push_back(basis[i]);
  }

  std::vector<std::pair<WeylElem, std::vector<WeylElem>>> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BasisElem> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    std::vector<WeylElem> cof;
    WeylElem r;
    if (opt.track) {
      cof.assign(others.size(), WeylElem(sig));
      r = nf_impl(minimal[i].elem, others, ord, &cof);
    } else {
      r = nf_impl(minimal[i].elem, others, ord, nullptr);
    }
    Rat unit = weyl_unit(r);
    r *= 1 / unit;
    std::vector<WeylElem> rep;
    if (opt.track) {
      rep = minimal[i].rep;
      for (std::size_t k = 0; k < others.size(); ++k) {
        if (cof[k].is_zero()) continue;
        for (std::size_t j2 = 0; j2 < ngen; ++j2)
          if (!others[k].rep[j2].is_zero()) rep[j2] -= weyl_mul(cof[k], others[k].rep[j2]);
      }
      for (auto& x : rep) x *= 1 / unit;
    }
    out.emplace_back(std::move(r), std::move(rep));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    const Mono la = lead_mono(a.first, ord), lb = lead_mono(b.first, ord);
    int c = ord.cmp(la, lb);
    if (c != 0) return c < 0;
    return a.first.cmp(b.first) < 0;
  });
  for (auto& [e, rep] : out) {
    result.basis.push_back(std::move(e));
    if (opt.track) result.reps.push_back(std::move(rep));
  }
  return result;
}

}  // namespace bsato
