#include "bsato/comm_gb.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "bsato/errors.hpp"

namespace bsato {

namespace {

struct OrdGreater {
  const MonomialOrder* ord;
  bool operator()(const Mono& a, const Mono& b) const { return ord->cmp(a, b) > 0; }
};

using OMap = std::map<Mono, Rat, OrdGreater>;

OMap to_omap(const CPoly& p, const MonomialOrder& ord) {
  OMap m{OrdGreater{&ord}};
  for (const auto& [mono, c] : p.terms()) m.emplace(mono, c);
  return m;
}

struct BasisElem {
  CPoly poly;
  Mono lm;
  Rat lc;
};

BasisElem make_elem(const CPoly& p, const MonomialOrder& ord) {
  const Mono* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || ord.greater(m, *best)) best = &m;
  return {p, *best, p.coeff(*best)};
}

void omap_axpy(OMap& target, const Rat& coef, const Mono& shift, const CPoly& g) {
  for (const auto& [m, c] : g.terms()) {
    Mono mm = mono_mul(m, shift);
    Rat add = coef * c;
    auto [it, inserted] = target.emplace(std::move(mm), add);
    if (!inserted) {
      it->second += add;
      if (it->second == 0) target.erase(it);
    }
  }
}

CPoly nf_impl(const CPoly& p, const std::vector<BasisElem>& basis, const MonomialOrder& ord) {
  OMap work = to_omap(p, ord);
  CPoly rem(p.ring());
  while (!work.empty()) {
    auto it = work.begin();
    const Mono m = it->first;
    const Rat c = it->second;
    const BasisElem* hit = nullptr;
    for (const auto& g : basis)
      if (mono_divides(g.lm, m)) {
        hit = &g;
        break;
      }
    if (hit) {
      omap_axpy(work, -c / hit->lc, mono_div(m, hit->lm), hit->poly);
    } else {
      rem.add_term(m, c);
      work.erase(it);
    }
  }
  return rem;
}

CPoly spoly(const BasisElem& f, const BasisElem& g, const MonomialOrder& ord) {
  Mono L = mono_lcm(f.lm, g.lm);
  OMap acc{OrdGreater{&ord}};
  omap_axpy(acc, 1 / f.lc, mono_div(L, f.lm), f.poly);
  omap_axpy(acc, -1 / g.lc, mono_div(L, g.lm), g.poly);
  CPoly out(f.poly.ring());
  for (const auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

void require_admissible(const std::vector<CPoly>& gens, const MonomialOrder& ord) {
  if (ord.is_global()) return;
  // Mixed-sign weights are allowed only on inputs homogeneous under every
  // weight row (the homogenized-ideal case); otherwise reduction may cycle.
  for (const auto& row : ord.weight_rows()) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      bool first = true;
      std::int64_t w0 = 0;
      for (const auto& [m, c] : g.terms()) {
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

CommIdeal make_ideal(const RingPtr& ring, std::vector<CPoly> gens) {
  std::vector<CPoly> kept;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(ring, g.ring())) throw ring_error("ideal generator in wrong ring");
    kept.push_back(std::move(g));
  }
  return CommIdeal{ring, std::move(kept)};
}

CommIdeal parse_ideal(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<CPoly> gens;
  for (const auto& t : texts) gens.push_back(CPoly::parse(ring, t));
  return make_ideal(ring, std::move(gens));
}

CPoly normal_form(const CPoly& p, const std::vector<CPoly>& basis, const MonomialOrder& ord) {
  std::vector<BasisElem> b;
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(make_elem(g, ord));
  return nf_impl(p, b, ord);
}

std::vector<CPoly> groebner(const std::vector<CPoly>& gens, const MonomialOrder& ord,
                            const GBOptions& opt) {
  require_admissible(gens, ord);
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

  auto push_elem = [&](const CPoly& p) {
    BasisElem e = make_elem(p.primitive_scaled().second, ord);
    int k = static_cast<int>(basis.size());
    for (int i = 0; i < k; ++i) queue.insert({mono_lcm(basis[i].lm, e.lm), i, k});
    basis.push_back(std::move(e));
    if (opt.stats && static_cast<long>(basis.size()) > opt.stats->basis_peak)
      opt.stats->basis_peak = static_cast<long>(basis.size());
  };

  for (const auto& g : gens)
    if (!g.is_zero()) push_elem(g);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    if (opt.budget) opt.budget->charge_pair();
    if (opt.stats) ++opt.stats->spairs_considered;
    handled.emplace(pk.i, pk.j);

    if (opt.product_criterion && mono_coprime(basis[pk.i].lm, basis[pk.j].lm)) continue;
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

    CPoly s = spoly(basis[pk.i], basis[pk.j], ord);
    CPoly r = nf_impl(s, basis, ord);
    if (opt.stats) ++opt.stats->spairs_reduced;
    if (r.is_zero()) {
      if (opt.stats) ++opt.stats->zero_reductions;
      continue;
    }
    push_elem(r);
  }

  // minimal basis: keep elements whose lm is not divisible by another kept lm
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
  // full tail reduction against the rest
  std::vector<CPoly> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<BasisElem> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    CPoly r = nf_impl(minimal[i].poly, others, ord);
    out.push_back(r.primitive_scaled().second);
  }
  std::sort(out.begin(), out.end(), [&](const CPoly& a, const CPoly& b) {
    const Mono la = make_elem(a, ord).lm, lb = make_elem(b, ord).lm;
    int c = ord.cmp(la, lb);
    if (c != 0) return c < 0;
    return a.cmp(b) < 0;
  });
  return out;
}

std::vector<CPoly> groebner(const CommIdeal& I, const MonomialOrder& ord, const GBOptions& opt) {
  if (!same_ring(I.ring, ord.ring())) throw ring_error("order ring mismatch");
  return groebner(I.gens, ord, opt);
}

bool contains_one(const std::vector<CPoly>& basis) {
  for (const auto& g : basis)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

bool in_ideal(const CPoly& p, const CommIdeal& I, const GBOptions& opt) {
  if (p.is_zero()) return true;
  auto ord = MonomialOrder::grevlex(I.ring);
  auto gb = groebner(I, ord, opt);
  return normal_form(p, gb, ord).is_zero();
}

bool contains_one(const CommIdeal& I, const GBOptions& opt) {
  auto gb = groebner(I, MonomialOrder::grevlex(I.ring), opt);
  return contains_one(gb);
}

bool ideal_contains(const CommIdeal& outer, const CommIdeal& inner, const GBOptions& opt) {
  if (!same_ring(outer.ring, inner.ring)) throw ring_error("ideal comparison across rings");
  auto ord = MonomialOrder::grevlex(outer.ring);
  auto gb = groebner(outer, ord, opt);
  for (const auto& g : inner.gens)
    if (!normal_form(g, gb, ord).is_zero()) return false;
  return true;
}

bool ideal_equal(const CommIdeal& a, const CommIdeal& b, const GBOptions& opt) {
  if (!same_ring(a.ring, b.ring)) throw ring_error("ideal comparison across rings");
  auto ord = MonomialOrder::grevlex(a.ring);
  return groebner(a, ord, opt) == groebner(b, ord, opt);
}

CommIdeal eliminate(const CommIdeal& I, const std::vector<std::string>& kill,
                    const GBOptions& opt) {
  auto sub = I.ring->without(kill);
  std::vector<int> kill_idx;
  for (const auto& name : kill) {
    int idx = I.ring->index_of(name);
    if (idx < 0) throw domain_error("eliminated variable '" + name + "' not in ring");
    kill_idx.push_back(idx);
  }
  auto ord = MonomialOrder::elim(I.ring, {kill});
  auto gb = groebner(I, ord, opt);
  std::vector<CPoly> kept;
  for (const auto& g : gb) {
    bool free = true;
    for (int v : kill_idx)
      if (g.uses_var(v)) {
        free = false;
        break;
      }
    if (free) kept.push_back(g.rename_into(sub));
  }
  return CommIdeal{sub, std::move(kept)};
}

CommIdeal saturate(const CommIdeal& I, const CPoly& g, const GBOptions& opt) {
  if (!same_ring(I.ring, g.ring())) throw ring_error("saturation across rings");
  if (g.is_zero()) return CommIdeal{I.ring, {CPoly(I.ring, Rat(1))}};
  if (g.is_constant()) return I;
  std::string z = fresh_name(*I.ring, "zsat");
  auto ext = I.ring->extended({z});
  std::vector<CPoly> gens;
  for (const auto& p : I.gens) gens.push_back(p.rename_into(ext));
  gens.push_back(CPoly(ext, Rat(1)) - CPoly::variable(ext, z) * g.rename_into(ext));
  CommIdeal J = eliminate(CommIdeal{ext, std::move(gens)}, {z}, opt);
  std::vector<CPoly> back;
  for (const auto& p : J.gens) back.push_back(p.rename_into(I.ring));
  return CommIdeal{I.ring, std::move(back)};
}

CommIdeal intersect(const CommIdeal& a, const CommIdeal& b, const GBOptions& opt) {
  if (!same_ring(a.ring, b.ring)) throw ring_error("intersection across rings");
  if (a.gens.empty() || b.gens.empty()) return CommIdeal{a.ring, {}};
  std::string z = fresh_name(*a.ring, "zint");
  auto ext = a.ring->extended({z});
  CPoly zv = CPoly::variable(ext, z);
  CPoly one_minus_z = CPoly(ext, Rat(1)) - zv;
  std::vector<CPoly> gens;
  for (const auto& p : a.gens) gens.push_back(zv * p.rename_into(ext));
  for (const auto& p : b.gens) gens.push_back(one_minus_z * p.rename_into(ext));
  CommIdeal J = eliminate(CommIdeal{ext, std::move(gens)}, {z}, opt);
  std::vector<CPoly> back;
  for (const auto& p : J.gens) back.push_back(p.rename_into(a.ring));
  return CommIdeal{a.ring, std::move(back)};
}

bool radical_member(const CPoly& p, const CommIdeal& I, const GBOptions& opt) {
  if (!same_ring(p.ring(), I.ring)) throw ring_error("radical membership across rings");
  if (p.is_zero()) return true;
  std::string z = fresh_name(*I.ring, "zrad");
  auto ext = I.ring->extended({z});
  std::vector<CPoly> gens;
  for (const auto& q : I.gens) gens.push_back(q.rename_into(ext));
  gens.push_back(CPoly(ext, Rat(1)) - CPoly::variable(ext, z) * p.rename_into(ext));
  auto gb = groebner(gens, MonomialOrder::grevlex(ext), opt);
  return contains_one(gb);
}

bool is_empty_projective(const CommIdeal& I, const std::vector<int>& coord_vars,
                         const GBOptions& opt) {
  for (const auto& g : I.gens)
    if (!g.is_homogeneous_in(coord_vars))
      throw domain_error("projective emptiness requires homogeneous generators");
  for (int v : coord_vars) {
    CPoly x = CPoly::monomial(I.ring, [&] {
      Mono m = mono_one(I.ring->size());
      m[v] = 1;
      return m;
    }(), Rat(1));
    if (!radical_member(x, I, opt)) return false;
  }
  return true;
}

std::string ideal_key(const CommIdeal& I, const GBOptions& opt) {
  auto gb = groebner(I, MonomialOrder::grevlex(I.ring), opt);
  std::ostringstream os;
  for (const auto& g : gb) os << g.str() << ';';
  return os.str();
}

std::string fresh_name(const Ring& ring, const std::string& base) {
  if (!ring.has(base)) return base;
  for (int i = 0;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!ring.has(cand)) return cand;
  }
}

}  // namespace bsato
