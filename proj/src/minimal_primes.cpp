#include "bsato/minimal_primes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bsato/errors.hpp"
#include "bsato/factor.hpp"

namespace bsato {
namespace {

// components always carry their reduced grevlex GB as generators
CommIdeal as_component(const RingPtr& ring, std::vector<CPoly> gb) {
  CommIdeal out;
  out.ring = ring;
  out.gens = std::move(gb);
  return out;
}

std::string component_key(const CommIdeal& c) {
  std::string key;
  for (const CPoly& g : c.gens) {
    key += g.str();
    key += ';';
  }
  return key;
}

std::vector<CommIdeal> prune(std::vector<CommIdeal> cands, const GBOptions& opt) {
  // dedupe on the canonical basis string
  std::map<std::string, CommIdeal> uniq;
  for (auto& c : cands) uniq.emplace(component_key(c), std::move(c));
  std::vector<CommIdeal> list;
  for (auto& [k, c] : uniq) {
    (void)k;
    list.push_back(std::move(c));
  }
  // drop any component whose variety lies inside another's: P_i contains P_j
  // as ideals means V(P_i) is a subset of V(P_j), so P_i is not minimal
  std::vector<bool> dead(list.size(), false);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (i == j || dead[i] || dead[j]) continue;
      if (ideal_contains(list[i], list[j], opt)) dead[i] = true;
    }
  std::vector<CommIdeal> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    if (!dead[i]) out.push_back(std::move(list[i]));
  return out;
}

// split g = c*v + r with deg_v(g) = 1; c and r do not involve v
void split_linear(const CPoly& g, int v, CPoly& c, CPoly& r) {
  c = CPoly(g.ring());
  r = CPoly(g.ring());
  for (auto& [e, coeff] : g.coefficients_in(v)) {
    if (e == 0) r = coeff;
    else if (e == 1) c = coeff;
    else throw error("split_linear: not linear");
  }
}

std::vector<CommIdeal> decompose(const CommIdeal& I, const GBOptions& opt, int depth) {
  if (depth > 64) throw incomplete_error("minimal-primes: recursion too deep");
  const RingPtr& R = I.ring;

  // 0. factor-split raw generators before any GB: V(..., g1*g2) splits as
  // V(..., g1) u V(..., g2), and a large reducible generator (fence products)
  // would make the GB below explode.
  for (std::size_t gi = 0; gi < I.gens.size(); ++gi) {
    const CPoly& g = I.gens[gi];
    if (g.is_zero() || g.is_constant()) continue;
    FactorList fl = factor(g);
    if (fl.factors.size() == 1 && fl.factors[0].second == 1) continue;
    std::vector<CommIdeal> out;
    for (const auto& [q, m] : fl.factors) {
      (void)m;
      std::vector<CPoly> gens;
      for (std::size_t j = 0; j < I.gens.size(); ++j) gens.push_back(j == gi ? q : I.gens[j]);
      auto sub = decompose(make_ideal(R, std::move(gens)), opt, depth + 1);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return prune(std::move(out), opt);
  }

  std::vector<CPoly> gb = groebner(I.gens, MonomialOrder::grevlex(R), opt);
  if (contains_one(gb)) return {};
  if (gb.empty()) return {as_component(R, {})};

  // 1. factor splitting: any reducible or non-squarefree generator branches
  for (const CPoly& g : gb) {
    FactorList fl = factor(g);
    if (fl.factors.size() == 1 && fl.factors[0].second == 1) continue;
    std::vector<CommIdeal> out;
    for (const auto& [q, m] : fl.factors) {
      (void)m;
      std::vector<CPoly> gens = gb;
      gens.push_back(q);
      auto sub = decompose(make_ideal(R, std::move(gens)), opt, depth + 1);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return prune(std::move(out), opt);
  }

  // all generators irreducible from here on
  if (gb.size() == 1) return {as_component(R, gb)};

  bool all_linear = true;
  for (const CPoly& g : gb)
    if (g.deg() > 1) all_linear = false;
  if (all_linear) return {as_component(R, gb)};

  // 2. a variable appearing linearly with constant coefficient is eliminated
  // by substitution (an isomorphism onto the remaining coordinates)
  for (std::size_t gi = 0; gi < gb.size(); ++gi) {
    const CPoly& g = gb[gi];
    for (int v : g.used_vars()) {
      if (g.deg_in(v) != 1) continue;
      CPoly c, r;
      split_linear(g, v, c, r);
      if (!c.is_constant()) continue;
      CPoly repl = r * (Rat(-1) / c.constant_term());
      RingPtr small = R->without({R->name(v)});
      std::vector<CPoly> rest;
      for (std::size_t j = 0; j < gb.size(); ++j) {
        if (j == gi) continue;
        rest.push_back(gb[j].substitute(v, repl).rename_into(small));
      }
      auto sub = decompose(make_ideal(small, std::move(rest)), opt, depth + 1);
      std::vector<CommIdeal> out;
      for (const CommIdeal& P : sub) {
        std::vector<CPoly> gens;
        for (const CPoly& h : P.gens) gens.push_back(h.rename_into(R));
        gens.push_back(g);
        out.push_back(
            as_component(R, groebner(make_ideal(R, std::move(gens)).gens, MonomialOrder::grevlex(R), opt)));
      }
      return prune(std::move(out), opt);
    }
  }

  // 3. a variable appearing linearly with nonconstant coefficient c splits
  // into the chart c != 0 (saturate, eliminate, pull back) and the locus c = 0
  for (std::size_t gi = 0; gi < gb.size(); ++gi) {
    const CPoly& g = gb[gi];
    for (int v : g.used_vars()) {
      if (g.deg_in(v) != 1) continue;
      CPoly c, r;
      split_linear(g, v, c, r);
      std::vector<CommIdeal> out;

      CommIdeal sat = saturate(make_ideal(R, gb), c, opt);
      if (!contains_one(sat, opt)) {
        CommIdeal J = eliminate(sat, {R->name(v)}, opt);
        for (const CommIdeal& P : decompose(J, opt, depth + 1)) {
          std::vector<CPoly> gens;
          for (const CPoly& h : P.gens) gens.push_back(h.rename_into(R));
          gens.push_back(g);
          CommIdeal lifted = saturate(make_ideal(R, std::move(gens)), c, opt);
          if (contains_one(lifted, opt)) continue;
          out.push_back(as_component(R, groebner(lifted.gens, MonomialOrder::grevlex(R), opt)));
        }
      }

      std::vector<CPoly> with_c = gb;
      with_c.push_back(c);
      auto sub = decompose(make_ideal(R, std::move(with_c)), opt, depth + 1);
      out.insert(out.end(), sub.begin(), sub.end());
      return prune(std::move(out), opt);
    }
  }

  throw incomplete_error("minimal-primes: no applicable strategy");
}

}  // namespace

std::vector<CommIdeal> minimal_primes(const CommIdeal& I, Budget* budget) {
  GBOptions opt;
  opt.budget = budget;
  std::vector<CommIdeal> primes = decompose(I, opt, 0);
  std::sort(primes.begin(), primes.end(), [](const CommIdeal& a, const CommIdeal& b) {
    return component_key(a) < component_key(b);
  });
  if (!certify_minimal_primes(I, primes, budget))
    throw error("minimal-primes: certificate failed");
  return primes;
}

bool certify_minimal_primes(const CommIdeal& I, const std::vector<CommIdeal>& primes,
                            Budget* budget) {
  GBOptions opt;
  opt.budget = budget;
  if (primes.empty()) return contains_one(I, opt);

  // (a) I lies in every component
  for (const CommIdeal& P : primes)
    if (!ideal_contains(P, I, opt)) return false;

  // (b) the intersection of the components lies in sqrt(I)
  CommIdeal meet = primes[0];
  for (std::size_t i = 1; i < primes.size(); ++i) meet = intersect(meet, primes[i], opt);
  for (const CPoly& g : meet.gens)
    if (!radical_member(g, I, opt)) return false;

  // (c) components are pairwise incomparable
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (i != j && ideal_contains(primes[i], primes[j], opt)) return false;

  return true;
}

}  // namespace bsato
