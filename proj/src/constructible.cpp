#include "bsato/constructible.hpp"

#include "bsato/errors.hpp"
#include "bsato/minimal_primes.hpp"

#include <algorithm>
#include <set>

namespace bsato {

namespace {

GBOptions with_budget(Budget* budget) {
  GBOptions opt;
  opt.budget = budget;
  return opt;
}

// Reduced-GB generators: unique presentation, so ideals compare by string.
CommIdeal normalized(const CommIdeal& I, Budget* budget = nullptr) {
  return make_ideal(I.ring, groebner(I, MonomialOrder::grevlex(I.ring), with_budget(budget)));
}

CommIdeal ideal_sum(const CommIdeal& a, const CommIdeal& b) {
  std::vector<CPoly> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return make_ideal(a.ring, std::move(gens));
}

// Generators of a*b; V(a*b) = V(a) u V(b).
CommIdeal ideal_product(const CommIdeal& a, const CommIdeal& b) {
  std::vector<CPoly> gens;
  for (auto& p : a.gens)
    for (auto& q : b.gens) gens.push_back(p * q);
  return make_ideal(a.ring, std::move(gens));
}

CommIdeal whole_ring(const RingPtr& ring) {
  return make_ideal(ring, {CPoly(ring, Rat(1))});
}

bool all_vanish(const CommIdeal& I, const std::vector<Rat>& point) {
  for (auto& g : I.gens)
    if (!(g.eval(point) == 0)) return false;
  return true;
}

}  // namespace

LocallyClosed make_piece(const CommIdeal& outer, const CommIdeal& inner) {
  if (!same_ring(outer.ring, inner.ring))
    throw ring_error("make_piece: outer and inner live in different rings");
  std::vector<CPoly> o, in;
  for (auto& g : outer.gens)
    if (!g.is_zero()) o.push_back(g);
  for (auto& g : inner.gens)
    if (!g.is_zero()) in.push_back(g);
  in.insert(in.end(), o.begin(), o.end());
  return LocallyClosed{make_ideal(outer.ring, std::move(o)), make_ideal(outer.ring, std::move(in))};
}

bool piece_empty(const LocallyClosed& p, Budget* budget) {
  // V(outer) <= V(inner) iff every generator of inner vanishes on V(outer).
  for (auto& g : p.inner.gens)
    if (!radical_member(g, p.outer, with_budget(budget))) return false;
  return true;
}

bool piece_contains(const LocallyClosed& p, const std::vector<Rat>& point) {
  return all_vanish(p.outer, point) && !all_vanish(p.inner, point);
}

Constructible make_constructible(std::vector<LocallyClosed> pieces) {
  Constructible S;
  S.pieces = std::move(pieces);
  return S;
}

bool contains(const Constructible& S, const std::vector<Rat>& point) {
  for (auto& p : S.pieces)
    if (piece_contains(p, point)) return true;
  return false;
}

bool chain_contains(const std::vector<CommIdeal>& chain, const std::vector<Rat>& point) {
  for (size_t i = 0; i + 1 < chain.size(); i += 2)
    if (all_vanish(chain[i], point) && !all_vanish(chain[i + 1], point)) return true;
  return false;
}

bool membership(const std::vector<Rat>& point, const Constructible& S, bool projective) {
  if (projective) {
    bool all_zero = true;
    for (auto& c : point)
      if (!(c == 0)) all_zero = false;
    if (all_zero) throw domain_error("membership: zero vector is not a projective point");
  }
  return contains(S, point);
}

std::vector<LocallyClosed> lc_difference(const LocallyClosed& a, const LocallyClosed& b,
                                         Budget* budget) {
  // (V(A)\V(B)) \ (V(O)\V(I)) = (V(A) \ (V(B) u V(O))) u (V(A+I) \ V(B)).
  std::vector<LocallyClosed> out;
  LocallyClosed p1 = make_piece(a.outer, ideal_product(a.inner, b.outer));
  if (!piece_empty(p1, budget)) out.push_back(std::move(p1));
  LocallyClosed p2 = make_piece(ideal_sum(a.outer, b.inner), a.inner);
  if (!piece_empty(p2, budget)) out.push_back(std::move(p2));
  return out;
}

std::vector<CommIdeal> closure_components(const std::vector<LocallyClosed>& pieces,
                                          Budget* budget) {
  std::vector<CommIdeal> kept;
  std::set<std::string> seen;
  for (auto& p : pieces) {
    for (auto& P : minimal_primes(p.outer, budget)) {
      // Keep the component unless it lies inside V(inner).
      bool escapes = false;
      for (auto& g : p.inner.gens)
        if (!in_ideal(g, P, with_budget(budget))) escapes = true;
      if (!escapes) continue;
      CommIdeal N = normalized(P, budget);
      if (seen.insert(ideal_key(N)).second) kept.push_back(std::move(N));
    }
  }
  // Drop components swallowed by a strictly larger one: V(P) <= V(Q) iff Q <= P.
  std::vector<CommIdeal> out;
  for (size_t i = 0; i < kept.size(); ++i) {
    bool swallowed = false;
    for (size_t j = 0; j < kept.size(); ++j) {
      if (i == j) continue;
      if (ideal_contains(kept[i], kept[j], with_budget(budget)) &&
          !ideal_contains(kept[j], kept[i], with_budget(budget)))
        swallowed = true;
    }
    if (!swallowed) out.push_back(kept[i]);
  }
  std::sort(out.begin(), out.end(),
            [](const CommIdeal& x, const CommIdeal& y) { return ideal_key(x) < ideal_key(y); });
  return out;
}

namespace {

CommIdeal intersect_all(const std::vector<CommIdeal>& parts, Budget* budget) {
  CommIdeal acc = parts.front();
  for (size_t i = 1; i < parts.size(); ++i)
    acc = intersect(acc, parts[i], with_budget(budget));
  return normalized(acc, budget);
}

std::vector<CommIdeal> prune_components(std::vector<CommIdeal> comps, Budget* budget) {
  std::vector<CommIdeal> uniq;
  std::set<std::string> seen;
  for (auto& P : comps)
    if (seen.insert(ideal_key(P)).second) uniq.push_back(std::move(P));
  std::vector<CommIdeal> out;
  for (size_t i = 0; i < uniq.size(); ++i) {
    bool swallowed = false;
    for (size_t j = 0; j < uniq.size(); ++j)
      if (i != j && ideal_contains(uniq[i], uniq[j], with_budget(budget)) &&
          !ideal_contains(uniq[j], uniq[i], with_budget(budget)))
        swallowed = true;
    if (!swallowed) out.push_back(uniq[i]);
  }
  std::sort(out.begin(), out.end(),
            [](const CommIdeal& x, const CommIdeal& y) { return ideal_key(x) < ideal_key(y); });
  return out;
}

// Components of the closure of W \ S, W closed, S a union of pieces.
// Component-wise: for each component Z of W, the pieces whose outer set
// contains Z either miss Z entirely (inner also contains Z) or cut it down to
// W' = Z n (intersection of their inner varieties); Z \ S = W' \ S exactly, so
// recurse on the strictly smaller W'. If no piece covers Z, then Z \ S is
// dense in Z and Z itself is a component of the closure. This stays
// polynomial-sized where iterated piece differences would blow up.
std::vector<CommIdeal> closure_of_diff(const CommIdeal& W, const std::vector<LocallyClosed>& S,
                                       Budget* budget, int depth) {
  if (depth > 32) throw error("canonicalize: difference recursion too deep");
  std::vector<CommIdeal> out;
  for (auto& Z : minimal_primes(W, budget)) {
    std::vector<const CommIdeal*> covering;
    bool misses_all = true;
    for (auto& p : S) {
      bool outer_in = true;
      for (auto& g : p.outer.gens)
        if (!in_ideal(g, Z, with_budget(budget))) outer_in = false;
      if (!outer_in) continue;
      bool inner_in = true;
      for (auto& g : p.inner.gens)
        if (!in_ideal(g, Z, with_budget(budget))) inner_in = false;
      if (inner_in) continue;  // piece is disjoint from Z
      covering.push_back(&p.inner);
      misses_all = false;
    }
    if (misses_all) {
      out.push_back(normalized(Z, budget));
      continue;
    }
    std::vector<CPoly> gens = Z.gens;
    for (auto* I : covering) gens.insert(gens.end(), I->gens.begin(), I->gens.end());
    auto sub = closure_of_diff(make_ideal(W.ring, std::move(gens)), S, budget, depth + 1);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return prune_components(std::move(out), budget);
}

}  // namespace

Constructible canonicalize(const Constructible& S, Budget* budget) {
  std::vector<LocallyClosed> cur;
  for (auto& p : S.pieces) {
    LocallyClosed n = make_piece(p.outer, p.inner);
    if (!piece_empty(n, budget)) cur.push_back(std::move(n));
  }

  std::vector<CommIdeal> chain;
  for (int guard = 0;; ++guard) {
    if (guard > 64) throw error("canonicalize: chain construction failed to terminate");
    std::vector<CommIdeal> comps = closure_components(cur, budget);
    if (comps.empty()) break;
    CommIdeal Vp = intersect_all(comps, budget);

    // V'' = closure(V' \ S).
    std::vector<CommIdeal> compsPP = closure_of_diff(Vp, cur, budget, 0);
    CommIdeal Vpp =
        compsPP.empty() ? normalized(whole_ring(Vp.ring), budget) : intersect_all(compsPP, budget);
    chain.push_back(Vp);
    chain.push_back(Vpp);
    if (compsPP.empty()) break;

    // Recurse on S n V''.
    std::vector<LocallyClosed> next;
    for (auto& q : cur) {
      LocallyClosed nq = make_piece(ideal_sum(q.outer, Vpp), q.inner);
      if (!piece_empty(nq, budget)) next.push_back(std::move(nq));
    }
    cur = std::move(next);
  }

  Constructible out;
  for (size_t i = 0; i + 1 < chain.size(); i += 2)
    out.pieces.push_back(make_piece(chain[i], chain[i + 1]));
  out.chain = std::move(chain);
  out.has_chain = true;
  return out;
}

}  // namespace bsato
