#pragma once
#include "comm_gb.hpp"

#include <vector>

namespace bsato {

// One locally closed set V(outer) \ V(inner). Construction normalizes the
// presentation so that inner contains outer (append outer's generators);
// point tests then read "all outer gens vanish, not all inner gens vanish".
struct LocallyClosed {
  CommIdeal outer;
  CommIdeal inner;
};

LocallyClosed make_piece(const CommIdeal& outer, const CommIdeal& inner);

// V(outer) \ V(inner) has no points over the algebraic closure, i.e.
// V(outer) is contained in V(inner).
bool piece_empty(const LocallyClosed& p, Budget* budget = nullptr);

bool piece_contains(const LocallyClosed& p, const std::vector<Rat>& point);

// Finite union of locally closed pieces, with an optional canonical chain
// V1' >= V1'' >= V2' >= ... >= Vm'' (alternating closures per the canonical
// presentation theorem). The chain, when present, is point-equivalent to the
// pieces; chain.size() is even, entries are ideals with reduced-GB generators.
struct Constructible {
  std::vector<LocallyClosed> pieces;
  std::vector<CommIdeal> chain;
  bool has_chain = false;
};

Constructible make_constructible(std::vector<LocallyClosed> pieces);

bool contains(const Constructible& S, const std::vector<Rat>& point);
bool chain_contains(const std::vector<CommIdeal>& chain, const std::vector<Rat>& point);

// Spec'd membership test on homogeneous coordinates: rejects the zero vector
// when projective (it names no point of projective space).
bool membership(const std::vector<Rat>& point, const Constructible& S, bool projective = true);

// Set difference a \ b as a union of at most two locally closed pieces
// (empty pieces dropped): (V(A)\V(B)) \ (V(O)\V(I))
//   = (V(A) \ V(B*O)) u (V(A+I) \ V(B)).
std::vector<LocallyClosed> lc_difference(const LocallyClosed& a, const LocallyClosed& b,
                                         Budget* budget = nullptr);

// Irreducible components of the closure of a union of pieces, as prime ideals
// with no mutual containment. Empty result means the set is empty.
std::vector<CommIdeal> closure_components(const std::vector<LocallyClosed>& pieces,
                                          Budget* budget = nullptr);

// Compute the canonical chain form. Pieces are replaced by the chain pairs
// (V_i', V_i''), so the result is point-equivalent to the input and
// canonicalize is idempotent.
Constructible canonicalize(const Constructible& S, Budget* budget = nullptr);

}  // namespace bsato
