#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bsato/cpoly.hpp"

namespace bsato {

// Exact quotient a/b when b divides a, nullopt otherwise.
std::optional<CPoly> try_divide(const CPoly& a, const CPoly& b);

// Primitive gcd with positive leading coefficient (1 for coprime inputs,
// normalized b/a when the other argument is zero).
CPoly poly_gcd(const CPoly& a, const CPoly& b);
CPoly poly_gcd_many(const std::vector<CPoly>& ps, const RingPtr& ring);

struct FactorList {
  Rat unit;
  // irreducible over Q, integer-primitive, positive leading coefficient,
  // sorted deterministically; multiplicities >= 1
  std::vector<std::pair<CPoly, int>> factors;

  CPoly expand(const RingPtr& ring) const;
};

// Complete factorization into irreducibles over Q. Complete at desk scale;
// raises incomplete_error (loudly) if the lift/recombination machinery gives
// up, never returns a partial answer.
FactorList factor(const CPoly& p);

// product of the distinct irreducible factors (positive unit dropped)
CPoly squarefree_part(const CPoly& p);

// all roots of a univariate polynomial, with multiplicity, sorted ascending;
// raises when a nonlinear irreducible factor remains ("non-rational root").
std::vector<Rat> rational_roots(const CPoly& b);

bool poly_is_perfect_square(const CPoly& p, CPoly* root = nullptr);

}  // namespace bsato
