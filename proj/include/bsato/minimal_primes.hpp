#pragma once

#include <vector>

#include "bsato/comm_gb.hpp"

namespace bsato {

// Minimal primes of I over Q, each returned with its reduced grevlex GB as
// generators, deduplicated, inclusion-pruned, sorted by canonical key.
// Empty vector means V(I) is empty; the zero ideal decomposes as itself.
// The strategy is complete for the ideals produced by the stratification
// (iterated factor splitting plus elimination of variables that appear
// linearly, with saturation branches for nonconstant leading coefficients);
// anything outside that fragment raises incomplete_error rather than
// returning a wrong answer. The result is certified before it is returned.
std::vector<CommIdeal> minimal_primes(const CommIdeal& I, Budget* budget = nullptr);

// Decomposition certificate: (a) I is contained in every P_i, (b) every
// generator of the intersection of the P_i lies in sqrt(I), (c) no P_i is
// contained in another. (Primality of the P_i themselves rests on the
// construction.) An empty list certifies against 1 in I.
bool certify_minimal_primes(const CommIdeal& I, const std::vector<CommIdeal>& primes,
                            Budget* budget = nullptr);

}  // namespace bsato
