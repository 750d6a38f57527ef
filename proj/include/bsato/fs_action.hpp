#pragma once

#include "bsato/weyl.hpp"

namespace bsato {

// States num * f^(s-m) in the free module Q[x,s] f^s over the rational
// Weyl algebra with s central. Operators act by the chain rule
//   d_i (g f^(s-m)) = (f d_i g + (s-m) g d_i f) f^(s-m-1),
// which keeps everything polynomial at the cost of raising m.
struct FsState {
  CPoly num;
  int m = 0;
};

// Commutative ring the action lives in: the signature with derivations
// dropped (positions and centrals keep their relative order).
RingPtr fs_ring(const AlgebraSignature& sig);

// Apply operator P to st; P's positions/centrals multiply, derivations
// differentiate. f and st.num must rename into fs_ring(P.sig()).
FsState fs_apply(const WeylElem& P, const CPoly& f, const FsState& st);

// Canonical form: strip every full factor of f from num (zero maps to m=0).
FsState fs_reduce(const CPoly& f, FsState st);

bool fs_equal(const CPoly& f, const FsState& a, const FsState& b);

}  // namespace bsato
