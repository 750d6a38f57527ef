#pragma once

#include "bsato/weyl_gb.hpp"

namespace bsato {

// Ann f^s inside D[s] = A_n<x,dx>[s] with s central. The signature's ring
// lists the input coordinates, their derivations, then s; gens form a
// reduced grevlex GB so equal annihilators print identically.
struct AnnFsResult {
  AlgebraSignature sig;
  std::vector<WeylElem> gens;
  std::string s_name;  // the central variable playing s (fresh if "s" taken)
};

AnnFsResult ann_fs(const CPoly& f, Budget* budget = nullptr);

// Monic Bernstein-Sato polynomial of f, as an element of Q[s] over the
// one-variable ring {"s"}.
CPoly bpoly(const CPoly& f, Budget* budget = nullptr);

// b together with an operator certificate: b(s) f^s = P f^(s+1), verified
// exactly by applying P in Q[x,s] f^s before returning.
struct BCertificate {
  CPoly b;     // over ring {"s"}, monic
  WeylElem P;  // in the D[s] signature of ann_fs(f)
};
BCertificate bpoly_with_certificate(const CPoly& f, Budget* budget = nullptr);

// Roots of b ascending with multiplicity; every root of a Bernstein-Sato
// polynomial is rational, so a non-rational factor reports incomplete_error.
std::vector<Rat> bs_roots(const CPoly& b);

}  // namespace bsato
