#pragma once

#include <vector>

#include "bsato/budget.hpp"
#include "bsato/weyl.hpp"

namespace bsato {

struct WeylGBOptions {
  // no product criterion here: coprime leading monomials do not make
  // S-pairs reduce to zero in a Weyl algebra
  bool chain_criterion = true;
  GBStats* stats = nullptr;
  Budget* budget = nullptr;
  bool track = false;  // carry representations in terms of the input
};

struct WeylGB {
  std::vector<WeylElem> basis;  // reduced, canonical
  // when tracked: basis[i] = sum_j weyl_mul(reps[i][j], gens[j])
  std::vector<std::vector<WeylElem>> reps;
};

// Reduced left Groebner basis; same normalization contract as the
// commutative engine (integer-primitive, positive storage-leading
// coefficient, sorted ascending by leading monomial), so output is
// canonical for the ideal and order.
WeylGB weyl_groebner(const std::vector<WeylElem>& gens, const MonomialOrder& ord,
                     const WeylGBOptions& opt = {});

WeylElem weyl_normal_form(const WeylElem& p, const std::vector<WeylElem>& basis,
                          const MonomialOrder& ord);

// p = sum_i weyl_mul(cof[i], basis[i]) + remainder
WeylElem weyl_nf_cofactors(const WeylElem& p, const std::vector<WeylElem>& basis,
                           const MonomialOrder& ord, std::vector<WeylElem>& cof);

bool weyl_contains_one(const std::vector<WeylElem>& basis);

}  // namespace bsato
