#pragma once

#include <map>

#include "bsato/comm_gb.hpp"
#include "bsato/weyl_gb.hpp"

namespace bsato {

// Parametric left GB with exceptional polynomial: a basis of (F) + Q*R where
// the parameters (the variables of C) are central and trail every other
// variable in the order. For any point P of V(Q) with h(P) != 0, substituting
// P into the basis yields a GB of the specialized ideal with the same leading
// monomials.
struct ParamGBResult {
  std::vector<WeylElem> gb;
  CPoly h;                       // in C; squarefree, constant/Q factors dropped
  std::vector<CPoly> h_factors;  // distinct irreducible factors of h, sorted
};

ParamGBResult param_weyl_gb(const std::vector<WeylElem>& F, const std::vector<CPoly>& Fprime,
                            const RingPtr& C, const MonomialOrder& ord,
                            Budget* budget = nullptr);

// One step of the definitive computation on V(Q), Q the prime generated by
// Fprime in C: the Bernstein-Sato polynomial of the specialization of f_param
// at every P in V(Q) \ V(h). f_param mixes coordinates and parameters; the
// parameters are exactly the variables of C.
struct StepResult {
  CPoly b;  // monic over ring {"s"}
  CPoly h;  // in C; 1 when specialization never degenerates
  std::vector<CPoly> h_factors;
};

StepResult bsp_step(const CPoly& f_param, const RingPtr& C, const std::vector<CPoly>& Fprime,
                    Budget* budget = nullptr);

// Parametric annihilator: sigma_P(gens) generates Ann(sigma_P(f))^s for every
// P in V(Q) \ V(h).
struct AnnStepResult {
  AlgebraSignature sig;  // x.., dx.., s, params (s and params central)
  std::string s_name;
  std::vector<WeylElem> gens;
  CPoly h;
  std::vector<CPoly> h_factors;
};

AnnStepResult ann_step(const CPoly& f_param, const RingPtr& C, const std::vector<CPoly>& Fprime,
                       Budget* budget = nullptr);

// Substitute rational values for named (central) variables; every remaining
// variable must exist in the target signature.
WeylElem specialize(const WeylElem& e, const AlgebraSignature& target,
                    const std::map<std::string, Rat>& values);

}  // namespace bsato
