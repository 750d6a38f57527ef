#pragma once

#include <string>
#include <vector>

#include "bsato/budget.hpp"
#include "bsato/cpoly.hpp"
#include "bsato/order.hpp"

namespace bsato {

struct CommIdeal {
  RingPtr ring;
  std::vector<CPoly> gens;
};

CommIdeal make_ideal(const RingPtr& ring, std::vector<CPoly> gens);
CommIdeal parse_ideal(const RingPtr& ring, const std::vector<std::string>& texts);

struct GBOptions {
  bool product_criterion = true;  // commutative engine only
  bool chain_criterion = true;
  GBStats* stats = nullptr;
  Budget* budget = nullptr;
};

// Reduced Groebner basis: pairwise-minimal leading terms, fully tail-reduced,
// integer-primitive with positive leading coefficient, sorted ascending by
// leading monomial. Deterministic.
std::vector<CPoly> groebner(const std::vector<CPoly>& gens, const MonomialOrder& ord,
                            const GBOptions& opt = {});
std::vector<CPoly> groebner(const CommIdeal& I, const MonomialOrder& ord,
                            const GBOptions& opt = {});

// Full normal form of p against basis (not necessarily a GB) under ord.
CPoly normal_form(const CPoly& p, const std::vector<CPoly>& basis, const MonomialOrder& ord);

bool contains_one(const std::vector<CPoly>& basis);

// Membership via a fresh grevlex GB of I (desk scale: recomputation is fine).
bool in_ideal(const CPoly& p, const CommIdeal& I, const GBOptions& opt = {});
bool contains_one(const CommIdeal& I, const GBOptions& opt = {});
// every generator of inner lies in outer (as ideals: inner subset of outer).
bool ideal_contains(const CommIdeal& outer, const CommIdeal& inner, const GBOptions& opt = {});
bool ideal_equal(const CommIdeal& a, const CommIdeal& b, const GBOptions& opt = {});

// I cap k[ring minus kill]; result lives in the smaller ring.
CommIdeal eliminate(const CommIdeal& I, const std::vector<std::string>& kill,
                    const GBOptions& opt = {});

CommIdeal saturate(const CommIdeal& I, const CPoly& g, const GBOptions& opt = {});
CommIdeal intersect(const CommIdeal& a, const CommIdeal& b, const GBOptions& opt = {});

// true iff p vanishes on V(I): 1 in I + (1 - z*p).
bool radical_member(const CPoly& p, const CommIdeal& I, const GBOptions& opt = {});

// every coordinate variable lies in sqrt(I); generators must be homogeneous
// in the coordinate variables.
bool is_empty_projective(const CommIdeal& I, const std::vector<int>& coord_vars,
                         const GBOptions& opt = {});

// Canonical string of the reduced grevlex GB; two ideals are equal iff their
// keys agree (used for memoization).
std::string ideal_key(const CommIdeal& I, const GBOptions& opt = {});

std::string fresh_name(const Ring& ring, const std::string& base);

}  // namespace bsato
