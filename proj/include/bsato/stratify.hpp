#pragma once
#include "constructible.hpp"
#include "param_gb.hpp"

#include <map>
#include <string>
#include <vector>

namespace bsato {

// One stratum of the definitive computation: all points P of the coefficient
// space with b_{f_P}(s) = b(s). region.pieces is the raw union produced by the
// recursion; region.chain the canonical presentation.
struct Stratum {
  CPoly b;  // monic, over the ring {"s"}
  Constructible region;
};

// One stratum of the quasi-definitive computation: parametric generators
// whose specialization at any P in the region generates Ann f_P^s.
struct AnnStratum {
  std::vector<WeylElem> gens;
  Constructible region;
};

struct Database {
  int n = 0, d = 0;
  std::string kind;       // "bsp" or "ann"
  bool projective = true; // full coefficient space vs affine family parameters
  RingPtr C;              // coefficient/parameter ring
  CPoly f;                // template polynomial over [x..., params...]
  std::vector<Stratum> strata;
  // ann databases:
  AlgebraSignature sig;  // A_n[params][s]
  std::string s_name;
  std::vector<AnnStratum> ann_strata;
  std::map<std::string, std::string> meta;
};

// Filled on resource abort so partial progress can be dumped.
struct StratifyAbort {
  bool aborted = false;
  Database partial;
  std::vector<std::string> pending_primes;  // generator lists of unexpanded primes
};

// Names the coefficient of x1^e1*...*xn^en as "a" + digits e1..en; tuples
// enumerated in ascending lexicographic order. Requires d <= 9 so that single
// digits suffice.
std::vector<std::string> coefficient_names(int n, int d);

// The generic polynomial of degree d in n variables over ring
// [x1..xn, coefficient names].
CPoly generic_poly(int n, int d);

Database stratify_bsp(int n, int d, Budget* budget = nullptr, int jobs = 1,
                      StratifyAbort* abort_info = nullptr);

// Stratify an affine family: f_template lives over [x vars..., free params...]
// with the free parameters listed in C; fixed coefficients are rationals baked
// into the template.
Database stratify_bsp_family(const CPoly& f_template, const RingPtr& C, Budget* budget = nullptr,
                             int jobs = 1, StratifyAbort* abort_info = nullptr);

Database stratify_ann(int n, int d, Budget* budget = nullptr, int jobs = 1,
                      StratifyAbort* abort_info = nullptr);

// Merge ann strata (I_i, V_i), (I_j, V_j) whenever sigma_P(I_i) = sigma_P(I_j)
// for all P in V_j (checked symbolically modulo the closure of V_j).
Database compress_ann(const Database& db, Budget* budget = nullptr);

// Read b_f off the database: pure evaluation plus membership tests, no
// Groebner bases. f uses at most db.n variables (sorted by name) and degree
// at most db.d.
CPoly lookup(const CPoly& f, const Database& db);

// Largest absolute value of a negative integer root over all b in the
// database; 0 if there is none.
int t_of(const Database& db);

}  // namespace bsato
