#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bsato/rat.hpp"
#include "bsato/ring.hpp"

namespace bsato {

// Multivariate polynomial over Q. Terms are stored sorted by descending
// graded reverse lexicographic order on the ring's declared variable list,
// so begin() is the grevlex leading term and printing is canonical.
class CPoly {
 public:
  using TermMap = std::map<Mono, Rat, GrevlexGreater>;

  CPoly() = default;  // zero over the null ring; usable only as a placeholder
  explicit CPoly(RingPtr ring) : ring_(std::move(ring)) {}
  CPoly(RingPtr ring, const Rat& constant);

  static CPoly variable(const RingPtr& ring, const std::string& name, int power = 1);
  static CPoly monomial(const RingPtr& ring, Mono m, const Rat& coeff);
  static CPoly parse(const RingPtr& ring, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }

  // grevlex leading data; polynomial must be nonzero.
  const Mono& lm() const;
  const Rat& lc() const;
  Rat constant_term() const;
  Rat coeff(const Mono& m) const;

  int deg() const;  // total degree, -1 for zero
  int deg_in(int var) const;
  bool uses_var(int var) const;
  bool is_homogeneous() const;
  bool is_homogeneous_in(const std::vector<int>& vars) const;

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o);
  CPoly& operator*=(const Rat& c);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(CPoly a, const CPoly& b) { return a *= b; }
  friend CPoly operator*(CPoly a, const Rat& c) { return a *= c; }
  friend CPoly operator*(const Rat& c, CPoly a) { return a *= c; }
  CPoly operator-() const;
  bool operator==(const CPoly& o) const;
  bool operator!=(const CPoly& o) const { return !(*this == o); }

  CPoly pow(int e) const;
  CPoly derivative(int var) const;
  CPoly derivative(const std::string& var) const;

  Rat eval(const std::vector<Rat>& point) const;
  CPoly eval_partial(const std::map<int, Rat>& assign) const;
  CPoly substitute(int var, const CPoly& value) const;

  // Re-express in another ring, matching variables by name; every variable
  // actually used must exist in the target.
  CPoly rename_into(const RingPtr& target) const;

  // View as a univariate polynomial in `var` with coefficients in the same
  // ring (var cleared from each key).
  std::map<int, CPoly> coefficients_in(int var) const;
  std::vector<int> used_vars() const;

  // p == unit * prim with prim integer-primitive and positive grevlex leading
  // coefficient; zero maps to (1, 0).
  std::pair<Rat, CPoly> primitive_scaled() const;

  void add_term(const Mono& m, const Rat& c);  // merges, drops zeros

  std::string str() const;
  // deterministic total order for sorting (degree/terms lexicographic).
  int cmp(const CPoly& o) const;

 private:
  void check_same_ring(const CPoly& o) const;
  RingPtr ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const CPoly& p);

}  // namespace bsato
