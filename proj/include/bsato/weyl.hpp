#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bsato/cpoly.hpp"
#include "bsato/order.hpp"

namespace bsato {

// A Weyl-type algebra over Q: some variables form (position, derivation)
// pairs with the relation d*x = x*d + 1; every other variable is central.
// Pair positions must precede their derivations in the ring's declared
// order so normal-ordered printing reads positions-first.
struct AlgebraSignature {
  RingPtr ring;
  std::vector<std::pair<int, int>> pairs;

  static AlgebraSignature make(RingPtr ring,
                               const std::vector<std::pair<std::string, std::string>>& pairs);

  int mate(int v) const { return mate_[v]; }
  bool is_position(int v) const { return role_[v] == 1; }
  bool is_derivation(int v) const { return role_[v] == 2; }
  bool is_central(int v) const { return role_[v] == 0; }
  bool same(const AlgebraSignature& o) const;

 private:
  std::vector<int> mate_;
  std::vector<int> role_;  // 0 central, 1 position, 2 derivation
};

// Element in normal order: a monomial means positions (and centrals) to the
// left of derivations. Storage is grevlex-sorted for canonical printing;
// Groebner layers impose their own orders externally.
class WeylElem {
 public:
  using TermMap = std::map<Mono, Rat, GrevlexGreater>;

  WeylElem() = default;
  explicit WeylElem(AlgebraSignature sig) : sig_(std::move(sig)) {}
  WeylElem(AlgebraSignature sig, const Rat& constant);

  static WeylElem monomial(const AlgebraSignature& sig, Mono m, const Rat& c);
  static WeylElem variable(const AlgebraSignature& sig, const std::string& name, int power = 1);
  static WeylElem parse(const AlgebraSignature& sig, const std::string& text);
  // commutative polynomial as a multiplication operator; variables map by name
  static WeylElem from_cpoly(const AlgebraSignature& sig, const CPoly& p);

  const AlgebraSignature& sig() const { return sig_; }
  const RingPtr& ring() const { return sig_.ring; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  std::size_t term_count() const { return terms_.size(); }
  bool uses_var(int v) const;

  void add_term(const Mono& m, const Rat& c);

  WeylElem& operator+=(const WeylElem& o);
  WeylElem& operator-=(const WeylElem& o);
  WeylElem& operator*=(const Rat& c);
  friend WeylElem operator+(WeylElem a, const WeylElem& b) { return a += b; }
  friend WeylElem operator-(WeylElem a, const WeylElem& b) { return a -= b; }
  friend WeylElem operator*(WeylElem a, const Rat& c) { return a *= c; }
  friend WeylElem operator*(const Rat& c, WeylElem a) { return a *= c; }
  WeylElem operator-() const;
  bool operator==(const WeylElem& o) const;
  bool operator!=(const WeylElem& o) const { return !(*this == o); }

  // commutative image for elements free of noncommuting obstructions is not
  // defined here; pure extraction by names for (e.g.) s-polynomials:
  CPoly to_cpoly(const RingPtr& target) const;

  std::string str() const;
  int cmp(const WeylElem& o) const;

 private:
  AlgebraSignature sig_;
  TermMap terms_;
};

// normal-ordered product via d^b x^a = sum_k C(a,k) C(b,k) k! x^(a-k) d^(b-k)
WeylElem weyl_mul(const WeylElem& a, const WeylElem& b);
WeylElem weyl_pow(const WeylElem& a, int e);

// order admissibility for left Groebner bases: for every pair the first
// weight row with nonzero w[x]+w[d] must be positive, and pairs whose rows
// all vanish must live in a single block so commutator terms drop strictly.
void weyl_require_admissible(const AlgebraSignature& sig, const MonomialOrder& ord);

}  // namespace bsato
