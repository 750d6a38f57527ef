#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bsato {

// A ring is just an ordered list of variable names; all polynomial data is
// interpreted against one. Shared immutably so ring identity is cheap to pass
// around, but equality is by variable list (same names, same order).
class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  static RingPtr make(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_[i]; }
  // -1 when absent.
  int index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_of(name) >= 0; }
  bool same_vars(const Ring& other) const { return vars_ == other.vars_; }

  // this ring extended with extra names appended (names must be fresh).
  RingPtr extended(const std::vector<std::string>& extra) const;
  // subring with the given names removed.
  RingPtr without(const std::vector<std::string>& drop) const;

  static bool valid_name(const std::string& name);

 private:
  explicit Ring(std::vector<std::string> vars);
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector over a ring; length always equals the ring size.
using Mono = std::vector<int>;

Mono mono_one(std::size_t nvars);
int mono_deg(const Mono& m);
bool mono_is_one(const Mono& m);
bool mono_divides(const Mono& a, const Mono& b);  // a | b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);  // requires b | a
Mono mono_lcm(const Mono& a, const Mono& b);
Mono mono_gcd(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

// Graded reverse lexicographic: higher total degree wins; on ties the last
// position where they differ decides, smaller exponent winning.
int grevlex_cmp(const Mono& a, const Mono& b);

struct GrevlexGreater {
  bool operator()(const Mono& a, const Mono& b) const { return grevlex_cmp(a, b) > 0; }
};

}  // namespace bsato
