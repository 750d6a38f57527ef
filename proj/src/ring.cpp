#include "bsato/ring.hpp"

#include <algorithm>
#include <cctype>

#include "bsato/errors.hpp"

namespace bsato {

Ring::Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!valid_name(vars_[i])) throw domain_error("invalid variable name '" + vars_[i] + "'");
    if (!index_.emplace(vars_[i], static_cast<int>(i)).second)
      throw domain_error("duplicate variable name '" + vars_[i] + "'");
  }
}

RingPtr Ring::make(std::vector<std::string> vars) {
  return RingPtr(new Ring(std::move(vars)));
}

int Ring::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

RingPtr Ring::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> vars = vars_;
  for (const auto& v : extra) {
    if (has(v)) throw domain_error("variable '" + v + "' already present in ring");
    vars.push_back(v);
  }
  return make(std::move(vars));
}

RingPtr Ring::without(const std::vector<std::string>& drop) const {
  std::vector<std::string> vars;
  for (const auto& v : vars_)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) vars.push_back(v);
  return make(std::move(vars));
}

bool Ring::valid_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_vars(*b);
}

Mono mono_one(std::size_t nvars) { return Mono(nvars, 0); }

int mono_deg(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool mono_is_one(const Mono& m) {
  for (int e : m)
    if (e != 0) return false;
  return true;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono out(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] -= b[i];
    if (out[i] < 0) throw domain_error("monomial division with remainder");
  }
  return out;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Mono mono_gcd(const Mono& a, const Mono& b) {
  Mono out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

int grevlex_cmp(const Mono& a, const Mono& b) {
  int da = mono_deg(a), db = mono_deg(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace bsato
