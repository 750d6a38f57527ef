#include "bsato/weyl.hpp"

#include <sstream>

#include "bsato/errors.hpp"
#include "bsato/token.hpp"

namespace bsato {

AlgebraSignature AlgebraSignature::make(
    RingPtr ring, const std::vector<std::pair<std::string, std::string>>& pairs) {
  AlgebraSignature sig;
  sig.ring = std::move(ring);
  sig.mate_.assign(sig.ring->size(), -1);
  sig.role_.assign(sig.ring->size(), 0);
  for (const auto& [pos, der] : pairs) {
    int p = sig.ring->index_of(pos), d = sig.ring->index_of(der);
    if (p >= d)
      throw ring_error("algebra signature: position must precede derivation: " + pos);
    if (sig.mate_[p] != -1 || sig.mate_[d] != -1)
      throw ring_error("algebra signature: variable in two pairs");
    sig.mate_[p] = d;
    sig.mate_[d] = p;
    sig.role_[p] = 1;
    sig.role_[d] = 2;
    sig.pairs.emplace_back(p, d);
  }
  return sig;
}

bool AlgebraSignature::same(const AlgebraSignature& o) const {
  return same_ring(ring, o.ring) && pairs == o.pairs;
}

WeylElem::WeylElem(AlgebraSignature sig, const Rat& constant) : sig_(std::move(sig)) {
  if (constant != 0) terms_.emplace(mono_one(sig_.ring->size()), constant);
}

WeylElem WeylElem::monomial(const AlgebraSignature& sig, Mono m, const Rat& c) {
  if (m.size() != sig.ring->size()) throw ring_error("weyl monomial: arity mismatch");
  WeylElem out(sig);
  out.add_term(m, c);
  return out;
}

WeylElem WeylElem::variable(const AlgebraSignature& sig, const std::string& name, int power) {
  Mono m = mono_one(sig.ring->size());
  m[sig.ring->index_of(name)] = power;
  return monomial(sig, m, Rat(1));
}

WeylElem WeylElem::from_cpoly(const AlgebraSignature& sig, const CPoly& p) {
  WeylElem out(sig);
  const Ring& src = *p.ring();
  std::vector<int> map(src.size(), -1);
  for (std::size_t i = 0; i < src.size(); ++i)
    if (sig.ring->has(src.name(i))) map[i] = sig.ring->index_of(src.name(i));
  for (const auto& [m, c] : p.terms()) {
    Mono out_m = mono_one(sig.ring->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (map[i] < 0)
        throw ring_error("from_cpoly: variable " + src.name(i) + " missing in algebra");
      out_m[map[i]] = m[i];
    }
    out.add_term(out_m, c);
  }
  return out;
}

bool WeylElem::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_.begin()->first));
}

Rat WeylElem::constant_term() const {
  Mono one = mono_one(sig_.ring->size());
  auto it = terms_.find(one);
  return it == terms_.end() ? Rat(0) : it->second;
}

bool WeylElem::uses_var(int v) const {
  for (const auto& [m, c] : terms_) {
    (void)c;
    if (m[v] != 0) return true;
  }
  return false;
}

void WeylElem::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElem& WeylElem::operator+=(const WeylElem& o) {
  if (!sig_.ring) sig_ = o.sig_;
  if (!sig_.same(o.sig_)) throw ring_error("weyl add: algebra mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylElem& WeylElem::operator-=(const WeylElem& o) {
  if (!sig_.ring) sig_ = o.sig_;
  if (!sig_.same(o.sig_)) throw ring_error("weyl sub: algebra mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylElem& WeylElem::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

WeylElem WeylElem::operator-() const {
  WeylElem out(sig_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

bool WeylElem::operator==(const WeylElem& o) const {
  if (!sig_.ring || !o.sig_.ring) return terms_.empty() && o.terms_.empty();
  return sig_.same(o.sig_) && terms_ == o.terms_;
}

CPoly WeylElem::to_cpoly(const RingPtr& target) const {
  CPoly out(target);
  for (const auto& [m, c] : terms_) {
    Mono t = mono_one(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const std::string& name = sig_.ring->name(i);
      if (!target->has(name)) throw ring_error("to_cpoly: variable " + name + " missing");
      t[target->index_of(name)] = m[i];
    }
    out.add_term(t, c);
  }
  return out;
}

std::string WeylElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << '-';
        a = -a;
      }
    } else {
      os << (a < 0 ? '-' : '+');
      if (a < 0) a = -a;
    }
    bool printed = false;
    if (a != 1 || mono_is_one(m)) {
      os << to_string(a);
      printed = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) os << '*';
      os << sig_.ring->name(i);
      if (m[i] != 1) os << '^' << m[i];
      printed = true;
    }
    first = false;
  }
  return os.str();
}

int WeylElem::cmp(const WeylElem& o) const {
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    int c = grevlex_cmp(it->first, jt->first);
    if (c != 0) return c;
    if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
  }
  if (it != terms_.end()) return 1;
  if (jt != o.terms_.end()) return -1;
  return 0;
}

WeylElem weyl_mul(const WeylElem& a, const WeylElem& b) {
  if (!a.sig().same(b.sig())) throw ring_error("weyl mul: algebra mismatch");
  const AlgebraSignature& sig = a.sig();
  WeylElem out(sig);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // pairs where a's derivation meets b's position need commuting
      std::vector<std::pair<std::pair<int, int>, int>> hot;  // ((pos,der), kmax)
      for (const auto& [p, d] : sig.pairs) {
        int kmax = std::min(ma[d], mb[p]);
        if (kmax > 0) hot.push_back({{p, d}, kmax});
      }
      if (hot.empty()) {
        out.add_term(mono_mul(ma, mb), ca * cb);
        continue;
      }
      std::vector<int> k(hot.size(), 0);
      while (true) {
        Rat coeff = ca * cb;
        Mono m = mono_mul(ma, mb);
        for (std::size_t i = 0; i < hot.size(); ++i) {
          if (k[i] == 0) continue;
          auto [p, d] = hot[i].first;
          coeff *= Rat(binomial(ma[d], k[i]) * binomial(mb[p], k[i]) * factorial(k[i]));
          m[p] -= k[i];
          m[d] -= k[i];
        }
        out.add_term(m, coeff);
        // odometer
        std::size_t pos = 0;
        while (pos < k.size()) {
          if (++k[pos] <= hot[pos].second) break;
          k[pos] = 0;
          ++pos;
        }
        if (pos == k.size()) break;
      }
    }
  }
  return out;
}

WeylElem weyl_pow(const WeylElem& a, int e) {
  if (e < 0) throw domain_error("weyl pow: negative exponent");
  WeylElem out(a.sig(), Rat(1));
  for (int i = 0; i < e; ++i) out = weyl_mul(out, a);
  return out;
}

WeylElem WeylElem::parse(const AlgebraSignature& sig, const std::string& text) {
  auto ts = tok::lex(text);
  std::size_t pos = 0;
  auto peek = [&]() -> const tok::Token& { return ts[pos]; };
  auto take = [&]() -> const tok::Token& { return ts[pos++]; };

  auto parse_factor = [&]() -> WeylElem {
    const tok::Token& t = take();
    if (t.kind == tok::Kind::Number) return WeylElem(sig, parse_rat(t.text));
    if (t.kind == tok::Kind::Name) {
      if (!sig.ring->has(t.text)) throw parse_error("unknown variable: " + t.text);
      int power = 1;
      if (peek().kind == tok::Kind::Caret) {
        take();
        const tok::Token& e = take();
        if (e.kind != tok::Kind::Number || e.text.find('/') != std::string::npos)
          throw parse_error("exponent must be an integer");
        power = std::stoi(e.text);
        if (power < 0) throw parse_error("negative exponent");
      }
      return variable(sig, t.text, power);
    }
    throw parse_error("expected factor");
  };

  auto parse_term = [&]() -> WeylElem {
    WeylElem acc = parse_factor();
    while (peek().kind == tok::Kind::Star) {
      take();
      acc = weyl_mul(acc, parse_factor());  // noncommutative, left to right
    }
    return acc;
  };

  WeylElem out(sig);
  bool negate = false;
  if (peek().kind == tok::Kind::Plus || peek().kind == tok::Kind::Minus)
    negate = take().kind == tok::Kind::Minus;
  while (true) {
    WeylElem term = parse_term();
    out += negate ? -term : term;
    if (peek().kind == tok::Kind::End) break;
    const tok::Token& s = take();
    if (s.kind == tok::Kind::Plus) negate = false;
    else if (s.kind == tok::Kind::Minus) negate = true;
    else throw parse_error("expected + or -");
  }
  return out;
}

void weyl_require_admissible(const AlgebraSignature& sig, const MonomialOrder& ord) {
  for (const auto& [p, d] : sig.pairs) {
    bool decided = false;
    for (const auto& row : ord.weight_rows()) {
      std::int64_t sum = row[p] + row[d];
      if (sum == 0) continue;
      if (sum < 0)
        throw ring_error("weyl order: pair " + sig.ring->name(p) + "," + sig.ring->name(d) +
                         " has negative weight sum");
      decided = true;
      break;
    }
    if (!decided && ord.block_of(p) != ord.block_of(d))
      throw ring_error("weyl order: pair " + sig.ring->name(p) + "," + sig.ring->name(d) +
                       " split across blocks");
  }
}

}  // namespace bsato
