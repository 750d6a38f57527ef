#include "bsato/cpoly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "bsato/errors.hpp"
#include "bsato/token.hpp"

namespace bsato {

namespace tok {

std::vector<Token> lex(const std::string& input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < input.size()) {
    char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+') {
      out.push_back({Kind::Plus, "+"});
      ++i;
    } else if (c == '-') {
      out.push_back({Kind::Minus, "-"});
      ++i;
    } else if (c == '*') {
      out.push_back({Kind::Star, "*"});
      ++i;
    } else if (c == '^') {
      out.push_back({Kind::Caret, "^"});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      if (i < input.size() && input[i] == '/') {
        std::size_t j = i + 1;
        if (j >= input.size() || !std::isdigit(static_cast<unsigned char>(input[j])))
          throw parse_error("malformed rational near '" + input.substr(start) + "'");
        i = j;
        while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
      }
      out.push_back({Kind::Number, input.substr(start, i - start)});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < input.size() &&
             (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
        ++i;
      out.push_back({Kind::Name, input.substr(start, i - start)});
    } else {
      throw parse_error(std::string("unexpected character '") + c + "' in expression");
    }
  }
  out.push_back({Kind::End, ""});
  return out;
}

}  // namespace tok

CPoly::CPoly(RingPtr ring, const Rat& constant) : ring_(std::move(ring)) {
  if (constant != 0) terms_.emplace(mono_one(ring_->size()), constant);
}

CPoly CPoly::variable(const RingPtr& ring, const std::string& name, int power) {
  int idx = ring->index_of(name);
  if (idx < 0) throw domain_error("unknown variable '" + name + "'");
  if (power < 0) throw domain_error("negative exponent");
  Mono m = mono_one(ring->size());
  m[idx] = power;
  return monomial(ring, m, Rat(1));
}

CPoly CPoly::monomial(const RingPtr& ring, Mono m, const Rat& coeff) {
  CPoly p(ring);
  if (m.size() != ring->size()) throw ring_error("monomial length mismatch");
  if (coeff != 0) p.terms_.emplace(std::move(m), coeff);
  return p;
}

bool CPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_.begin()->first));
}

bool CPoly::is_one() const {
  return terms_.size() == 1 && mono_is_one(terms_.begin()->first) && terms_.begin()->second == 1;
}

const Mono& CPoly::lm() const {
  if (terms_.empty()) throw domain_error("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rat& CPoly::lc() const {
  if (terms_.empty()) throw domain_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

Rat CPoly::constant_term() const {
  if (terms_.empty()) return Rat(0);
  auto it = terms_.find(mono_one(ring_->size()));
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat CPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int CPoly::deg() const { return terms_.empty() ? -1 : mono_deg(terms_.begin()->first); }

int CPoly::deg_in(int var) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return terms_.empty() ? -1 : d;
}

bool CPoly::uses_var(int var) const {
  for (const auto& [m, c] : terms_)
    if (m[var] > 0) return true;
  return false;
}

bool CPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = mono_deg(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (mono_deg(m) != d) return false;
  return true;
}

bool CPoly::is_homogeneous_in(const std::vector<int>& vars) const {
  if (terms_.empty()) return true;
  auto subdeg = [&](const Mono& m) {
    int d = 0;
    for (int v : vars) d += m[v];
    return d;
  };
  int d = subdeg(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (subdeg(m) != d) return false;
  return true;
}

void CPoly::check_same_ring(const CPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw ring_error("operands live in different rings");
}

void CPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CPoly& CPoly::operator*=(const CPoly& o) {
  check_same_ring(o);
  CPoly out(ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(mono_mul(m1, m2), c1 * c2);
  terms_ = std::move(out.terms_);
  return *this;
}

CPoly& CPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CPoly CPoly::operator-() const {
  CPoly out(*this);
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

bool CPoly::operator==(const CPoly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  return terms_ == o.terms_;
}

CPoly CPoly::pow(int e) const {
  if (e < 0) throw domain_error("negative polynomial power");
  CPoly out(ring_, Rat(1));
  CPoly base(*this);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

CPoly CPoly::derivative(int var) const {
  CPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono n = m;
    n[var] -= 1;
    out.add_term(n, c * m[var]);
  }
  return out;
}

CPoly CPoly::derivative(const std::string& var) const {
  int idx = ring_->index_of(var);
  if (idx < 0) throw domain_error("unknown variable '" + var + "'");
  return derivative(idx);
}

Rat CPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != ring_->size()) throw domain_error("evaluation point has wrong arity");
  Rat out(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t *= rat_pow(point[i], m[i]);
    out += t;
  }
  return out;
}

CPoly CPoly::eval_partial(const std::map<int, Rat>& assign) const {
  CPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    Mono n = m;
    for (const auto& [var, val] : assign) {
      if (n[var] != 0) {
        v *= rat_pow(val, n[var]);
        n[var] = 0;
      }
    }
    out.add_term(n, v);
  }
  return out;
}

CPoly CPoly::substitute(int var, const CPoly& value) const {
  check_same_ring(value);
  CPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    int e = n[var];
    n[var] = 0;
    CPoly t = CPoly::monomial(ring_, n, c);
    if (e > 0) t *= value.pow(e);
    out += t;
  }
  return out;
}

CPoly CPoly::rename_into(const RingPtr& target) const {
  CPoly out(target);
  for (const auto& [m, c] : terms_) {
    Mono n = mono_one(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      int j = target->index_of(ring_->name(i));
      if (j < 0)
        throw ring_error("variable '" + ring_->name(i) + "' missing from target ring");
      n[j] = m[i];
    }
    out.add_term(n, c);
  }
  return out;
}

std::map<int, CPoly> CPoly::coefficients_in(int var) const {
  std::map<int, CPoly> out;
  for (const auto& [m, c] : terms_) {
    Mono n = m;
    int e = n[var];
    n[var] = 0;
    auto [it, inserted] = out.emplace(e, CPoly(ring_));
    it->second.add_term(n, c);
  }
  return out;
}

std::vector<int> CPoly::used_vars() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < ring_->size(); ++i)
    if (uses_var(static_cast<int>(i))) out.push_back(static_cast<int>(i));
  return out;
}

std::pair<Rat, CPoly> CPoly::primitive_scaled() const {
  if (terms_.empty()) return {Rat(1), *this};
  Int num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat unit = make_rat(num_gcd, den_lcm);
  if (lc() < 0) unit = -unit;
  CPoly prim(*this);
  prim *= 1 / unit;
  return {unit, prim};
}

namespace {

// expr := [sign] term (sign term)* ; term := factor ('*' factor)* ;
// factor := rational | name ['^' int]
CPoly parse_expr(const RingPtr& ring, const std::vector<tok::Token>& ts) {
  using tok::Kind;
  std::size_t pos = 0;
  auto peek = [&]() -> const tok::Token& { return ts[pos]; };
  auto parse_term = [&]() -> CPoly {
    CPoly acc(ring, Rat(1));
    while (true) {
      const tok::Token& t = peek();
      if (t.kind == Kind::Number) {
        acc *= parse_rat(t.text);
        ++pos;
      } else if (t.kind == Kind::Name) {
        ++pos;
        int e = 1;
        if (peek().kind == Kind::Caret) {
          ++pos;
          if (peek().kind != Kind::Number || peek().text.find('/') != std::string::npos)
            throw parse_error("exponent must be a nonnegative integer");
          e = std::stoi(peek().text);
          ++pos;
        }
        acc *= CPoly::variable(ring, t.text, e);
      } else {
        throw parse_error("expected a term");
      }
      if (peek().kind == Kind::Star) {
        ++pos;
        continue;
      }
      break;
    }
    return acc;
  };
  CPoly out(ring);
  bool negate = false;
  if (peek().kind == Kind::Plus) {
    ++pos;
  } else if (peek().kind == Kind::Minus) {
    negate = true;
    ++pos;
  }
  while (true) {
    CPoly t = parse_term();
    out += negate ? -t : t;
    if (peek().kind == Kind::Plus) {
      negate = false;
      ++pos;
    } else if (peek().kind == Kind::Minus) {
      negate = true;
      ++pos;
    } else if (peek().kind == Kind::End) {
      break;
    } else {
      throw parse_error("expected '+', '-', or end of expression");
    }
  }
  return out;
}

}  // namespace

CPoly CPoly::parse(const RingPtr& ring, const std::string& text) {
  auto ts = tok::lex(text);
  if (ts.size() == 1) throw parse_error("empty expression");
  return parse_expr(ring, ts);
}

std::string CPoly::str() const {
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
      os << ring_->name(i);
      if (m[i] != 1) os << '^' << m[i];
      printed = true;
    }
    first = false;
  }
  return os.str();
}

int CPoly::cmp(const CPoly& o) const {
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

std::ostream& operator<<(std::ostream& os, const CPoly& p) { return os << p.str(); }

}  // namespace bsato
