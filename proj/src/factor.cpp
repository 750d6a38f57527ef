#include "bsato/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "bsato/errors.hpp"

namespace bsato {
namespace {

// ---------------------------------------------------------------------------
// dense univariate helpers over Q (coefficient i belongs to v^i)

CPoly var_pow(const RingPtr& ring, int v, int e) {
  Mono m = mono_one(ring->size());
  m[v] = e;
  return CPoly::monomial(ring, m, Rat(1));
}

using QDense = std::vector<Rat>;

void qd_trim(QDense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int qd_deg(const QDense& a) { return static_cast<int>(a.size()) - 1; }

QDense qd_from(const CPoly& p, int v) {
  QDense out;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (static_cast<int>(i) != v && m[i] != 0)
        throw error("qd_from: polynomial not univariate");
    int e = m[v];
    if (static_cast<int>(out.size()) <= e) out.resize(e + 1, Rat(0));
    out[e] = c;
  }
  qd_trim(out);
  return out;
}

CPoly qd_to(const QDense& a, const RingPtr& ring, int v) {
  CPoly out(ring);
  Mono m = mono_one(ring->size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    m[v] = static_cast<int>(i);
    out.add_term(m, a[i]);
  }
  return out;
}

QDense qd_mul(const QDense& a, const QDense& b) {
  if (a.empty() || b.empty()) return {};
  QDense out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  qd_trim(out);
  return out;
}

// remainder of a by b, b != 0
QDense qd_rem(QDense a, const QDense& b) {
  if (b.empty()) throw error("qd_rem: division by zero");
  while (qd_deg(a) >= qd_deg(b)) {
    Rat q = a.back() / b.back();
    int shift = qd_deg(a) - qd_deg(b);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= q * b[i];
    a.pop_back();
    qd_trim(a);
  }
  return a;
}

QDense qd_gcd(QDense a, QDense b) {
  qd_trim(a), qd_trim(b);
  while (!b.empty()) {
    QDense r = qd_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

QDense qd_derivative(const QDense& a) {
  QDense out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(Rat(static_cast<long>(i)) * a[i]);
  qd_trim(out);
  return out;
}

// inverse of a modulo m (deg a < deg m, gcd(a, m) = 1), via extended euclid
QDense qd_inv_mod(const QDense& a, const QDense& m) {
  QDense r0 = m, r1 = a, s0 = {}, s1 = {Rat(1)};
  while (!r1.empty()) {
    // r0 = q*r1 + r2
    QDense q;
    QDense r2 = r0;
    while (qd_deg(r2) >= qd_deg(r1)) {
      Rat qc = r2.back() / r1.back();
      int shift = qd_deg(r2) - qd_deg(r1);
      if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1, Rat(0));
      q[shift] += qc;
      for (std::size_t i = 0; i < r1.size(); ++i) r2[i + shift] -= qc * r1[i];
      r2.pop_back();
      qd_trim(r2);
    }
    QDense qs1 = qd_mul(q, s1);
    QDense s2 = s0;
    if (s2.size() < qs1.size()) s2.resize(qs1.size(), Rat(0));
    for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    qd_trim(s2);
    r0 = std::move(r1), r1 = std::move(r2);
    s0 = std::move(s1), s1 = std::move(s2);
  }
  if (qd_deg(r0) != 0) throw error("qd_inv_mod: arguments not coprime");
  Rat lc = r0.back();
  for (auto& c : s0) c /= lc;
  qd_trim(s0);
  return s0;
}

// ---------------------------------------------------------------------------
// dense univariate integers and arithmetic mod small prime / prime power

using ZDense = std::vector<Int>;

void zd_trim(ZDense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zd_deg(const ZDense& a) { return static_cast<int>(a.size()) - 1; }

ZDense zd_from(const CPoly& p, int v) {
  QDense q = qd_from(p, v);
  ZDense out;
  out.reserve(q.size());
  for (const auto& c : q) {
    if (!is_integer(c)) throw error("zd_from: non-integer coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

CPoly zd_to(const ZDense& a, const RingPtr& ring, int v) {
  QDense q;
  q.reserve(a.size());
  for (const auto& c : a) q.push_back(Rat(c));
  return qd_to(q, ring, v);
}

ZDense zd_mul_mod(const ZDense& a, const ZDense& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZDense out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % m;
  zd_trim(out);
  return out;
}

ZDense zd_reduce(ZDense a, const Int& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  zd_trim(a);
  return a;
}

Int int_inv_mod(const Int& a, const Int& p) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw error("int_inv_mod: not invertible");
  return inv;
}

// remainder of a by monic-after-normalization b, all mod prime p
ZDense zd_rem_mod(ZDense a, const ZDense& b, const Int& p) {
  if (b.empty()) throw error("zd_rem_mod: division by zero");
  Int lcinv = int_inv_mod(b.back(), p);
  while (zd_deg(a) >= zd_deg(b)) {
    Int q = a.back() * lcinv % p;
    int shift = zd_deg(a) - zd_deg(b);
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = (a[i + shift] - q * b[i]) % p;
      if (a[i + shift] < 0) a[i + shift] += p;
    }
    a.pop_back();
    zd_trim(a);
  }
  return a;
}

ZDense zd_monic_mod(ZDense a, const Int& p) {
  a = zd_reduce(std::move(a), p);
  if (a.empty()) return a;
  Int inv = int_inv_mod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ZDense zd_gcd_mod(ZDense a, ZDense b, const Int& p) {
  a = zd_reduce(std::move(a), p);
  b = zd_reduce(std::move(b), p);
  while (!b.empty()) {
    ZDense r = zd_rem_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return zd_monic_mod(std::move(a), p);
}

ZDense zd_derivative(const ZDense& a) {
  ZDense out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(Int(static_cast<long>(i)) * a[i]);
  zd_trim(out);
  return out;
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a monic squarefree polynomial mod prime p

std::vector<ZDense> berlekamp(const ZDense& f, const Int& p) {
  int n = zd_deg(f);
  if (n <= 1) return {f};

  // frobenius matrix: column j holds x^(j*p) mod f
  ZDense xp = {Int(0), Int(1)};  // x
  {
    // x^p mod f by square-and-multiply on the exponent p
    ZDense acc = {Int(1)};
    ZDense base = xp;
    Int e = p;
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) acc = zd_rem_mod(zd_mul_mod(acc, base, p), f, p);
      base = zd_rem_mod(zd_mul_mod(base, base, p), f, p);
      e /= 2;
    }
    xp = acc;
  }
  std::vector<ZDense> cols(n);
  cols[0] = {Int(1)};
  for (int j = 1; j < n; ++j) cols[j] = zd_rem_mod(zd_mul_mod(cols[j - 1], xp, p), f, p);

  // M = Q - I acting on coefficient vectors, kernel via gaussian elimination
  std::vector<std::vector<Int>> M(n, std::vector<Int>(n, Int(0)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= zd_deg(cols[j]); ++i) M[i][j] = cols[j][i];
    M[j][j] = (M[j][j] - 1 + p) % p;
  }
  std::vector<int> pivot_col(n, -1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int row = rank; row < n; ++row)
      if (M[row][col] != 0) { piv = row; break; }
    if (piv < 0) continue;
    std::swap(M[piv], M[rank]);
    Int inv = int_inv_mod(M[rank][col], p);
    for (int j = 0; j < n; ++j) M[rank][j] = M[rank][j] * inv % p;
    for (int row = 0; row < n; ++row) {
      if (row == rank || M[row][col] == 0) continue;
      Int factor = M[row][col];
      for (int j = 0; j < n; ++j) {
        M[row][j] = (M[row][j] - factor * M[rank][j]) % p;
        if (M[row][j] < 0) M[row][j] += p;
      }
    }
    pivot_col[rank++] = col;
  }
  std::vector<ZDense> kernel;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rank; ++i) is_pivot[pivot_col[i]] = true;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    ZDense v(n, Int(0));
    v[col] = 1;
    for (int i = 0; i < rank; ++i) v[pivot_col[i]] = (p - M[i][col]) % p;
    zd_trim(v);
    kernel.push_back(std::move(v));
  }
  int r = static_cast<int>(kernel.size());
  if (r <= 1) return {f};

  std::vector<ZDense> parts = {f};
  for (const ZDense& v : kernel) {
    if (static_cast<int>(parts.size()) == r) break;
    if (zd_deg(v) < 1) continue;  // the constant kernel vector never splits
    for (Int c = 0; c < p; ++c) {
      if (static_cast<int>(parts.size()) == r) break;
      ZDense vc = v;
      if (vc.empty()) vc.push_back(Int(0));
      vc[0] = (vc[0] - c) % p;
      if (vc[0] < 0) vc[0] += p;
      zd_trim(vc);
      std::vector<ZDense> next;
      for (ZDense& u : parts) {
        if (zd_deg(u) <= 1) { next.push_back(std::move(u)); continue; }
        ZDense w = zd_gcd_mod(u, vc, p);
        if (zd_deg(w) <= 0 || zd_deg(w) == zd_deg(u)) {
          next.push_back(std::move(u));
          continue;
        }
        // u = w * (u/w) mod p
        ZDense q = u;
        {
          ZDense rem = zd_rem_mod(q, w, p);
          if (!rem.empty()) throw error("berlekamp: inexact split");
          // long division to recover quotient
          ZDense quot(zd_deg(u) - zd_deg(w) + 1, Int(0));
          ZDense a = u;
          Int lcinv = int_inv_mod(w.back(), p);
          while (zd_deg(a) >= zd_deg(w)) {
            Int qc = a.back() * lcinv % p;
            int shift = zd_deg(a) - zd_deg(w);
            quot[shift] = qc;
            for (std::size_t i = 0; i < w.size(); ++i) {
              a[i + shift] = (a[i + shift] - qc * w[i]) % p;
              if (a[i + shift] < 0) a[i + shift] += p;
            }
            a.pop_back();
            zd_trim(a);
          }
          next.push_back(std::move(w));
          next.push_back(std::move(quot));
        }
      }
      parts = std::move(next);
    }
  }
  return parts;
}

// ---------------------------------------------------------------------------
// linear Hensel lifting: f = lc * prod(g_i) mod p^k, g_i monic, lift k -> K

struct HenselState {
  std::vector<ZDense> g;       // monic mod p^k
  std::vector<ZDense> t;       // t_i = (prod_{j!=i} g_j)^-1 mod (g_i, p)
  Int pk;                      // current modulus p^k
};

// remainder a mod (b, p) with b monic mod p
ZDense zd_rem_monic(ZDense a, const ZDense& b, const Int& p) { return zd_rem_mod(std::move(a), b, p); }

HenselState hensel_init(const std::vector<ZDense>& gs, const Int& p) {
  HenselState st;
  st.g = gs;
  st.pk = p;
  int r = static_cast<int>(gs.size());
  st.t.resize(r);
  for (int i = 0; i < r; ++i) {
    ZDense prod = {Int(1)};
    for (int j = 0; j < r; ++j)
      if (j != i) prod = zd_rem_mod(zd_mul_mod(prod, st.g[j], p), st.g[i], p);
    // invert prod modulo (g_i, p) via extended euclid in F_p[x]
    ZDense r0 = st.g[i], r1 = prod, s0 = {}, s1 = {Int(1)};
    while (!r1.empty()) {
      // divide r0 by r1
    ZDense q(std::max(0, zd_deg(r0) - zd_deg(r1)) + 1, Int(0));
      ZDense a = r0;
      Int lcinv = int_inv_mod(r1.back(), p);
      while (zd_deg(a) >= zd_deg(r1)) {
        Int qc = a.back() * lcinv % p;
        int shift = zd_deg(a) - zd_deg(r1);
        q[shift] = qc;
        for (std::size_t k2 = 0; k2 < r1.size(); ++k2) {
          a[k2 + shift] = (a[k2 + shift] - qc * r1[k2]) % p;
          if (a[k2 + shift] < 0) a[k2 + shift] += p;
        }
        a.pop_back();
        zd_trim(a);
      }
      ZDense qs1 = zd_mul_mod(q, s1, p);
      ZDense s2 = s0;
      if (s2.size() < qs1.size()) s2.resize(qs1.size(), Int(0));
      for (std::size_t k2 = 0; k2 < qs1.size(); ++k2) {
        s2[k2] = (s2[k2] - qs1[k2]) % p;
        if (s2[k2] < 0) s2[k2] += p;
      }
      zd_trim(s2);
      r0 = std::move(r1), r1 = std::move(a);
      s0 = std::move(s1), s1 = std::move(s2);
    }
    if (zd_deg(r0) != 0) throw error("hensel_init: factors not coprime mod p");
    Int lcinv = int_inv_mod(r0.back(), p);
    for (auto& c : s0) c = c * lcinv % p;
    zd_trim(s0);
    st.t[i] = std::move(s0);
  }
  return st;
}

void hensel_lift_to(HenselState& st, const ZDense& f, const Int& lc, const Int& p, const Int& target) {
  while (st.pk < target) {
    Int pk1 = st.pk * p;
    // e = f - lc * prod(g_i) over Z, reduced mod p^(k+1)
    ZDense prod = {Int(1)};
    for (const auto& gi : st.g) {
      ZDense next(prod.size() + gi.size() - 1, Int(0));
      for (std::size_t a = 0; a < prod.size(); ++a)
        for (std::size_t b = 0; b < gi.size(); ++b) next[a + b] = (next[a + b] + prod[a] * gi[b]) % pk1;
      zd_trim(next);
      prod = std::move(next);
    }
    ZDense e(std::max(f.size(), prod.size()), Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) e[i] = f[i];
    for (std::size_t i = 0; i < prod.size(); ++i) {
      e[i] = (e[i] - lc * prod[i]) % pk1;
      if (e[i] < 0) e[i] += pk1;
    }
    zd_trim(e);
    if (!e.empty()) {
      ZDense E;
      E.reserve(e.size());
      for (const auto& c : e) {
        if (c % st.pk != 0) throw error("hensel_lift: invariant broken");
        E.push_back(c / st.pk % p);
      }
      zd_trim(E);
      Int lcinv = int_inv_mod(lc % p, p);
      for (std::size_t i = 0; i < st.g.size(); ++i) {
        ZDense Elc = E;
        for (auto& c : Elc) c = c * lcinv % p;
        ZDense delta = zd_rem_monic(zd_mul_mod(Elc, st.t[i], p), st.g[i], p);
        if (st.g[i].size() < delta.size() + 1) throw error("hensel_lift: degree overflow");
        for (std::size_t k2 = 0; k2 < delta.size(); ++k2)
          st.g[i][k2] = (st.g[i][k2] + st.pk * delta[k2]) % pk1;
      }
    }
    st.pk = pk1;
  }
}

// ---------------------------------------------------------------------------
// Zassenhaus: primitive squarefree positive-lc f over Z, deg >= 1

Int zd_content(const ZDense& a) {
  Int g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZDense zd_primitive(ZDense a) {
  zd_trim(a);
  if (a.empty()) return a;
  Int g = zd_content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// exact trial division over Z; nullopt if not divisible
std::optional<ZDense> zd_try_divide(const ZDense& a, const ZDense& b) {
  if (b.empty()) return std::nullopt;
  ZDense r = a, q(std::max(0, zd_deg(a) - zd_deg(b)) + 1, Int(0));
  while (!r.empty() && zd_deg(r) >= zd_deg(b)) {
    if (r.back() % b.back() != 0) return std::nullopt;
    Int qc = r.back() / b.back();
    int shift = zd_deg(r) - zd_deg(b);
    q[shift] = qc;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= qc * b[i];
    zd_trim(r);
  }
  if (!r.empty()) return std::nullopt;
  return q;
}

std::vector<ZDense> zassenhaus(const ZDense& f0) {
  ZDense f = f0;
  int n = zd_deg(f);
  if (n <= 0) throw error("zassenhaus: constant input");
  if (n == 1) return {f};

  // prime choice: p must not divide lc and f must stay squarefree mod p
  static const long primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
                                43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
                                101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
                                163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227,
                                229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281, 283};
  Int p = 0;
  ZDense fbar;
  for (long cand : primes) {
    Int pc(cand);
    if (f.back() % pc == 0) continue;
    ZDense fb = zd_reduce(f, pc);
    if (zd_deg(fb) != n) continue;
    ZDense g = zd_gcd_mod(fb, zd_derivative(fb), pc);
    if (zd_deg(g) == 0) {
      p = pc;
      fbar = zd_monic_mod(std::move(fb), pc);
      break;
    }
  }
  if (p == 0) throw incomplete_error("zassenhaus: no usable prime found");

  std::vector<ZDense> modular = berlekamp(fbar, p);
  if (modular.size() == 1) return {f};
  if (modular.size() > 24) throw incomplete_error("zassenhaus: too many modular factors");

  // Landau-Mignotte: coefficients of lc*h for any factor h are bounded by
  // 2^n * |f|_2 * |lc|
  Int norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Int norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Int bound = norm * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  Int target = 2 * bound + 1;

  HenselState st = hensel_init(modular, p);
  hensel_lift_to(st, f, f.back(), p, target);
  const Int& pK = st.pk;

  auto symmetric = [&](ZDense a) {
    for (auto& c : a) {
      c %= pK;
      if (c < 0) c += pK;
      if (2 * c > pK) c -= pK;
    }
    zd_trim(a);
    return a;
  };

  std::vector<ZDense> result;
  std::vector<int> alive(st.g.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
  ZDense fcur = f;

  int s = 1;
  while (2 * s <= static_cast<int>(alive.size())) {
    bool found = false;
    std::vector<bool> mask(alive.size(), false);
    std::fill(mask.begin(), mask.begin() + s, true);
    do {
      ZDense cand = {fcur.back()};
      for (std::size_t i = 0; i < alive.size(); ++i)
        if (mask[i]) cand = zd_reduce(zd_mul_mod(cand, st.g[alive[i]], pK), pK);
      cand = zd_primitive(symmetric(std::move(cand)));
      if (cand.empty() || zd_deg(cand) == 0) continue;
      auto q = zd_try_divide(fcur, cand);
      if (!q) continue;
      result.push_back(cand);
      fcur = zd_primitive(std::move(*q));
      std::vector<int> keep;
      for (std::size_t i = 0; i < alive.size(); ++i)
        if (!mask[i]) keep.push_back(alive[i]);
      alive = std::move(keep);
      found = true;
      break;
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (!found) ++s;
  }
  if (zd_deg(fcur) >= 1) result.push_back(fcur);
  return result;
}

// ---------------------------------------------------------------------------
// multivariate machinery over CPoly

CPoly normalize_primitive(const CPoly& p) { return p.primitive_scaled().second; }

std::vector<CPoly> coeffs_of(const CPoly& p, int v) {
  std::vector<CPoly> out;
  for (auto& [e, c] : p.coefficients_in(v)) {
    (void)e;
    out.push_back(c);
  }
  return out;
}

CPoly content_in(const CPoly& p, int v) {
  return poly_gcd_many(coeffs_of(p, v), p.ring());
}

CPoly lc_in(const CPoly& p, int v) {
  auto cs = p.coefficients_in(v);
  if (cs.empty()) throw error("lc_in: zero polynomial");
  return cs.rbegin()->second;
}

// pseudo-remainder of f by g with respect to v (deg_v g >= 1)
CPoly prem(CPoly f, const CPoly& g, int v) {
  int dg = g.deg_in(v);
  CPoly lcg = lc_in(g, v);
  while (!f.is_zero() && f.deg_in(v) >= dg) {
    int df = f.deg_in(v);
    CPoly lcf = lc_in(f, v);
    CPoly shift = var_pow(f.ring(), v, df - dg);
    f = f * lcg - g * lcf * shift;
  }
  return f;
}

// gcd of v-primitive polynomials with deg_v >= 0, by primitive PRS
CPoly prs_gcd(CPoly f, CPoly g, int v) {
  if (f.deg_in(v) < g.deg_in(v)) std::swap(f, g);
  while (true) {
    if (g.is_zero()) return normalize_primitive(f);
    if (g.deg_in(v) == 0) return CPoly(f.ring(), Rat(1));
    CPoly r = prem(f, g, v);
    if (r.is_zero()) return normalize_primitive(g);
    if (r.deg_in(v) == 0) return CPoly(f.ring(), Rat(1));
    CPoly cont = content_in(r, v);
    auto q = try_divide(r, cont);
    if (!q) throw error("prs_gcd: content division failed");
    f = std::move(g);
    g = normalize_primitive(*q);
  }
}

// deterministic pseudorandom integer points for evaluation
struct PointSource {
  std::mt19937 rng{12345};
  int bound = 1;
  int tries_at_bound = 0;

  std::vector<Rat> next(std::size_t m) {
    if (++tries_at_bound > 120) {
      bound = std::min(bound + 1, 40);
      tries_at_bound = 0;
    }
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<Rat> pt(m);
    for (auto& x : pt) x = Rat(d(rng));
    return pt;
  }
};

// set partitions of {0..r-1} as restricted growth strings, grouped by
// decreasing number of blocks (finest first)
std::vector<std::vector<std::vector<int>>> partitions_finest_first(int r) {
  std::vector<std::vector<std::vector<int>>> all;
  std::vector<int> rgs(r, 0);
  while (true) {
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> part(blocks);
    for (int i = 0; i < r; ++i) part[rgs[i]].push_back(i);
    all.push_back(std::move(part));
    // next restricted growth string
    int i = r - 1;
    while (i > 0) {
      int maxprefix = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= maxprefix) break;
      --i;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return all;
}

std::vector<CPoly> factor_univar_irreducibles(const CPoly& sq, int v);
std::vector<std::pair<CPoly, int>> factor_primitive(const CPoly& g);

// extended Zassenhaus factorization of a squarefree multi-primitive
// polynomial in >= 2 variables: evaluate, lift in shifted coordinates with
// imposed leading coefficient, recombine by restarting over set partitions
// of the modular factors (finest first, so the first exact convergence is
// the irreducible factorization)
std::vector<CPoly> ez_factor_squarefree(const CPoly& g, int v) {
  const RingPtr& R = g.ring();
  if (g.deg_in(v) == 1) return {g};

  std::vector<int> others;
  for (int u : g.used_vars())
    if (u != v) others.push_back(u);

  CPoly alpha = lc_in(g, v);

  // evaluation point: leading coefficient survives, image squarefree
  PointSource pts;
  std::vector<Rat> point;
  QDense image;
  for (int attempt = 0; attempt < 4000; ++attempt) {
    std::vector<Rat> pt = pts.next(others.size());
    std::map<int, Rat> sub;
    for (std::size_t i = 0; i < others.size(); ++i) sub[others[i]] = pt[i];
    if (alpha.eval_partial(sub).is_zero()) continue;
    CPoly img = g.eval_partial(sub);
    QDense qi = qd_from(img, v);
    if (qd_deg(qd_gcd(qi, qd_derivative(qi))) != 0) continue;
    point = pt;
    image = qi;
    break;
  }
  if (point.empty()) throw incomplete_error("ez_factor: no good evaluation point");

  // univariate factorization of the image; monic rational factors
  CPoly img_poly = qd_to(image, R, v);
  std::vector<CPoly> ufac = factor_univar_irreducibles(normalize_primitive(img_poly), v);
  int r = static_cast<int>(ufac.size());
  if (r == 1) return {g};
  if (r > 8) throw incomplete_error("ez_factor: too many modular factors");

  std::vector<QDense> u_monic(r);
  for (int i = 0; i < r; ++i) {
    QDense d = qd_from(ufac[i], v);
    Rat lc = d.back();
    for (auto& c : d) c /= lc;
    u_monic[i] = std::move(d);
  }

  // shift so the evaluation point becomes the origin
  CPoly gs = g;
  for (std::size_t i = 0; i < others.size(); ++i) {
    CPoly repl = var_pow(R, others[i], 1) + CPoly(R, point[i]);
    gs = gs.substitute(others[i], repl);
  }
  CPoly alpha_s = lc_in(gs, v);
  std::map<int, Rat> origin;
  for (int u : others) origin[u] = Rat(0);
  CPoly a0p = alpha_s.eval_partial(origin);
  Rat alpha0 = a0p.constant_term();
  if (alpha0 == 0) throw error("ez_factor: shifted lc vanishes at origin");

  auto deg_others = [&](const Mono& m) {
    int d = 0;
    for (int u : others) d += m[u];
    return d;
  };

  for (const auto& part : partitions_finest_first(r)) {
    int L = static_cast<int>(part.size());
    // the true grouping always converges, so once every multi-block
    // partition has failed the polynomial is irreducible
    if (L == 1) return {g};

    // group moduli and residues
    std::vector<QDense> mod(L), res(L);
    for (int l = 0; l < L; ++l) {
      QDense m = {Rat(1)};
      for (int idx : part[l]) m = qd_mul(m, u_monic[idx]);
      mod[l] = m;
      res[l] = m;
      for (auto& c : res[l]) c *= alpha0;
    }
    std::vector<QDense> tinv(L);
    bool coprime_ok = true;
    for (int l = 0; l < L && coprime_ok; ++l) {
      QDense B = {Rat(1)};
      for (int j = 0; j < L; ++j)
        if (j != l) B = qd_rem(qd_mul(B, res[j]), mod[l]);
      if (B.empty()) { coprime_ok = false; break; }
      tinv[l] = qd_inv_mod(B, mod[l]);
    }
    if (!coprime_ok) continue;

    // F = alpha^(L-1) * gs; initial lifted factors have the full leading
    // coefficient imposed
    CPoly F = gs;
    for (int i = 0; i < L - 1; ++i) F = F * alpha_s;
    std::vector<CPoly> fl(L, CPoly(R));
    for (int l = 0; l < L; ++l) {
      int dl = qd_deg(res[l]);
      CPoly base = qd_to(res[l], R, v);
      CPoly vd = var_pow(R, v, dl);
      fl[l] = base - vd * CPoly(R, alpha0) + vd * alpha_s;
    }

    int Dmax = 0;
    for (const auto& [m, c] : F.terms()) {
      (void)c;
      Dmax = std::max(Dmax, deg_others(m));
    }

    bool converged = false;
    for (int k = 1; k <= Dmax + 1; ++k) {
      CPoly prod = fl[0];
      for (int l = 1; l < L; ++l) prod = prod * fl[l];
      CPoly e = F - prod;
      if (e.is_zero()) { converged = true; break; }
      // collect coefficient of each others-monomial of total degree k
      std::map<Mono, QDense> ek;
      bool low_garbage = false;
      for (const auto& [m, c] : e.terms()) {
        int d = deg_others(m);
        if (d < k) { low_garbage = true; break; }
        if (d != k) continue;
        Mono mu = m;
        int ve = mu[v];
        mu[v] = 0;
        auto& slot = ek[mu];
        if (static_cast<int>(slot.size()) <= ve) slot.resize(ve + 1, Rat(0));
        slot[ve] += c;
      }
      if (low_garbage) break;  // lift broke; try the next partition
      if (ek.empty()) continue;
      for (int l = 0; l < L; ++l) {
        CPoly delta(R);
        for (auto& [mu, cv] : ek) {
          QDense cvt = qd_rem(qd_mul(cv, tinv[l]), mod[l]);
          if (cvt.empty()) continue;
          CPoly piece = qd_to(cvt, R, v);
          CPoly mono(R, Rat(1));
          for (int u : others)
            if (mu[u]) mono = mono * var_pow(R, u, mu[u]);
          delta = delta + piece * mono;
        }
        fl[l] = fl[l] + delta;
      }
    }
    if (!converged) continue;

    // unshift; the imposed leading coefficient leaves polynomial content
    // prod_{j!=l} lc(h_j) on each factor, removed as v-content
    std::vector<CPoly> parts;
    CPoly check(R, Rat(1));
    for (int l = 0; l < L; ++l) {
      CPoly back = fl[l];
      for (std::size_t i = 0; i < others.size(); ++i) {
        CPoly repl = var_pow(R, others[i], 1) - CPoly(R, point[i]);
        back = back.substitute(others[i], repl);
      }
      CPoly cont = content_in(back, v);
      auto stripped = try_divide(back, cont);
      if (!stripped) throw error("ez_factor: v-content division failed");
      CPoly pp = normalize_primitive(*stripped);
      check = check * pp;
      parts.push_back(std::move(pp));
    }
    auto unit = try_divide(g, check);
    if (!unit || !(*unit).is_constant())
      throw error("ez_factor: converged product does not divide input");
    if ((*unit).constant_term() != 1)
      throw error("ez_factor: primitive parts lost normalization");
    return parts;
  }
  throw incomplete_error("ez_factor: no partition converged");
}

// irreducible (multiplicity-free) factors of a squarefree primitive
// univariate polynomial
std::vector<CPoly> factor_univar_irreducibles(const CPoly& sq, int v) {
  ZDense f = zd_from(sq, v);
  std::vector<ZDense> zf = zassenhaus(f);
  std::vector<CPoly> out;
  out.reserve(zf.size());
  for (auto& z : zf) {
    if (z.back() < 0)
      for (auto& c : z) c = -c;
    out.push_back(zd_to(z, sq.ring(), v));
  }
  return out;
}

// g integer-primitive with positive leading coefficient, nonconstant
std::vector<std::pair<CPoly, int>> factor_primitive(const CPoly& g) {
  std::vector<std::pair<CPoly, int>> out;
  std::vector<int> used = g.used_vars();
  if (used.empty()) return out;

  // peel off content with respect to any variable (splits into smaller jobs)
  if (used.size() > 1) {
    for (int v : used) {
      CPoly cont = content_in(g, v);
      if (!cont.is_constant()) {
        auto q = try_divide(g, cont);
        if (!q) throw error("factor: content division failed");
        auto a = factor_primitive(normalize_primitive(cont));
        auto b = factor_primitive(normalize_primitive(*q));
        out = std::move(a);
        out.insert(out.end(), b.begin(), b.end());
        return out;
      }
    }
  }

  // main variable: smallest positive degree keeps the lift cheap
  int v = used[0];
  for (int u : used)
    if (g.deg_in(u) < g.deg_in(v)) v = u;

  CPoly sq = g;
  CPoly der = g.derivative(v);
  CPoly gg = poly_gcd(g, der);
  if (!gg.is_constant()) {
    auto q = try_divide(g, gg);
    if (!q) throw error("factor: squarefree division failed");
    sq = normalize_primitive(*q);
  }

  std::vector<CPoly> irred = used.size() == 1 ? factor_univar_irreducibles(sq, v)
                                              : ez_factor_squarefree(sq, v);

  for (const CPoly& q : irred) {
    int mult = 0;
    CPoly rest = g;
    while (true) {
      auto d = try_divide(rest, q);
      if (!d) break;
      rest = std::move(*d);
      ++mult;
    }
    if (mult == 0) throw error("factor: candidate does not divide input");
    out.emplace_back(q, mult);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<CPoly> try_divide(const CPoly& a, const CPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (!same_ring(a.ring(), b.ring())) throw ring_error("try_divide: mixed rings");
  CPoly q(a.ring());
  CPoly r = a;
  const Mono& lmb = b.lm();
  const Rat lcb = b.lc();
  while (!r.is_zero()) {
    if (!mono_divides(lmb, r.lm())) return std::nullopt;
    Mono m = mono_div(r.lm(), lmb);
    Rat c = r.lc() / lcb;
    CPoly t(a.ring());
    t.add_term(m, c);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

CPoly poly_gcd(const CPoly& a, const CPoly& b) {
  if (!same_ring(a.ring(), b.ring())) throw ring_error("poly_gcd: mixed rings");
  if (a.is_zero()) return b.is_zero() ? b : normalize_primitive(b);
  if (b.is_zero()) return normalize_primitive(a);
  if (a.is_constant() || b.is_constant()) return CPoly(a.ring(), Rat(1));

  CPoly pa = normalize_primitive(a), pb = normalize_primitive(b);

  // pick a variable used by at least one argument
  std::vector<int> ua = pa.used_vars(), ub = pb.used_vars();
  int v = ua.empty() ? ub[0] : ua[0];

  CPoly ca = content_in(pa, v), cb = content_in(pb, v);
  auto qa = try_divide(pa, ca), qb = try_divide(pb, cb);
  if (!qa || !qb) throw error("poly_gcd: content division failed");
  CPoly gc = poly_gcd(ca, cb);
  CPoly gp = prs_gcd(*qa, *qb, v);
  return normalize_primitive(gc * gp);
}

CPoly poly_gcd_many(const std::vector<CPoly>& ps, const RingPtr& ring) {
  CPoly g(ring);
  for (const CPoly& p : ps) {
    g = poly_gcd(g, p);
    if (g.is_constant() && !g.is_zero()) return CPoly(ring, Rat(1));
  }
  if (g.is_zero()) return g;
  return normalize_primitive(g);
}

CPoly FactorList::expand(const RingPtr& ring) const {
  CPoly out(ring, unit);
  for (const auto& [q, m] : factors) out = out * q.pow(m);
  return out;
}

FactorList factor(const CPoly& p) {
  if (p.is_zero()) throw domain_error("factor: zero polynomial");
  auto [unit, prim] = p.primitive_scaled();
  FactorList fl;
  fl.unit = unit;
  if (prim.is_constant()) {
    fl.unit *= prim.constant_term();
    return fl;
  }
  fl.factors = factor_primitive(prim);
  std::sort(fl.factors.begin(), fl.factors.end(),
            [](const auto& x, const auto& y) { return x.first.cmp(y.first) < 0; });
  return fl;
}

CPoly squarefree_part(const CPoly& p) {
  FactorList fl = factor(p);
  CPoly out(p.ring(), Rat(1));
  for (const auto& [q, m] : fl.factors) {
    (void)m;
    out = out * q;
  }
  return out;
}

std::vector<Rat> rational_roots(const CPoly& b) {
  if (b.is_zero()) throw domain_error("rational_roots: zero polynomial");
  std::vector<Rat> roots;
  if (b.is_constant()) return roots;
  FactorList fl = factor(b);
  for (const auto& [q, m] : fl.factors) {
    std::vector<int> uv = q.used_vars();
    if (uv.size() != 1 || q.deg() != 1)
      throw incomplete_error("rational_roots: non-rational root");
    int v = uv[0];
    QDense d = qd_from(q, v);
    Rat root = -d[0] / d[1];
    for (int i = 0; i < m; ++i) roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

bool poly_is_perfect_square(const CPoly& p, CPoly* root) {
  if (p.is_zero()) {
    if (root) *root = p;
    return true;
  }
  FactorList fl = factor(p);
  if (sgn(fl.unit) < 0) return false;
  Int num = fl.unit.get_num(), den = fl.unit.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return false;
  for (const auto& [q, m] : fl.factors) {
    (void)q;
    if (m % 2 != 0) return false;
  }
  if (root) {
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    CPoly out(p.ring(), make_rat(rn, rd));
    for (const auto& [q, m] : fl.factors) out = out * q.pow(m / 2);
    *root = out;
  }
  return true;
}

}  // namespace bsato
