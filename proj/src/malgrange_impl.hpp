#pragma once

// Internal: the homogenized Malgrange algebra shared by the plain and the
// parametric pipelines. Ring layout x1..xn, dx1..dxn, t, dt, y1, y2 [, params]
// with pairs (xi,dxi), (t,dt); y1, y2 and the parameters are central. ds is
// the landing algebra x1..xn, dx1..dxn, s [, params].

#include <algorithm>
#include <string>
#include <vector>

#include "bsato/errors.hpp"
#include "bsato/weyl.hpp"

namespace bsato::detail {

struct MalgrangeRig {
  AlgebraSignature big;
  AlgebraSignature ds;
  std::size_t n = 0;       // number of coordinate variables x1..xn
  std::vector<int> to_ds;  // big var index -> ds var index (-1 for t,dt,y1,y2)
  int t = -1, dt = -1, y1 = -1, y2 = -1;  // indices in big
  int s = -1;                             // index in ds
  std::string sname;
};

inline std::string pick_name(std::vector<std::string>& taken, const std::string& base) {
  auto used = [&](const std::string& n) {
    return std::find(taken.begin(), taken.end(), n) != taken.end();
  };
  std::string n = base;
  for (int k = 0; used(n); ++k) n = base + "_" + std::to_string(k);
  taken.push_back(n);
  return n;
}

inline MalgrangeRig make_malgrange_rig(const RingPtr& X, const std::vector<std::string>& params) {
  std::size_t n = X->size();
  std::vector<std::string> taken;
  for (std::size_t i = 0; i < n; ++i) taken.push_back(X->name(i));
  for (const auto& p : params) taken.push_back(p);
  std::vector<std::string> dnames;
  for (std::size_t i = 0; i < n; ++i) dnames.push_back(pick_name(taken, "d" + X->name(i)));
  std::string tn = pick_name(taken, "t");
  std::string dtn = pick_name(taken, "dt");
  std::string y1n = pick_name(taken, "y1");
  std::string y2n = pick_name(taken, "y2");
  std::string sn = pick_name(taken, "s");

  std::vector<std::string> big_names, ds_names;
  std::vector<std::pair<std::string, std::string>> big_pairs, ds_pairs;
  for (std::size_t i = 0; i < n; ++i) big_names.push_back(X->name(i));
  for (std::size_t i = 0; i < n; ++i) big_names.push_back(dnames[i]);
  big_names.insert(big_names.end(), {tn, dtn, y1n, y2n});
  ds_names = {big_names.begin(), big_names.begin() + static_cast<long>(2 * n)};
  ds_names.push_back(sn);
  for (const auto& p : params) {
    big_names.push_back(p);
    ds_names.push_back(p);
  }
  for (std::size_t i = 0; i < n; ++i) big_pairs.push_back({X->name(i), dnames[i]});
  ds_pairs = big_pairs;
  big_pairs.push_back({tn, dtn});

  MalgrangeRig M;
  M.n = n;
  M.big = AlgebraSignature::make(Ring::make(big_names), big_pairs);
  M.ds = AlgebraSignature::make(Ring::make(ds_names), ds_pairs);
  M.t = M.big.ring->index_of(tn);
  M.dt = M.big.ring->index_of(dtn);
  M.y1 = M.big.ring->index_of(y1n);
  M.y2 = M.big.ring->index_of(y2n);
  M.s = M.ds.ring->index_of(sn);
  M.sname = sn;
  M.to_ds.assign(M.big.ring->size(), -1);
  for (std::size_t v = 0; v < M.big.ring->size(); ++v) {
    int i = static_cast<int>(v);
    if (i == M.t || i == M.dt || i == M.y1 || i == M.y2) continue;
    M.to_ds[v] = M.ds.ring->index_of(M.big.ring->name(v));
  }
  return M;
}

// weight degree under w(t)=1, w(dt)=-1 (everything else 0); the grading is
// compatible with the commutation relations, so GB elements stay homogeneous.
inline int weight_degree(const MalgrangeRig& M, const WeylElem& g) {
  bool first = true;
  int d = 0;
  for (const auto& [m, c] : g.terms()) {
    int e = m[M.t] - m[M.dt];
    if (first) {
      d = e;
      first = false;
    } else if (e != d) {
      throw error("ann_fs: eliminated element lost weight homogeneity");
    }
  }
  return d;
}

// balanced t^k dt^k |-> prod_{j=1..k} (-s-j), under the convention s = -dt*t
inline WeylElem s_rewrite(const MalgrangeRig& M, const WeylElem& g) {
  std::vector<WeylElem> sfact{WeylElem(M.ds, Rat(1))};
  auto sfactor = [&](int k) -> const WeylElem& {
    while (static_cast<int>(sfact.size()) <= k) {
      int j = static_cast<int>(sfact.size());
      WeylElem lin(M.ds);
      Mono sm = mono_one(M.ds.ring->size());
      sm[M.s] = 1;
      lin.add_term(sm, Rat(-1));
      lin.add_term(mono_one(M.ds.ring->size()), Rat(-j));
      sfact.push_back(weyl_mul(sfact.back(), lin));
    }
    return sfact[k];
  };
  WeylElem out(M.ds);
  for (const auto& [m, c] : g.terms()) {
    int k = m[M.t];
    if (m[M.dt] != k) throw error("ann_fs: unbalanced term after weight fix");
    Mono nm = mono_one(M.ds.ring->size());
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0 || M.to_ds[v] < 0) continue;
      nm[M.to_ds[v]] = m[v];
    }
    out += weyl_mul(WeylElem::monomial(M.ds, nm, c), sfactor(k));
  }
  return out;
}

// homogenized Malgrange generators {t - f y1} u {dx_i + (df/dx_i) dt y1} u
// {1 - y1 y2}; f may use coordinates and parameters (x derivatives only).
inline std::vector<WeylElem> malgrange_gens(const MalgrangeRig& M, const CPoly& f) {
  const RingPtr& B = M.big.ring;
  CPoly fB = f.rename_into(B);
  WeylElem y1v = WeylElem::variable(M.big, B->name(M.y1));
  WeylElem y2v = WeylElem::variable(M.big, B->name(M.y2));
  WeylElem dtv = WeylElem::variable(M.big, B->name(M.dt));
  WeylElem fb = WeylElem::from_cpoly(M.big, fB);

  std::vector<WeylElem> gens;
  gens.push_back(WeylElem::variable(M.big, B->name(M.t)) - weyl_mul(fb, y1v));
  for (std::size_t i = 0; i < M.n; ++i) {
    WeylElem fi = WeylElem::from_cpoly(M.big, fB.derivative(static_cast<int>(i)));
    gens.push_back(WeylElem::variable(M.big, B->name(M.n + i)) +
                   weyl_mul(weyl_mul(fi, dtv), y1v));
  }
  gens.push_back(WeylElem(M.big, Rat(1)) - weyl_mul(y1v, y2v));
  return gens;
}

// weight-fix a y-free element to balanced (t,dt) powers by a left multiple
inline WeylElem weight_fix(const MalgrangeRig& M, const WeylElem& g) {
  int d = weight_degree(M, g);
  const RingPtr& B = M.big.ring;
  if (d > 0) return weyl_mul(weyl_pow(WeylElem::variable(M.big, B->name(M.dt)), d), g);
  if (d < 0) return weyl_mul(weyl_pow(WeylElem::variable(M.big, B->name(M.t)), -d), g);
  return g;
}

}  // namespace bsato::detail
