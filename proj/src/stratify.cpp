#include "bsato/stratify.hpp"

#include "bsato/dmod.hpp"
#include "bsato/errors.hpp"
#include "bsato/minimal_primes.hpp"
#include "bsato/weyl_gb.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

namespace bsato {

namespace {

GBOptions with_budget(Budget* budget) {
  GBOptions opt;
  opt.budget = budget;
  return opt;
}

CommIdeal normalized(const CommIdeal& I, Budget* budget) {
  return make_ideal(I.ring, groebner(I, MonomialOrder::grevlex(I.ring), with_budget(budget)));
}

// Coefficient polynomials of f grouped by x-monomial, as elements of C.
std::vector<CPoly> coefficient_polys(const CPoly& f, const RingPtr& C) {
  const RingPtr& big = f.ring();
  std::vector<int> to_C(big->size(), -1);
  for (size_t i = 0; i < big->size(); ++i) {
    int j = C->index_of(big->name(i));
    if (j >= 0) to_C[i] = j;
  }
  std::map<std::vector<unsigned>, CPoly> groups;
  for (auto& [m, c] : f.terms()) {
    std::vector<unsigned> xpart(big->size(), 0);
    Mono pm = mono_one(C->size());
    for (size_t i = 0; i < big->size(); ++i) {
      if (to_C[i] >= 0)
        pm[to_C[i]] = m[i];
      else
        xpart[i] = m[i];
    }
    auto it = groups.find(xpart);
    if (it == groups.end()) it = groups.emplace(xpart, CPoly(C)).first;
    it->second.add_term(pm, c);
  }
  std::vector<CPoly> out;
  for (auto& [k, p] : groups)
    if (!p.is_zero()) out.push_back(p);
  return out;
}

bool f_vanishes_mod(const std::vector<CPoly>& coeffs, const CommIdeal& Q, Budget* budget) {
  for (auto& c : coeffs)
    if (!in_ideal(c, Q, with_budget(budget))) return false;
  return true;
}

std::string b_key(const CPoly& b) { return b.str(); }

struct AnnRecord {
  std::vector<WeylElem> gens;
  LocallyClosed piece;
  CommIdeal Q;
};

struct BspCtx {
  CPoly f;
  RingPtr C;
  bool projective = true;
  bool ann = false;
  Budget* budget = nullptr;
  int jobs = 1;
  std::vector<CPoly> fcoeffs;
  std::vector<int> coord_idx;

  std::mutex memo_mx;
  std::set<std::string> visited;
  std::mutex out_mx;
  std::map<std::string, Stratum> strata;
  std::vector<AnnRecord> ann_records;
  AlgebraSignature ann_sig;
  std::string ann_s_name;
  bool ann_sig_set = false;

  std::mutex pending_mx;
  std::set<std::string> pending;  // primes discovered but not yet expanded
  std::atomic<int> in_flight{1};
  std::atomic<int> max_depth{0};
};

std::string gens_string(const CommIdeal& I) {
  std::ostringstream os;
  for (size_t i = 0; i < I.gens.size(); ++i) {
    if (i) os << ", ";
    os << I.gens[i].str();
  }
  return os.str();
}

void bsp_node(BspCtx& ctx, const CommIdeal& Q, int depth);

void expand_children(BspCtx& ctx, const std::vector<CommIdeal>& primes, int depth) {
  std::vector<std::future<void>> futs;
  std::vector<const CommIdeal*> mine;
  for (auto& Qi : primes) {
    if (ctx.jobs > 1 && ctx.in_flight.load() < ctx.jobs) {
      ctx.in_flight++;
      futs.push_back(std::async(std::launch::async, [&ctx, &Qi, depth] {
        bsp_node(ctx, Qi, depth);
        ctx.in_flight--;
      }));
    } else {
      mine.push_back(&Qi);
    }
  }
  std::exception_ptr first;
  for (auto* Qi : mine) {
    try {
      bsp_node(ctx, *Qi, depth);
    } catch (...) {
      if (!first) first = std::current_exception();
    }
  }
  for (auto& fu : futs) {
    try {
      fu.get();
    } catch (...) {
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

void bsp_node(BspCtx& ctx, const CommIdeal& Q, int depth) {
  {
    std::lock_guard<std::mutex> lk(ctx.pending_mx);
    ctx.pending.erase(gens_string(Q));
  }
  std::string key = ideal_key(Q, with_budget(ctx.budget));
  {
    std::lock_guard<std::mutex> lk(ctx.memo_mx);
    if (!ctx.visited.insert(key).second) return;
  }
  int seen = ctx.max_depth.load();
  while (depth > seen && !ctx.max_depth.compare_exchange_weak(seen, depth)) {
  }

  static const bool trace = std::getenv("BSATO_TRACE") != nullptr;
  auto t0 = std::chrono::steady_clock::now();
  auto trace_ms = [&] {
    return (long long)std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };
  if (trace) std::fprintf(stderr, "[bsp d=%d] enter V(%s)\n", depth, gens_string(Q).c_str());

  struct Reinsert {  // a node killed mid-step goes back to the unexplored queue
    BspCtx& ctx;
    const CommIdeal& Q;
    bool armed = true;
    ~Reinsert() {
      if (!armed) return;
      std::lock_guard<std::mutex> lk(ctx.pending_mx);
      ctx.pending.insert(gens_string(Q));
    }
  } reinsert{ctx, Q};

  CPoly h(ctx.C);
  if (ctx.ann) {
    AnnStepResult r = ann_step(ctx.f, ctx.C, Q.gens, ctx.budget);
    h = r.h;
    CommIdeal inner = make_ideal(ctx.C, {r.h});
    LocallyClosed piece = make_piece(Q, inner);
    std::lock_guard<std::mutex> lk(ctx.out_mx);
    if (!ctx.ann_sig_set) {
      ctx.ann_sig = r.sig;
      ctx.ann_s_name = r.s_name;
      ctx.ann_sig_set = true;
    }
    ctx.ann_records.push_back({std::move(r.gens), std::move(piece), Q});
  } else {
    StepResult r = bsp_step(ctx.f, ctx.C, Q.gens, ctx.budget);
    h = r.h;
    CommIdeal inner = make_ideal(ctx.C, {r.h});
    LocallyClosed piece = make_piece(Q, inner);
    std::lock_guard<std::mutex> lk(ctx.out_mx);
    auto it = ctx.strata.find(b_key(r.b));
    if (it == ctx.strata.end()) {
      Stratum st;
      st.b = r.b;
      st.region.pieces.push_back(std::move(piece));
      ctx.strata.emplace(b_key(r.b), std::move(st));
    } else {
      it->second.region.pieces.push_back(std::move(piece));
    }
  }
  if (trace)
    std::fprintf(stderr, "[bsp d=%d] step done in %lld ms, h=%s\n", depth, trace_ms(),
                 h.str().c_str());
  if (h.is_constant()) {
    reinsert.armed = false;
    return;  // no fence: V(Q) fully classified
  }

  std::vector<CPoly> igens = Q.gens;
  igens.push_back(h);
  std::vector<CommIdeal> primes =
      minimal_primes(make_ideal(ctx.C, std::move(igens)), ctx.budget);
  if (trace)
    std::fprintf(stderr, "[bsp d=%d] %zu minimal primes in %lld ms\n", depth, primes.size(),
                 trace_ms());

  std::vector<CommIdeal> next;
  for (auto& P : primes) {
    CommIdeal Qi = normalized(P, ctx.budget);
    // Strict growth keeps the recursion well-founded.
    bool grows = false;
    for (auto& g : Qi.gens)
      if (!in_ideal(g, Q, with_budget(ctx.budget))) grows = true;
    if (!grows) throw error("stratify: recursion failed to leave the current prime");
    if (ctx.projective) {
      if (is_empty_projective(Qi, ctx.coord_idx, with_budget(ctx.budget))) continue;
    } else {
      if (contains_one(Qi, with_budget(ctx.budget))) continue;
      if (f_vanishes_mod(ctx.fcoeffs, Qi, ctx.budget)) continue;
    }
    next.push_back(std::move(Qi));
  }
  {
    std::lock_guard<std::mutex> lk(ctx.pending_mx);
    for (auto& Qi : next) ctx.pending.insert(gens_string(Qi));
  }
  expand_children(ctx, next, depth + 1);
}

Rat coeff_of_power(const CPoly& p, int k) {
  Mono m = mono_one(p.ring()->size());
  m[0] = (unsigned)k;
  return p.coeff(m);
}

bool b_less(const CPoly& a, const CPoly& b) {
  int da = a.deg(), db = b.deg();
  if (da != db) return da < db;
  for (int k = 0; k <= da; ++k) {
    Rat ca = coeff_of_power(a, k), cb = coeff_of_power(b, k);
    if (!(ca == cb)) return ca < cb;
  }
  return false;
}

std::string piece_key(const LocallyClosed& p) {
  return gens_string(p.outer) + " \\ " + gens_string(p.inner);
}

void sort_region(Constructible& region) {
  std::sort(region.pieces.begin(), region.pieces.end(),
            [](const LocallyClosed& x, const LocallyClosed& y) {
              return piece_key(x) < piece_key(y);
            });
  region.pieces.erase(std::unique(region.pieces.begin(), region.pieces.end(),
                                  [](const LocallyClosed& x, const LocallyClosed& y) {
                                    return piece_key(x) == piece_key(y);
                                  }),
                      region.pieces.end());
}

Database finalize(BspCtx& ctx, bool canonical_chains, Budget* budget) {
  Database db;
  db.kind = ctx.ann ? "ann" : "bsp";
  db.projective = ctx.projective;
  db.C = ctx.C;
  db.f = ctx.f;
  if (ctx.ann) {
    db.sig = ctx.ann_sig;
    db.s_name = ctx.ann_s_name;
    for (auto& rec : ctx.ann_records) {
      AnnStratum st;
      st.gens = rec.gens;
      st.region.pieces.push_back(rec.piece);
      db.ann_strata.push_back(std::move(st));
    }
    std::sort(db.ann_strata.begin(), db.ann_strata.end(),
              [](const AnnStratum& x, const AnnStratum& y) {
                return piece_key(x.region.pieces.front()) < piece_key(y.region.pieces.front());
              });
  } else {
    for (auto& [k, st] : ctx.strata) db.strata.push_back(st);
    std::sort(db.strata.begin(), db.strata.end(),
              [](const Stratum& x, const Stratum& y) { return b_less(x.b, y.b); });
    for (auto& st : db.strata) {
      sort_region(st.region);
      if (canonical_chains) {
        Constructible canon = canonicalize(st.region, budget);
        st.region.chain = std::move(canon.chain);
        st.region.has_chain = true;
      }
    }
  }
  db.meta["engine"] = "bsato 1.0";
  db.meta["max_depth"] = std::to_string(ctx.max_depth.load());
  return db;
}

void fill_abort(BspCtx& ctx, StratifyAbort* abort_info, int n, int d) {
  if (!abort_info) return;
  abort_info->aborted = true;
  abort_info->partial = finalize(ctx, false, nullptr);
  abort_info->partial.n = n;
  abort_info->partial.d = d;
  abort_info->partial.meta["partial"] = "true";
  std::lock_guard<std::mutex> lk(ctx.pending_mx);
  abort_info->pending_primes.assign(ctx.pending.begin(), ctx.pending.end());
}

Database run_bsp(BspCtx& ctx, int n, int d, Budget* budget, StratifyAbort* abort_info) {
  ctx.fcoeffs = coefficient_polys(ctx.f, ctx.C);
  for (size_t i = 0; i < ctx.C->size(); ++i) ctx.coord_idx.push_back((int)i);
  CommIdeal root = make_ideal(ctx.C, {});
  try {
    bsp_node(ctx, root, 0);
    Database db = finalize(ctx, true, budget);
    db.n = n;
    db.d = d;
    return db;
  } catch (const resource_error&) {
    // also reached when the budget blows during chain canonicalization
    fill_abort(ctx, abort_info, n, d);
    throw;
  }
}

}  // namespace

std::vector<std::string> coefficient_names(int n, int d) {
  if (n < 1) throw domain_error("coefficient_names: need at least one variable");
  if (d < 0 || d > 9) throw domain_error("coefficient_names: degree must be between 0 and 9");
  std::vector<std::vector<int>> tuples;
  std::vector<int> cur(n, 0);
  // enumerate exponent tuples with total degree <= d in ascending lex order
  while (true) {
    int total = 0;
    for (int e : cur) total += e;
    if (total <= d) tuples.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == d) cur[i--] = 0;
    if (i < 0) break;
    cur[i]++;
  }
  std::sort(tuples.begin(), tuples.end());
  std::vector<std::string> names;
  for (auto& t : tuples) {
    std::string s = "a";
    for (int e : t) s += char('0' + e);
    names.push_back(s);
  }
  return names;
}

CPoly generic_poly(int n, int d) {
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<std::string> coeffs = coefficient_names(n, d);
  std::vector<std::string> all = vars;
  all.insert(all.end(), coeffs.begin(), coeffs.end());
  RingPtr big = Ring::make(all);
  CPoly f(big);
  for (auto& name : coeffs) {
    Mono m = mono_one(big->size());
    for (int i = 0; i < n; ++i) m[i] = (unsigned)(name[1 + i] - '0');
    m[big->index_of(name)] = 1;
    f.add_term(m, Rat(1));
  }
  return f;
}

Database stratify_bsp(int n, int d, Budget* budget, int jobs, StratifyAbort* abort_info) {
  BspCtx ctx;
  ctx.f = generic_poly(n, d);
  ctx.C = Ring::make(coefficient_names(n, d));
  ctx.projective = true;
  ctx.ann = false;
  ctx.budget = budget;
  ctx.jobs = jobs;
  return run_bsp(ctx, n, d, budget, abort_info);
}

Database stratify_bsp_family(const CPoly& f_template, const RingPtr& C, Budget* budget, int jobs,
                             StratifyAbort* abort_info) {
  for (size_t i = 0; i < C->size(); ++i)
    if (f_template.ring()->index_of(C->name(i)) < 0)
      throw ring_error("stratify_bsp_family: parameter " + C->name(i) +
                       " does not appear in the template's ring");
  BspCtx ctx;
  ctx.f = f_template;
  ctx.C = C;
  ctx.projective = false;
  ctx.ann = false;
  ctx.budget = budget;
  ctx.jobs = jobs;
  int n = 0, d = 0;
  const RingPtr& big = f_template.ring();
  for (size_t i = 0; i < big->size(); ++i)
    if (C->index_of(big->name(i)) < 0) n++;
  d = f_template.deg();
  Database db = run_bsp(ctx, n, d, budget, abort_info);
  db.meta["family"] = f_template.str();
  return db;
}

Database stratify_ann(int n, int d, Budget* budget, int jobs, StratifyAbort* abort_info) {
  BspCtx ctx;
  ctx.f = generic_poly(n, d);
  ctx.C = Ring::make(coefficient_names(n, d));
  ctx.projective = true;
  ctx.ann = true;
  ctx.budget = budget;
  ctx.jobs = jobs;
  return run_bsp(ctx, n, d, budget, abort_info);
}

namespace {

// Memoized GB of (gens of stratum i) + Q*R in the [x,dx,s,params] algebra.
struct CompressCache {
  const std::vector<AnnStratum>* strata;
  AlgebraSignature sig;
  Budget* budget;
  std::map<std::string, std::vector<WeylElem>> memo;  // key: i "#" ideal_key(Q)

  const std::vector<WeylElem>& gb_mod(size_t i, const CommIdeal& Q) {
    std::string key = std::to_string(i) + "#" + ideal_key(Q, with_budget(budget));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<WeylElem> gens = (*strata)[i].gens;
    for (auto& q : Q.gens) gens.push_back(WeylElem::from_cpoly(sig, q.rename_into(sig.ring)));
    WeylGBOptions opt;
    opt.budget = budget;
    auto basis = weyl_groebner(gens, MonomialOrder::grevlex(sig.ring), opt).basis;
    return memo.emplace(key, std::move(basis)).first->second;
  }

  bool reduces_to_zero(const std::vector<WeylElem>& gens, const std::vector<WeylElem>& basis) {
    MonomialOrder ord = MonomialOrder::grevlex(sig.ring);
    for (auto& g : gens)
      if (!weyl_normal_form(g, basis, ord).is_zero()) return false;
    return true;
  }

  // sigma_P(I_i) = sigma_P(I_j) for every P in V(Q): both generating sets
  // reduce to zero against the other's GB modulo Q*R.
  bool same_on(size_t i, size_t j, const CommIdeal& Q) {
    return reduces_to_zero((*strata)[i].gens, gb_mod(j, Q)) &&
           reduces_to_zero((*strata)[j].gens, gb_mod(i, Q));
  }
};

std::string gens_key(const std::vector<WeylElem>& gens) {
  std::ostringstream os;
  for (auto& g : gens) os << g.str() << ";";
  return os.str();
}

}  // namespace

Database compress_ann(const Database& db, Budget* budget) {
  if (db.kind != "ann") throw domain_error("compress_ann: database kind must be ann");
  Database out = db;
  auto& strata = out.ann_strata;

  CompressCache cache{&strata, db.sig, budget, {}};
  std::vector<bool> dead(strata.size(), false);

  // Exact-duplicate generators merge without any reduction work.
  std::map<std::string, size_t> by_gens;
  for (size_t i = 0; i < strata.size(); ++i) {
    std::string k = gens_key(strata[i].gens);
    auto it = by_gens.find(k);
    if (it == by_gens.end()) {
      by_gens.emplace(std::move(k), i);
      continue;
    }
    auto& rep = strata[it->second];
    for (auto& p : strata[i].region.pieces) rep.region.pieces.push_back(std::move(p));
    dead[i] = true;
  }

  // Absorb stratum j into the first i whose ideal specializes identically on
  // every piece of V_j (symbolic reduction modulo the piece's closure prime).
  for (size_t j = 0; j < strata.size(); ++j) {
    if (dead[j]) continue;
    for (size_t i = 0; i < strata.size(); ++i) {
      if (i == j || dead[i]) continue;
      bool all_match = !strata[j].region.pieces.empty();
      for (auto& piece : strata[j].region.pieces) {
        if (!cache.same_on(i, j, piece.outer)) {
          all_match = false;
          break;
        }
      }
      if (!all_match) continue;
      for (auto& piece : strata[j].region.pieces)
        strata[i].region.pieces.push_back(std::move(piece));
      dead[j] = true;
      break;
    }
  }

  std::vector<AnnStratum> kept;
  for (size_t i = 0; i < strata.size(); ++i)
    if (!dead[i]) kept.push_back(std::move(strata[i]));
  strata = std::move(kept);

  for (auto& st : strata) sort_region(st.region);
  std::sort(strata.begin(), strata.end(), [](const AnnStratum& x, const AnnStratum& y) {
    return piece_key(x.region.pieces.front()) < piece_key(y.region.pieces.front());
  });
  out.meta["compressed"] = "true";
  return out;
}

CPoly lookup(const CPoly& f, const Database& db) {
  if (db.kind != "bsp") throw domain_error("lookup: database kind must be bsp");
  if (!db.projective)
    throw domain_error("lookup: requires a full coefficient-space database, not a family");
  if (f.is_zero()) throw domain_error("zero polynomial has no Bernstein-Sato polynomial");
  if (f.deg() > db.d)
    throw domain_error("lookup: polynomial degree exceeds the database degree bound");

  // Map f's variables (sorted by name) onto x1..xn.
  std::vector<int> used = f.used_vars();
  if ((int)used.size() > db.n)
    throw domain_error("lookup: polynomial uses more variables than the database dimension");
  std::vector<std::string> names;
  for (int v : used) names.push_back(f.ring()->name(v));
  std::sort(names.begin(), names.end());

  std::vector<Rat> point(db.C->size(), Rat(0));
  for (auto& [m, c] : f.terms()) {
    std::string key = "a";
    std::vector<int> exps(db.n, 0);
    for (size_t i = 0; i < names.size(); ++i) exps[i] = m[f.ring()->index_of(names[i])];
    for (int e : exps) key += char('0' + e);
    int idx = db.C->index_of(key);
    if (idx < 0) throw domain_error("lookup: monomial exceeds the database degree bound");
    point[idx] = c;
  }

  const Stratum* hit = nullptr;
  for (auto& st : db.strata) {
    if (!contains(st.region, point)) continue;
    if (hit)
      throw incomplete_error("database-overlap: point lies in strata of " + hit->b.str() +
                             " and " + st.b.str());
    hit = &st;
  }
  if (!hit) throw incomplete_error("database-incomplete: no stratum contains the polynomial");
  return hit->b;
}

int t_of(const Database& db) {
  if (db.kind != "bsp") throw domain_error("t_of: database kind must be bsp");
  int t = 0;
  for (auto& st : db.strata) {
    for (auto& r : bs_roots(st.b)) {
      if (r < 0 && r.get_den() == 1) {
        long v = -r.get_num().get_si();
        if (v > t) t = (int)v;
      }
    }
  }
  return t;
}

}  // namespace bsato
