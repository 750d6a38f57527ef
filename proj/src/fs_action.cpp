#include "bsato/fs_action.hpp"

#include "bsato/errors.hpp"
#include "bsato/factor.hpp"

namespace bsato {

RingPtr fs_ring(const AlgebraSignature& sig) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < sig.ring->size(); ++v)
    if (!sig.is_derivation(static_cast<int>(v))) names.push_back(sig.ring->name(v));
  return Ring::make(names);
}

namespace {

// align a to the exponent drop M >= a.m (num picks up f^(M - a.m))
void align(FsState& a, int M, const CPoly& f) {
  for (; a.m < M; ++a.m) a.num *= f;
}

}  // namespace

FsState fs_apply(const WeylElem& P, const CPoly& f, const FsState& st) {
  RingPtr R = fs_ring(P.sig());
  CPoly fe = f.rename_into(R);
  CPoly s_lin = CPoly::variable(R, "s");
  FsState base{st.num.rename_into(R), st.m};

  FsState acc{CPoly(R), 0};
  const RingPtr& big = P.sig().ring;
  for (const auto& [mono, coeff] : P.terms()) {
    FsState cur = base;
    Mono mult = mono_one(R->size());
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if (P.sig().is_derivation(static_cast<int>(v))) {
        int x = R->index_of(big->name(P.sig().mate(static_cast<int>(v))));
        if (x < 0) throw ring_error("fs_apply: derivation without position in fs ring");
        for (int rep = 0; rep < mono[v]; ++rep) {
          CPoly sm = s_lin - CPoly(R, Rat(cur.m));
          cur.num = fe * cur.num.derivative(x) + sm * cur.num * fe.derivative(x);
          ++cur.m;
        }
      } else {
        mult[R->index_of(big->name(v))] = mono[v];
      }
    }
    cur.num *= CPoly::monomial(R, mult, coeff);
    int M = std::max(acc.m, cur.m);
    align(acc, M, fe);
    align(cur, M, fe);
    acc.num += cur.num;
  }
  return acc;
}

FsState fs_reduce(const CPoly& f, FsState st) {
  if (st.num.is_zero()) return {st.num, 0};
  CPoly fe = f.rename_into(st.num.ring());
  while (st.m > 0) {
    auto q = try_divide(st.num, fe);
    if (!q) break;
    st.num = *q;
    --st.m;
  }
  return st;
}

bool fs_equal(const CPoly& f, const FsState& a, const FsState& b) {
  CPoly fe = f.rename_into(a.num.ring());
  FsState x = a, y{b.num.rename_into(a.num.ring()), b.m};
  int M = std::max(x.m, y.m);
  align(x, M, fe);
  align(y, M, fe);
  return x.num == y.num;
}

}  // namespace bsato
