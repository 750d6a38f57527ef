#pragma once

#include <atomic>
#include <chrono>

#include "bsato/errors.hpp"

namespace bsato {

// Shared resource guard for --max-pairs / --max-seconds. One Budget is
// threaded through a whole run; engines charge it per S-pair considered.
// Thread-safe: stratify --jobs shares one budget across workers.
struct Budget {
  long max_pairs = -1;      // -1 means unlimited
  double max_seconds = -1;  // wall clock, -1 means unlimited
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::atomic<long> pairs_used{0};

  void charge_pair() {
    long used = ++pairs_used;
    if (max_pairs >= 0 && used > max_pairs)
      throw resource_error("pair budget exhausted (--max-pairs)");
    if (max_seconds >= 0) {
      auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
      if (dt.count() > max_seconds) throw resource_error("time budget exhausted (--max-seconds)");
    }
  }
};

struct GBStats {
  long spairs_considered = 0;
  long spairs_reduced = 0;
  long zero_reductions = 0;
  long basis_peak = 0;

  void absorb(const GBStats& o) {
    spairs_considered += o.spairs_considered;
    spairs_reduced += o.spairs_reduced;
    zero_reductions += o.zero_reductions;
    if (o.basis_peak > basis_peak) basis_peak = o.basis_peak;
  }
};

}  // namespace bsato
