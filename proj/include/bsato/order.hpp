#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsato/ring.hpp"

namespace bsato {

// Term order: weight rows compared lexicographically, then total degree per
// elimination block (earlier blocks more significant), then global grevlex.
// Blocks partition the variable index set; variables not mentioned form a
// final implicit block.
class MonomialOrder {
 public:
  MonomialOrder(RingPtr ring, std::vector<std::vector<std::int64_t>> weight_rows,
                std::vector<std::vector<int>> blocks);

  static MonomialOrder grevlex(RingPtr ring);
  // Earlier name-groups are eliminated first; remaining vars form a last block.
  static MonomialOrder elim(const RingPtr& ring,
                            const std::vector<std::vector<std::string>>& name_blocks);

  int cmp(const Mono& a, const Mono& b) const;
  bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }
  bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }

  // true when 1 is the unique minimal monomial (all weight entries >= 0),
  // making Buchberger terminate unconditionally.
  bool is_global() const;

  const RingPtr& ring() const { return ring_; }
  const std::vector<std::vector<std::int64_t>>& weight_rows() const { return weight_rows_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  // index of the block containing each variable.
  int block_of(int var) const { return block_of_[var]; }
  std::string key() const;  // canonical description, for caching

 private:
  RingPtr ring_;
  std::vector<std::vector<std::int64_t>> weight_rows_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

}  // namespace bsato
