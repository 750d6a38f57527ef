#include "bsato/order.hpp"

#include <algorithm>
#include <sstream>

#include "bsato/errors.hpp"

namespace bsato {

MonomialOrder::MonomialOrder(RingPtr ring, std::vector<std::vector<std::int64_t>> weight_rows,
                             std::vector<std::vector<int>> blocks)
    : ring_(std::move(ring)), weight_rows_(std::move(weight_rows)), blocks_(std::move(blocks)) {
  const std::size_t n = ring_->size();
  for (const auto& row : weight_rows_)
    if (row.size() != n) throw domain_error("weight row arity mismatch");
  std::vector<bool> seen(n, false);
  for (const auto& blk : blocks_)
    for (int v : blk) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
        throw domain_error("blocks must partition distinct variable indices");
      seen[v] = true;
    }
  std::vector<int> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) rest.push_back(static_cast<int>(i));
  if (!rest.empty()) blocks_.push_back(std::move(rest));
  block_of_.assign(n, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (int v : blocks_[b]) block_of_[v] = static_cast<int>(b);
}

MonomialOrder MonomialOrder::grevlex(RingPtr ring) {
  return MonomialOrder(std::move(ring), {}, {});
}

MonomialOrder MonomialOrder::elim(const RingPtr& ring,
                                  const std::vector<std::vector<std::string>>& name_blocks) {
  std::vector<std::vector<int>> blocks;
  for (const auto& names : name_blocks) {
    std::vector<int> blk;
    for (const auto& name : names) {
      int idx = ring->index_of(name);
      if (idx < 0) throw domain_error("elimination block names unknown variable '" + name + "'");
      blk.push_back(idx);
    }
    blocks.push_back(std::move(blk));
  }
  return MonomialOrder(ring, {}, std::move(blocks));
}

int MonomialOrder::cmp(const Mono& a, const Mono& b) const {
  for (const auto& row : weight_rows_) {
    std::int64_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      wa += row[i] * a[i];
      wb += row[i] * b[i];
    }
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (blocks_.size() > 1) {
    for (const auto& blk : blocks_) {
      int da = 0, db = 0;
      for (int v : blk) {
        da += a[v];
        db += b[v];
      }
      if (da != db) return da < db ? -1 : 1;
    }
  }
  return grevlex_cmp(a, b);
}

bool MonomialOrder::is_global() const {
  for (const auto& row : weight_rows_)
    for (std::int64_t w : row)
      if (w < 0) return false;
  return true;
}

std::string MonomialOrder::key() const {
  std::ostringstream os;
  os << "order[";
  for (const auto& row : weight_rows_) {
    os << "w(";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << ")";
  }
  for (const auto& blk : blocks_) {
    os << "b(";
    for (std::size_t i = 0; i < blk.size(); ++i)
      os << (i ? "," : "") << ring_->name(blk[i]);
    os << ")";
  }
  os << "]";
  return os.str();
}

}  // namespace bsato
