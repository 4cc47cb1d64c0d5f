#pragma once

#include <cstddef>
#include <map>

#include "coulomb/rational.hpp"

namespace coulomb {

// Incremental exact row reduction over the rationals. Rows are sparse
// index -> coefficient maps; the basis keeps one echelon row per pivot.
class SpanBasis {
 public:
  using Row = std::map<std::size_t, Rat>;

  // Reduces the row against the basis; returns true (and stores the
  // remainder) when it increases the dimension.
  bool insert(Row row) {
    for (;;) {
      while (!row.empty() && row.begin()->second == 0) row.erase(row.begin());
      if (row.empty()) return false;
      auto it = rows_.find(row.begin()->first);
      if (it == rows_.end()) break;
      // Eliminate the leading entry using the stored (monic) pivot row.
      Rat lead = row.begin()->second;
      for (const auto& [idx, c] : it->second) {
        Rat& slot = row[idx];
        slot -= lead * c;
        if (slot == 0) row.erase(idx);
      }
    }
    Rat lead = row.begin()->second;
    for (auto& [idx, c] : row) c /= lead;
    std::size_t pivot = row.begin()->first;
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  std::size_t dim() const { return rows_.size(); }

  // Echelon rows keyed by pivot; they span the inserted space.
  const std::map<std::size_t, Row>& rows() const { return rows_; }

 private:
  std::map<std::size_t, Row> rows_;
};

}  // namespace coulomb
