#pragma once

#include <cstdint>
#include <vector>

#include "sigf5/field.hpp"

namespace sigf5 {

// Row over a column basis: strictly increasing columns, nonzero values. The first entry is the leading one.
struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<Fp> vals;

  bool empty() const { return cols.empty(); }
  std::size_t size() const { return cols.size(); }
  std::uint32_t lead() const { return cols.front(); }
  Fp lead_value() const { return vals.front(); }
  void push_back(std::uint32_t c, Fp v) {
    cols.push_back(c);
    vals.push_back(v);
  }
  friend bool operator==(const SparseRow&, const SparseRow&) = default;
};

}  // namespace sigf5
