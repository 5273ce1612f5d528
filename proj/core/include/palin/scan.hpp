#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace palin {

/// Closed integer interval [first, last].
struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

struct ScanRow {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t darga = 0;
  bool palindromic = false;
  bool unimodal = false;
  bool lambda = false;
  std::optional<std::size_t> first_violation_index;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

/// Evaluates f_{n,r} for a single grid cell.
ScanRow scan_almkvist_cell(std::size_t n, std::size_t r);

/// One row per (n, r) in the grid, ordered by (r, n). Cells are evaluated on
/// up to `threads` workers (0 = hardware concurrency); the result does not
/// depend on the thread count.
std::vector<ScanRow> scan_almkvist(IndexRange n_range, IndexRange r_range, unsigned threads = 0);

}  // namespace palin
