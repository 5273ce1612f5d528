#include "palin/scan.hpp"

#include "palin/families.hpp"
#include "palin/positivity.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace palin {

ScanRow scan_almkvist_cell(std::size_t n, std::size_t r) {
  const Polynomial f = almkvist(n, r);
  ScanRow row;
  row.n = n;
  row.r = r;
  row.darga = darga(f);
  row.palindromic = is_palindromic(f, (r - 1) * n * (n + 1) / 2);
  row.first_violation_index = first_unimodality_violation(f);
  row.unimodal = !row.first_violation_index.has_value();
  row.lambda = row.palindromic && lambda_test(f, row.darga).lambda;
  return row;
}

std::vector<ScanRow> scan_almkvist(IndexRange n_range, IndexRange r_range, unsigned threads) {
  if (n_range.first > n_range.last || r_range.first > r_range.last) throw DomainError("scan ranges must be nonempty");
  if (r_range.first == 0) throw DomainError("almkvist needs r >= 1");

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = r_range.first; r <= r_range.last; ++r)
    for (std::size_t n = n_range.first; n <= n_range.last; ++n) cells.emplace_back(n, r);

  std::vector<ScanRow> rows(cells.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      try {
        rows[i] = scan_almkvist_cell(cells[i].first, cells[i].second);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
    return a.r != b.r ? a.r < b.r : a.n < b.n;
  });
  return rows;
}

}  // namespace palin
