#pragma once

#include <cstdint>

namespace entsym {

/// Enumeration caps. Combinatorial blowup fails loudly with BudgetExceeded
/// instead of hanging.
struct Budget {
  std::int64_t max_partitions = 2'000'000;
  /// Type classes (clone-1) or (type matrix, diagonal type) pairs (clone-2).
  std::int64_t max_type_entries = 2'000'000;
  /// Largest d^(2n) Hilbert dimension a dense oracle may build.
  std::int64_t dense_cap = 4096;
  /// Largest local dimension accepted by the clone-2 enumeration.
  int clone2_max_d = 2;
  /// Worker threads for parallel loops; 0 means hardware concurrency.
  int threads = 1;
};

}  // namespace entsym
