#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace corrtest {

// Raised when a run would exceed an explicit resource limit (CLI exit 3).
struct ResourceRefusal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The shared-randomness sign matrix: n rows, 2^k columns of i.i.d.
// uniform {-1,+1} entries. Nothing is materialized; entry (i, j) is a
// pure function of (seed, j, i), so either party can regenerate exactly
// the one column it needs. Columns are produced in 64-entry packed words
// and dot products accumulate with branchless sign flips - the scan over
// columns is the runtime hot spot of every protocol execution.
class Codebook {
 public:
  // Scans longer than this refuse to run unless the caller passes an
  // explicit cap (see find_first_hit).
  static constexpr std::uint64_t kRefusalThreshold = 1ULL << 40;

  Codebook(std::uint64_t seed, int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t seed() const { return seed_; }

  // Number of columns, saturated at 2^63 for k >= 63.
  std::uint64_t num_columns() const;

  // Sum_i U_{ij} x(i) for the 1-based column index j.
  double column_dot(std::uint64_t j, std::span<const double> x) const;

  // Least 1-based j <= min(2^k, scan_cap) with column_dot(j, x) >= threshold.
  // scan_cap = 0 means "no explicit cap": the full 2^k scan, refused if
  // 2^k exceeds kRefusalThreshold.
  std::optional<std::uint64_t> find_first_hit(std::span<const double> x,
                                              double threshold,
                                              std::uint64_t scan_cap = 0) const;

  // Entry U_{ij} in {-1,+1}; 0-based row i, 1-based column j. Test and
  // oracle access path.
  int sign_entry(int i, std::uint64_t j) const;

 private:
  std::uint64_t packed_word(std::uint64_t j, int word_index) const;

  std::uint64_t seed_;
  int n_;
  int k_;
};

}  // namespace corrtest
