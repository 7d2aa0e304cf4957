#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kothedim {

enum class IndexKind { Naturals, NaturalPairs };

/// One point of the index set; `second` is 0 for Naturals.
struct Index {
  std::int64_t first = 0;
  std::int64_t second = 0;
};

/*
 * A working truncation of the index set.  Naturals enumerates {1..N}.
 * NaturalPairs enumerates {1..N}x{1..N} by square shells: ordinal t lies in
 * shell s = ceil(sqrt(t)), so the first s^2 ordinals are exactly the
 * sub-square {1..s}x{1..s}.  Tail windows and sample truncations therefore
 * correspond to sub-squares, which is what the scan machinery needs.
 */
class IndexSet {
 public:
  IndexSet(IndexKind kind, std::int64_t truncation);

  IndexKind kind() const { return kind_; }
  std::int64_t truncation() const { return truncation_; }  // N (per side for pairs)
  std::int64_t count() const;                              // N or N^2

  Index at(std::int64_t ordinal) const;  // 1-based, throws std::out_of_range
  std::int64_t ordinal_of(Index idx) const;

  IndexSet truncated(std::int64_t n) const { return IndexSet(kind_, n); }
  std::int64_t prefix_count(std::int64_t sub_truncation) const;

  /// Sample truncations {N/8, N/4, N/2, N} (deduplicated, each >= 1).
  std::vector<std::int64_t> sample_truncations() const;

  bool operator==(const IndexSet&) const = default;

  std::string describe() const;

  static std::int64_t default_truncation(IndexKind kind);

 private:
  IndexKind kind_;
  std::int64_t truncation_;
};

}  // namespace kothedim
