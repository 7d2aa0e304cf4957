#include "kothedim/index_set.hpp"

#include <cmath>
#include <stdexcept>

namespace kothedim {

IndexSet::IndexSet(IndexKind kind, std::int64_t truncation)
    : kind_(kind), truncation_(truncation) {
  if (truncation < 1) throw std::invalid_argument("index set truncation must be >= 1");
}

std::int64_t IndexSet::count() const {
  return kind_ == IndexKind::Naturals ? truncation_ : truncation_ * truncation_;
}

Index IndexSet::at(std::int64_t ordinal) const {
  if (ordinal < 1 || ordinal > count())
    throw std::out_of_range("index ordinal " + std::to_string(ordinal) +
                            " outside truncation (count " + std::to_string(count()) + ")");
  if (kind_ == IndexKind::Naturals) return Index{ordinal, 0};
  // shell s = smallest s with s^2 >= ordinal
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(ordinal - 1)));
  while (s * s < ordinal) ++s;
  std::int64_t offset = ordinal - (s - 1) * (s - 1);  // 1 .. 2s-1
  if (offset <= s) return Index{offset, s};
  return Index{s, 2 * s - offset};
}

std::int64_t IndexSet::ordinal_of(Index idx) const {
  if (kind_ == IndexKind::Naturals) {
    if (idx.first < 1 || idx.first > truncation_)
      throw std::out_of_range("index outside truncation");
    return idx.first;
  }
  if (idx.first < 1 || idx.second < 1 || idx.first > truncation_ || idx.second > truncation_)
    throw std::out_of_range("index pair outside truncation");
  std::int64_t s = std::max(idx.first, idx.second);
  std::int64_t offset = (idx.second == s) ? idx.first : 2 * s - idx.second;
  return (s - 1) * (s - 1) + offset;
}

std::int64_t IndexSet::prefix_count(std::int64_t sub_truncation) const {
  if (sub_truncation < 1 || sub_truncation > truncation_)
    throw std::out_of_range("sub-truncation outside truncation");
  return kind_ == IndexKind::Naturals ? sub_truncation : sub_truncation * sub_truncation;
}

std::vector<std::int64_t> IndexSet::sample_truncations() const {
  std::vector<std::int64_t> out;
  for (std::int64_t div : {8, 4, 2, 1}) {
    std::int64_t n = truncation_ / div;
    if (n < 1) n = 1;
    if (out.empty() || out.back() != n) out.push_back(n);
  }
  return out;
}

std::string IndexSet::describe() const {
  if (kind_ == IndexKind::Naturals)
    return "naturals(N=" + std::to_string(truncation_) + ")";
  return "natural_pairs(N=" + std::to_string(truncation_) + " per side)";
}

std::int64_t IndexSet::default_truncation(IndexKind kind) {
  return kind == IndexKind::Naturals ? 4096 : 64;
}

}  // namespace kothedim
