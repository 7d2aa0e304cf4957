#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kothedim/index_set.hpp"
#include "kothedim/weight.hpp"

namespace kothedim {

enum class FamilyKind {
  SingleWeight,
  FiniteSupportFamily,  // k-th weight is the indicator of the first k ordinals
  PowerSeries,          // k-th weight r_k^{alpha_n} on a canonical grid r_k -> R
  MatrixExample,        // k-th weight is the matrix-example rule at k
  Explicit,
  DerivedProduct,
  DerivedPower,
  DerivedBar
};

/// Power-series structure of a family after unwinding powers/products:
/// the k-th generator satisfies ln p^{(k)}_n = multiplier * alpha_n * ln r_k.
struct PowerSeriesShape {
  double radius = 0.0;  // R, +inf allowed
  AlphaRule alpha;
  double multiplier = 1.0;
};

/*
 * A countable directed family of weights with a named generator kind.
 * Generators are pointwise nondecreasing in k, so the k-th vs k-th pairing
 * of two families over the same index set is always meaningful.  Explicit
 * lists are checked for directedness on construction; the closed-form kinds
 * are directed by construction (the tests re-verify this by scan).
 *
 * Power-series grids: r_k = R*k/(k+1) for finite R, r_k = k for R = inf.
 */
class KotheSet {
 public:
  static KotheSet single_weight(Weight w, IndexSet idx);
  static KotheSet finite_support_family(IndexSet idx);
  static KotheSet power_series(double radius, AlphaRule alpha, IndexSet idx);
  static KotheSet matrix_example(IndexSet idx);
  static KotheSet explicit_family(std::vector<Weight> weights, IndexSet idx);

  FamilyKind kind() const;
  const IndexSet& index_set() const;

  /// k-th generator weight (1-based).  Explicit lists clamp k beyond the
  /// list to the last weight (constant cofinal tail).
  Weight generator(std::int64_t k) const;
  double generator_log_at(std::int64_t k, std::int64_t ordinal) const;

  /// number of distinct listed generators (Explicit), 0 = unbounded.
  std::int64_t listed_generators() const;

  std::string describe() const;
  KotheSet with_label(std::string label) const;
  const std::string& label() const;

  /// grid documentation for reports; empty when no power-series grid is involved.
  std::string grid_note() const;

  double power_series_ratio(std::int64_t k) const;  // grid point r_k
  std::optional<PowerSeriesShape> power_series_shape() const;

  // analytic family facts (nullopt = not decidable without a scan)
  std::optional<bool> all_weights_at_least_one() const;
  std::optional<bool> weights_nondecreasing_in_index() const;

  // truncation scans, used by the tests and by Explicit validation
  bool directed_scan(std::int64_t max_k) const;
  bool positivity_scan(std::int64_t max_k) const;  // (P1) on the truncation
  bool nondecreasing_scan(std::int64_t max_k) const;

  // structure access for the derived kinds
  KotheSet base() const;
  KotheSet second_base() const;
  double power_exponent() const;
  double power_series_radius() const;
  const AlphaRule& power_series_alpha() const;
  const Weight& single_weight_rule() const;

  friend KotheSet product_set(const KotheSet& a, const KotheSet& b);
  friend KotheSet power_set(const KotheSet& a, double exponent);
  friend KotheSet bar_set(const KotheSet& a);

 private:
  struct Impl;
  explicit KotheSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static KotheSet wrap(Impl impl);
  std::shared_ptr<const Impl> impl_;
};

KotheSet product_set(const KotheSet& a, const KotheSet& b);
KotheSet power_set(const KotheSet& a, double exponent);
KotheSet bar_set(const KotheSet& a);

}  // namespace kothedim
