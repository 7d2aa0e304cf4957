#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kothedim/index_set.hpp"

namespace kothedim {

enum class AlphaKind { LogN, Linear, SqrtLogN, ExplicitList };

/// Exponent sequence alpha_n for geometric weights r^{alpha_n}.
struct AlphaRule {
  AlphaKind kind = AlphaKind::LogN;
  std::shared_ptr<const std::vector<double>> table;  // ExplicitList only

  static AlphaRule log_n() { return {AlphaKind::LogN, nullptr}; }
  static AlphaRule linear() { return {AlphaKind::Linear, nullptr}; }
  static AlphaRule sqrt_log_n() { return {AlphaKind::SqrtLogN, nullptr}; }
  static AlphaRule explicit_list(std::vector<double> values);

  double at(std::int64_t n) const;
  bool symbolic() const { return kind != AlphaKind::ExplicitList; }
  bool same_as(const AlphaRule& other) const;
  std::string describe() const;
};

/*
 * A weight is an evaluable rule index -> nonnegative real, stored and
 * composed in log domain.  Values never leave log domain except where a
 * plain sum is genuinely required (l^1-type seminorms, partial-sum tests);
 * the matrix-example rule reaches ~1e231 in log domain alone.
 */
class Weight {
 public:
  enum class Rule {
    Constant,       // p_i = c
    PowerLaw,       // p_i = i^k            (Naturals)
    Geometric,      // p_i = r^{alpha_i}    (Naturals)
    FiniteSupport,  // sparse (ordinal -> value), 0 elsewhere
    MatrixExample,  // p_{ij}^{(k)} = 2^{(kj)^i}(i+j)^k for i<=k, (i+j)^k for i>k
    Product,
    Power,  // p^a, a > 0
    Bar     // min(p, 1)
  };

  static Weight constant(double value);
  static Weight power_law(double exponent);
  static Weight geometric(double ratio, AlphaRule alpha);
  /// values given in plain domain; converted to log on construction.
  static Weight finite_support(std::vector<std::pair<std::int64_t, double>> values);
  /// indicator of the first k ordinals (value 1), 0 beyond.
  static Weight prefix_indicator(std::int64_t k);
  static Weight matrix_example(std::int64_t k);
  static Weight product(Weight a, Weight b);
  static Weight power(Weight base, double exponent);
  static Weight bar(Weight base);

  Rule rule() const;

  /// ln p_i (kLogZero for p_i = 0); throws std::out_of_range beyond the truncation.
  double log_at(const IndexSet& idx, std::int64_t ordinal) const;
  /// exp(log_at); may overflow to +inf for the matrix rule, use log_at in scans.
  double at(const IndexSet& idx, std::int64_t ordinal) const;

  std::string describe() const;

  // structural inspectors used by the closed-form deciders
  std::optional<double> as_constant() const;
  std::optional<double> as_power_law() const;
  std::optional<std::pair<double, AlphaRule>> as_geometric() const;
  bool is_finite_support() const;
  /// smallest positive stored value of a finite-support weight, if any.
  std::optional<double> finite_support_min_positive() const;

 private:
  struct Node;
  explicit Weight(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Weight wrap(Node node);
  static double eval_node(const Node& node, const IndexSet& idx, std::int64_t ordinal);
  std::shared_ptr<const Node> node_;
};

}  // namespace kothedim
