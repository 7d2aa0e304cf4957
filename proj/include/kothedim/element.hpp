#pragma once

#include <complex>
#include <cstdint>
#include <map>

#include "kothedim/weight.hpp"

namespace kothedim {

/// Finitely supported vector with complex coefficients, keyed by index
/// ordinal.  Exact zeros are never stored.
class Element {
 public:
  using Coeff = std::complex<double>;

  Element() = default;

  static Element basis(std::int64_t ordinal);

  void set(std::int64_t ordinal, Coeff value);
  Coeff at(std::int64_t ordinal) const;

  const std::map<std::int64_t, Coeff>& coefficients() const { return coeffs_; }
  std::size_t support_size() const { return coeffs_.size(); }

  Element& operator+=(const Element& other);
  Element& operator*=(Coeff scalar);
  friend Element operator+(Element a, const Element& b) { return a += b; }

  /// pointwise (Hadamard) product.
  friend Element pointwise_product(const Element& a, const Element& b);

 private:
  std::map<std::int64_t, Coeff> coeffs_;
};

/// ||x||_p = sum_i |x_i| p_i, compensated summation after leaving log domain.
double seminorm_l1(const Element& x, const Weight& w, const IndexSet& idx);

/// ||x||_p^sup = sup_i |x_i| p_i over the support.
double seminorm_sup(const Element& x, const Weight& w, const IndexSet& idx);

}  // namespace kothedim
