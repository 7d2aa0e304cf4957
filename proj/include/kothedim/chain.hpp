#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "kothedim/weight.hpp"

namespace kothedim {

/*
 * Truncated element of lambda(P^{x n}): a finitely supported coefficient
 * vector over n-fold multi-indices.  All tuples of one chain share the same
 * arity; explicit zeros are never stored.  The complex position holding the
 * (n+1)-fold tensor power is always addressed by its tuple arity.
 */
class Chain {
 public:
  using Tuple = std::vector<std::int32_t>;
  using Coeff = std::complex<double>;

  explicit Chain(int arity);

  int arity() const { return arity_; }
  bool empty() const { return terms_.empty(); }
  const std::map<Tuple, Coeff>& terms() const { return terms_; }

  void add(const Tuple& tuple, Coeff coefficient);
  Coeff at(const Tuple& tuple) const;

  static Chain basis(const Tuple& tuple);
  /// diagonal basis tuple (i, ..., i) of the given arity.
  static Chain diagonal_basis(std::int32_t i, int arity);

 private:
  int arity_;
  std::map<Tuple, Coeff> terms_;
};

/// sum over tuples of |coefficient| * w_{i_1} ... w_{i_n}; `degree` must
/// equal the chain arity (shape error otherwise).
double tensor_seminorm(const Chain& c, const Weight& w, const IndexSet& idx, int degree);

}  // namespace kothedim
