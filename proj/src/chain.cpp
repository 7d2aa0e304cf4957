#include "kothedim/chain.hpp"

#include <cmath>
#include <stdexcept>

#include "kothedim/util.hpp"

namespace kothedim {

Chain::Chain(int arity) : arity_(arity) {
  if (arity < 1) throw std::invalid_argument("chain arity must be >= 1");
}

void Chain::add(const Tuple& tuple, Coeff coefficient) {
  if (static_cast<int>(tuple.size()) != arity_)
    throw std::invalid_argument("tuple arity mismatch");
  for (auto entry : tuple)
    if (entry < 1) throw std::out_of_range("multi-index entries are 1-based");
  auto it = terms_.find(tuple);
  Coeff next = (it == terms_.end() ? Coeff{} : it->second) + coefficient;
  if (next == Coeff{}) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[tuple] = next;
  }
}

Chain::Coeff Chain::at(const Tuple& tuple) const {
  auto it = terms_.find(tuple);
  return it == terms_.end() ? Coeff{} : it->second;
}

Chain Chain::basis(const Tuple& tuple) {
  Chain c(static_cast<int>(tuple.size()));
  c.add(tuple, 1.0);
  return c;
}

Chain Chain::diagonal_basis(std::int32_t i, int arity) {
  return basis(Tuple(static_cast<std::size_t>(arity), i));
}

double tensor_seminorm(const Chain& c, const Weight& w, const IndexSet& idx, int degree) {
  if (degree != c.arity())
    throw std::invalid_argument("tensor seminorm degree " + std::to_string(degree) +
                                " does not match chain arity " + std::to_string(c.arity()));
  KahanSum sum;
  for (auto& [tuple, coeff] : c.terms()) {
    double ln = 0.0;
    for (auto entry : tuple) ln = log_product(ln, w.log_at(idx, entry));
    if (is_log_zero(ln)) continue;
    sum.add(std::abs(coeff) * std::exp(ln));
  }
  return sum.value();
}

}  // namespace kothedim
