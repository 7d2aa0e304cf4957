#include "kothedim/element.hpp"

#include <cmath>

#include "kothedim/util.hpp"

namespace kothedim {

Element Element::basis(std::int64_t ordinal) {
  Element e;
  e.set(ordinal, 1.0);
  return e;
}

void Element::set(std::int64_t ordinal, Coeff value) {
  if (value == Coeff{}) {
    coeffs_.erase(ordinal);
  } else {
    coeffs_[ordinal] = value;
  }
}

Element::Coeff Element::at(std::int64_t ordinal) const {
  auto it = coeffs_.find(ordinal);
  return it == coeffs_.end() ? Coeff{} : it->second;
}

Element& Element::operator+=(const Element& other) {
  for (auto& [ord, v] : other.coeffs_) set(ord, at(ord) + v);
  return *this;
}

Element& Element::operator*=(Coeff scalar) {
  if (scalar == Coeff{}) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [ord, v] : coeffs_) v *= scalar;
  return *this;
}

Element pointwise_product(const Element& a, const Element& b) {
  Element out;
  for (auto& [ord, v] : a.coefficients()) {
    auto w = b.at(ord);
    if (w != Element::Coeff{}) out.set(ord, v * w);
  }
  return out;
}

double seminorm_l1(const Element& x, const Weight& w, const IndexSet& idx) {
  KahanSum sum;
  for (auto& [ord, v] : x.coefficients()) {
    double ln_w = w.log_at(idx, ord);
    if (is_log_zero(ln_w)) continue;
    sum.add(std::abs(v) * std::exp(ln_w));
  }
  return sum.value();
}

double seminorm_sup(const Element& x, const Weight& w, const IndexSet& idx) {
  double best = 0.0;
  for (auto& [ord, v] : x.coefficients()) {
    double ln_w = w.log_at(idx, ord);
    if (is_log_zero(ln_w)) continue;
    best = std::max(best, std::abs(v) * std::exp(ln_w));
  }
  return best;
}

}  // namespace kothedim
