#include "kothedim/kothe_set.hpp"

#include <cmath>
#include <stdexcept>

#include "kothedim/util.hpp"

namespace kothedim {

struct KotheSet::Impl {
  FamilyKind kind;
  IndexSet index_set{IndexKind::Naturals, 1};
  std::string label;

  std::optional<Weight> base_weight;  // SingleWeight
  double radius = 0.0;                // PowerSeries
  AlphaRule alpha;                    // PowerSeries
  std::vector<Weight> list;           // Explicit
  double exponent = 1.0;              // DerivedPower

  std::shared_ptr<const Impl> left, right;  // Derived
};

KotheSet KotheSet::wrap(Impl impl) {
  return KotheSet(std::make_shared<const Impl>(std::move(impl)));
}

KotheSet KotheSet::single_weight(Weight w, IndexSet idx) {
  Impl impl;
  impl.kind = FamilyKind::SingleWeight;
  impl.index_set = idx;
  impl.base_weight = std::move(w);
  return wrap(std::move(impl));
}

KotheSet KotheSet::finite_support_family(IndexSet idx) {
  Impl impl;
  impl.kind = FamilyKind::FiniteSupportFamily;
  impl.index_set = idx;
  return wrap(std::move(impl));
}

KotheSet KotheSet::power_series(double radius, AlphaRule alpha, IndexSet idx) {
  if (!(radius > 0.0)) throw std::invalid_argument("power-series radius must be > 0");
  if (idx.kind() != IndexKind::Naturals)
    throw std::invalid_argument("power-series families live on naturals");
  Impl impl;
  impl.kind = FamilyKind::PowerSeries;
  impl.index_set = idx;
  impl.radius = radius;
  impl.alpha = std::move(alpha);
  return wrap(std::move(impl));
}

KotheSet KotheSet::matrix_example(IndexSet idx) {
  if (idx.kind() != IndexKind::NaturalPairs)
    throw std::invalid_argument("the matrix-example family lives on pairs");
  Impl impl;
  impl.kind = FamilyKind::MatrixExample;
  impl.index_set = idx;
  return wrap(std::move(impl));
}

KotheSet KotheSet::explicit_family(std::vector<Weight> weights, IndexSet idx) {
  if (weights.empty()) throw std::invalid_argument("explicit family needs at least one weight");
  Impl impl;
  impl.kind = FamilyKind::Explicit;
  impl.index_set = idx;
  impl.list = std::move(weights);
  KotheSet set = wrap(std::move(impl));
  auto n = static_cast<std::int64_t>(set.impl_->list.size());
  if (!set.directed_scan(n))
    throw std::invalid_argument("explicit family is not directed on the truncation");
  if (!set.positivity_scan(n))
    throw std::invalid_argument(
        "explicit family has an index where every listed weight vanishes");
  return set;
}

FamilyKind KotheSet::kind() const { return impl_->kind; }
const IndexSet& KotheSet::index_set() const { return impl_->index_set; }
std::int64_t KotheSet::listed_generators() const {
  return impl_->kind == FamilyKind::Explicit ? static_cast<std::int64_t>(impl_->list.size())
                                             : 0;
}

double KotheSet::power_series_ratio(std::int64_t k) const {
  if (impl_->kind != FamilyKind::PowerSeries)
    throw std::logic_error("not a power-series family");
  if (k < 1) throw std::invalid_argument("generator index is 1-based");
  double dk = static_cast<double>(k);
  if (std::isinf(impl_->radius)) return dk;
  return impl_->radius * dk / (dk + 1.0);
}

Weight KotheSet::generator(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("generator index is 1-based");
  switch (impl_->kind) {
    case FamilyKind::SingleWeight:
      return *impl_->base_weight;
    case FamilyKind::FiniteSupportFamily:
      return Weight::prefix_indicator(k);
    case FamilyKind::PowerSeries:
      return Weight::geometric(power_series_ratio(k), impl_->alpha);
    case FamilyKind::MatrixExample:
      return Weight::matrix_example(k);
    case FamilyKind::Explicit: {
      auto n = static_cast<std::int64_t>(impl_->list.size());
      return impl_->list[static_cast<std::size_t>(std::min(k, n) - 1)];
    }
    case FamilyKind::DerivedProduct:
      return Weight::product(base().generator(k), second_base().generator(k));
    case FamilyKind::DerivedPower:
      return Weight::power(base().generator(k), impl_->exponent);
    case FamilyKind::DerivedBar:
      return Weight::bar(base().generator(k));
  }
  throw std::logic_error("unreachable family kind");
}

double KotheSet::generator_log_at(std::int64_t k, std::int64_t ordinal) const {
  return generator(k).log_at(impl_->index_set, ordinal);
}

KotheSet KotheSet::base() const {
  if (!impl_->left) throw std::logic_error("family has no base");
  return KotheSet(impl_->left);
}

KotheSet KotheSet::second_base() const {
  if (!impl_->right) throw std::logic_error("family has no second base");
  return KotheSet(impl_->right);
}

double KotheSet::power_exponent() const {
  if (impl_->kind != FamilyKind::DerivedPower) throw std::logic_error("not a power family");
  return impl_->exponent;
}

double KotheSet::power_series_radius() const {
  if (impl_->kind != FamilyKind::PowerSeries) throw std::logic_error("not a power-series family");
  return impl_->radius;
}

const AlphaRule& KotheSet::power_series_alpha() const {
  if (impl_->kind != FamilyKind::PowerSeries) throw std::logic_error("not a power-series family");
  return impl_->alpha;
}

const Weight& KotheSet::single_weight_rule() const {
  if (impl_->kind != FamilyKind::SingleWeight) throw std::logic_error("not a single-weight family");
  return *impl_->base_weight;
}

std::string KotheSet::describe() const {
  if (!impl_->label.empty()) return impl_->label;
  switch (impl_->kind) {
    case FamilyKind::SingleWeight:
      return "single_weight(" + impl_->base_weight->describe() + ")";
    case FamilyKind::FiniteSupportFamily:
      return "finite_support_family";
    case FamilyKind::PowerSeries: {
      std::string r = std::isinf(impl_->radius) ? "inf" : std::to_string(impl_->radius);
      return "power_series(R=" + r + ", alpha=" + impl_->alpha.describe() + ")";
    }
    case FamilyKind::MatrixExample:
      return "matrix_example";
    case FamilyKind::Explicit:
      return "explicit[" + std::to_string(impl_->list.size()) + "]";
    case FamilyKind::DerivedProduct:
      return "product(" + base().describe() + ", " + second_base().describe() + ")";
    case FamilyKind::DerivedPower:
      return "power(" + base().describe() + ", " + std::to_string(impl_->exponent) + ")";
    case FamilyKind::DerivedBar:
      return "bar(" + base().describe() + ")";
  }
  return "?";
}

KotheSet KotheSet::with_label(std::string label) const {
  Impl impl = *impl_;
  impl.label = std::move(label);
  return wrap(std::move(impl));
}

const std::string& KotheSet::label() const { return impl_->label; }

std::string KotheSet::grid_note() const {
  switch (impl_->kind) {
    case FamilyKind::PowerSeries:
      if (std::isinf(impl_->radius)) return "power-series grid r_k = k (R = inf)";
      return "power-series grid r_k = R k/(k+1)";
    case FamilyKind::DerivedProduct: {
      std::string a = base().grid_note();
      return a.empty() ? second_base().grid_note() : a;
    }
    case FamilyKind::DerivedPower:
    case FamilyKind::DerivedBar:
      return base().grid_note();
    default:
      return "";
  }
}

std::optional<PowerSeriesShape> KotheSet::power_series_shape() const {
  switch (impl_->kind) {
    case FamilyKind::PowerSeries:
      return PowerSeriesShape{impl_->radius, impl_->alpha, 1.0};
    case FamilyKind::DerivedPower: {
      auto inner = base().power_series_shape();
      if (!inner) return std::nullopt;
      inner->multiplier *= impl_->exponent;
      return inner;
    }
    case FamilyKind::DerivedProduct: {
      auto a = base().power_series_shape();
      auto b = second_base().power_series_shape();
      if (!a || !b) return std::nullopt;
      if (a->radius != b->radius || !a->alpha.same_as(b->alpha)) return std::nullopt;
      a->multiplier += b->multiplier;
      return a;
    }
    default:
      return std::nullopt;
  }
}

std::optional<bool> KotheSet::all_weights_at_least_one() const {
  switch (impl_->kind) {
    case FamilyKind::SingleWeight: {
      const Weight& w = *impl_->base_weight;
      if (auto c = w.as_constant()) return *c >= 1.0;
      if (auto k = w.as_power_law()) return *k >= 0.0;
      if (auto g = w.as_geometric()) {
        if (g->first >= 1.0) return true;
        if (g->second.symbolic()) return false;  // alpha_n > 0 eventually
        return std::nullopt;
      }
      if (w.is_finite_support()) return false;
      return std::nullopt;
    }
    case FamilyKind::FiniteSupportFamily:
      return false;
    case FamilyKind::PowerSeries: {
      if (std::isinf(impl_->radius)) return true;  // r_1 = 1
      if (impl_->radius >= 2.0) return true;       // r_1 = R/2 >= 1
      if (impl_->alpha.symbolic()) return false;
      return std::nullopt;
    }
    case FamilyKind::MatrixExample:
      return true;
    case FamilyKind::Explicit:
      return std::nullopt;
    case FamilyKind::DerivedProduct: {
      auto a = base().all_weights_at_least_one();
      auto b = second_base().all_weights_at_least_one();
      if (a && b && *a && *b) return true;
      return std::nullopt;
    }
    case FamilyKind::DerivedPower: {
      auto a = base().all_weights_at_least_one();
      if (a && *a) return true;
      if (a && !*a) return std::nullopt;  // p^e can cross 1 either way? no: p<1 => p^e<1
      return std::nullopt;
    }
    case FamilyKind::DerivedBar: {
      auto a = base().all_weights_at_least_one();
      if (!a) return std::nullopt;
      return *a;  // bar is 1 where p >= 1, equals p < 1 otherwise
    }
  }
  return std::nullopt;
}

std::optional<bool> KotheSet::weights_nondecreasing_in_index() const {
  if (impl_->index_set.kind() != IndexKind::Naturals) return std::nullopt;
  switch (impl_->kind) {
    case FamilyKind::SingleWeight: {
      const Weight& w = *impl_->base_weight;
      if (w.as_constant()) return true;
      if (auto k = w.as_power_law()) return *k >= 0.0;
      if (auto g = w.as_geometric()) {
        if (!g->second.symbolic()) return std::nullopt;
        if (g->first >= 1.0) return true;   // nondecreasing alpha, ratio >= 1
        return false;                       // ratio < 1 decays along alpha
      }
      if (w.is_finite_support()) return false;
      return std::nullopt;
    }
    case FamilyKind::FiniteSupportFamily:
      return false;  // indicators drop back to 0
    case FamilyKind::PowerSeries: {
      auto ge1 = all_weights_at_least_one();
      if (!impl_->alpha.symbolic()) return std::nullopt;
      if (ge1 && *ge1) return true;
      return false;  // some grid ratio below 1
    }
    case FamilyKind::Explicit:
      return std::nullopt;
    case FamilyKind::MatrixExample:
      return std::nullopt;  // pairs; not applicable
    case FamilyKind::DerivedProduct: {
      auto a = base().weights_nondecreasing_in_index();
      auto b = second_base().weights_nondecreasing_in_index();
      if (a && b && *a && *b) return true;
      return std::nullopt;
    }
    case FamilyKind::DerivedPower: {
      auto a = base().weights_nondecreasing_in_index();
      if (a && *a) return true;
      return std::nullopt;
    }
    case FamilyKind::DerivedBar: {
      auto a = base().weights_nondecreasing_in_index();
      if (a && *a) return true;  // min(.,1) preserves monotonicity
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool KotheSet::directed_scan(std::int64_t max_k) const {
  const IndexSet& idx = impl_->index_set;
  for (std::int64_t k = 1; k < max_k; ++k) {
    Weight a = generator(k);
    Weight b = generator(k + 1);
    for (std::int64_t t = 1; t <= idx.count(); ++t)
      if (a.log_at(idx, t) > b.log_at(idx, t)) return false;
  }
  return true;
}

bool KotheSet::positivity_scan(std::int64_t max_k) const {
  const IndexSet& idx = impl_->index_set;
  // directedness makes the last probed generator the largest
  Weight top = generator(max_k);
  for (std::int64_t t = 1; t <= idx.count(); ++t)
    if (is_log_zero(top.log_at(idx, t))) return false;
  return true;
}

bool KotheSet::nondecreasing_scan(std::int64_t max_k) const {
  const IndexSet& idx = impl_->index_set;
  if (idx.kind() != IndexKind::Naturals) return false;
  for (std::int64_t k = 1; k <= max_k; ++k) {
    Weight w = generator(k);
    double prev = w.log_at(idx, 1);
    for (std::int64_t t = 2; t <= idx.count(); ++t) {
      double cur = w.log_at(idx, t);
      if (cur < prev) return false;
      prev = cur;
    }
  }
  return true;
}

KotheSet product_set(const KotheSet& a, const KotheSet& b) {
  if (!(a.index_set() == b.index_set()))
    throw std::invalid_argument("product of families over different index sets");
  KotheSet::Impl impl;
  impl.kind = FamilyKind::DerivedProduct;
  impl.index_set = a.index_set();
  impl.left = a.impl_;
  impl.right = b.impl_;
  return KotheSet::wrap(std::move(impl));
}

KotheSet power_set(const KotheSet& a, double exponent) {
  if (!(exponent > 0.0)) throw std::invalid_argument("family power needs exponent > 0");
  KotheSet::Impl impl;
  impl.kind = FamilyKind::DerivedPower;
  impl.index_set = a.index_set();
  impl.exponent = exponent;
  impl.left = a.impl_;
  return KotheSet::wrap(std::move(impl));
}

KotheSet bar_set(const KotheSet& a) {
  KotheSet::Impl impl;
  impl.kind = FamilyKind::DerivedBar;
  impl.index_set = a.index_set();
  impl.left = a.impl_;
  return KotheSet::wrap(std::move(impl));
}

}  // namespace kothedim
