#include "kothedim/weight.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "kothedim/util.hpp"

namespace kothedim {

AlphaRule AlphaRule::explicit_list(std::vector<double> values) {
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("alpha sequence entries must be finite and >= 0");
  return {AlphaKind::ExplicitList,
          std::make_shared<const std::vector<double>>(std::move(values))};
}

double AlphaRule::at(std::int64_t n) const {
  switch (kind) {
    case AlphaKind::LogN:
      return std::log(static_cast<double>(n));
    case AlphaKind::Linear:
      return static_cast<double>(n);
    case AlphaKind::SqrtLogN:
      return std::sqrt(std::log(static_cast<double>(n)));
    case AlphaKind::ExplicitList:
      if (!table || n < 1 || n > static_cast<std::int64_t>(table->size()))
        throw std::out_of_range("alpha table has no entry for n=" + std::to_string(n));
      return (*table)[static_cast<std::size_t>(n - 1)];
  }
  throw std::logic_error("unreachable alpha kind");
}

bool AlphaRule::same_as(const AlphaRule& other) const {
  if (kind != other.kind) return false;
  if (kind != AlphaKind::ExplicitList) return true;
  if (table == other.table) return true;
  return table && other.table && *table == *other.table;
}

std::string AlphaRule::describe() const {
  switch (kind) {
    case AlphaKind::LogN:
      return "log_n";
    case AlphaKind::Linear:
      return "linear";
    case AlphaKind::SqrtLogN:
      return "sqrt_log_n";
    case AlphaKind::ExplicitList:
      return "explicit[" + std::to_string(table ? table->size() : 0) + "]";
  }
  return "?";
}

struct Weight::Node {
  Rule rule;
  double value = 0.0;   // Constant: ln c; PowerLaw: exponent; Geometric: ln r;
                        // Power: exponent; MatrixExample: k
  AlphaRule alpha;      // Geometric
  std::map<std::int64_t, double> support;  // FiniteSupport: ordinal -> ln value
  std::shared_ptr<const Node> left, right;
};

Weight Weight::wrap(Node n) {
  return Weight(std::make_shared<const Node>(std::move(n)));
}

Weight Weight::constant(double value) {
  if (!(value >= 0.0) || !std::isfinite(value))
    throw std::invalid_argument("weight values must be finite and >= 0");
  Node n;
  n.rule = Rule::Constant;
  n.value = value == 0.0 ? kLogZero : std::log(value);
  return wrap(std::move(n));
}

Weight Weight::power_law(double exponent) {
  Node n;
  n.rule = Rule::PowerLaw;
  n.value = exponent;
  return wrap(std::move(n));
}

Weight Weight::geometric(double ratio, AlphaRule alpha) {
  if (!(ratio >= 0.0) || !std::isfinite(ratio))
    throw std::invalid_argument("geometric ratio must be finite and >= 0");
  Node n;
  n.rule = Rule::Geometric;
  n.value = ratio == 0.0 ? kLogZero : std::log(ratio);
  n.alpha = std::move(alpha);
  return wrap(std::move(n));
}

Weight Weight::finite_support(std::vector<std::pair<std::int64_t, double>> values) {
  Node n;
  n.rule = Rule::FiniteSupport;
  for (auto& [ordinal, v] : values) {
    if (ordinal < 1) throw std::invalid_argument("finite-support ordinals are 1-based");
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("weight values must be finite and >= 0");
    if (v > 0.0) n.support[ordinal] = std::log(v);
  }
  return wrap(std::move(n));
}

Weight Weight::prefix_indicator(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("prefix indicator needs k >= 1");
  Node n;
  n.rule = Rule::FiniteSupport;
  for (std::int64_t t = 1; t <= k; ++t) n.support[t] = 0.0;  // ln 1
  return wrap(std::move(n));
}

Weight Weight::matrix_example(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("matrix example generator index is 1-based");
  Node n;
  n.rule = Rule::MatrixExample;
  n.value = static_cast<double>(k);
  return wrap(std::move(n));
}

Weight Weight::product(Weight a, Weight b) {
  Node n;
  n.rule = Rule::Product;
  n.left = a.node_;
  n.right = b.node_;
  return wrap(std::move(n));
}

Weight Weight::power(Weight base, double exponent) {
  if (!(exponent > 0.0)) throw std::invalid_argument("weight power needs exponent > 0");
  Node n;
  n.rule = Rule::Power;
  n.value = exponent;
  n.left = base.node_;
  return wrap(std::move(n));
}

Weight Weight::bar(Weight base) {
  Node n;
  n.rule = Rule::Bar;
  n.left = base.node_;
  return wrap(std::move(n));
}

Weight::Rule Weight::rule() const { return node_->rule; }

namespace {

double matrix_example_log(double k, Index ij) {
  double i = static_cast<double>(ij.first);
  double j = static_cast<double>(ij.second);
  double tail = k * std::log(i + j);
  if (ij.first > static_cast<std::int64_t>(k)) return tail;
  // 2^{(kj)^i} (i+j)^k; (kj)^i stays within double range in log domain
  return std::pow(k * j, i) * std::log(2.0) + tail;
}

}  // namespace

double Weight::eval_node(const Node& n, const IndexSet& idx, std::int64_t ordinal) {
  switch (n.rule) {
    case Rule::Constant:
      return n.value;
    case Rule::PowerLaw: {
      Index p = idx.at(ordinal);
      if (idx.kind() != IndexKind::Naturals)
        throw std::invalid_argument("power-law weights are defined on naturals");
      return n.value * std::log(static_cast<double>(p.first));
    }
    case Rule::Geometric: {
      if (idx.kind() != IndexKind::Naturals)
        throw std::invalid_argument("geometric weights are defined on naturals");
      Index p = idx.at(ordinal);
      if (is_log_zero(n.value)) return kLogZero;
      return n.alpha.at(p.first) * n.value;
    }
    case Rule::FiniteSupport: {
      if (ordinal < 1 || ordinal > idx.count())
        throw std::out_of_range("ordinal outside truncation");
      auto it = n.support.find(ordinal);
      return it == n.support.end() ? kLogZero : it->second;
    }
    case Rule::MatrixExample: {
      if (idx.kind() != IndexKind::NaturalPairs)
        throw std::invalid_argument("matrix-example weights are defined on pairs");
      return matrix_example_log(n.value, idx.at(ordinal));
    }
    case Rule::Product:
      return log_product(eval_node(*n.left, idx, ordinal), eval_node(*n.right, idx, ordinal));
    case Rule::Power:
      return log_power(eval_node(*n.left, idx, ordinal), n.value);
    case Rule::Bar:
      return log_bar(eval_node(*n.left, idx, ordinal));
  }
  throw std::logic_error("unreachable weight rule");
}

double Weight::log_at(const IndexSet& idx, std::int64_t ordinal) const {
  return eval_node(*node_, idx, ordinal);
}

double Weight::at(const IndexSet& idx, std::int64_t ordinal) const {
  double ln = log_at(idx, ordinal);
  return is_log_zero(ln) ? 0.0 : std::exp(ln);
}

std::string Weight::describe() const {
  std::ostringstream os;
  switch (node_->rule) {
    case Rule::Constant:
      os << "const(" << (is_log_zero(node_->value) ? 0.0 : std::exp(node_->value)) << ")";
      break;
    case Rule::PowerLaw:
      os << "i^" << node_->value;
      break;
    case Rule::Geometric:
      os << "r^alpha(r=" << (is_log_zero(node_->value) ? 0.0 : std::exp(node_->value))
         << ", alpha=" << node_->alpha.describe() << ")";
      break;
    case Rule::FiniteSupport:
      os << "finite_support[" << node_->support.size() << "]";
      break;
    case Rule::MatrixExample:
      os << "matrix_example(k=" << static_cast<std::int64_t>(node_->value) << ")";
      break;
    case Rule::Product:
      os << "(" << Weight(node_->left).describe() << " * " << Weight(node_->right).describe()
         << ")";
      break;
    case Rule::Power:
      os << Weight(node_->left).describe() << "^" << node_->value;
      break;
    case Rule::Bar:
      os << "bar(" << Weight(node_->left).describe() << ")";
      break;
  }
  return os.str();
}

std::optional<double> Weight::as_constant() const {
  if (node_->rule != Rule::Constant) return std::nullopt;
  return is_log_zero(node_->value) ? 0.0 : std::exp(node_->value);
}

std::optional<double> Weight::as_power_law() const {
  if (node_->rule != Rule::PowerLaw) return std::nullopt;
  return node_->value;
}

std::optional<std::pair<double, AlphaRule>> Weight::as_geometric() const {
  if (node_->rule != Rule::Geometric) return std::nullopt;
  double r = is_log_zero(node_->value) ? 0.0 : std::exp(node_->value);
  return std::make_pair(r, node_->alpha);
}

bool Weight::is_finite_support() const { return node_->rule == Rule::FiniteSupport; }

std::optional<double> Weight::finite_support_min_positive() const {
  if (node_->rule != Rule::FiniteSupport || node_->support.empty()) return std::nullopt;
  double min_ln = kInf;
  for (auto& [ord, ln] : node_->support) min_ln = std::min(min_ln, ln);
  return std::exp(min_ln);
}

}  // namespace kothedim
