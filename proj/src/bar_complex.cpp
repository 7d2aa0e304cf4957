#include "kothedim/bar_complex.hpp"

#include <cmath>
#include <sstream>

#include "kothedim/conditions.hpp"
#include "kothedim/util.hpp"

namespace kothedim {

Chain differential(const Chain& c) {
  if (c.arity() < 2)
    throw std::invalid_argument("differential needs arity >= 2");
  Chain out(c.arity() - 1);
  for (const auto& [tuple, coeff] : c.terms()) {
    for (std::size_t k = 0; k + 1 < tuple.size(); ++k) {
      if (tuple[k] != tuple[k + 1]) continue;
      Chain::Tuple image;
      image.reserve(tuple.size() - 1);
      for (std::size_t t = 0; t < tuple.size(); ++t)
        if (t != k) image.push_back(tuple[t]);
      out.add(image, (k % 2 == 0) ? coeff : -coeff);
    }
  }
  return out;
}

namespace {

template <typename Fn>
void for_each_tuple(std::int64_t truncation, int arity, Fn&& fn) {
  Chain::Tuple tuple(static_cast<std::size_t>(arity), 1);
  while (true) {
    fn(tuple);
    int pos = arity - 1;
    while (pos >= 0) {
      if (tuple[static_cast<std::size_t>(pos)] < truncation) {
        ++tuple[static_cast<std::size_t>(pos)];
        break;
      }
      tuple[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) return;
  }
}

std::string tuple_str(const Chain::Tuple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

}  // namespace

IdentityScanReport verify_d_squared(std::int64_t truncation, int max_arity) {
  if (max_arity < 3) throw std::invalid_argument("d^2 scan needs max arity >= 3");
  IdentityScanReport report;
  for (int arity = 1; arity <= max_arity; ++arity) {
    std::int64_t count = 0;
    for_each_tuple(truncation, arity, [&](const Chain::Tuple& tuple) {
      ++count;
      if (arity < 3) return;  // composite lands in degree <= 0, zero by shape
      Chain dd = differential(differential(Chain::basis(tuple)));
      if (!dd.empty())
        report.violations.push_back("d^2 != 0 at " + tuple_str(tuple));
    });
    report.cases_by_arity[arity] = count;
    report.cases += count;
  }
  return report;
}

bool DiagonalPredicate::satisfied_by(const Chain& c) const {
  if (c.arity() != arity)
    throw std::invalid_argument("diagonal predicate arity mismatch");
  Chain::Tuple diag(static_cast<std::size_t>(arity), static_cast<std::int32_t>(index));
  return c.at(diag) == Chain::Coeff{};
}

IdentityScanReport diagonal_invariance(std::int64_t truncation, int arity) {
  if (arity < 2) throw std::invalid_argument("diagonal invariance needs arity >= 2");
  IdentityScanReport report;
  for (std::int64_t i = 1; i <= truncation; ++i) {
    DiagonalPredicate image_predicate{i, arity - 1};
    for_each_tuple(truncation, arity, [&](const Chain::Tuple& tuple) {
      bool is_diag = true;
      for (auto e : tuple) is_diag = is_diag && (e == static_cast<std::int32_t>(i));
      if (is_diag) return;
      ++report.cases;
      Chain image = differential(Chain::basis(tuple));
      if (!image_predicate.satisfied_by(image))
        report.violations.push_back("image of " + tuple_str(tuple) +
                                    " has a diagonal coefficient at i=" + std::to_string(i));
    });
  }
  report.cases_by_arity[arity] = report.cases;
  return report;
}

std::string openness_status_name(OpennessStatus s) {
  switch (s) {
    case OpennessStatus::Bounded:
      return "bounded";
    case OpennessStatus::Diverging:
      return "diverging";
    case OpennessStatus::Unknown:
      return "unknown";
  }
  return "?";
}

OpennessReport openness_ratio(const KotheSet& P, int degree, const DominationOptions& opts) {
  if (degree < 1 || degree % 2 == 0)
    throw std::invalid_argument("openness diagnostic is defined for odd degrees");

  OpennessReport report;
  report.degree = degree;

  KotheSet source = power_set(P, static_cast<double>(degree + 1));
  KotheSet target = power_set(P, static_cast<double>(degree));

  bool all_bounded = true;
  bool any_diverging = false;
  DominationCertificate cert{source.describe(), target.describe(), {}};

  for (std::int64_t k : opts.probe_list(P)) {
    OpennessSourceReport row;
    row.source_k = k;
    auto res = search_certificate_entry(source.generator(k), k, target, opts);
    if (res.entry) {
      row.status = OpennessStatus::Bounded;
      row.entry = res.entry;
      cert.entries.push_back(*res.entry);
    } else {
      all_bounded = false;
      row.trace = std::move(res.trace);
      row.trace.label = "R";
      const auto& pts = row.trace.points;
      bool increasing = pts.size() >= 4;
      for (std::size_t t = 0; t + 1 < pts.size(); ++t)
        increasing = increasing && pts[t].value < pts[t + 1].value;
      bool ratio_big = increasing && pts.front().value > 0.0 &&
                       pts.back().value / pts.front().value > 4.0;
      row.status = ratio_big ? OpennessStatus::Diverging : OpennessStatus::Unknown;
      any_diverging = any_diverging || ratio_big;
    }
    report.sources.push_back(std::move(row));
  }

  if (any_diverging)
    report.status = OpennessStatus::Diverging;
  else if (all_bounded)
    report.status = OpennessStatus::Bounded;
  else
    report.status = OpennessStatus::Unknown;

  if (report.status == OpennessStatus::Bounded) report.certificate = std::move(cert);

  if (report.status == OpennessStatus::Diverging) {
    try {
      Verdict b = check_biprojective(P, ConditionOptions{opts, 1e-9});
      if (b.holds() && b.exact()) {
        report.consistent_with_biprojectivity = false;
        report.biprojectivity_note =
            "diverging ratio contradicts the biprojectivity verdict";
      } else {
        report.biprojectivity_note = "consistent: biprojectivity " + b.summary();
      }
    } catch (const NotAnAlgebraError&) {
      report.biprojectivity_note = "family is not an algebra";
    }
  }
  return report;
}

}  // namespace kothedim
