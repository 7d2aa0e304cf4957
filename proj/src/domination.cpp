#include "kothedim/domination.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "kothedim/parallel.hpp"
#include "kothedim/util.hpp"

namespace kothedim {

std::vector<std::int64_t> DominationOptions::probe_list(const KotheSet& source_family) const {
  if (sources) return *sources;
  std::int64_t n = source_probes;
  if (std::int64_t listed = source_family.listed_generators(); listed > 0)
    n = std::min(n, listed);
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= std::max<std::int64_t>(n, 1); ++k) out.push_back(k);
  return out;
}

double max_log_ratio(const Weight& p, const Weight& q, const IndexSet& idx,
                     std::int64_t sub_truncation, int threads) {
  std::int64_t hi = idx.prefix_count(sub_truncation);
  return parallel_max(
      1, hi, [&](std::int64_t t) { return log_ratio(p.log_at(idx, t), q.log_at(idx, t)); },
      threads);
}

double min_margin(const Weight& p, const Weight& q, double ln_constant, const IndexSet& idx,
                  std::int64_t sub_truncation, int threads) {
  std::int64_t hi = idx.prefix_count(sub_truncation);
  return parallel_min(
      1, hi,
      [&](std::int64_t t) {
        double lp = p.log_at(idx, t);
        if (is_log_zero(lp)) return kInf;  // no constraint at a vanishing source
        double lq = q.log_at(idx, t);
        if (is_log_zero(lq)) return -kInf;  // unsatisfiable
        return ln_constant + lq - lp;
      },
      threads);
}

EntrySearchResult search_certificate_entry(const Weight& source, std::int64_t source_k,
                                           const KotheSet& targets,
                                           const DominationOptions& opts) {
  const IndexSet& idx = targets.index_set();
  std::int64_t full = idx.truncation();
  std::int64_t half = std::max<std::int64_t>(1, full / 2);

  EntrySearchResult result;
  double best_lnc = kInf;
  std::int64_t best_m = 0;

  for (std::int64_t m = 1; m <= source_k + opts.search_depth; ++m) {
    Weight q = targets.generator(m);
    double lnc_full = max_log_ratio(source, q, idx, full, opts.threads);
    if (lnc_full == kInf) continue;  // target vanishes where the source does not
    if (is_log_zero(lnc_full)) {
      // source vanishes identically on the truncation; dominated vacuously
      result.entry = CertEntry{source_k, m, 0.0, full, kInf};
      return result;
    }
    double lnc_half = max_log_ratio(source, q, idx, half, opts.threads);
    bool stable = std::abs(lnc_full - lnc_half) <= opts.stability_tol;
    if (stable) {
      double margin = min_margin(source, q, lnc_full, idx, full, opts.threads);
      result.entry = CertEntry{source_k, m, lnc_full, full, margin};
      return result;
    }
    if (lnc_full < best_lnc) {
      best_lnc = lnc_full;
      best_m = m;
    }
  }

  // no stable target: report the growth of lnC(N') for the best candidate
  result.trace.label = "lnC";
  result.trace.source_k = source_k;
  result.trace.target_m = best_m;
  if (best_m > 0) {
    Weight q = targets.generator(best_m);
    for (std::int64_t n : idx.sample_truncations())
      result.trace.points.push_back({n, max_log_ratio(source, q, idx, n, opts.threads)});
  }
  return result;
}

namespace {

struct ClosedFormDecision {
  Status status;
  std::string reason;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

/// Domination for two families sharing a power-series grid:
/// supports of c*alpha_n*ln r_k climb to c*ln R, so P(c1) < Q(c2) holds
/// exactly when c1*ln R <= c2*ln R in the extended sense.
std::optional<ClosedFormDecision> closed_form_power_series(const KotheSet& P,
                                                           const KotheSet& Q) {
  auto a = P.power_series_shape();
  auto b = Q.power_series_shape();
  if (!a || !b) return std::nullopt;
  if (a->radius != b->radius || !a->alpha.same_as(b->alpha)) return std::nullopt;
  double R = a->radius;
  double c1 = a->multiplier, c2 = b->multiplier;
  if (std::isinf(R) || R == 1.0)
    return ClosedFormDecision{Status::Holds,
                              "power-series exponent comparison: ln R = " +
                                  std::string(std::isinf(R) ? "inf" : "0") +
                                  " absorbs every exponent"};
  double L = std::log(R);
  bool holds = (L > 0.0) ? (c1 <= c2) : (c1 >= c2);
  if (holds)
    return ClosedFormDecision{Status::Holds, "power-series exponent comparison: " + fmt(c1) +
                                                 "*ln R <= " + fmt(c2) + "*ln R"};
  // find the first grid point whose c1-power escapes the target supremum
  std::int64_t witness_k = 0;
  const KotheSet base = [&] {
    // walk down to the underlying power-series family for its grid
    KotheSet s = P;
    while (s.kind() != FamilyKind::PowerSeries) s = s.base();
    return s;
  }();
  for (std::int64_t k = 1; k <= 4096; ++k) {
    double r = base.power_series_ratio(k);
    if (c1 * std::log(r) > c2 * L) {
      witness_k = k;
      break;
    }
  }
  if (witness_k == 0)
    return ClosedFormDecision{Status::Fails, "exponent comparison: " + fmt(c1) + "*ln R > " +
                                                 fmt(c2) + "*ln R"};
  double r = base.power_series_ratio(witness_k);
  double lhs = std::exp(c1 * std::log(r));
  double rhs = std::exp(c2 * L);
  return ClosedFormDecision{Status::Fails, "exponent comparison: r = " + fmt(r) + " gives " +
                                               fmt(lhs) + " > " + fmt(rhs) +
                                               " beyond the whole target grid"};
}

}  // namespace

Verdict dominates(const KotheSet& P, const KotheSet& Q, const DominationOptions& opts) {
  if (!(P.index_set() == Q.index_set()))
    throw std::invalid_argument("domination needs matching index sets");

  auto probes = opts.probe_list(P);

  auto run_search = [&](DominationCertificate& cert, std::vector<TraceSeries>& traces) {
    bool all = true;
    for (std::int64_t k : probes) {
      auto res = search_certificate_entry(P.generator(k), k, Q, opts);
      if (res.entry) {
        cert.entries.push_back(*res.entry);
      } else {
        all = false;
        traces.push_back(std::move(res.trace));
      }
    }
    return all;
  };

  if (opts.use_closed_forms) {
    if (auto decision = closed_form_power_series(P, Q)) {
      Verdict v;
      v.status = decision->status;
      v.soundness = Soundness::Exact;
      v.reason = decision->reason;
      DominationCertificate cert{P.describe(), Q.describe(), {}};
      std::vector<TraceSeries> traces;
      bool complete = run_search(cert, traces);
      if (decision->status == Status::Holds) {
        if (!cert.entries.empty()) v.certificates.push_back(std::move(cert));
        if (!complete) v.reason += "; certificate search incomplete at default depth";
      } else {
        v.traces = std::move(traces);  // divergence evidence for the failing sources
      }
      return v;
    }
  }

  DominationCertificate cert{P.describe(), Q.describe(), {}};
  std::vector<TraceSeries> traces;
  bool complete = run_search(cert, traces);
  if (complete) {
    Verdict v = Verdict::holds_numeric("stable certificate for every probed generator");
    v.certificates.push_back(std::move(cert));
    return v;
  }
  Verdict v = Verdict::unknown(
      "no stable dominating target within search depth; lnC grows along the truncation");
  if (!cert.entries.empty()) v.certificates.push_back(std::move(cert));
  v.traces = std::move(traces);
  return v;
}

Verdict equivalent(const KotheSet& P, const KotheSet& Q, const DominationOptions& opts) {
  Verdict fwd = dominates(P, Q, opts);
  Verdict rev = dominates(Q, P, opts);
  Verdict v;
  if (fwd.fails() || rev.fails()) {
    v.status = Status::Fails;
    v.soundness = Soundness::Exact;  // numeric failure is never emitted
    v.reason = fwd.fails() ? fwd.reason : rev.reason;
  } else if (fwd.holds() && rev.holds()) {
    v.status = Status::Holds;
    v.soundness = (fwd.exact() && rev.exact()) ? Soundness::Exact : Soundness::Numeric;
    v.reason = "mutual domination";
  } else {
    v.status = Status::Unknown;
    v.reason = !fwd.holds() ? "forward direction unresolved: " + fwd.reason
                            : "reverse direction unresolved: " + rev.reason;
  }
  for (auto& c : fwd.certificates) v.certificates.push_back(std::move(c));
  for (auto& c : rev.certificates) v.certificates.push_back(std::move(c));
  for (auto& t : fwd.traces) v.traces.push_back(std::move(t));
  for (auto& t : rev.traces) v.traces.push_back(std::move(t));
  return v;
}

CertificateCheck verify_certificate(const DominationCertificate& cert, const KotheSet& P,
                                    const KotheSet& Q, int threads) {
  if (!(P.index_set() == Q.index_set()))
    throw std::invalid_argument("certificate families over different index sets");
  CertificateCheck check;
  check.ok = true;
  check.min_margin = kInf;
  const IndexSet& idx = P.index_set();
  for (const CertEntry& e : cert.entries) {
    std::int64_t up_to = std::min<std::int64_t>(e.verified_up_to, idx.truncation());
    if (up_to < 1) up_to = idx.truncation();
    double margin = min_margin(P.generator(e.source_k), Q.generator(e.target_m), e.ln_constant,
                               idx, up_to, threads);
    check.min_margin = std::min(check.min_margin, margin);
    if (!(margin >= 0.0)) {
      check.ok = false;
      check.detail += "entry k=" + std::to_string(e.source_k) +
                      " m=" + std::to_string(e.target_m) + " margin " + fmt(margin) + "; ";
    }
  }
  return check;
}

DominationCertificate compose_certificates(const DominationCertificate& first,
                                           const DominationCertificate& second,
                                           const KotheSet& P, const KotheSet& R, int threads) {
  std::map<std::int64_t, CertEntry> by_source;
  for (const CertEntry& e : second.entries) by_source.emplace(e.source_k, e);
  DominationCertificate out{first.source, second.target, {}};
  const IndexSet& idx = P.index_set();
  for (const CertEntry& e : first.entries) {
    auto it = by_source.find(e.target_m);
    if (it == by_source.end())
      throw std::invalid_argument("composition: second certificate has no entry for source " +
                                  std::to_string(e.target_m));
    CertEntry composed;
    composed.source_k = e.source_k;
    composed.target_m = it->second.target_m;
    composed.ln_constant = e.ln_constant + it->second.ln_constant;
    composed.verified_up_to = std::min(e.verified_up_to, it->second.verified_up_to);
    composed.margin = min_margin(P.generator(composed.source_k),
                                 R.generator(composed.target_m), composed.ln_constant, idx,
                                 std::min(composed.verified_up_to, idx.truncation()), threads);
    out.entries.push_back(composed);
  }
  return out;
}

namespace {

/// Upgrade an algebra certificate so every entry has target m >= k and
/// C >= 1 (valid by directedness), then check both premises p <= C q^2 and
/// p <= q on the truncation.
std::vector<CertEntry> upgraded_algebra_entries(const KotheSet& P,
                                                const DominationCertificate& algebra_cert,
                                                const DominationOptions& opts) {
  if (algebra_cert.entries.empty())
    throw std::invalid_argument("missing prerequisite certificate for P < P^2");
  const IndexSet& idx = P.index_set();
  std::vector<CertEntry> upgraded;
  for (CertEntry e : algebra_cert.entries) {
    e.target_m = std::max(e.target_m, e.source_k);
    e.ln_constant = std::max(e.ln_constant, 0.0);
    Weight p = P.generator(e.source_k);
    Weight q = P.generator(e.target_m);
    Weight q2 = Weight::power(q, 2.0);
    double m_sq = min_margin(p, q2, e.ln_constant, idx, idx.truncation(), opts.threads);
    double m_lin = min_margin(p, q, 0.0, idx, idx.truncation(), opts.threads);
    if (!(m_sq >= 0.0) || !(m_lin >= 0.0))
      throw InternalConsistencyError(
          "algebra certificate does not satisfy p <= C q^2 and p <= q after upgrade (k=" +
          std::to_string(e.source_k) + ")");
    e.margin = std::min(m_sq, m_lin);
    upgraded.push_back(e);
  }
  return upgraded;
}

void verify_or_raise(const DominationCertificate& cert, const KotheSet& from,
                     const KotheSet& to, const char* what, int threads) {
  auto check = verify_certificate(cert, from, to, threads);
  if (!check.ok)
    throw InternalConsistencyError(std::string(what) + " failed re-verification: " +
                                   check.detail);
}

}  // namespace

DominationCertificate bar_module_certificate(const KotheSet& P,
                                             const DominationCertificate& algebra_cert,
                                             const DominationOptions& opts) {
  const IndexSet& idx = P.index_set();
  KotheSet barred = bar_set(P);
  KotheSet target = product_set(P, barred);
  DominationCertificate out{barred.describe(), target.describe(), {}};
  for (const CertEntry& e : upgraded_algebra_entries(P, algebra_cert, opts)) {
    // p <= C q^2 and p <= q give bar(p) <= C q bar(q) pointwise:
    // below 1 both bars are identities, at or above 1 bar(q) = 1 and
    // bar(p) <= 1 <= C q.
    CertEntry entry{e.source_k, e.target_m, e.ln_constant, idx.truncation(), 0.0};
    entry.margin = min_margin(barred.generator(e.source_k), target.generator(e.target_m),
                              entry.ln_constant, idx, idx.truncation(), opts.threads);
    out.entries.push_back(entry);
  }
  verify_or_raise(out, barred, target, "bar-module certificate", opts.threads);
  return out;
}

BarProductCertificates bar_product_certificates(const KotheSet& P,
                                                const DominationCertificate& algebra_cert,
                                                const DominationCertificate& square_cert,
                                                const DominationOptions& opts) {
  if (square_cert.entries.empty())
    throw std::invalid_argument("missing prerequisite certificate for P^2 < P");
  const IndexSet& idx = P.index_set();
  KotheSet barred = bar_set(P);
  KotheSet bar_prod = product_set(barred, P);

  BarProductCertificates result;
  result.forward = DominationCertificate{bar_prod.describe(), P.describe(), {}};
  // bar(p) p <= p^2 <= C q, so the P^2 < P entries transfer unchanged.
  for (const CertEntry& e : square_cert.entries) {
    CertEntry entry{e.source_k, e.target_m, e.ln_constant, idx.truncation(), 0.0};
    entry.margin = min_margin(bar_prod.generator(e.source_k), P.generator(e.target_m),
                              entry.ln_constant, idx, idx.truncation(), opts.threads);
    result.forward.entries.push_back(entry);
  }
  verify_or_raise(result.forward, bar_prod, P, "bar-product forward certificate", opts.threads);

  result.reverse = DominationCertificate{P.describe(), bar_prod.describe(), {}};
  for (const CertEntry& e : upgraded_algebra_entries(P, algebra_cert, opts)) {
    // case split on q_i: below 1, bar(q) = q and p <= C q^2 = C bar(q) q;
    // at or above 1, bar(q) = 1 and p <= q <= C q = C bar(q) q.
    CertEntry entry{e.source_k, e.target_m, e.ln_constant, idx.truncation(), 0.0};
    entry.margin = min_margin(P.generator(e.source_k), bar_prod.generator(e.target_m),
                              entry.ln_constant, idx, idx.truncation(), opts.threads);
    result.reverse.entries.push_back(entry);
  }
  verify_or_raise(result.reverse, P, bar_prod, "bar-product reverse certificate", opts.threads);
  return result;
}

int power_reduction_steps(double k, double l) {
  if (!(k > 0.0) || !(k < l))
    throw std::invalid_argument("power reduction needs 0 < k < l");
  double r = l / k;
  int n = 1;
  while (std::pow(r, n) < 2.0) ++n;
  return n;
}

DominationCertificate power_reduction_certificate(const KotheSet& P, double k, double l,
                                                  const DominationCertificate& input,
                                                  const DominationOptions& opts) {
  if (!(k > 0.0) || !(k < l))
    throw std::invalid_argument("power reduction needs 0 < k < l");
  if (input.entries.empty()) throw std::invalid_argument("empty input certificate");

  const IndexSet& idx = P.index_set();
  {
    auto check = verify_certificate(input, power_set(P, l), power_set(P, k), opts.threads);
    if (!check.ok)
      throw InternalConsistencyError("power reduction: unsound input certificate: " +
                                     check.detail);
  }

  double r = l / k;
  int n = power_reduction_steps(k, l);

  KotheSet p_r = power_set(P, r);

  // base entries for P^[r] < P: rescale the input constants by 1/k
  std::map<std::int64_t, CertEntry> base;
  for (const CertEntry& e : input.entries) {
    CertEntry b{e.source_k, e.target_m, e.ln_constant / k, idx.truncation(), 0.0};
    base.emplace(b.source_k, b);
  }
  // composition may need base entries at intermediate sources; extend by
  // search, widening the depth if the default range misses the witness
  auto base_entry = [&](std::int64_t source) -> CertEntry {
    if (auto it = base.find(source); it != base.end()) return it->second;
    DominationOptions wide = opts;
    for (int attempt = 0; attempt < 6; ++attempt) {
      auto res = search_certificate_entry(p_r.generator(source), source, P, wide);
      if (res.entry) {
        base.emplace(source, *res.entry);
        return *res.entry;
      }
      wide.search_depth *= 2;
    }
    throw std::runtime_error("power reduction: no verifiable target for intermediate source " +
                             std::to_string(source));
  };

  // cur holds certificates for P^[r^t] < P
  std::map<std::int64_t, CertEntry> cur = base;
  for (int t = 2; t <= n; ++t) {
    std::map<std::int64_t, CertEntry> next;
    for (auto& [source, e] : cur) {
      CertEntry link = base_entry(e.target_m);
      CertEntry composed{source, link.target_m, r * e.ln_constant + link.ln_constant,
                         idx.truncation(), 0.0};
      next.emplace(source, composed);
    }
    cur = std::move(next);
  }

  // case split: with alpha = r^n >= 2, p^alpha <= C q, p <= q and C >= 1
  // give p^2 <= C q at every index.
  KotheSet p_sq = power_set(P, 2.0);
  DominationCertificate out{p_sq.describe(), P.describe(), {}};
  for (auto& [source, e] : cur) {
    CertEntry entry{source, std::max(e.target_m, source), std::max(e.ln_constant, 0.0),
                    idx.truncation(), 0.0};
    entry.margin = min_margin(p_sq.generator(entry.source_k), P.generator(entry.target_m),
                              entry.ln_constant, idx, idx.truncation(), opts.threads);
    out.entries.push_back(entry);
  }
  verify_or_raise(out, p_sq, P, "power-reduction certificate", opts.threads);
  return out;
}

}  // namespace kothedim
