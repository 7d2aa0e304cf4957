#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kothedim/kothe_set.hpp"
#include "kothedim/verdict.hpp"

namespace kothedim {

struct DominationOptions {
  /// sources k = 1..source_probes are certified (geometric grids need target
  /// indices near k^2, so the default keeps k^2 <= k + search_depth).
  std::int64_t source_probes = 3;
  /// targets m are searched over [1, k + search_depth], smallest stable first.
  std::int64_t search_depth = 8;
  /// lnC over [1, N/2] must match lnC over [1, N] within this tolerance.
  double stability_tol = 1e-9;
  bool use_closed_forms = true;
  /// explicit probe list overriding 1..source_probes.
  std::optional<std::vector<std::int64_t>> sources;
  int threads = 0;

  std::vector<std::int64_t> probe_list(const KotheSet& source_family) const;
};

/// max over the first `sub_truncation` block of ln p - ln q (the smallest
/// admissible lnC); +inf when q vanishes where p does not, -inf when p = 0
/// everywhere on the block.
double max_log_ratio(const Weight& p, const Weight& q, const IndexSet& idx,
                     std::int64_t sub_truncation, int threads = 0);

/// min over the truncation of lnC + ln q - ln p; >= 0 certifies p <= C q.
double min_margin(const Weight& p, const Weight& q, double ln_constant, const IndexSet& idx,
                  std::int64_t sub_truncation, int threads = 0);

struct EntrySearchResult {
  std::optional<CertEntry> entry;
  TraceSeries trace;  // lnC(N') of the best candidate when no stable target
};

/// Search targets m in [1, source_k + search_depth] for a stable certificate
/// entry dominating `source` inside `targets`.
EntrySearchResult search_certificate_entry(const Weight& source, std::int64_t source_k,
                                           const KotheSet& targets,
                                           const DominationOptions& opts);

/// P < Q with certificate (Numeric) or closed-form decision (Exact) for
/// power-series shapes over the same grid and exponent sequence.
Verdict dominates(const KotheSet& P, const KotheSet& Q, const DominationOptions& opts = {});

/// P ~ Q: conjunction of dominates both ways; Holds carries both certificates.
Verdict equivalent(const KotheSet& P, const KotheSet& Q, const DominationOptions& opts = {});

struct CertificateCheck {
  bool ok = false;
  double min_margin = 0.0;
  std::string detail;
};

/// Re-verify every entry by exhaustive scan of the truncation.
CertificateCheck verify_certificate(const DominationCertificate& cert, const KotheSet& P,
                                    const KotheSet& Q, int threads = 0);

/// Chain targets and add log-constants; margins are recomputed against (P, R).
DominationCertificate compose_certificates(const DominationCertificate& first,
                                           const DominationCertificate& second,
                                           const KotheSet& P, const KotheSet& R,
                                           int threads = 0);

/// From a certificate for P < P^[2], build one for Bar(P) < P * Bar(P).
/// The input is first upgraded so each entry has target m >= k and C >= 1;
/// the output re-verifies on the truncation or an error is raised.
DominationCertificate bar_module_certificate(const KotheSet& P,
                                             const DominationCertificate& algebra_cert,
                                             const DominationOptions& opts = {});

struct BarProductCertificates {
  DominationCertificate forward;  // Bar(P) * P < P
  DominationCertificate reverse;  // P < Bar(P) * P
};

/// Both halves of Bar(P) * P ~ P: the forward half from a certificate for
/// P^[2] < P, the reverse half from an upgraded algebra certificate via the
/// pointwise case split on q_i < 1 vs q_i >= 1.
BarProductCertificates bar_product_certificates(const KotheSet& P,
                                                const DominationCertificate& algebra_cert,
                                                const DominationCertificate& square_cert,
                                                const DominationOptions& opts = {});

/// Smallest n with (l/k)^n >= 2; the number of composition steps used by
/// power_reduction_certificate.
int power_reduction_steps(double k, double l);

/// From a certificate for P^[l] < P^[k] (0 < k < l), derive one for
/// P^[2] < P: rescale to P^[r] < P with r = l/k, compose until r^n >= 2,
/// then apply the pointwise case split on p_i >= 1 vs p_i < 1.
DominationCertificate power_reduction_certificate(const KotheSet& P, double k, double l,
                                                  const DominationCertificate& input,
                                                  const DominationOptions& opts = {});

}  // namespace kothedim
