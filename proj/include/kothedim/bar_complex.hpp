#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kothedim/chain.hpp"
#include "kothedim/domination.hpp"
#include "kothedim/kothe_set.hpp"
#include "kothedim/verdict.hpp"

namespace kothedim {

/*
 * Differential of the truncated bar complex on basis tuples:
 *   d(e_{i_0...i_n}) = sum_{k=0}^{n-1} (-1)^k delta_{i_k i_{k+1}} e_{...omit i_k...}
 * extended linearly; arity must be at least 2.  Coefficients stay exact for
 * integer inputs.
 */
Chain differential(const Chain& c);

/// Membership in the subspace of chains whose coefficient on the diagonal
/// tuple (i, ..., i) vanishes exactly.
struct DiagonalPredicate {
  std::int64_t index = 1;  // i
  int arity = 1;
  bool satisfied_by(const Chain& c) const;
};

struct IdentityScanReport {
  std::int64_t cases = 0;
  std::map<int, std::int64_t> cases_by_arity;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// d(d(e)) = 0 for every basis tuple with entries <= truncation and arity
/// up to max_arity; arities 1 and 2 land in degrees where the composite is
/// zero by the shape of the complex and are counted as vacuous cases.
IdentityScanReport verify_d_squared(std::int64_t truncation, int max_arity);

/// The differential never creates a diagonal coefficient: for every i and
/// every basis tuple other than (i,...,i), the image coefficient at the
/// diagonal (i,...,i) of lower arity is exactly zero.
IdentityScanReport diagonal_invariance(std::int64_t truncation, int arity);

enum class OpennessStatus { Bounded, Diverging, Unknown };
std::string openness_status_name(OpennessStatus s);

struct OpennessSourceReport {
  std::int64_t source_k = 0;
  OpennessStatus status = OpennessStatus::Unknown;
  std::optional<CertEntry> entry;  // Bounded: certificate entry for P^[n+1] < P^[n]
  TraceSeries trace;               // R(N') of the best candidate otherwise
};

struct OpennessReport {
  int degree = 1;  // the odd n
  OpennessStatus status = OpennessStatus::Unknown;
  std::vector<OpennessSourceReport> sources;
  std::optional<DominationCertificate> certificate;  // when Bounded
  bool consistent_with_biprojectivity = true;
  std::string biprojectivity_note;
};

/*
 * Quantitative open-mapping diagnostic in odd degree n: for each probed
 * generator, R(N') = max over the first N' block of
 * (n+1) ln p^{(k)} - n ln q^{(m)}.  A stable R certifies P^[n+1] < P^[n];
 * a strictly increasing trace with final/initial ratio above 4 is reported
 * as Diverging.  Biprojective families must come out Bounded, so a
 * Diverging result is cross-checked against the biprojectivity verdict.
 */
OpennessReport openness_ratio(const KotheSet& P, int degree,
                              const DominationOptions& opts = {});

}  // namespace kothedim
