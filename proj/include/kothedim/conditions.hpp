#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kothedim/domination.hpp"
#include "kothedim/element.hpp"
#include "kothedim/kothe_set.hpp"
#include "kothedim/verdict.hpp"

namespace kothedim {

struct ConditionOptions {
  DominationOptions dom;
  /// a scanned series counts as numerically convergent when the tail window
  /// (N/2, N] contributes at most this fraction of the whole sum.
  double tail_flat_tol = 1e-9;
};

/// Candidate split (alpha, beta) of the all-ones matrix; beta = 1 - alpha by
/// construction, so the pointwise identity alpha + beta = 1 is built in.
struct MatrixWitness {
  enum class Kind { AllZero, AllOne, ThresholdSplit, UserTable };
  Kind kind = Kind::ThresholdSplit;
  /// ThresholdSplit compares weight growth ln p^{(ref)}_i vs ln p^{(ref)}_j.
  std::int64_t reference_generator = 1;
  /// UserTable: alpha values by (i, j) ordinal pair, 0 where absent.
  std::map<std::pair<std::int64_t, std::int64_t>, double> table;

  static MatrixWitness all_zero() { return {Kind::AllZero, 1, {}}; }
  static MatrixWitness all_one() { return {Kind::AllOne, 1, {}}; }
  static MatrixWitness threshold_split(std::int64_t reference = 1) {
    return {Kind::ThresholdSplit, reference, {}};
  }
  static MatrixWitness user_table(std::map<std::pair<std::int64_t, std::int64_t>, double> t) {
    return {Kind::UserTable, 1, std::move(t)};
  }

  /// alpha_{ij}; `growth` is ln p^{(ref)} by ordinal (ThresholdSplit only).
  double alpha(std::int64_t i, std::int64_t j, const std::vector<double>& growth) const;
  double beta(std::int64_t i, std::int64_t j, const std::vector<double>& growth) const {
    return 1.0 - alpha(i, j, growth);
  }
};

/// P < P^[2]: pointwise products stay in lambda(P).
Verdict check_algebra(const KotheSet& P, const ConditionOptions& opts = {});

/// Every generator weight is summable (lambda(P) has a unit).
Verdict check_unital(const KotheSet& P, const ConditionOptions& opts = {});

/// Grothendieck-Pietsch: every generator is dominated with a summable ratio.
Verdict check_nuclear(const KotheSet& P, const ConditionOptions& opts = {});

/// P ~ P^[2].  Raises NotAnAlgebraError when the algebra condition fails.
Verdict check_biprojective(const KotheSet& P, const ConditionOptions& opts = {});

/// Bounded split of the all-ones matrix (conditions (M2)/(M3)); decided by
/// the unital shortcut, the monotone-weights shortcut, the known failing
/// family, or a witness scan, in that order.
Verdict check_matrix(const KotheSet& P, const std::optional<MatrixWitness>& witness = {},
                     const ConditionOptions& opts = {});

/// Best-effort Grothendieck-Pietsch witnesses for each probed generator.
std::vector<NuclearWitness> nuclear_witnesses(const KotheSet& P,
                                              const ConditionOptions& opts = {});

struct ModuleActionRow {
  std::int64_t source_k = 0;
  std::int64_t target_m = 0;
  double lhs = 0.0;  // ||a.x|| in the barred seminorm of the source
  double rhs = 0.0;  // C ||a||_q ||x||_bar(q)
  bool holds = false;
};

/// Check ||a.x||_bar(p) <= C ||a||_q ||x||_bar(q) for every certificate
/// entry; raises InternalConsistencyError when an entry fails.
std::vector<ModuleActionRow> module_action_bound(const KotheSet& P, const Element& a,
                                                 const Element& x,
                                                 const DominationCertificate& bar_cert);

}  // namespace kothedim
