#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kothedim/conditions.hpp"
#include "kothedim/kothe_set.hpp"
#include "kothedim/verdict.hpp"

namespace kothedim {

enum class Dimension { Zero, One, Two, Infinite, Unknown };

std::string dimension_name(Dimension d);
/// 0,1,2,3 for the determinate values; -1 for Unknown.
int dimension_rank(Dimension d);

enum class WitnessModule { None, TrivialModule, BarModule, SupModule };
std::string witness_name(WitnessModule w);

struct ConditionSet {
  Verdict algebra;
  Verdict unital;
  Verdict nuclear;
  Verdict biprojective;
  Verdict matrix;
};

/*
 * dg = db and w.dg = w.db always; the two case tables share the rows
 *   0    (U)
 *   1    (B) & (N) [& (M) for dg], not (U)     witness: trivial module C
 *   2    (B) & (N), not (M)  [dg only]         witness: lambda(bar P)
 *   2    (B), not (N)                          witness: lambda^inf(P)
 *   inf  not (B)                               witness: trivial module C
 * An Unknown condition blocks only the branches that need it; the report
 * then carries the residual interval and names the blocker.
 */
struct DimensionReport {
  std::string family;
  std::string index_set;
  std::string grid_note;

  Dimension dg = Dimension::Unknown;
  Dimension db = Dimension::Unknown;
  Dimension wdg = Dimension::Unknown;
  Dimension wdb = Dimension::Unknown;
  std::optional<std::pair<Dimension, Dimension>> dg_interval;   // when dg Unknown
  std::optional<std::pair<Dimension, Dimension>> wdg_interval;  // when wdg Unknown

  ConditionSet verdicts;

  WitnessModule witness = WitnessModule::None;       // realizes dg
  WitnessModule weak_witness = WitnessModule::None;  // realizes wdg
  std::string witness_note;

  /// Exact iff every verdict the taken branches consulted was Exact.
  Soundness soundness = Soundness::Exact;
  std::string blocking;  // names of the conditions blocking Unknown dimensions
  std::vector<std::string> notes;
  bool strict = false;
};

struct ClassifyOptions {
  ConditionOptions conditions;
  bool strict = false;
  std::optional<MatrixWitness> matrix_witness;
};

/// Evaluate the case tables over precomputed verdicts.
DimensionReport classify_from_verdicts(const ConditionSet& conditions, bool strict);

/// Run the five condition checks and classify.  Raises NotAnAlgebraError
/// when the algebra condition fails exactly.
DimensionReport classify_dimensions(const KotheSet& P, const ClassifyOptions& opts = {});

/// Purely symbolic classification of a power-series family; an independent
/// route cross-checked against classify_dimensions in the tests.
DimensionReport classify_power_series(double radius, const AlphaRule& alpha);

/// Plain-text rendering mirroring the two case tables.
std::string render_report_table(const DimensionReport& report);

}  // namespace kothedim
