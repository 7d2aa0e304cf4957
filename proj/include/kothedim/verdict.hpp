#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kothedim {

enum class Status { Holds, Fails, Unknown };

// Exact verdicts come from closed-form criteria over named generator kinds;
// Numeric verdicts rest on certificates or traces scanned over a truncation.
enum class Soundness { Exact, Numeric };

std::string status_name(Status s);
std::string soundness_name(Soundness s);

/// One per-generator witness: p^{(k)} <= C q^{(m)} on the scanned truncation.
/// margin = min_i (lnC + ln q^{(m)}_i - ln p^{(k)}_i); a sound entry has
/// margin >= 0 under exact log-domain comparison.
struct CertEntry {
  std::int64_t source_k = 0;
  std::int64_t target_m = 0;
  double ln_constant = 0.0;
  std::int64_t verified_up_to = 0;  // truncation parameter (per side for pairs)
  double margin = 0.0;
};

struct DominationCertificate {
  std::string source;  // family descriptions, for reports
  std::string target;
  std::vector<CertEntry> entries;
};

struct TracePoint {
  std::int64_t truncation = 0;
  double value = 0.0;
};

/// A sampled scalar against growing truncations (lnC growth, partial sums).
struct TraceSeries {
  std::string label;
  std::int64_t source_k = 0;
  std::int64_t target_m = 0;
  std::vector<TracePoint> points;
};

/// Grothendieck-Pietsch style witness: sum of p^{(k)}_i / q^{(m)}_i over the
/// truncation, with the fraction of the sum contributed by the tail window.
struct NuclearWitness {
  std::int64_t source_k = 0;
  std::int64_t target_m = 0;
  double sum = 0.0;
  double tail_fraction = 0.0;
  bool tail_flat = false;
};

struct Verdict {
  Status status = Status::Unknown;
  Soundness soundness = Soundness::Numeric;
  std::string reason;
  std::vector<DominationCertificate> certificates;
  std::vector<TraceSeries> traces;
  std::vector<NuclearWitness> nuclear_witness;

  static Verdict holds_exact(std::string reason);
  static Verdict fails_exact(std::string reason);
  static Verdict holds_numeric(std::string reason);
  static Verdict unknown(std::string reason);

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }
  bool exact() const { return soundness == Soundness::Exact; }

  /// strict mode demotes numerically-certified Holds to Unknown.
  Status effective_status(bool strict) const;

  std::string summary() const;
};

}  // namespace kothedim
