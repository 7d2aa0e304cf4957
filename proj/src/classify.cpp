#include "kothedim/classify.hpp"

#include <cmath>
#include <sstream>

#include "kothedim/util.hpp"

namespace kothedim {

std::string dimension_name(Dimension d) {
  switch (d) {
    case Dimension::Zero:
      return "0";
    case Dimension::One:
      return "1";
    case Dimension::Two:
      return "2";
    case Dimension::Infinite:
      return "inf";
    case Dimension::Unknown:
      return "unknown";
  }
  return "?";
}

int dimension_rank(Dimension d) {
  switch (d) {
    case Dimension::Zero:
      return 0;
    case Dimension::One:
      return 1;
    case Dimension::Two:
      return 2;
    case Dimension::Infinite:
      return 3;
    case Dimension::Unknown:
      return -1;
  }
  return -1;
}

std::string witness_name(WitnessModule w) {
  switch (w) {
    case WitnessModule::None:
      return "none";
    case WitnessModule::TrivialModule:
      return "trivial_module";
    case WitnessModule::BarModule:
      return "bar_module";
    case WitnessModule::SupModule:
      return "sup_module";
  }
  return "?";
}

namespace {

struct BranchState {
  bool used_algebra = false, used_u = false, used_n = false, used_b = false, used_m = false;
};

void append_blocker(std::string& blocking, const std::string& name) {
  if (blocking.find(name) != std::string::npos) return;
  if (!blocking.empty()) blocking += ",";
  blocking += name;
}

}  // namespace

DimensionReport classify_from_verdicts(const ConditionSet& conditions, bool strict) {
  DimensionReport report;
  report.verdicts = conditions;
  report.strict = strict;

  Status alg = conditions.algebra.effective_status(strict);
  Status u = conditions.unital.effective_status(strict);
  Status n = conditions.nuclear.effective_status(strict);
  Status b = conditions.biprojective.effective_status(strict);
  Status m = conditions.matrix.effective_status(strict);

  if (alg == Status::Fails)
    throw NotAnAlgebraError("classification requires the algebra condition");

  BranchState used;
  used.used_algebra = true;

  if (alg == Status::Unknown) {
    report.dg_interval = {Dimension::Zero, Dimension::Infinite};
    report.wdg_interval = {Dimension::Zero, Dimension::Infinite};
    append_blocker(report.blocking, "algebra");
    report.soundness = Soundness::Numeric;
    report.db = report.dg;
    report.wdb = report.wdg;
    return report;
  }

  // weak table: U -> 0; B&N -> 1; B&!N -> 2; !B -> inf
  if (u == Status::Holds) {
    report.wdg = Dimension::Zero;
    report.weak_witness = WitnessModule::None;
    used.used_u = true;
  } else if (u == Status::Unknown) {
    report.wdg_interval = {Dimension::Zero, Dimension::Infinite};
    append_blocker(report.blocking, "U");
  } else {
    used.used_u = true;
    if (b == Status::Holds) {
      used.used_b = true;
      if (n == Status::Holds) {
        report.wdg = Dimension::One;
        report.weak_witness = WitnessModule::TrivialModule;
        used.used_n = true;
      } else if (n == Status::Fails) {
        report.wdg = Dimension::Two;
        report.weak_witness = WitnessModule::SupModule;
        used.used_n = true;
      } else {
        report.wdg_interval = {Dimension::One, Dimension::Two};
        append_blocker(report.blocking, "N");
      }
    } else if (b == Status::Fails) {
      report.wdg = Dimension::Infinite;
      report.weak_witness = WitnessModule::TrivialModule;
      used.used_b = true;
    } else {
      report.wdg_interval = {Dimension::One, Dimension::Infinite};
      append_blocker(report.blocking, "B");
    }
  }

  // strong table: U -> 0; B&N&M -> 1; B&N&!M -> 2; B&!N -> 2; !B -> inf
  if (u == Status::Holds) {
    report.dg = Dimension::Zero;
    report.witness = WitnessModule::None;
    used.used_u = true;
  } else if (u == Status::Unknown) {
    report.dg_interval = {Dimension::Zero, Dimension::Infinite};
    append_blocker(report.blocking, "U");
  } else {
    used.used_u = true;
    if (b == Status::Holds) {
      used.used_b = true;
      if (n == Status::Holds) {
        used.used_n = true;
        if (m == Status::Holds) {
          report.dg = Dimension::One;
          report.witness = WitnessModule::TrivialModule;
          used.used_m = true;
        } else if (m == Status::Fails) {
          report.dg = Dimension::Two;
          report.witness = WitnessModule::BarModule;
          used.used_m = true;
        } else {
          report.dg_interval = {Dimension::One, Dimension::Two};
          append_blocker(report.blocking, "M");
        }
      } else if (n == Status::Fails) {
        report.dg = Dimension::Two;
        report.witness = WitnessModule::SupModule;
        used.used_n = true;
      } else {
        // N unknown: if M fails, both candidate rows still give 2
        if (m == Status::Fails) {
          report.dg = Dimension::Two;
          report.witness = WitnessModule::None;
          used.used_m = true;
          report.notes.push_back(
              "dg = 2 independently of (N): (M) fails, so both applicable rows give 2");
        } else {
          report.dg_interval = {Dimension::One, Dimension::Two};
          append_blocker(report.blocking, "N");
        }
      }
    } else if (b == Status::Fails) {
      report.dg = Dimension::Infinite;
      report.witness = WitnessModule::TrivialModule;
      used.used_b = true;
    } else {
      report.dg_interval = {Dimension::One, Dimension::Infinite};
      append_blocker(report.blocking, "B");
    }
  }

  report.db = report.dg;
  report.wdb = report.wdg;

  // Exact only when every consulted verdict is Exact
  auto numeric = [&](bool consulted, const Verdict& v) {
    return consulted && !v.exact();
  };
  bool any_numeric = numeric(used.used_algebra, conditions.algebra) ||
                     numeric(used.used_u, conditions.unital) ||
                     numeric(used.used_n, conditions.nuclear) ||
                     numeric(used.used_b, conditions.biprojective) ||
                     numeric(used.used_m, conditions.matrix);
  report.soundness =
      (any_numeric || report.dg == Dimension::Unknown || report.wdg == Dimension::Unknown)
          ? Soundness::Numeric
          : Soundness::Exact;
  return report;
}

DimensionReport classify_dimensions(const KotheSet& P, const ClassifyOptions& opts) {
  ConditionSet conditions;
  conditions.algebra = check_algebra(P, opts.conditions);
  if (conditions.algebra.fails())
    throw NotAnAlgebraError("not an algebra: " + P.describe() + " (" +
                            conditions.algebra.reason + ")");
  conditions.unital = check_unital(P, opts.conditions);
  conditions.nuclear = check_nuclear(P, opts.conditions);
  conditions.biprojective = check_biprojective(P, opts.conditions);
  conditions.matrix = check_matrix(P, opts.matrix_witness, opts.conditions);

  DimensionReport report = classify_from_verdicts(conditions, opts.strict);
  report.family = P.describe();
  report.index_set = P.index_set().describe();
  report.grid_note = P.grid_note();

  if (report.witness == WitnessModule::BarModule) {
    if (auto ge1 = P.all_weights_at_least_one(); ge1 && *ge1)
      report.witness_note = "lambda(bar P) = l1 here: all weights are at least 1";
  }
  if (report.dg == Dimension::One)
    report.notes.push_back("dimension realized on the trivial module C (dh = 1)");
  if (report.dg == Dimension::Two && report.witness == WitnessModule::BarModule)
    report.notes.push_back("dimension realized on lambda(bar P) (dh = 2)");
  if (report.dg == Dimension::Two && report.witness == WitnessModule::SupModule)
    report.notes.push_back("dimension realized on lambda^inf(P) (dh = 2)");
  if (report.dg == Dimension::Infinite)
    report.notes.push_back("dimension realized on the trivial module C (dh = inf)");
  if (report.wdg == Dimension::One)
    report.notes.push_back("weak dimension realized on the trivial module C (w.dh = 1)");

  for (const auto& cert : report.verdicts.biprojective.certificates)
    if (!cert.entries.empty())
      report.notes.push_back("B certificate: " + std::to_string(cert.entries.size()) +
                             " entries, " + cert.source + " < " + cert.target);
  return report;
}

DimensionReport classify_power_series(double radius, const AlphaRule& alpha) {
  if (!(radius >= 1.0))
    throw NotAnAlgebraError(
        "power-series family with R < 1: squares of radii leave the grid, so the family "
        "is not closed under pointwise products");
  if (!alpha.symbolic())
    throw std::invalid_argument("symbolic classification needs a symbolic alpha rule");

  auto cls = [&] {
    switch (alpha.kind) {
      case AlphaKind::LogN:
        return 1;  // ratio -> 1: finite sup, nonzero limit
      case AlphaKind::Linear:
        return 0;  // ratio -> 0
      case AlphaKind::SqrtLogN:
        return 2;  // ratio -> inf
      default:
        throw std::invalid_argument("symbolic alpha expected");
    }
  }();

  DimensionReport report;
  std::ostringstream family;
  family << "power_series(R=" << (std::isinf(radius) ? std::string("inf")
                                                     : std::to_string(radius))
         << ", alpha=" << alpha.describe() << ")";
  report.family = family.str();
  report.soundness = Soundness::Exact;
  report.verdicts.algebra = Verdict::holds_exact("R >= 1");

  auto all = [&](Dimension d) {
    report.dg = report.db = report.wdg = report.wdb = d;
  };

  if (std::isinf(radius)) {
    report.verdicts.unital = Verdict::fails_exact("radii above 1");
    report.verdicts.biprojective = Verdict::holds_exact("R = inf");
    report.verdicts.matrix = Verdict::holds_exact("nondecreasing weights");
    if (cls <= 1) {
      report.verdicts.nuclear = Verdict::holds_exact("sup (log n)/alpha_n finite");
      all(Dimension::One);
      report.witness = report.weak_witness = WitnessModule::TrivialModule;
    } else {
      report.verdicts.nuclear = Verdict::fails_exact("sup (log n)/alpha_n infinite");
      all(Dimension::Two);
      report.witness = report.weak_witness = WitnessModule::SupModule;
    }
  } else if (radius == 1.0) {
    report.verdicts.biprojective = Verdict::holds_exact("R = 1");
    if (cls == 0) {
      report.verdicts.unital = Verdict::holds_exact("lim (log n)/alpha_n = 0");
      report.verdicts.nuclear = Verdict::holds_exact("lim (log n)/alpha_n = 0");
      report.verdicts.matrix = Verdict::holds_exact("unital family");
      all(Dimension::Zero);
    } else {
      report.verdicts.unital = Verdict::fails_exact("lim (log n)/alpha_n > 0");
      report.verdicts.nuclear = Verdict::fails_exact("lim (log n)/alpha_n > 0");
      report.verdicts.matrix = Verdict::unknown("not consulted");
      all(Dimension::Two);
      report.witness = report.weak_witness = WitnessModule::SupModule;
    }
  } else {
    report.verdicts.unital = Verdict::fails_exact("radii above 1");
    report.verdicts.biprojective = Verdict::fails_exact("1 < R < inf");
    report.verdicts.nuclear = cls == 0
                                  ? Verdict::holds_exact("lim (log n)/alpha_n = 0")
                                  : Verdict::fails_exact("lim (log n)/alpha_n > 0");
    report.verdicts.matrix = Verdict::unknown("not consulted");
    all(Dimension::Infinite);
    report.witness = report.weak_witness = WitnessModule::TrivialModule;
  }
  return report;
}

std::string render_report_table(const DimensionReport& r) {
  std::ostringstream os;
  os << "family: " << r.family;
  if (!r.index_set.empty()) os << "   index set: " << r.index_set;
  os << "\n";
  if (!r.grid_note.empty()) os << "note: " << r.grid_note << "\n";
  os << "conditions: algebra=" << r.verdicts.algebra.summary()
     << "\n            U=" << r.verdicts.unital.summary()
     << "\n            N=" << r.verdicts.nuclear.summary()
     << "\n            B=" << r.verdicts.biprojective.summary()
     << "\n            M=" << r.verdicts.matrix.summary() << "\n";
  auto interval = [](const std::optional<std::pair<Dimension, Dimension>>& iv) {
    if (!iv) return std::string();
    return " in [" + dimension_name(iv->first) + ", " + dimension_name(iv->second) + "]";
  };
  os << "  dg = db  = " << dimension_name(r.dg) << interval(r.dg_interval);
  if (r.witness != WitnessModule::None) os << "   (witness: " << witness_name(r.witness) << ")";
  os << "\nw.dg = w.db = " << dimension_name(r.wdg) << interval(r.wdg_interval);
  if (r.weak_witness != WitnessModule::None)
    os << "   (witness: " << witness_name(r.weak_witness) << ")";
  os << "\nsoundness: " << soundness_name(r.soundness);
  if (!r.blocking.empty()) os << "   blocked by: " << r.blocking;
  os << "\n";
  if (!r.witness_note.empty()) os << "witness note: " << r.witness_note << "\n";
  for (const auto& note : r.notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace kothedim
