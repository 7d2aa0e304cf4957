#include <doctest.h>

#include <cmath>

#include "kothedim/classify.hpp"
#include "kothedim/util.hpp"
#include "test_support.hpp"

using namespace kothedim;
using namespace kothedim::testing;

namespace {

ConditionSet make_conditions(Status u, Status b, Status n, Status m, bool exact = true) {
  auto mk = [&](Status s) {
    Verdict v;
    v.status = s;
    v.soundness = exact ? Soundness::Exact : Soundness::Numeric;
    return v;
  };
  ConditionSet c;
  c.algebra = Verdict::holds_exact("synthetic gate");
  c.unital = mk(u);
  c.nuclear = mk(n);
  c.biprojective = mk(b);
  c.matrix = mk(m);
  return c;
}

}  // namespace

TEST_CASE("corpus dimensions match the classification tables") {
  struct Expected {
    KotheSet family;
    Dimension dg, wdg;
    WitnessModule witness;
  };
  const Expected rows[] = {
      {l1_family(), Dimension::Two, Dimension::Two, WitnessModule::SupModule},
      {product_family(), Dimension::Zero, Dimension::Zero, WitnessModule::None},
      {rapidly_decreasing(), Dimension::One, Dimension::One, WitnessModule::TrivialModule},
      {entire_functions(), Dimension::One, Dimension::One, WitnessModule::TrivialModule},
      {disc_radius_one(), Dimension::Zero, Dimension::Zero, WitnessModule::None},
      {disc_radius_two(), Dimension::Infinite, Dimension::Infinite,
       WitnessModule::TrivialModule},
      {matrix_family(), Dimension::Two, Dimension::One, WitnessModule::BarModule},
  };
  for (const Expected& row : rows) {
    CAPTURE(row.family.describe());
    DimensionReport report = classify_dimensions(row.family);
    CHECK(report.dg == row.dg);
    CHECK(report.db == row.dg);
    CHECK(report.wdg == row.wdg);
    CHECK(report.wdb == row.wdg);
    CHECK(report.witness == row.witness);
    CHECK(report.soundness == Soundness::Exact);
    // weak dimension never exceeds the dimension
    CHECK(dimension_rank(report.wdg) <= dimension_rank(report.dg));
  }
}

TEST_CASE("the matrix family report names the bar module as l1") {
  DimensionReport report = classify_dimensions(matrix_family());
  CHECK(report.witness == WitnessModule::BarModule);
  CHECK(report.witness_note.find("l1") != std::string::npos);
  CHECK(report.weak_witness == WitnessModule::TrivialModule);
}

TEST_CASE("symbolic power-series classification agrees with the generic route") {
  struct Case {
    double radius;
    AlphaRule alpha;
    Dimension expected;
  };
  const double inf = std::numeric_limits<double>::infinity();
  const Case cases[] = {
      {inf, AlphaRule::log_n(), Dimension::One},
      {inf, AlphaRule::linear(), Dimension::One},
      {inf, AlphaRule::sqrt_log_n(), Dimension::Two},
      {1.0, AlphaRule::linear(), Dimension::Zero},
      {1.0, AlphaRule::log_n(), Dimension::Two},
      {1.0, AlphaRule::sqrt_log_n(), Dimension::Two},
      {2.0, AlphaRule::linear(), Dimension::Infinite},
      {1.5, AlphaRule::log_n(), Dimension::Infinite},
  };
  for (const Case& c : cases) {
    CAPTURE(c.radius);
    CAPTURE(c.alpha.describe());
    DimensionReport symbolic = classify_power_series(c.radius, c.alpha);
    CHECK(symbolic.dg == c.expected);
    CHECK(symbolic.wdg == symbolic.dg);

    KotheSet family =
        KotheSet::power_series(c.radius, c.alpha, IndexSet(IndexKind::Naturals, 4096));
    DimensionReport generic = classify_dimensions(family);
    CHECK(generic.dg == symbolic.dg);
    CHECK(generic.db == symbolic.db);
    CHECK(generic.wdg == symbolic.wdg);
    CHECK(generic.wdb == symbolic.wdb);
  }
  CHECK_THROWS_AS((void)classify_power_series(0.5, AlphaRule::linear()), NotAnAlgebraError);
  CHECK_THROWS_AS((void)classify_power_series(2.0, AlphaRule::explicit_list({1, 2, 3})),
                  std::invalid_argument);
}

TEST_CASE("every consistent determinate verdict tuple lands in exactly one row") {
  const Status hf[] = {Status::Holds, Status::Fails};
  int checked = 0;
  for (Status u : hf)
    for (Status b : hf)
      for (Status n : hf)
        for (Status m : hf) {
          // unital families satisfy everything else
          if (u == Status::Holds &&
              (b != Status::Holds || n != Status::Holds || m != Status::Holds))
            continue;
          ++checked;
          DimensionReport r = classify_from_verdicts(make_conditions(u, b, n, m), false);
          CHECK(r.dg != Dimension::Unknown);
          CHECK(r.wdg != Dimension::Unknown);
          CHECK(r.dg == r.db);
          CHECK(r.wdg == r.wdb);
          CHECK(dimension_rank(r.wdg) <= dimension_rank(r.dg));
          CHECK((r.dg == Dimension::Zero) == (u == Status::Holds));
          if (b == Status::Holds) CHECK(dimension_rank(r.dg) <= 2);  // biprojective cap
          if (b == Status::Fails) CHECK(r.dg == Dimension::Infinite);
        }
  CHECK(checked == 9);
}

TEST_CASE("unknown conditions block only the branches that need them") {
  // (B) holds, (N) unknown, (M) holds: dg pinned to [1, 2]
  {
    ConditionSet c = make_conditions(Status::Fails, Status::Holds, Status::Unknown,
                                     Status::Holds);
    DimensionReport r = classify_from_verdicts(c, false);
    CHECK(r.dg == Dimension::Unknown);
    REQUIRE(r.dg_interval.has_value());
    CHECK(r.dg_interval->first == Dimension::One);
    CHECK(r.dg_interval->second == Dimension::Two);
    CHECK(r.blocking.find("N") != std::string::npos);
  }
  // (N) unknown but (M) fails: both candidate rows give 2
  {
    ConditionSet c = make_conditions(Status::Fails, Status::Holds, Status::Unknown,
                                     Status::Fails);
    DimensionReport r = classify_from_verdicts(c, false);
    CHECK(r.dg == Dimension::Two);
    CHECK(r.wdg == Dimension::Unknown);  // the weak table still needs (N)
    REQUIRE(r.wdg_interval.has_value());
    CHECK(r.wdg_interval->first == Dimension::One);
    CHECK(r.wdg_interval->second == Dimension::Two);
  }
  // (B) unknown: dimensions unresolved beyond >= 1
  {
    ConditionSet c = make_conditions(Status::Fails, Status::Unknown, Status::Holds,
                                     Status::Holds);
    DimensionReport r = classify_from_verdicts(c, false);
    CHECK(r.dg == Dimension::Unknown);
    REQUIRE(r.dg_interval.has_value());
    CHECK(r.dg_interval->first == Dimension::One);
    CHECK(r.dg_interval->second == Dimension::Infinite);
    CHECK(r.blocking.find("B") != std::string::npos);
  }
}

TEST_CASE("strict mode demotes numeric verdicts to unknown") {
  ConditionSet c = make_conditions(Status::Fails, Status::Holds, Status::Holds, Status::Holds,
                                   /*exact=*/false);
  DimensionReport relaxed = classify_from_verdicts(c, false);
  CHECK(relaxed.dg == Dimension::One);
  CHECK(relaxed.soundness == Soundness::Numeric);

  DimensionReport strict = classify_from_verdicts(c, true);
  CHECK(strict.dg == Dimension::Unknown);
  CHECK(strict.blocking.find("B") != std::string::npos);

  // exact failures survive strict mode
  ConditionSet fail_b = make_conditions(Status::Fails, Status::Fails, Status::Holds,
                                        Status::Holds, /*exact=*/false);
  fail_b.biprojective.soundness = Soundness::Exact;
  fail_b.unital.soundness = Soundness::Exact;
  DimensionReport inf_report = classify_from_verdicts(fail_b, true);
  CHECK(inf_report.dg == Dimension::Infinite);
}

TEST_CASE("classification refuses non-algebras") {
  KotheSet bad = KotheSet::power_series(0.5, AlphaRule::linear(),
                                        IndexSet(IndexKind::Naturals, 256));
  CHECK_THROWS_AS((void)classify_dimensions(bad), NotAnAlgebraError);
}

TEST_CASE("report rendering mentions the dimensions and conditions") {
  DimensionReport r = classify_dimensions(rapidly_decreasing());
  std::string table = render_report_table(r);
  CHECK(table.find("dg") != std::string::npos);
  CHECK(table.find("= 1") != std::string::npos);
  CHECK(table.find("exact") != std::string::npos);
  CHECK(table.find("grid") != std::string::npos);  // the grid note is surfaced
}
