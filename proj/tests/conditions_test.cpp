#include <doctest.h>

#include <cmath>
#include <random>

#include "kothedim/conditions.hpp"
#include "kothedim/util.hpp"
#include "test_support.hpp"

using namespace kothedim;
using namespace kothedim::testing;

TEST_CASE("algebra condition across the corpus") {
  CHECK(check_algebra(l1_family()).holds());
  CHECK(check_algebra(l1_family()).exact());

  Verdict m = check_algebra(matrix_family());
  CHECK(m.holds());
  CHECK(m.exact());
  CHECK(m.reason.find("at least 1") != std::string::npos);

  CHECK(check_algebra(product_family()).exact());
  CHECK(check_algebra(disc_radius_one()).holds());
  CHECK(check_algebra(disc_radius_two()).holds());

  // radius below 1: squares leave the grid
  KotheSet bad = KotheSet::power_series(0.5, AlphaRule::linear(),
                                        IndexSet(IndexKind::Naturals, 1024));
  Verdict v = check_algebra(bad);
  CHECK(v.fails());
  CHECK(v.exact());
}

TEST_CASE("unital condition across the corpus") {
  CHECK(check_unital(l1_family()).fails());
  CHECK(check_unital(l1_family()).exact());
  CHECK(check_unital(product_family()).holds());
  CHECK(check_unital(rapidly_decreasing()).fails());
  CHECK(check_unital(entire_functions()).fails());
  Verdict d1 = check_unital(disc_radius_one());
  CHECK(d1.holds());
  CHECK(d1.exact());
  CHECK(check_unital(disc_radius_two()).fails());
  CHECK(check_unital(matrix_family()).fails());

  // radius one with slowly growing exponents is not unital
  KotheSet slow = KotheSet::power_series(1.0, AlphaRule::log_n(),
                                         IndexSet(IndexKind::Naturals, 1024));
  CHECK(check_unital(slow).fails());
}

TEST_CASE("nuclearity condition across the corpus") {
  CHECK(check_nuclear(l1_family()).fails());
  CHECK(check_nuclear(l1_family()).exact());
  CHECK(check_nuclear(product_family()).holds());
  Verdict s = check_nuclear(rapidly_decreasing());
  CHECK(s.holds());
  CHECK(s.exact());  // sup (log n)/log n = 1
  CHECK(check_nuclear(entire_functions()).holds());
  CHECK(check_nuclear(disc_radius_one()).holds());
  CHECK(check_nuclear(matrix_family()).holds());

  // sqrt(log n) exponents grow too slowly for nuclearity at R = inf
  KotheSet slow = KotheSet::power_series(std::numeric_limits<double>::infinity(),
                                         AlphaRule::sqrt_log_n(),
                                         IndexSet(IndexKind::Naturals, 1024));
  Verdict v = check_nuclear(slow);
  CHECK(v.fails());
  CHECK(v.exact());
}

TEST_CASE("biprojectivity condition across the corpus") {
  CHECK(check_biprojective(l1_family()).holds());
  CHECK(check_biprojective(product_family()).holds());
  CHECK(check_biprojective(rapidly_decreasing()).holds());
  CHECK(check_biprojective(entire_functions()).holds());
  CHECK(check_biprojective(disc_radius_one()).holds());
  Verdict d2 = check_biprojective(disc_radius_two());
  CHECK(d2.fails());
  CHECK(d2.exact());
  Verdict m = check_biprojective(matrix_family());
  CHECK(m.holds());
  CHECK(m.exact());
  CHECK(!m.certificates.empty());  // scan certificates attached to the closed form

  KotheSet bad = KotheSet::power_series(0.5, AlphaRule::linear(),
                                        IndexSet(IndexKind::Naturals, 256));
  CHECK_THROWS_AS((void)check_biprojective(bad), NotAnAlgebraError);
}

TEST_CASE("matrix condition across the corpus") {
  Verdict s = check_matrix(rapidly_decreasing());
  CHECK(s.holds());
  CHECK(s.exact());
  CHECK(s.reason.find("nondecreasing") != std::string::npos);

  Verdict d1 = check_matrix(disc_radius_one());
  CHECK(d1.holds());
  CHECK(d1.reason.find("unital") != std::string::npos);

  Verdict m = check_matrix(matrix_family());
  CHECK(m.fails());
  CHECK(m.exact());

  CHECK(check_matrix(l1_family()).holds());
  CHECK(check_matrix(product_family()).holds());
}

TEST_CASE("the full condition rows match the expected corpus table") {
  struct Row {
    KotheSet family;
    Status algebra, unital, biprojective;
    std::optional<Status> nuclear, matrix;
  };
  const Row rows[] = {
      {l1_family(), Status::Holds, Status::Fails, Status::Holds, Status::Fails, std::nullopt},
      {product_family(), Status::Holds, Status::Holds, Status::Holds, Status::Holds,
       Status::Holds},
      {rapidly_decreasing(), Status::Holds, Status::Fails, Status::Holds, Status::Holds,
       Status::Holds},
      {disc_radius_one(), Status::Holds, Status::Holds, Status::Holds, Status::Holds,
       Status::Holds},
      {disc_radius_two(), Status::Holds, Status::Fails, Status::Fails, std::nullopt,
       std::nullopt},
      {matrix_family(), Status::Holds, Status::Fails, Status::Holds, Status::Holds,
       Status::Fails},
  };
  for (const Row& row : rows) {
    CAPTURE(row.family.describe());
    CHECK(check_algebra(row.family).status == row.algebra);
    CHECK(check_unital(row.family).status == row.unital);
    CHECK(check_biprojective(row.family).status == row.biprojective);
    if (row.nuclear) CHECK(check_nuclear(row.family).status == *row.nuclear);
    if (row.matrix) CHECK(check_matrix(row.family).status == *row.matrix);
  }
}

TEST_CASE("a unital verdict forces the other three") {
  for (const KotheSet& P : {product_family(), disc_radius_one()}) {
    CAPTURE(P.describe());
    REQUIRE(check_unital(P).holds());
    CHECK(check_nuclear(P).holds());
    CHECK(check_biprojective(P).holds());
    CHECK(check_matrix(P).holds());
  }
}

TEST_CASE("alpha + beta = 1 identically for every witness kind") {
  std::vector<double> growth = {0.0, 2.5, 1.0, 2.5, -3.0};
  std::map<std::pair<std::int64_t, std::int64_t>, double> table{{{1, 2}, 0.25},
                                                                {{3, 3}, -1.5}};
  for (const MatrixWitness& w :
       {MatrixWitness::all_zero(), MatrixWitness::all_one(), MatrixWitness::threshold_split(),
        MatrixWitness::user_table(table)}) {
    for (std::int64_t i = 1; i <= 5; ++i)
      for (std::int64_t j = 1; j <= 5; ++j)
        CHECK(w.alpha(i, j, growth) + w.beta(i, j, growth) == 1.0);
  }
}

TEST_CASE("witness scan on a bounded non-monotone family") {
  // oscillating weights defeat both shortcuts; the threshold split still works
  std::vector<Weight> weights;
  std::int64_t trunc = 64;
  for (int g = 1; g <= 3; ++g) {
    std::vector<std::pair<std::int64_t, double>> values;
    for (std::int64_t i = 1; i <= trunc; ++i)
      values.emplace_back(i, (i % 2 ? 0.9 : 1.1) * std::pow(1.25, g));
    weights.push_back(Weight::finite_support(std::move(values)));
  }
  KotheSet P = KotheSet::explicit_family(weights, IndexSet(IndexKind::Naturals, trunc));
  Verdict v = check_matrix(P);
  CHECK(v.holds());
  CHECK(!v.exact());
  REQUIRE(v.certificates.size() == 2);
  for (const auto& cert : v.certificates)
    for (const CertEntry& e : cert.entries) CHECK(e.margin >= 0.0);

  // an explicit all-ones split also verifies here
  Verdict one = check_matrix(P, MatrixWitness::all_one());
  CHECK(one.holds());
}

TEST_CASE("explicit families never receive exact verdicts") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 5; ++rep) {
    KotheSet P = random_explicit_family(rng);
    CAPTURE(rep);
    CHECK(!check_algebra(P).exact());
    CHECK(!check_unital(P).exact());
    CHECK(!check_nuclear(P).exact());
    CHECK(!check_matrix(P).exact());
    try {
      CHECK(!check_biprojective(P).exact());
    } catch (const NotAnAlgebraError&) {
      // an exact algebra failure would be required to get here
      CHECK(false);
    }
  }
}

TEST_CASE("nuclear witnesses: nondecreasing partial sums with flat last quarter") {
  ConditionOptions opts;
  for (const KotheSet& P : {matrix_family(), product_family()}) {
    CAPTURE(P.describe());
    auto witnesses = nuclear_witnesses(P, opts);
    REQUIRE(!witnesses.empty());
    for (const NuclearWitness& w : witnesses) {
      if (!w.tail_flat) continue;
      // independent recomputation of the partial sums at 3N/4 and N
      const IndexSet& idx = P.index_set();
      Weight p = P.generator(w.source_k);
      Weight q = P.generator(w.target_m);
      double total = 0.0, at_three_quarters = 0.0;
      std::int64_t tq = idx.prefix_count(std::max<std::int64_t>(1, 3 * idx.truncation() / 4));
      double prev = 0.0;
      for (std::int64_t t = 1; t <= idx.count(); ++t) {
        double gap = log_ratio(p.log_at(idx, t), q.log_at(idx, t));
        REQUIRE(gap < kInf);
        double term = gap == -kInf ? 0.0 : std::exp(gap);
        total += term;
        CHECK(total >= prev);  // nondecreasing partial sums
        prev = total;
        if (t == tq) at_three_quarters = total;
      }
      CHECK(total == doctest::Approx(w.sum).epsilon(1e-9));
      CHECK(total - at_three_quarters <= 1e-9 * total);
    }
  }
}

TEST_CASE("module action bound on basis and random elements") {
  KotheSet P = matrix_family();
  DominationOptions dopts;
  dopts.use_closed_forms = false;
  Verdict alg = dominates(P, power_set(P, 2.0), dopts);
  REQUIRE(alg.holds());
  DominationCertificate cert = bar_module_certificate(P, alg.certificates[0], dopts);

  const IndexSet& idx = P.index_set();
  {
    Element a = Element::basis(idx.ordinal_of({1, 2}));
    Element x = Element::basis(idx.ordinal_of({2, 1}));
    auto rows = module_action_bound(P, a, x, cert);
    for (const auto& row : rows) {
      CHECK(row.lhs == 0.0);  // disjoint supports multiply to zero
      CHECK(row.holds);
    }
  }
  {
    Element a = Element::basis(3);
    auto rows = module_action_bound(P, a, a, cert);
    for (const auto& row : rows) CHECK(row.holds);
  }
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 10; ++rep) {
    Element a = random_sparse_element(rng, idx.count(), 10);
    Element x = random_sparse_element(rng, idx.count(), 10);
    auto rows = module_action_bound(P, a, x, cert);
    for (const auto& row : rows) CHECK(row.lhs <= row.rhs * (1 + 1e-9) + 1e-300);
  }
}

TEST_CASE("single geometric weights: closed forms for summability") {
  IndexSet idx(IndexKind::Naturals, 2048);
  // ratio below 1/e against log exponents sums, above does not
  KotheSet fast = KotheSet::single_weight(Weight::geometric(0.25, AlphaRule::log_n()), idx);
  CHECK(check_unital(fast).holds());
  KotheSet slow = KotheSet::single_weight(Weight::geometric(0.5, AlphaRule::log_n()), idx);
  CHECK(check_unital(slow).fails());
  // but a single decaying weight is never an algebra
  CHECK(check_algebra(fast).fails());
}

TEST_CASE("numeric unitality: flat partial sums on a decaying explicit family") {
  std::vector<Weight> weights;
  std::int64_t trunc = 512;
  for (int g = 1; g <= 3; ++g) {
    std::vector<std::pair<std::int64_t, double>> values;
    for (std::int64_t i = 1; i <= trunc; ++i)
      values.emplace_back(i, g * std::exp(-0.1 * double(i)));
    weights.push_back(Weight::finite_support(std::move(values)));
  }
  KotheSet P = KotheSet::explicit_family(weights, IndexSet(IndexKind::Naturals, trunc));
  Verdict v = check_unital(P);
  CHECK(v.holds());
  CHECK(!v.exact());
  REQUIRE(!v.traces.empty());
  for (const auto& trace : v.traces) {
    REQUIRE(trace.points.size() >= 2);
    double prev = -1.0;
    for (const auto& p : trace.points) {
      CHECK(p.value >= prev);  // partial sums grow
      prev = p.value;
    }
  }

  // growing weights leave the question open instead
  std::vector<Weight> growing;
  for (int g = 1; g <= 3; ++g) {
    std::vector<std::pair<std::int64_t, double>> values;
    for (std::int64_t i = 1; i <= trunc; ++i)
      values.emplace_back(i, g * std::sqrt(double(i)));
    growing.push_back(Weight::finite_support(std::move(values)));
  }
  KotheSet Q = KotheSet::explicit_family(growing, IndexSet(IndexKind::Naturals, trunc));
  Verdict u = check_unital(Q);
  CHECK(u.status == Status::Unknown);
  CHECK(!u.traces.empty());
}
