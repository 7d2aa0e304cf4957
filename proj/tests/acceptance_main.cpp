/*
 * Acceptance suite: one line per criterion, PASS or FAIL, exit code equal to
 * the number of failed criteria.  An optional argument points at the
 * directory of canonical spec files; inline copies are used when absent.
 */
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "kothedim/bar_complex.hpp"
#include "kothedim/classify.hpp"
#include "kothedim/cli.hpp"
#include "kothedim/report_json.hpp"
#include "kothedim/util.hpp"

using namespace kothedim;
using nlohmann::json;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << " - " << detail
            << "\n";
  if (!ok) ++failures;
}

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

struct CorpusEntry {
  std::string name;
  std::string inline_spec;
  KotheSet family;
};

std::vector<CorpusEntry> corpus() {
  const double inf = std::numeric_limits<double>::infinity();
  IndexSet nat(IndexKind::Naturals, 4096);
  IndexSet pairs(IndexKind::NaturalPairs, 64);
  std::vector<CorpusEntry> out;
  out.push_back({"l1", R"({"family":"l1"})",
                 KotheSet::single_weight(Weight::constant(1.0), nat).with_label("l1")});
  out.push_back({"product", R"({"family":"product"})",
                 KotheSet::finite_support_family(nat).with_label("product")});
  out.push_back({"s", R"({"family":"power_series","R":"inf","alpha":"log_n"})",
                 KotheSet::power_series(inf, AlphaRule::log_n(), nat).with_label("s")});
  out.push_back({"entire", R"({"family":"power_series","R":"inf","alpha":"linear"})",
                 KotheSet::power_series(inf, AlphaRule::linear(), nat).with_label("entire")});
  out.push_back({"disc_1", R"({"family":"power_series","R":1,"alpha":"linear"})",
                 KotheSet::power_series(1.0, AlphaRule::linear(), nat).with_label("disc_1")});
  out.push_back({"disc_2", R"({"family":"power_series","R":2,"alpha":"linear"})",
                 KotheSet::power_series(2.0, AlphaRule::linear(), nat).with_label("disc_2")});
  out.push_back({"matrix_example", R"({"family":"matrix_example"})",
                 KotheSet::matrix_example(pairs).with_label("matrix_example")});
  return out;
}

std::string spec_path_for(const CorpusEntry& entry, const std::string& specs_dir) {
  if (!specs_dir.empty()) {
    auto candidate = std::filesystem::path(specs_dir) / (entry.name + ".json");
    if (std::filesystem::exists(candidate)) return candidate.string();
  }
  auto tmp = std::filesystem::temp_directory_path() / ("kothedim_acc_" + entry.name + ".json");
  std::ofstream out(tmp);
  out << entry.inline_spec;
  return tmp.string();
}

// log-sum-exp seminorms: the matrix-example weights overflow the plain
// domain, so the nuclearity cross-check compares logarithms
double log_l1(const Element& x, const Weight& w, const IndexSet& idx) {
  double top = -kInf;
  std::vector<double> terms;
  for (auto& [ord, v] : x.coefficients()) {
    double lw = w.log_at(idx, ord);
    if (is_log_zero(lw) || v == Element::Coeff{}) continue;
    double t = std::log(std::abs(v)) + lw;
    terms.push_back(t);
    top = std::max(top, t);
  }
  if (terms.empty()) return -kInf;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return top + std::log(sum);
}

double log_sup(const Element& x, const Weight& w, const IndexSet& idx) {
  double top = -kInf;
  for (auto& [ord, v] : x.coefficients()) {
    double lw = w.log_at(idx, ord);
    if (is_log_zero(lw) || v == Element::Coeff{}) continue;
    top = std::max(top, std::log(std::abs(v)) + lw);
  }
  return top;
}

void criterion_1(const std::vector<CorpusEntry>& families, const std::string& specs_dir) {
  struct Expect {
    const char* dg;
    const char* wdg;
  };
  const std::map<std::string, Expect> expected = {
      {"l1", {"2", "2"}},      {"product", {"0", "0"}}, {"s", {"1", "1"}},
      {"entire", {"1", "1"}},  {"disc_1", {"0", "0"}},  {"disc_2", {"inf", "inf"}},
      {"matrix_example", {"2", "1"}},
  };
  Clock clock;
  std::ostringstream detail;
  bool ok = true;
  for (const CorpusEntry& entry : families) {
    std::ostringstream out, err;
    int code = cli_main({"analyze", spec_path_for(entry, specs_dir), "--quiet"}, out, err);
    if (code != exit_code::ok) {
      ok = false;
      detail << entry.name << " exit " << code << "; ";
      continue;
    }
    json doc = json::parse(out.str());
    const Expect& e = expected.at(entry.name);
    bool row_ok = doc["dimensions"]["dg"] == e.dg && doc["dimensions"]["db"] == e.dg &&
                  doc["dimensions"]["wdg"] == e.wdg && doc["dimensions"]["wdb"] == e.wdg &&
                  doc["soundness"] == "exact";
    if (entry.name == "matrix_example") {
      row_ok = row_ok && doc["witness"] == "bar_module" &&
               doc.value("witness_note", "").find("l1") != std::string::npos;
    }
    if (!row_ok) {
      ok = false;
      detail << entry.name << " got " << doc["dimensions"].dump() << " ("
             << doc["soundness"].get<std::string>() << "); ";
    }
  }
  double secs = clock.seconds();
  if (secs >= 10.0) {
    ok = false;
    detail << "corpus took " << secs << "s (budget 10s); ";
  }
  std::ostringstream summary;
  summary << "dimension corpus, 7 families, " << secs << "s";
  if (!detail.str().empty()) summary << " [" << detail.str() << "]";
  report(1, ok, summary.str());
}

void criterion_2(const std::vector<CorpusEntry>& families) {
  // expected rows: algebra, U, N, B, M; '-' means not checked
  struct Row {
    char algebra, unital, nuclear, biprojective, matrix;
  };
  const std::map<std::string, Row> rows = {
      {"l1", {'H', 'F', 'F', 'H', '-'}},       {"product", {'H', 'H', 'H', 'H', 'H'}},
      {"s", {'H', 'F', 'H', 'H', 'H'}},        {"entire", {'H', 'F', 'H', 'H', 'H'}},
      {"disc_1", {'H', 'H', 'H', 'H', 'H'}},   {"disc_2", {'H', 'F', '-', 'F', '-'}},
      {"matrix_example", {'H', 'F', 'H', 'H', 'F'}},
  };
  bool ok = true;
  std::ostringstream detail;
  auto match = [](char want, const Verdict& v) {
    if (want == '-') return true;
    Status status = want == 'H' ? Status::Holds : Status::Fails;
    return v.status == status;
  };
  for (const CorpusEntry& entry : families) {
    const Row& row = rows.at(entry.name);
    Verdict a = check_algebra(entry.family);
    Verdict u = check_unital(entry.family);
    Verdict n = check_nuclear(entry.family);
    Verdict b = check_biprojective(entry.family);
    Verdict m = check_matrix(entry.family);
    bool row_ok = match(row.algebra, a) && match(row.unital, u) && match(row.nuclear, n) &&
                  match(row.biprojective, b) && match(row.matrix, m);
    if (entry.name == "disc_2") row_ok = row_ok && b.fails() && b.exact();
    if (!row_ok) {
      ok = false;
      detail << entry.name << "=(" << a.summary() << "," << u.summary() << "," << n.summary()
             << "," << b.summary() << "," << m.summary() << ") ";
    }
  }
  report(2, ok, ok ? "condition rows match on all 7 families" : detail.str());
}

void criterion_3(const std::vector<CorpusEntry>& families) {
  DominationOptions numeric;
  numeric.use_closed_forms = false;
  int certificates = 0, entries = 0, violations = 0;
  std::ostringstream detail;

  auto audit = [&](const DominationCertificate& cert, const KotheSet& from, const KotheSet& to,
                   const std::string& what) {
    ++certificates;
    entries += static_cast<int>(cert.entries.size());
    auto check = verify_certificate(cert, from, to);
    bool margins_ok = true;
    for (const CertEntry& e : cert.entries) margins_ok = margins_ok && e.margin >= 0.0;
    if (!check.ok || !margins_ok || cert.entries.empty()) {
      ++violations;
      detail << what << ": " << (check.ok ? "bad margin" : check.detail) << "; ";
    }
  };

  for (const CorpusEntry& entry : families) {
    const KotheSet& P = entry.family;
    KotheSet squared = power_set(P, 2.0);

    Verdict algebra = dominates(P, squared, numeric);
    if (!algebra.holds()) {
      ++violations;
      detail << entry.name << ": no numeric algebra certificate; ";
      continue;
    }
    audit(algebra.certificates[0], P, squared, entry.name + " P<P^2");
    audit(bar_module_certificate(P, algebra.certificates[0], numeric), bar_set(P),
          product_set(P, bar_set(P)), entry.name + " bar module");

    Verdict square_down = dominates(squared, P, numeric);
    if (square_down.holds()) {
      audit(square_down.certificates[0], squared, P, entry.name + " P^2<P");
      BarProductCertificates both = bar_product_certificates(
          P, algebra.certificates[0], square_down.certificates[0], numeric);
      audit(both.forward, product_set(bar_set(P), P), P, entry.name + " bar product fwd");
      audit(both.reverse, P, product_set(bar_set(P), P), entry.name + " bar product rev");

      Verdict cube = dominates(power_set(P, 3.0), squared, numeric);
      if (cube.holds()) {
        audit(power_reduction_certificate(P, 2.0, 3.0, cube.certificates[0], numeric), squared,
              P, entry.name + " power reduction");
      } else {
        ++violations;
        detail << entry.name << ": no P^3<P^2 certificate; ";
      }
    } else if (entry.name != "disc_2") {
      ++violations;
      detail << entry.name << ": missing P^2<P certificate; ";
    }
  }
  std::ostringstream summary;
  summary << certificates << " certificates, " << entries << " entries re-verified, "
          << violations << " violations";
  if (violations) summary << " [" << detail.str() << "]";
  report(3, violations == 0, summary.str());
}

void criterion_4() {
  Clock clock;
  bool ok = true;
  std::ostringstream detail;

  IdentityScanReport d2 = verify_d_squared(5, 5);
  if (!d2.ok() || d2.cases < 3905) {
    ok = false;
    detail << "d^2 scan: " << d2.cases << " cases, " << d2.violations.size()
           << " violations; ";
  }

  int diag_violations = 0;
  bool diag_identity_ok = true;
  for (std::int32_t i = 1; i <= 100 && diag_identity_ok; ++i) {
    for (int n = 1; n <= 4; ++n) {
      Chain d = differential(Chain::diagonal_basis(i, n + 1));
      if (n % 2 == 1) {
        diag_identity_ok = d.terms().size() == 1 &&
                           d.at(Chain::Tuple(static_cast<std::size_t>(n), i)) ==
                               Chain::Coeff{1.0};
      } else {
        diag_identity_ok = d.empty();
      }
      if (!diag_identity_ok) break;
    }
  }
  if (!diag_identity_ok) {
    ok = false;
    detail << "diagonal contraction identity failed; ";
  }

  for (int arity = 2; arity <= 4; ++arity) {
    IdentityScanReport inv = diagonal_invariance(4, arity);
    diag_violations += static_cast<int>(inv.violations.size());
  }
  if (diag_violations != 0) {
    ok = false;
    detail << diag_violations << " diagonal-invariance violations; ";
  }

  double secs = clock.seconds();
  if (secs >= 5.0) {
    ok = false;
    detail << "took " << secs << "s (budget 5s); ";
  }
  std::ostringstream summary;
  summary << d2.cases << " d^2 cases, diagonal identity to i=100, invariance scans clean, "
          << secs << "s";
  if (!detail.str().empty()) summary << " [" << detail.str() << "]";
  report(4, ok, summary.str());
}

void criterion_5(const std::vector<CorpusEntry>& families) {
  bool ok = true;
  std::ostringstream detail;
  for (const CorpusEntry& entry : families) {
    OpennessReport r = openness_ratio(entry.family, 1);
    if (entry.name == "disc_2") {
      bool diverging = r.status == OpennessStatus::Diverging;
      bool trace_ok = false;
      for (const auto& s : r.sources) {
        if (s.status != OpennessStatus::Diverging || s.trace.points.size() < 4) continue;
        bool increasing = true;
        for (std::size_t t = 0; t + 1 < s.trace.points.size(); ++t)
          increasing = increasing && s.trace.points[t].value < s.trace.points[t + 1].value;
        trace_ok = increasing && s.trace.points.front().value > 0 &&
                   s.trace.points.back().value / s.trace.points.front().value > 4.0;
        if (trace_ok) break;
      }
      if (!diverging || !trace_ok) {
        ok = false;
        detail << "disc_2 expected a diverging trace; ";
      }
    } else {
      bool bounded = r.status == OpennessStatus::Bounded && r.certificate.has_value();
      if (bounded) {
        auto check =
            verify_certificate(*r.certificate, power_set(entry.family, 2.0), entry.family);
        bounded = check.ok;
      }
      if (!bounded) {
        ok = false;
        detail << entry.name << " expected bounded-with-certificate, got "
               << openness_status_name(r.status) << "; ";
      }
    }
  }
  report(5, ok,
         ok ? "openness(n=1) diverges exactly on disc_2, certificates elsewhere"
            : detail.str());
}

void criterion_6(const std::vector<CorpusEntry>& families) {
  std::mt19937_64 rng(20260808);
  bool ok = true;
  int families_checked = 0, samples = 0, violations = 0;
  std::ostringstream detail;
  for (const CorpusEntry& entry : families) {
    Verdict n = check_nuclear(entry.family);
    if (!(n.holds() && n.exact())) continue;
    ++families_checked;
    if (n.nuclear_witness.empty()) {
      ok = false;
      detail << entry.name << ": no witness attached; ";
      continue;
    }
    const IndexSet& idx = entry.family.index_set();
    std::uniform_int_distribution<std::int64_t> pick(1, idx.count());
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (const NuclearWitness& w : n.nuclear_witness) {
      Weight p = entry.family.generator(w.source_k);
      Weight q = entry.family.generator(w.target_m);
      for (int rep = 0; rep < 100; ++rep) {
        Element x;
        for (int t = 0; t < 10; ++t) x.set(pick(rng), {coeff(rng), coeff(rng)});
        ++samples;
        double lhs = log_l1(x, p, idx);
        double rhs = std::log(w.sum) + log_sup(x, q, idx);
        if (lhs > rhs + 1e-9) {
          ++violations;
          if (violations < 4)
            detail << entry.name << " k=" << w.source_k << " lhs-rhs=" << (lhs - rhs) << "; ";
        }
      }
    }
  }
  std::ostringstream summary;
  summary << families_checked << " nuclear families, " << samples << " sampled elements, "
          << violations << " violations";
  if (!detail.str().empty()) summary << " [" << detail.str() << "]";
  report(6, ok && violations == 0 && families_checked >= 5, summary.str());
}

void criterion_7() {
  std::mt19937_64 rng(777);
  bool ok = true;
  std::ostringstream detail;
  int unital_numeric = 0, both_determinate = 0;

  for (int rep = 0; rep < 200; ++rep) {
    std::uniform_real_distribution<double> drift(-0.6, 0.25);
    std::uniform_real_distribution<double> noise(0.0, 0.05);
    std::uniform_real_distribution<double> bump(0.0, 0.08);
    std::int64_t trunc = 256;
    double slope = drift(rng);
    std::vector<Weight> weights;
    std::vector<double> ln_cur(static_cast<std::size_t>(trunc));
    double acc = 0.0;
    for (std::int64_t i = 0; i < trunc; ++i) {
      acc += slope + noise(rng);
      ln_cur[static_cast<std::size_t>(i)] = acc;
    }
    for (int g = 0; g < 4; ++g) {
      std::vector<std::pair<std::int64_t, double>> values;
      for (std::int64_t i = 0; i < trunc; ++i)
        values.emplace_back(i + 1, std::exp(ln_cur[static_cast<std::size_t>(i)]));
      weights.push_back(Weight::finite_support(std::move(values)));
      double step = 0.0;
      for (std::int64_t i = 0; i < trunc; ++i) {
        step += bump(rng);
        ln_cur[static_cast<std::size_t>(i)] += step / 8.0;
      }
    }
    KotheSet P =
        KotheSet::explicit_family(std::move(weights), IndexSet(IndexKind::Naturals, trunc));

    Verdict u = check_unital(P);
    if (u.holds() && !u.exact()) {
      ++unital_numeric;
      Verdict n = check_nuclear(P);
      Verdict m = check_matrix(P);
      Verdict b;
      try {
        b = check_biprojective(P);
      } catch (const NotAnAlgebraError&) {
        ok = false;
        detail << "rep " << rep << ": exact algebra failure on an explicit family; ";
        continue;
      }
      if (n.fails() || m.fails() || b.fails()) {
        ok = false;
        detail << "rep " << rep << ": a condition fails under numeric unitality; ";
      }
    }

    try {
      DimensionReport r = classify_dimensions(P);
      if (r.dg != Dimension::Unknown && r.wdg != Dimension::Unknown) {
        ++both_determinate;
        if (dimension_rank(r.dg) < dimension_rank(r.wdg)) {
          ok = false;
          detail << "rep " << rep << ": dg < wdg; ";
        }
      }
    } catch (const NotAnAlgebraError&) {
      ok = false;
      detail << "rep " << rep << ": classifier saw an exact algebra failure; ";
    }
  }

  // table exhaustiveness over the consistent determinate tuples
  int tuples = 0;
  const Status hf[] = {Status::Holds, Status::Fails};
  for (Status u : hf)
    for (Status b : hf)
      for (Status n : hf)
        for (Status m : hf) {
          if (u == Status::Holds &&
              (b != Status::Holds || n != Status::Holds || m != Status::Holds))
            continue;
          ++tuples;
          ConditionSet c;
          c.algebra = Verdict::holds_exact("enumerated");
          auto mk = [](Status s) {
            Verdict v;
            v.status = s;
            v.soundness = Soundness::Exact;
            return v;
          };
          c.unital = mk(u);
          c.biprojective = mk(b);
          c.nuclear = mk(n);
          c.matrix = mk(m);
          DimensionReport r = classify_from_verdicts(c, false);
          if (r.dg == Dimension::Unknown || r.wdg == Dimension::Unknown ||
              dimension_rank(r.wdg) > dimension_rank(r.dg)) {
            ok = false;
            detail << "tuple not classified determinately; ";
          }
        }
  if (tuples != 9) {
    ok = false;
    detail << "expected 9 consistent tuples, saw " << tuples << "; ";
  }

  std::ostringstream summary;
  summary << "200 random families, " << unital_numeric << " numerically unital, "
          << both_determinate << " fully determinate, exhaustive table of " << tuples
          << " tuples";
  if (!detail.str().empty()) summary << " [" << detail.str() << "]";
  report(7, ok, summary.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string specs_dir = argc > 1 ? argv[1] : "";
  auto families = corpus();
  criterion_1(families, specs_dir);
  criterion_2(families);
  criterion_3(families);
  criterion_4();
  criterion_5(families);
  criterion_6(families);
  criterion_7();
  if (failures == 0)
    std::cout << "all acceptance criteria satisfied\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures;
}
