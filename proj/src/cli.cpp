#include "kothedim/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kothedim/bar_complex.hpp"
#include "kothedim/classify.hpp"
#include "kothedim/report_json.hpp"
#include "kothedim/spec_file.hpp"
#include "kothedim/util.hpp"

namespace kothedim {

namespace {

using nlohmann::json;

struct CommonArgs {
  std::string spec_path;
  std::int64_t truncation = 0;  // 0 = keep the value from the spec file
  bool strict = false;
  bool quiet = false;
  std::string out_path;
};

ParsedSpec load_spec(const CommonArgs& args) {
  ParsedSpec spec = parse_spec_file(args.spec_path);
  if (args.truncation > 0) {
    IndexSet idx(spec.set.index_set().kind(), args.truncation);
    // rebuild the family over the overridden truncation
    switch (spec.set.kind()) {
      case FamilyKind::SingleWeight:
        spec.set = KotheSet::single_weight(spec.set.single_weight_rule(), idx)
                       .with_label(spec.set.label());
        break;
      case FamilyKind::FiniteSupportFamily:
        spec.set = KotheSet::finite_support_family(idx).with_label(spec.set.label());
        break;
      case FamilyKind::PowerSeries:
        spec.set = KotheSet::power_series(spec.set.power_series_radius(),
                                          spec.set.power_series_alpha(), idx)
                       .with_label(spec.set.label());
        break;
      case FamilyKind::MatrixExample:
        spec.set = KotheSet::matrix_example(idx).with_label(spec.set.label());
        break;
      default:
        throw SpecValidationError("truncation",
                                  "cannot override the truncation of this family kind");
    }
  }
  if (args.strict) spec.options.strict = true;
  return spec;
}

void emit_json(const json& doc, const CommonArgs& args, std::ostream& out, std::ostream& err) {
  std::string text = doc.dump(2);
  if (!args.out_path.empty()) {
    std::ofstream file(args.out_path);
    if (!file) {
      err << "cannot write report to " << args.out_path << "\n";
      throw SpecValidationError("", "unwritable output path");
    }
    file << text << "\n";
  } else {
    out << text << "\n";
  }
}

bool report_has_unknown(const DimensionReport& r) {
  return r.dg == Dimension::Unknown || r.wdg == Dimension::Unknown;
}

int run_analyze(const CommonArgs& args, std::ostream& out, std::ostream& err) {
  ParsedSpec spec = load_spec(args);
  ClassifyOptions copts;
  copts.conditions = spec.options.conditions;
  copts.strict = spec.options.strict;
  DimensionReport report = classify_dimensions(spec.set, copts);
  emit_json(to_json(report), args, out, err);
  if (!args.quiet) err << render_report_table(report);
  if (spec.options.strict && report_has_unknown(report)) return exit_code::unresolved;
  return exit_code::ok;
}

int run_check(const std::string& condition, const CommonArgs& args, std::ostream& out,
              std::ostream& err) {
  ParsedSpec spec = load_spec(args);
  const ConditionOptions& opts = spec.options.conditions;
  Verdict verdict;
  if (condition == "U")
    verdict = check_unital(spec.set, opts);
  else if (condition == "N")
    verdict = check_nuclear(spec.set, opts);
  else if (condition == "B")
    verdict = check_biprojective(spec.set, opts);
  else if (condition == "M")
    verdict = check_matrix(spec.set, std::nullopt, opts);
  else if (condition == "algebra")
    verdict = check_algebra(spec.set, opts);
  else {
    err << "unknown condition '" << condition << "' (expected U, N, B, M or algebra)\n";
    return exit_code::usage;
  }
  json doc = to_json(verdict);
  doc["condition"] = condition;
  doc["family"] = spec.set.describe();
  emit_json(doc, args, out, err);
  if (!args.quiet)
    err << condition << " on " << spec.set.describe() << ": " << verdict.summary() << "\n";
  if (spec.options.strict && verdict.effective_status(true) == Status::Unknown)
    return exit_code::unresolved;
  return exit_code::ok;
}

int run_bar(const CommonArgs& args, int arity, std::int64_t scan_truncation,
            const std::string& csv_path, std::ostream& out, std::ostream& err) {
  ParsedSpec spec = load_spec(args);
  IdentityScanReport d2 = verify_d_squared(scan_truncation, std::max(arity, 3));
  json diag = json::object();
  for (int a = 2; a <= arity; ++a)
    diag[std::to_string(a)] = to_json(diagonal_invariance(scan_truncation, a));
  OpennessReport openness = openness_ratio(spec.set, 1, spec.options.conditions.dom);

  json doc{{"family", spec.set.describe()},
           {"scan_truncation", scan_truncation},
           {"max_arity", arity},
           {"d_squared", to_json(d2)},
           {"diagonal_invariance", diag},
           {"openness", to_json(openness)}};
  emit_json(doc, args, out, err);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) {
      err << "cannot write trace CSV to " << csv_path << "\n";
      return exit_code::usage;
    }
    csv << "N,k,m,R\n";
    for (const auto& s : openness.sources) {
      if (s.entry) {
        csv << s.entry->verified_up_to << "," << s.entry->source_k << "," << s.entry->target_m
            << "," << s.entry->ln_constant << "\n";
      } else {
        for (const auto& p : s.trace.points)
          csv << p.truncation << "," << s.trace.source_k << "," << s.trace.target_m << ","
              << p.value << "\n";
      }
    }
  }
  if (!args.quiet) {
    err << "d^2 = 0: " << d2.cases << " cases, " << d2.violations.size() << " violations\n";
    err << "openness(n=1): " << openness_status_name(openness.status) << "\n";
  }
  return exit_code::ok;
}

int run_eval(const CommonArgs& args, std::int64_t weight_k, const std::string& element_path,
             std::ostream& out, std::ostream& err) {
  ParsedSpec spec = load_spec(args);
  if (weight_k < 1) {
    err << "--weight must be >= 1\n";
    return exit_code::usage;
  }
  std::ifstream in(element_path);
  if (!in) {
    err << "cannot open element file: " << element_path << "\n";
    return exit_code::usage;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    err << "element file parse error: " << e.what() << "\n";
    return exit_code::usage;
  }
  if (!doc.is_array()) {
    err << "element file must be an array of [index, re, im] rows\n";
    return exit_code::usage;
  }
  Element x;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& row = doc[i];
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_integer() ||
        !row[1].is_number() || !row[2].is_number()) {
      err << "element row " << i << " must be [index, re, im]\n";
      return exit_code::usage;
    }
    x.set(row[0].get<std::int64_t>(),
          {row[1].get<double>(), row[2].get<double>()});
  }
  const IndexSet& idx = spec.set.index_set();
  Weight w = spec.set.generator(weight_k);
  json result{{"family", spec.set.describe()},
              {"weight_k", weight_k},
              {"l1", json_real(seminorm_l1(x, w, idx))},
              {"sup", json_real(seminorm_sup(x, w, idx))}};
  emit_json(result, args, out, err);
  return exit_code::ok;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certificate-based analysis of Kothe sequence algebras"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string condition;
  int arity = 4;
  std::int64_t scan_truncation = 4;
  std::string csv_path;
  std::int64_t weight_k = 1;
  std::string element_path;

  auto add_common = [&](CLI::App* cmd, bool with_family_trunc) {
    cmd->add_option("spec", common.spec_path, "spec file (JSON)")->required();
    if (with_family_trunc)
      cmd->add_option("--trunc", common.truncation, "override the working truncation");
    cmd->add_flag("--strict", common.strict, "treat numeric-only verdicts as unknown");
    cmd->add_flag("--quiet", common.quiet, "suppress the human-readable rendering");
    cmd->add_option("--out", common.out_path, "write the JSON report here");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "compute the four homological dimensions");
  add_common(analyze, true);

  CLI::App* check = app.add_subcommand("check", "decide one condition");
  check->add_option("condition", condition, "U | N | B | M | algebra")->required();
  add_common(check, true);

  CLI::App* bar = app.add_subcommand("bar", "bar-complex identities and openness diagnostic");
  add_common(bar, false);
  bar->add_option("--arity", arity, "largest tuple arity scanned")->check(CLI::Range(2, 8));
  bar->add_option("--trunc", scan_truncation, "index bound for the identity scans")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{16}));
  bar->add_option("--csv", csv_path, "write openness traces as CSV");

  CLI::App* eval = app.add_subcommand("eval", "evaluate seminorms of an element");
  add_common(eval, true);
  eval->add_option("--weight", weight_k, "generator index k")->required();
  eval->add_option("--element", element_path, "element file (JSON)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return exit_code::ok;
    }
    err << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(common, out, err);
    if (app.got_subcommand(check)) return run_check(condition, common, out, err);
    if (app.got_subcommand(bar))
      return run_bar(common, arity, scan_truncation, csv_path, out, err);
    if (app.got_subcommand(eval)) return run_eval(common, weight_k, element_path, out, err);
    err << "no subcommand given\n";
    return exit_code::usage;
  } catch (const SpecValidationError& e) {
    err << "spec error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const NotAnAlgebraError& e) {
    err << e.what() << "\n";
    return exit_code::not_an_algebra;
  } catch (const InternalConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return exit_code::internal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return exit_code::internal;
  }
}

}  // namespace kothedim
