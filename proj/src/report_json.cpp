#include "kothedim/report_json.hpp"

#include <cmath>

namespace kothedim {

using nlohmann::json;

json json_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json to_json(const CertEntry& e) {
  return json{{"k", e.source_k},
              {"m", e.target_m},
              {"lnC", json_real(e.ln_constant)},
              {"verified_up_to", e.verified_up_to},
              {"margin", json_real(e.margin)}};
}

json to_json(const DominationCertificate& c) {
  json entries = json::array();
  for (const auto& e : c.entries) entries.push_back(to_json(e));
  return json{{"source", c.source}, {"target", c.target}, {"entries", entries}};
}

json to_json(const TraceSeries& t) {
  json points = json::array();
  for (const auto& p : t.points)
    points.push_back(json{{"truncation", p.truncation}, {"value", json_real(p.value)}});
  json out{{"label", t.label}, {"points", points}};
  if (t.source_k) out["k"] = t.source_k;
  if (t.target_m) out["m"] = t.target_m;
  return out;
}

json to_json(const NuclearWitness& w) {
  return json{{"k", w.source_k},
              {"m", w.target_m},
              {"sum", json_real(w.sum)},
              {"tail_fraction", json_real(w.tail_fraction)},
              {"tail_flat", w.tail_flat}};
}

json to_json(const Verdict& v) {
  json out{{"status", status_name(v.status)},
           {"soundness", soundness_name(v.soundness)},
           {"reason", v.reason}};
  if (!v.certificates.empty()) {
    json certs = json::array();
    for (const auto& c : v.certificates) certs.push_back(to_json(c));
    out["certificates"] = certs;
  }
  if (!v.traces.empty()) {
    json traces = json::array();
    for (const auto& t : v.traces) traces.push_back(to_json(t));
    out["traces"] = traces;
  }
  if (!v.nuclear_witness.empty()) {
    json ws = json::array();
    for (const auto& w : v.nuclear_witness) ws.push_back(to_json(w));
    out["witness"] = ws;
  }
  return out;
}

namespace {

json dimension_json(Dimension d,
                    const std::optional<std::pair<Dimension, Dimension>>& interval) {
  if (d != Dimension::Unknown || !interval) return dimension_name(d);
  return json{{"unknown_in",
               json::array({dimension_name(interval->first), dimension_name(interval->second)})}};
}

}  // namespace

json to_json(const DimensionReport& r) {
  json out;
  out["family"] = r.family;
  if (!r.index_set.empty()) out["index_set"] = r.index_set;
  if (!r.grid_note.empty()) out["grid_note"] = r.grid_note;
  out["dimensions"] = json{{"dg", dimension_json(r.dg, r.dg_interval)},
                           {"db", dimension_json(r.db, r.dg_interval)},
                           {"wdg", dimension_json(r.wdg, r.wdg_interval)},
                           {"wdb", dimension_json(r.wdb, r.wdg_interval)}};
  out["verdicts"] = json{{"algebra", to_json(r.verdicts.algebra)},
                         {"U", to_json(r.verdicts.unital)},
                         {"N", to_json(r.verdicts.nuclear)},
                         {"B", to_json(r.verdicts.biprojective)},
                         {"M", to_json(r.verdicts.matrix)}};
  out["witness"] = witness_name(r.witness);
  out["weak_witness"] = witness_name(r.weak_witness);
  if (!r.witness_note.empty()) out["witness_note"] = r.witness_note;
  out["soundness"] = soundness_name(r.soundness);
  if (!r.blocking.empty()) out["blocking"] = r.blocking;
  if (!r.notes.empty()) out["notes"] = r.notes;
  out["strict"] = r.strict;
  return out;
}

json to_json(const IdentityScanReport& r) {
  json by_arity = json::object();
  for (auto& [arity, count] : r.cases_by_arity) by_arity[std::to_string(arity)] = count;
  return json{{"cases", r.cases}, {"cases_by_arity", by_arity}, {"violations", r.violations}};
}

json to_json(const OpennessReport& r) {
  json sources = json::array();
  for (const auto& s : r.sources) {
    json row{{"k", s.source_k}, {"status", openness_status_name(s.status)}};
    if (s.entry) row["entry"] = to_json(*s.entry);
    if (!s.trace.points.empty()) row["trace"] = to_json(s.trace);
    sources.push_back(row);
  }
  json out{{"degree", r.degree},
           {"status", openness_status_name(r.status)},
           {"sources", sources},
           {"consistent_with_biprojectivity", r.consistent_with_biprojectivity}};
  if (r.certificate) out["certificate"] = to_json(*r.certificate);
  if (!r.biprojectivity_note.empty()) out["biprojectivity_note"] = r.biprojectivity_note;
  return out;
}

}  // namespace kothedim
