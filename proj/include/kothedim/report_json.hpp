#pragma once

#include <json.hpp>

#include "kothedim/bar_complex.hpp"
#include "kothedim/classify.hpp"
#include "kothedim/conditions.hpp"
#include "kothedim/verdict.hpp"

namespace kothedim {

/// Finite values stay numbers; infinities and NaN become strings so the
/// emitted JSON is valid and byte-stable.
nlohmann::json json_real(double v);

nlohmann::json to_json(const CertEntry& e);
nlohmann::json to_json(const DominationCertificate& c);
nlohmann::json to_json(const TraceSeries& t);
nlohmann::json to_json(const NuclearWitness& w);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const DimensionReport& r);
nlohmann::json to_json(const IdentityScanReport& r);
nlohmann::json to_json(const OpennessReport& r);

}  // namespace kothedim
