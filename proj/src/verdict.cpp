#include "kothedim/verdict.hpp"

namespace kothedim {

std::string status_name(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Fails:
      return "fails";
    case Status::Unknown:
      return "unknown";
  }
  return "?";
}

std::string soundness_name(Soundness s) {
  return s == Soundness::Exact ? "exact" : "numeric";
}

Verdict Verdict::holds_exact(std::string reason) {
  return Verdict{Status::Holds, Soundness::Exact, std::move(reason), {}, {}, {}};
}

Verdict Verdict::fails_exact(std::string reason) {
  return Verdict{Status::Fails, Soundness::Exact, std::move(reason), {}, {}, {}};
}

Verdict Verdict::holds_numeric(std::string reason) {
  return Verdict{Status::Holds, Soundness::Numeric, std::move(reason), {}, {}, {}};
}

Verdict Verdict::unknown(std::string reason) {
  return Verdict{Status::Unknown, Soundness::Numeric, std::move(reason), {}, {}, {}};
}

Status Verdict::effective_status(bool strict) const {
  if (strict && status == Status::Holds && soundness == Soundness::Numeric)
    return Status::Unknown;
  return status;
}

std::string Verdict::summary() const {
  std::string s = status_name(status) + "(" + soundness_name(soundness) + ")";
  if (!reason.empty()) s += " " + reason;
  return s;
}

}  // namespace kothedim
