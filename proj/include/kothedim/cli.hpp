#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kothedim {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 2;        // parse or validation error
inline constexpr int unresolved = 3;   // Unknown result under --strict
inline constexpr int not_an_algebra = 4;
inline constexpr int internal = 5;     // internal consistency failure
}  // namespace exit_code

/// Command dispatch: analyze | check | bar | eval.  Reports go to `out`,
/// human-readable renderings and errors to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kothedim
