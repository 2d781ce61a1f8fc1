#ifndef KMM_CLI_HPP
#define KMM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kmm::cli {

/// Exit codes: 0 success / agreement, 2 schema or usage violation,
/// 3 budget exceeded, 4 solver/oracle disagreement, 1 internal error.
constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_schema = 2;
constexpr int exit_budget = 3;
constexpr int exit_mismatch = 4;

/// Run one command. `args` excludes the program name. Input documents
/// come from --input paths or `in`; the JSON result goes to `out` (or a
/// --out path), diagnostics to `err`. All randomness is seeded, so
/// equal invocations produce byte-identical output.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace kmm::cli

#endif
