#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dprig {

/// JSON schema version stamped into every JSON document the CLI emits.
inline constexpr int kJsonSchemaVersion = 1;

/// The markdown document behind the emit-tables subcommand: the global
/// threshold table for degrees 1-9 (both degree-8 lattices), the
/// decomposition census counts for degrees 1-4, and the verification
/// report table of the built-in degeneration examples. Deterministic,
/// byte-identical across runs.
std::string emit_tables();

/// Runs one CLI invocation. `args` excludes the program name. Writes
/// rendered output to `out` and diagnostics to `err`; returns the process
/// exit status: 0 on success, 1 on domain errors (a valid request whose
/// computation rejects its input), 2 on usage errors (unknown or malformed
/// flags, missing subcommand, out-of-range flag values).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dprig
