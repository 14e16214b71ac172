#pragma once

#include <string>
#include <vector>

namespace trademood {

/// Entry point behind the `trademood` binary. Subcommands: simulate,
/// estimate, backtest, report. Returns 0 on success, nonzero with a
/// diagnostic on stderr otherwise.
int cli_main(const std::vector<std::string>& args);

}  // namespace trademood
