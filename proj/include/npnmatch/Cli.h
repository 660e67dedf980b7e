// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Subcommands: match, oracle, gen, bench, classify,
// trace. Exit codes: 0 equivalent (or success), 1 not equivalent, 2 error.
//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace npn {

inline constexpr int kExitEquivalent = 0;
inline constexpr int kExitNotEquivalent = 1;
inline constexpr int kExitError = 2;

/// Runs one command. `args` excludes the program name.
int cliDispatch(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err);

} // namespace npn
