#ifndef FACTORCOVER_CLI_HPP
#define FACTORCOVER_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace fcover::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the command-line tool. Records go to `out`, human
/// summaries and errors to `err`; graph6 input is read from `in` when no
/// --graph6/--input is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fcover::cli

#endif  // FACTORCOVER_CLI_HPP
