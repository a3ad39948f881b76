#pragma once

#include <ostream>

namespace oscc::cli {

/// Exit codes: 0 success / equivalent, 1 verified but not equivalent,
/// 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kNotEquivalent = 1;
inline constexpr int kInputError = 2;

/// Entry point of the `oscc` tool, with injectable streams for testing.
///   compile <file> [--m --k --gamma0 --set NAME=VALUE]
///   run-tm --count M [--max-steps N] [--unbounded] [--machine <file>]
///   simulate [--m --k --mu --gamma0 --x0 --v0 --dt --t-max]
///            --out-csv <path> [--out-svg <path>]
///   verify <file> [--m --k --gamma0 --dt --x0 --detector-gamma0 --set]
///          [--sweep A..B] [--json]
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oscc::cli
