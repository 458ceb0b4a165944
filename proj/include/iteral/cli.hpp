#pragma once

#include "iteral/fractal.hpp"

#include <ostream>
#include <span>
#include <string>
#include <string_view>

namespace iteral::cli {

/// Process exit statuses. Negative values follow the original scanner:
/// -1 for rejected input, -2 for anything unexpected.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = -1;
inline constexpr int kExitInternal = -2;

/// Original scanner interface: x1 y1 x2 y2 grid cos|sin.
///
/// Fewer than six arguments prints the usage line and succeeds. Numbers are
/// read with atoi/atof semantics. Surviving points go to `out` as two
/// 25-wide columns at 16 significant digits.
int run_legacy(std::span<const std::string> args, std::string_view program, std::ostream& out,
               std::ostream& err, const ScanOptions& options = {});

/// Full command line, args[0] being the program name. `legacy` as the
/// first argument forwards the rest to run_legacy().
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace iteral::cli
