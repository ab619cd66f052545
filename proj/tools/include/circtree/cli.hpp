#pragma once

#include "circtree/specs.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace circtree::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDisagreement = 1,
  kInvalidInput = 2,
  kPrecisionExhausted = 3,
};

/// Oracle methods refuse instances with more vertices than this.
inline constexpr std::int64_t kMaxOracleVertices = 2000;

/// Runs the command line in-process. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Argument parsers; all throw InvalidSpec on malformed input.

/// "beta,n,p[,g1,...]"
DirectedCirculantSpec parse_digraph(const std::string& text);
/// "beta,n,{n|n-1}"
CyclePowerSpec parse_cycle_power(const std::string& text);
/// "1..6", "50,100,200" or a mix such as "1..3,10"; ascending, no repeats.
std::vector<std::int64_t> parse_range(const std::string& text);

/// A family template whose fields are integers or the placeholders 'b' and
/// 'n'. Cycle-power templates may omit the variant (defaults to n).
struct FamilyTemplate {
  std::vector<std::string> fields;

  bool uses_beta() const;
  DirectedCirculantSpec digraph(std::int64_t beta, std::int64_t n) const;
  CyclePowerSpec cycle_power(std::int64_t beta, std::int64_t n) const;
};

FamilyTemplate parse_family(const std::string& text);

}  // namespace circtree::cli
