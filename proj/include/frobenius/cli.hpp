#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frob::cli {

inline constexpr long kDefaultMaxGroundSet = 20000;
/// The orbits table is formula-only; past this length the partition count
/// makes the table unwieldy.
inline constexpr int kMaxFormulaLength = 30;

/// Runs one subcommand (character, convert, parking, selftest). JSON goes to
/// `out`; every failure writes a single "error: ..." line to `err` and
/// returns nonzero.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace frob::cli
