#ifndef SPL_CLI_HPP
#define SPL_CLI_HPP

#include <ostream>
#include <string>
#include <string_view>

#include "spl/perspective.hpp"
#include "spl/psts.hpp"

namespace spl::cli {

/// Stable exit-code contract.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNotIsomorphic = 1;
inline constexpr int kMismatch = 2;
inline constexpr int kUsage = 64;
inline constexpr int kSyntax = 65;
inline constexpr int kNotBijection = 66;
inline constexpr int kUnknownAxis = 67;
inline constexpr int kBadStructure = 68;
inline constexpr int kOracleInconsistency = 70;
inline constexpr int kIo = 74;
}  // namespace exit_code

/// "perm:<cycles>@<axis>" or "kappa:<cycles>@<axis>", where the axis is a
/// kind name, census:N, or the path of a PSTS file holding a Veblen axis.
/// Throws ParseError.
PerspectiveSpec parse_spec(std::string_view text);

/// Exit code for a parse failure of the given kind.
int exit_code_for(ParseError::Kind kind);

/// Levi graph in DOT: points first, then lines, in declaration order.
std::string emit_levi_dot(const Psts& s);
std::string emit_levi_dot(const LabeledPsts& s);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spl::cli

#endif  // SPL_CLI_HPP
