#ifndef SPL_PUBLISHED_HPP
#define SPL_PUBLISHED_HPP

#include <string>
#include <vector>

#include "spl/index_algebra.hpp"
#include "spl/perspective.hpp"
#include "spl/veblen.hpp"

/// Values and lists stated in the published classification, kept as data so
/// the audit can compare them against computation.
namespace spl::published {

/// Number of isomorphism types claimed for each family and in total.
inline constexpr int kPermClassCount = 42;
inline constexpr int kKappaClassCount = 20;
inline constexpr int kTotalClassCount = 62;

/// Star-triangle indices claimed for a canonical axis.
std::vector<Index> star_triangles(CanonicalKind kind);

/// The group of index permutations claimed to act on a canonical axis.
std::vector<Perm4> axis_group(CanonicalKind kind);
/// Plain-language description of that group.
std::string axis_group_description(CanonicalKind kind);

/// Listed representatives of conjugacy under the axis group.
std::vector<Perm4> conjugacy_representatives(CanonicalKind kind);

struct CatalogueEntry {
  std::string label;           // "xvii", "B2/3", ...
  CanonicalKind printed_kind;  // the block the entry is listed under
  std::string printed_perm;    // as printed
  std::string printed_cycle_type;
  PerspectiveSpec match;       // the structure the entry denotes
  std::string note;            // non-empty when `match` differs from the printed data
};

/// The 42 permutation-skew entries.
const std::vector<CatalogueEntry>& perm_catalogue();
/// The 20 complement-skew entries.
const std::vector<CatalogueEntry>& kappa_catalogue();

}  // namespace spl::published

#endif  // SPL_PUBLISHED_HPP
