#ifndef SPL_ISOMORPHISM_HPP
#define SPL_ISOMORPHISM_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spl/index_algebra.hpp"
#include "spl/perspective.hpp"
#include "spl/psts.hpp"

namespace spl {

inline constexpr int kMaxCanonicalPoints = 32;

/// A bijection between point sets: point x goes to image[x].
struct PointMap {
  std::vector<PointId> image;

  PointMap inverse() const;
  /// (f * g)(x) = f(g(x))
  friend PointMap operator*(const PointMap& f, const PointMap& g);
  static PointMap identity(int n);

  friend auto operator<=>(const PointMap&, const PointMap&) = default;
};

/// True iff f is a bijection sending the lines of x exactly onto those of y.
bool is_isomorphism(const Psts& x, const Psts& y, const PointMap& f);

/// "x -> y" lines, one per source point in declaration order.
std::string to_text(const PointMap& f, const Psts& from, const Psts& to);

/// Complete isomorphism invariant: equal keys iff isomorphic structures.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint32_t> code) : code_(std::move(code)) {}

  const std::vector<std::uint32_t>& code() const { return code_; }
  /// Hex digest of the code, for reports.
  std::string to_string() const;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::vector<std::uint32_t> code_;
};

class SizeCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical labeling of the point/line incidence structure by
/// individualization-refinement with automorphism pruning. Throws
/// SizeCapExceeded above kMaxCanonicalPoints points.
CanonicalKey canonical_key(const Psts& s);

struct FixConstraint {
  PointId from;
  PointId to;
};

/// Exhaustive backtracking search; honours f(fix.from) == fix.to when given.
std::optional<PointMap> find_isomorphism(const Psts& x, const Psts& y,
                                         std::optional<FixConstraint> fix = std::nullopt);

/// Every isomorphism from x onto y, sorted.
std::vector<PointMap> all_isomorphisms(const Psts& x, const Psts& y);

struct AutomorphismGroup {
  std::vector<PointMap> generators;
  std::uint64_t order = 0;
};

AutomorphismGroup automorphism_group(const Psts& s);

// --- criteria specific to the two perspective families ----------------------

enum class IsoCase { A, B };  // A keeps the two tetrahedra, B swaps them
std::string_view case_name(IsoCase c);

struct FamilyWitness {
  Perm4 perm;
  IsoCase iso_case;

  friend auto operator<=>(const FamilyWitness&, const FamilyWitness&) = default;
};

/// Center-fixing isomorphism criterion for permutation skews. All case A
/// witnesses precede case B ones; within a case, permutations ascend.
/// Throws std::invalid_argument for other skews.
std::vector<FamilyWitness> perm_family_witnesses(const PerspectiveSpec& s1,
                                                 const PerspectiveSpec& s2);
std::optional<FamilyWitness> perm_family_iso(const PerspectiveSpec& s1,
                                             const PerspectiveSpec& s2);

/// Isomorphism criterion for complement skews, same ordering as above.
std::vector<FamilyWitness> kappa_family_witnesses(const PerspectiveSpec& s1,
                                                  const PerspectiveSpec& s2);
std::optional<FamilyWitness> kappa_family_iso(const PerspectiveSpec& s1,
                                              const PerspectiveSpec& s2);

/// The point map a family witness describes, from build(s1) to build(s2).
PointMap family_witness_map(const PerspectiveSpec& s1, const PerspectiveSpec& s2,
                            const FamilyWitness& w);

/// p -> p, a_i <-> b_i, c_u -> c_{correlation(u)}.
PointMap correlation_swap_map();

}  // namespace spl

#endif  // SPL_ISOMORPHISM_HPP
