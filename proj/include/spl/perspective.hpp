#ifndef SPL_PERSPECTIVE_HPP
#define SPL_PERSPECTIVE_HPP

#include <compare>
#include <string>
#include <vector>

#include "spl/index_algebra.hpp"
#include "spl/psts.hpp"
#include "spl/veblen.hpp"

namespace spl {

enum class SkewFamily { Perm, Kappa };
std::string_view family_name(SkewFamily family);  // "perm" / "kappa"

/// Edge correspondence between the two tetrahedra: extend(perm) for the
/// Perm family, extend(perm) * correlation for the Kappa family.
struct Skew {
  SkewFamily family = SkewFamily::Perm;
  Perm4 perm;

  PairMap delta() const;

  friend auto operator<=>(const Skew&, const Skew&) = default;
};

/// Recipe for one perspective; the center is always the point `p`.
struct PerspectiveSpec {
  Skew skew;
  VeblenConfig axis;

  /// "perm:(1,2)(3,4)@B2". Axes that are not canonical print as census:N.
  std::string to_string() const;

  friend bool operator==(const PerspectiveSpec&, const PerspectiveSpec&) = default;
};

/// Orders by family, then axis (canonical kinds first, in kind order), then
/// permutation image sequence.
std::strong_ordering operator<=>(const PerspectiveSpec& x, const PerspectiveSpec& y);

std::string axis_label(const VeblenConfig& axis);

enum class RoleKind { Center, A, B, C };

struct Role {
  RoleKind kind;
  int index;  // Index value for A/B, pair ordinal for C, 0 for the center

  std::string name() const;  // p, a1, b3, c24
  friend auto operator<=>(const Role&, const Role&) = default;
};

/// Fixed point ids in every built perspective.
namespace point {
inline constexpr PointId kCenter = 0;
inline PointId a(Index i) { return i.value(); }
inline PointId b(Index i) { return 4 + i.value(); }
inline PointId c(Pair u) { return 9 + u.ordinal(); }
inline PointId a(int i) { return a(Index(i)); }
inline PointId b(int i) { return b(Index(i)); }
}  // namespace point

inline constexpr int kPerspectivePoints = 15;
inline constexpr int kPerspectiveLines = 20;

struct LabeledPsts {
  Psts psts;
  std::vector<Role> role;  // indexed by PointId

  std::vector<PointId> a_star() const;  // {p, a1..a4}
  std::vector<PointId> b_star() const;  // {p, b1..b4}
};

/// Lines in order: axis, a-lines (pair order), b-lines (pair order),
/// center lines. Throws InvalidPsts if the axis is corrupt.
LabeledPsts build(const PerspectiveSpec& spec);

/// The pair u whose point c_u lies on the line through b_i and b_j.
Pair b_join(const PerspectiveSpec& spec, Index i, Index j);

/// Free K5 graphs the closed-form criteria predict, sorted like
/// free_complete_subgraphs output.
std::vector<std::vector<PointId>> predicted_free_k5(const PerspectiveSpec& spec);

/// {a_i, b_i} together with the star S(i) in the axis.
std::vector<PointId> star_k5(Index i);

}  // namespace spl

#endif  // SPL_PERSPECTIVE_HPP
