#ifndef SPL_VEBLEN_HPP
#define SPL_VEBLEN_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spl/index_algebra.hpp"
#include "spl/psts.hpp"

namespace spl {

/// A set of pairs as a 6-bit mask over pair ordinals.
using PairMask = std::uint8_t;

/// T(i): the three pairs avoiding i.
PairMask top(Index i);
/// S(i): the three pairs containing i.
PairMask star(Index i);
std::vector<Pair> pairs_of(PairMask mask);

enum class CanonicalKind { G2, G2Star, B2, V4, V5, V6 };

inline constexpr std::array<CanonicalKind, 6> kAllKinds = {
    CanonicalKind::G2, CanonicalKind::G2Star, CanonicalKind::B2,
    CanonicalKind::V4, CanonicalKind::V5,     CanonicalKind::V6};
/// The kinds whose correlation images give the other three.
inline constexpr std::array<CanonicalKind, 3> kPrimaryKinds = {
    CanonicalKind::G2, CanonicalKind::B2, CanonicalKind::V5};

std::string_view kind_name(CanonicalKind kind);  // "G2", "G2*", "B2", ...
std::optional<CanonicalKind> parse_kind(std::string_view text);
/// The kind of the correlation image.
CanonicalKind partner(CanonicalKind kind);
bool is_primary(CanonicalKind kind);

/// A Veblen (Pasch) configuration on the six pairs: four lines, every pair
/// on exactly two of them. Lines are kept sorted, so equality is equality of
/// line sets.
class VeblenConfig {
 public:
  /// Throws std::invalid_argument unless the masks form a (6_2 4_3) system.
  explicit VeblenConfig(std::array<PairMask, 4> lines);
  static std::optional<VeblenConfig> try_make(std::array<PairMask, 4> lines);

  const std::array<PairMask, 4>& lines() const { return lines_; }
  bool has_line(PairMask line) const;
  bool collinear(Pair u, Pair v) const;

  VeblenConfig mapped(const PairMap& f) const;
  VeblenConfig correlated() const { return mapped(correlation_map()); }

  /// Points named c12 ... c34 in pair order.
  Psts to_psts() const;
  /// Accepts any point order; every point must be named c<lo><hi>.
  static VeblenConfig from_psts(const Psts& s);

  /// "12.14.24|13.14.23|..." compact line listing.
  std::string to_string() const;

  friend auto operator<=>(const VeblenConfig&, const VeblenConfig&) = default;

 private:
  std::array<PairMask, 4> lines_;
};

VeblenConfig canonical(CanonicalKind kind);
std::optional<CanonicalKind> canonical_kind_of(const VeblenConfig& v);

/// Every labeling of the Veblen configuration by the six pairs, sorted.
const std::vector<VeblenConfig>& enumerate_labelings();

std::vector<PairMask> top_lines(const VeblenConfig& v);
std::vector<PairMask> star_lines(const VeblenConfig& v);
/// Indices i whose star S(i) is a free triangle of v.
std::vector<Index> star_triangles(const VeblenConfig& v);
/// Permutations whose induced pair map preserves v, sorted.
std::vector<Perm4> aut_perms(const VeblenConfig& v);

enum class Side { Plain, Kappa };
std::string_view side_name(Side side);

struct LabelingWitness {
  CanonicalKind kind;
  Perm4 alpha;
  Side side;  // Plain: extend(alpha); Kappa: correlation * extend(alpha)
};

/// A map among extend(alpha), correlation*extend(alpha) taking v onto a
/// canonical labeling. All plain candidates are tried before any correlated
/// one; nullopt when none of the 48 maps works.
std::optional<LabelingWitness> classify_labeling(const VeblenConfig& v);

PairMap witness_map(const LabelingWitness& w);

}  // namespace spl

#endif  // SPL_VEBLEN_HPP
