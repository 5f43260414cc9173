#ifndef SPL_INDEX_ALGEBRA_HPP
#define SPL_INDEX_ALGEBRA_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spl {

inline constexpr int kIndexCount = 4;
inline constexpr int kPairCount = 6;

/// An element of the index set {1,2,3,4}.
class Index {
 public:
  constexpr explicit Index(int value) : value_(value) {
    if (value < 1 || value > kIndexCount) {
      throw std::out_of_range("index must lie in 1..4");
    }
  }

  constexpr int value() const { return value_; }
  constexpr int offset() const { return value_ - 1; }

  friend constexpr auto operator<=>(Index, Index) = default;

 private:
  int value_;
};

/// An unordered 2-subset {lo, hi} of the index set, stored with lo < hi.
///
/// Pairs have a fixed global order 12, 13, 14, 23, 24, 34; `ordinal()` is the
/// position in that order and every serialization follows it.
class Pair {
 public:
  constexpr Pair(Index a, Index b)
      : lo_(static_cast<std::uint8_t>(a < b ? a.value() : b.value())),
        hi_(static_cast<std::uint8_t>(a < b ? b.value() : a.value())) {
    if (a == b) throw std::invalid_argument("pair needs two distinct indices");
  }
  constexpr Pair(int a, int b) : Pair(Index(a), Index(b)) {}

  static Pair from_ordinal(int ordinal);
  static const std::array<Pair, kPairCount>& all();

  constexpr Index lo() const { return Index(lo_); }
  constexpr Index hi() const { return Index(hi_); }
  constexpr bool contains(Index i) const { return i.value() == lo_ || i.value() == hi_; }
  int ordinal() const;
  std::uint8_t bit() const { return static_cast<std::uint8_t>(1u << ordinal()); }

  /// "12", "34", ...
  std::string label() const;

  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;

 private:
  std::uint8_t lo_;
  std::uint8_t hi_;
};

/// The complementary 2-subset u -> {1,2,3,4} \ u.
Pair correlation(Pair u);

/// A permutation of {1,2,3,4}. Ordered lexicographically by image sequence.
class Perm4 {
 public:
  Perm4();  // identity

  /// Images of 1..4 in order; throws std::invalid_argument unless bijective.
  static Perm4 from_images(std::array<int, kIndexCount> images);

  /// All 24 permutations in lexicographic order of image sequence.
  static const std::array<Perm4, 24>& all();

  Index operator()(Index i) const { return Index(image_[i.offset()] + 1); }
  int operator()(int i) const { return (*this)(Index(i)).value(); }

  std::array<int, kIndexCount> images() const;

  /// (f * g)(i) = f(g(i))
  friend Perm4 operator*(const Perm4& f, const Perm4& g);
  Perm4 inverse() const;
  bool is_identity() const { return *this == Perm4(); }
  std::vector<Index> fixed_points() const;

  /// Disjoint-cycle text: "id", "(1,2)(3,4)", "(2,3,4)". Fixed points are
  /// omitted and every cycle starts at its least element.
  std::string to_string() const;

  friend auto operator<=>(const Perm4&, const Perm4&) = default;

 private:
  std::array<std::uint8_t, kIndexCount> image_;  // zero-based
};

/// Thrown by the text parsers. `kind` distinguishes the failure class.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, NotBijection, UnknownAxis, Io, Structure };
  ParseError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses disjoint-cycle text. Accepts "id", "()", fixed points written as
/// 1-cycles or omitted, and whitespace between tokens.
Perm4 parse_perm(std::string_view text);

/// Conjugate alpha * f * alpha^-1.
Perm4 conjugate(const Perm4& f, const Perm4& alpha);

/// A bijection of the six pairs.
class PairMap {
 public:
  PairMap();  // identity

  Pair operator()(Pair u) const { return Pair::from_ordinal(image_[u.ordinal()]); }
  std::uint8_t apply_mask(std::uint8_t mask) const;

  friend PairMap operator*(const PairMap& f, const PairMap& g);
  PairMap inverse() const;

  friend auto operator<=>(const PairMap&, const PairMap&) = default;

 private:
  friend PairMap extend(const Perm4& phi);
  friend PairMap correlation_map();
  std::array<std::uint8_t, kPairCount> image_;
};

/// The induced map {i,j} -> {phi(i), phi(j)}.
PairMap extend(const Perm4& phi);
/// The correlation as a PairMap.
PairMap correlation_map();

struct CycleType {
  std::vector<int> parts;  // ascending, sums to 4

  std::string to_string() const;  // "(1,1,2)"
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Perm4& phi);

struct ConjugacyClass {
  Perm4 representative;         // lexicographically least member
  std::vector<Perm4> members;   // sorted
};

bool is_subgroup(std::span<const Perm4> h);

/// Orbits of S4 under conjugation by the subgroup `h`, sorted by
/// representative. Throws std::invalid_argument if `h` is not a subgroup.
std::vector<ConjugacyClass> conjugacy_classes_under(std::span<const Perm4> h);

}  // namespace spl

#endif  // SPL_INDEX_ALGEBRA_HPP
