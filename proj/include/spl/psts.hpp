#ifndef SPL_PSTS_HPP
#define SPL_PSTS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spl {

using PointId = int;
using Line = std::array<PointId, 3>;  // sorted ascending

inline constexpr int kMaxPstsPoints = 64;

struct PstsIssue {
  enum class Kind {
    TooManyPoints,
    BadPointName,
    DuplicatePointName,
    PointOutOfRange,
    RepeatedPointInLine,
    DuplicateLine,
    PairOnTwoLines,
  };
  Kind kind;
  std::string detail;
};

std::string_view issue_name(PstsIssue::Kind kind);

/// Structured validation failure raised when a point/line list is not a
/// partial Steiner triple system.
class InvalidPsts : public std::runtime_error {
 public:
  explicit InvalidPsts(std::vector<PstsIssue> issues);
  const std::vector<PstsIssue>& issues() const { return issues_; }

 private:
  std::vector<PstsIssue> issues_;
};

/// All invariant violations of a candidate point/line list; empty iff valid.
std::vector<PstsIssue> check_psts(std::span<const std::string> names,
                                  std::span<const Line> lines);

struct ConfigSignature {
  int point_count = 0;
  int line_count = 0;
  std::vector<int> point_degrees;  // sorted multiset
  int line_size = 3;

  friend bool operator==(const ConfigSignature&, const ConfigSignature&) = default;
};

/// A partial Steiner triple system: 3-point lines, any two points on at most
/// one common line. Immutable once built.
class Psts {
 public:
  /// Throws InvalidPsts. Lines are stored with sorted points, in input order.
  Psts(std::vector<std::string> names, std::vector<Line> lines);

  int point_count() const { return static_cast<int>(names_.size()); }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(PointId x) const { return names_.at(x); }
  std::optional<PointId> find(std::string_view name) const;
  const std::vector<Line>& lines() const { return lines_; }
  std::span<const int> lines_through(PointId x) const { return incidence_[x]; }
  int degree(PointId x) const { return static_cast<int>(incidence_[x].size()); }

  bool collinear(PointId x, PointId y) const { return (neighbours_[x] >> y) & 1u; }
  std::uint64_t neighbours(PointId x) const { return neighbours_[x]; }

  /// The third point of the line through x and y, if any. Throws
  /// std::invalid_argument when x == y.
  std::optional<PointId> third_point(PointId x, PointId y) const;

  /// Index of the line through x and y, or -1.
  int line_through(PointId x, PointId y) const {
    return join_[static_cast<std::size_t>(x) * names_.size() + static_cast<std::size_t>(y)];
  }

  ConfigSignature signature() const;

  /// Image under x -> mapping[x]; names travel with their points.
  Psts relabeled(std::span<const PointId> mapping) const;

 private:
  std::vector<std::string> names_;
  std::vector<Line> lines_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::uint64_t> neighbours_;
  std::vector<int> join_;
};

/// True iff every point lies on exactly r lines and every line has k points.
bool validate_configuration(const Psts& s, int r, int k);

/// Every n-subset (sorted, in lexicographic order) whose points are pairwise
/// collinear with no line carrying three of them. Throws for n < 3.
std::vector<std::vector<PointId>> free_complete_subgraphs(const Psts& s, int n);

/// Text form: "psts <points> <lines>", a line of point names, then one
/// line of three names per block.
std::string to_psts_text(const Psts& s);
/// Throws ParseError on format problems and InvalidPsts on invariant violations.
Psts parse_psts_text(std::string_view text);

}  // namespace spl

#endif  // SPL_PSTS_HPP
