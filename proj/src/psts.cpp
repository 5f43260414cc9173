#include "spl/psts.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "spl/index_algebra.hpp"

namespace spl {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_';
  });
}

std::string join_issues(const std::vector<PstsIssue>& issues) {
  std::string out = "invalid partial Steiner triple system";
  for (const auto& issue : issues) {
    out += "; ";
    out += issue_name(issue.kind);
    out += ": ";
    out += issue.detail;
  }
  return out;
}

Line sorted_line(Line l) {
  std::sort(l.begin(), l.end());
  return l;
}

}  // namespace

std::string_view issue_name(PstsIssue::Kind kind) {
  switch (kind) {
    case PstsIssue::Kind::TooManyPoints: return "too-many-points";
    case PstsIssue::Kind::BadPointName: return "bad-point-name";
    case PstsIssue::Kind::DuplicatePointName: return "duplicate-point-name";
    case PstsIssue::Kind::PointOutOfRange: return "point-out-of-range";
    case PstsIssue::Kind::RepeatedPointInLine: return "repeated-point-in-line";
    case PstsIssue::Kind::DuplicateLine: return "duplicate-line";
    case PstsIssue::Kind::PairOnTwoLines: return "pair-on-two-lines";
  }
  return "unknown";
}

InvalidPsts::InvalidPsts(std::vector<PstsIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

std::vector<PstsIssue> check_psts(std::span<const std::string> names,
                                  std::span<const Line> lines) {
  std::vector<PstsIssue> issues;
  const int n = static_cast<int>(names.size());
  if (n > kMaxPstsPoints) {
    issues.push_back({PstsIssue::Kind::TooManyPoints,
                      std::to_string(n) + " points exceeds " + std::to_string(kMaxPstsPoints)});
    return issues;
  }
  std::set<std::string_view> seen_names;
  for (const auto& name : names) {
    if (!valid_name(name)) issues.push_back({PstsIssue::Kind::BadPointName, "'" + name + "'"});
    if (!seen_names.insert(name).second) {
      issues.push_back({PstsIssue::Kind::DuplicatePointName, name});
    }
  }

  std::set<Line> seen_lines;
  std::map<std::pair<int, int>, int> pair_owner;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Line l = sorted_line(lines[k]);
    const std::string where = "line " + std::to_string(k);
    if (std::any_of(l.begin(), l.end(), [n](int x) { return x < 0 || x >= n; })) {
      issues.push_back({PstsIssue::Kind::PointOutOfRange, where});
      continue;
    }
    if (l[0] == l[1] || l[1] == l[2]) {
      issues.push_back({PstsIssue::Kind::RepeatedPointInLine, where});
      continue;
    }
    if (!seen_lines.insert(l).second) {
      issues.push_back({PstsIssue::Kind::DuplicateLine, where});
      continue;
    }
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      auto [it, fresh] = pair_owner.emplace(std::pair{l[i], l[j]}, static_cast<int>(k));
      if (!fresh) {
        issues.push_back({PstsIssue::Kind::PairOnTwoLines,
                          "points " + names[l[i]] + "," + names[l[j]] + " on lines " +
                              std::to_string(it->second) + " and " + std::to_string(k)});
      }
    }
  }
  return issues;
}

Psts::Psts(std::vector<std::string> names, std::vector<Line> lines)
    : names_(std::move(names)) {
  if (auto issues = check_psts(names_, lines); !issues.empty()) {
    throw InvalidPsts(std::move(issues));
  }
  const std::size_t n = names_.size();
  lines_.reserve(lines.size());
  for (const Line& l : lines) lines_.push_back(sorted_line(l));
  incidence_.assign(n, {});
  neighbours_.assign(n, 0);
  join_.assign(n * n, -1);
  for (std::size_t k = 0; k < lines_.size(); ++k) {
    const Line& l = lines_[k];
    for (int x : l) {
      incidence_[x].push_back(static_cast<int>(k));
      for (int y : l) {
        if (x == y) continue;
        neighbours_[x] |= std::uint64_t{1} << y;
        join_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] = static_cast<int>(k);
      }
    }
  }
}

std::optional<PointId> Psts::find(std::string_view name) const {
  for (std::size_t k = 0; k < names_.size(); ++k) {
    if (names_[k] == name) return static_cast<PointId>(k);
  }
  return std::nullopt;
}

std::optional<PointId> Psts::third_point(PointId x, PointId y) const {
  if (x == y) throw std::invalid_argument("third_point needs two distinct points");
  const int k = line_through(x, y);
  if (k < 0) return std::nullopt;
  const Line& l = lines_[k];
  for (int z : l) {
    if (z != x && z != y) return z;
  }
  return std::nullopt;
}

ConfigSignature Psts::signature() const {
  ConfigSignature sig;
  sig.point_count = point_count();
  sig.line_count = line_count();
  for (int x = 0; x < point_count(); ++x) sig.point_degrees.push_back(degree(x));
  std::sort(sig.point_degrees.begin(), sig.point_degrees.end());
  return sig;
}

Psts Psts::relabeled(std::span<const PointId> mapping) const {
  const int n = point_count();
  if (static_cast<int>(mapping.size()) != n) throw std::invalid_argument("relabel size mismatch");
  std::vector<std::string> names(n);
  std::vector<bool> hit(n, false);
  for (int x = 0; x < n; ++x) {
    const int y = mapping[x];
    if (y < 0 || y >= n || hit[y]) throw std::invalid_argument("relabel is not a bijection");
    hit[y] = true;
    names[y] = names_[x];
  }
  std::vector<Line> lines;
  lines.reserve(lines_.size());
  for (const Line& l : lines_) lines.push_back({mapping[l[0]], mapping[l[1]], mapping[l[2]]});
  return Psts(std::move(names), std::move(lines));
}

bool validate_configuration(const Psts& s, int r, int k) {
  if (k != 3) return s.line_count() == 0 && s.point_count() == 0;
  for (int x = 0; x < s.point_count(); ++x) {
    if (s.degree(x) != r) return false;
  }
  return true;
}

namespace {

void extend_clique(const Psts& s, int n, std::vector<PointId>& current, std::uint64_t candidates,
                   std::vector<std::vector<PointId>>& out) {
  if (static_cast<int>(current.size()) == n) {
    out.push_back(current);
    return;
  }
  while (candidates) {
    const int x = __builtin_ctzll(candidates);
    candidates &= candidates - 1;
    // A new point must not be the third point of a line through two members.
    bool free = true;
    for (std::size_t a = 0; a < current.size() && free; ++a) {
      for (std::size_t b = a + 1; b < current.size(); ++b) {
        if (s.third_point(current[a], current[b]) == x) {
          free = false;
          break;
        }
      }
    }
    if (!free) continue;
    current.push_back(x);
    // Later candidates: larger ids, collinear with x, off the lines through x
    // and an earlier member.
    std::uint64_t next = candidates & s.neighbours(x);
    for (std::size_t a = 0; a + 1 < current.size(); ++a) {
      if (auto z = s.third_point(current[a], x)) next &= ~(std::uint64_t{1} << *z);
    }
    extend_clique(s, n, current, next, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<PointId>> free_complete_subgraphs(const Psts& s, int n) {
  if (n < 3) throw std::invalid_argument("free complete subgraph search needs n >= 3");
  std::vector<std::vector<PointId>> out;
  std::vector<PointId> current;
  const int points = s.point_count();
  const std::uint64_t all = points == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << points) - 1);
  extend_clique(s, n, current, all, out);
  return out;
}

std::string to_psts_text(const Psts& s) {
  std::string out = "psts " + std::to_string(s.point_count()) + " " +
                    std::to_string(s.line_count()) + "\n";
  for (int x = 0; x < s.point_count(); ++x) {
    if (x) out += ' ';
    out += s.name(x);
  }
  out += '\n';
  for (const Line& l : s.lines()) {
    out += s.name(l[0]) + " " + s.name(l[1]) + " " + s.name(l[2]) + "\n";
  }
  return out;
}

Psts parse_psts_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string header;
  int n = -1;
  int b = -1;
  if (!(in >> header >> n >> b) || header != "psts" || n < 0 || b < 0) {
    throw ParseError(ParseError::Kind::Syntax, "expected header 'psts <points> <lines>'");
  }
  if (n > kMaxPstsPoints) {
    throw InvalidPsts({{PstsIssue::Kind::TooManyPoints, std::to_string(n) + " points"}});
  }
  std::vector<std::string> names(n);
  std::map<std::string, int, std::less<>> ids;
  for (int x = 0; x < n; ++x) {
    if (!(in >> names[x])) throw ParseError(ParseError::Kind::Syntax, "truncated point list");
    ids.emplace(names[x], x);
  }
  std::vector<Line> lines(b);
  for (int k = 0; k < b; ++k) {
    for (int j = 0; j < 3; ++j) {
      std::string token;
      if (!(in >> token)) throw ParseError(ParseError::Kind::Syntax, "truncated line list");
      auto it = ids.find(token);
      if (it == ids.end()) {
        throw ParseError(ParseError::Kind::Syntax, "line " + std::to_string(k) +
                                                       " names unknown point '" + token + "'");
      }
      lines[k][j] = it->second;
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError(ParseError::Kind::Syntax, "trailing data after last line");
  return Psts(std::move(names), std::move(lines));
}

}  // namespace spl
