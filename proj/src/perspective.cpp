#include "spl/perspective.hpp"

#include <algorithm>

namespace spl {

std::string_view family_name(SkewFamily family) {
  return family == SkewFamily::Perm ? "perm" : "kappa";
}

PairMap Skew::delta() const {
  const PairMap e = extend(perm);
  return family == SkewFamily::Perm ? e : e * correlation_map();
}

std::string axis_label(const VeblenConfig& axis) {
  if (auto kind = canonical_kind_of(axis)) return std::string(kind_name(*kind));
  const auto& census = enumerate_labelings();
  const auto it = std::find(census.begin(), census.end(), axis);
  return "census:" + std::to_string(it - census.begin());
}

std::string PerspectiveSpec::to_string() const {
  return std::string(family_name(skew.family)) + ":" + skew.perm.to_string() + "@" +
         axis_label(axis);
}

std::strong_ordering operator<=>(const PerspectiveSpec& x, const PerspectiveSpec& y) {
  if (auto c = x.skew.family <=> y.skew.family; c != 0) return c;
  auto rank = [](const VeblenConfig& v) {
    const auto kind = canonical_kind_of(v);
    return kind ? static_cast<int>(*kind) : static_cast<int>(kAllKinds.size());
  };
  if (auto c = rank(x.axis) <=> rank(y.axis); c != 0) return c;
  if (auto c = x.axis <=> y.axis; c != 0) return c;
  return x.skew.perm <=> y.skew.perm;
}

std::string Role::name() const {
  switch (kind) {
    case RoleKind::Center: return "p";
    case RoleKind::A: return "a" + std::to_string(index);
    case RoleKind::B: return "b" + std::to_string(index);
    case RoleKind::C: return "c" + Pair::from_ordinal(index).label();
  }
  return "?";
}

std::vector<PointId> LabeledPsts::a_star() const {
  return {point::kCenter, point::a(1), point::a(2), point::a(3), point::a(4)};
}

std::vector<PointId> LabeledPsts::b_star() const {
  return {point::kCenter, point::b(1), point::b(2), point::b(3), point::b(4)};
}

LabeledPsts build(const PerspectiveSpec& spec) {
  std::vector<Role> role;
  role.push_back({RoleKind::Center, 0});
  for (int i = 1; i <= kIndexCount; ++i) role.push_back({RoleKind::A, i});
  for (int i = 1; i <= kIndexCount; ++i) role.push_back({RoleKind::B, i});
  for (const Pair& u : Pair::all()) role.push_back({RoleKind::C, u.ordinal()});

  std::vector<std::string> names;
  for (const Role& r : role) names.push_back(r.name());

  std::vector<Line> lines;
  for (PairMask l : spec.axis.lines()) {
    const auto ps = pairs_of(l);
    lines.push_back({point::c(ps[0]), point::c(ps[1]), point::c(ps[2])});
  }
  for (const Pair& u : Pair::all()) {
    lines.push_back({point::a(u.lo()), point::a(u.hi()), point::c(u)});
  }
  const PairMap delta_inv = spec.skew.delta().inverse();
  for (const Pair& u : Pair::all()) {
    lines.push_back({point::b(u.lo()), point::b(u.hi()), point::c(delta_inv(u))});
  }
  for (int i = 1; i <= kIndexCount; ++i) {
    lines.push_back({point::kCenter, point::a(i), point::b(i)});
  }
  return LabeledPsts{Psts(std::move(names), std::move(lines)), std::move(role)};
}

Pair b_join(const PerspectiveSpec& spec, Index i, Index j) {
  if (i == j) throw std::invalid_argument("b_join needs distinct indices");
  return spec.skew.delta().inverse()(Pair(i, j));
}

std::vector<PointId> star_k5(Index i) {
  std::vector<PointId> g = {point::a(i), point::b(i)};
  for (const Pair& u : Pair::all()) {
    if (u.contains(i)) g.push_back(point::c(u));
  }
  std::sort(g.begin(), g.end());
  return g;
}

std::vector<std::vector<PointId>> predicted_free_k5(const PerspectiveSpec& spec) {
  std::vector<std::vector<PointId>> out = {
      {point::kCenter, point::a(1), point::a(2), point::a(3), point::a(4)},
      {point::kCenter, point::b(1), point::b(2), point::b(3), point::b(4)}};
  if (spec.skew.family == SkewFamily::Perm) {
    const auto triangles = star_triangles(spec.axis);
    for (const Index& i : spec.skew.perm.fixed_points()) {
      if (std::find(triangles.begin(), triangles.end(), i) != triangles.end()) {
        out.push_back(star_k5(i));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spl
