#include "spl/veblen.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace spl {

namespace {

PairMask mask_of(std::initializer_list<Pair> pairs) {
  PairMask m = 0;
  for (const Pair& u : pairs) m = static_cast<PairMask>(m | u.bit());
  return m;
}

bool is_veblen(const std::array<PairMask, 4>& lines) {
  std::array<int, kPairCount> degree{};
  for (PairMask l : lines) {
    if (std::popcount(static_cast<unsigned>(l)) != 3 || (l >> kPairCount) != 0) return false;
    for (int k = 0; k < kPairCount; ++k) {
      if (l & (1u << k)) ++degree[k];
    }
  }
  if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 2; })) return false;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (std::popcount(static_cast<unsigned>(lines[a] & lines[b])) > 1) return false;
    }
  }
  return true;
}

}  // namespace

PairMask top(Index i) {
  PairMask m = 0;
  for (const Pair& u : Pair::all()) {
    if (!u.contains(i)) m = static_cast<PairMask>(m | u.bit());
  }
  return m;
}

PairMask star(Index i) {
  return static_cast<PairMask>(~top(i) & 0x3f);
}

std::vector<Pair> pairs_of(PairMask mask) {
  std::vector<Pair> out;
  for (const Pair& u : Pair::all()) {
    if (mask & u.bit()) out.push_back(u);
  }
  return out;
}

std::string_view kind_name(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::G2: return "G2";
    case CanonicalKind::G2Star: return "G2*";
    case CanonicalKind::B2: return "B2";
    case CanonicalKind::V4: return "V4";
    case CanonicalKind::V5: return "V5";
    case CanonicalKind::V6: return "V6";
  }
  return "?";
}

std::optional<CanonicalKind> parse_kind(std::string_view text) {
  if (text == "G2_STAR" || text == "G2STAR") return CanonicalKind::G2Star;
  for (CanonicalKind k : kAllKinds) {
    if (kind_name(k) == text) return k;
  }
  return std::nullopt;
}

CanonicalKind partner(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::G2: return CanonicalKind::G2Star;
    case CanonicalKind::G2Star: return CanonicalKind::G2;
    case CanonicalKind::B2: return CanonicalKind::V4;
    case CanonicalKind::V4: return CanonicalKind::B2;
    case CanonicalKind::V5: return CanonicalKind::V6;
    case CanonicalKind::V6: return CanonicalKind::V5;
  }
  throw std::logic_error("unknown kind");
}

bool is_primary(CanonicalKind kind) {
  return kind == CanonicalKind::G2 || kind == CanonicalKind::B2 || kind == CanonicalKind::V5;
}

// ---------------------------------------------------------------------------

VeblenConfig::VeblenConfig(std::array<PairMask, 4> lines) : lines_(lines) {
  if (!is_veblen(lines_)) {
    throw std::invalid_argument("line set is not a Veblen configuration on the six pairs");
  }
  std::sort(lines_.begin(), lines_.end());
}

std::optional<VeblenConfig> VeblenConfig::try_make(std::array<PairMask, 4> lines) {
  if (!is_veblen(lines)) return std::nullopt;
  return VeblenConfig(lines);
}

bool VeblenConfig::has_line(PairMask line) const {
  return std::find(lines_.begin(), lines_.end(), line) != lines_.end();
}

bool VeblenConfig::collinear(Pair u, Pair v) const {
  const PairMask both = static_cast<PairMask>(u.bit() | v.bit());
  return u != v && std::any_of(lines_.begin(), lines_.end(),
                               [both](PairMask l) { return (l & both) == both; });
}

VeblenConfig VeblenConfig::mapped(const PairMap& f) const {
  std::array<PairMask, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = f.apply_mask(lines_[k]);
  return VeblenConfig(out);
}

Psts VeblenConfig::to_psts() const {
  std::vector<std::string> names;
  for (const Pair& u : Pair::all()) names.push_back("c" + u.label());
  std::vector<Line> lines;
  for (PairMask l : lines_) {
    const auto ps = pairs_of(l);
    lines.push_back({ps[0].ordinal(), ps[1].ordinal(), ps[2].ordinal()});
  }
  return Psts(std::move(names), std::move(lines));
}

VeblenConfig VeblenConfig::from_psts(const Psts& s) {
  if (s.point_count() != kPairCount || s.line_count() != 4) {
    throw std::invalid_argument("a Veblen axis has 6 points and 4 lines");
  }
  std::vector<int> ordinal(kPairCount, -1);
  for (int x = 0; x < kPairCount; ++x) {
    for (const Pair& u : Pair::all()) {
      if (s.name(x) == "c" + u.label()) ordinal[x] = u.ordinal();
    }
    if (ordinal[x] < 0) {
      throw std::invalid_argument("axis point '" + s.name(x) + "' is not one of c12..c34");
    }
  }
  std::array<PairMask, 4> lines{};
  for (int k = 0; k < 4; ++k) {
    for (int x : s.lines()[k]) lines[k] = static_cast<PairMask>(lines[k] | (1u << ordinal[x]));
  }
  return VeblenConfig(lines);
}

std::string VeblenConfig::to_string() const {
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (k) out += '|';
    const auto ps = pairs_of(lines_[k]);
    out += ps[0].label() + "." + ps[1].label() + "." + ps[2].label();
  }
  return out;
}

// ---------------------------------------------------------------------------

VeblenConfig canonical(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::G2:
      return VeblenConfig({top(Index(1)), top(Index(2)), top(Index(3)), top(Index(4))});
    case CanonicalKind::B2:
      return VeblenConfig({top(Index(1)), top(Index(2)),
                           mask_of({Pair(1, 2), Pair(1, 3), Pair(2, 4)}),
                           mask_of({Pair(1, 2), Pair(1, 4), Pair(2, 3)})});
    case CanonicalKind::V5:
      return VeblenConfig({top(Index(3)),
                           mask_of({Pair(1, 3), Pair(2, 3), Pair(1, 4)}),
                           mask_of({Pair(1, 3), Pair(3, 4), Pair(2, 4)}),
                           mask_of({Pair(2, 3), Pair(3, 4), Pair(1, 2)})});
    case CanonicalKind::G2Star:
    case CanonicalKind::V4:
    case CanonicalKind::V6:
      return canonical(partner(kind)).correlated();
  }
  throw std::logic_error("unknown kind");
}

std::optional<CanonicalKind> canonical_kind_of(const VeblenConfig& v) {
  for (CanonicalKind k : kAllKinds) {
    if (canonical(k) == v) return k;
  }
  return std::nullopt;
}

const std::vector<VeblenConfig>& enumerate_labelings() {
  static const std::vector<VeblenConfig> census = [] {
    std::vector<PairMask> triples;
    for (unsigned m = 0; m < 64; ++m) {
      if (std::popcount(m) == 3) triples.push_back(static_cast<PairMask>(m));
    }
    std::vector<VeblenConfig> out;
    const std::size_t t = triples.size();
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b)
        for (std::size_t c = b + 1; c < t; ++c)
          for (std::size_t d = c + 1; d < t; ++d) {
            if (auto v = VeblenConfig::try_make({triples[a], triples[b], triples[c], triples[d]})) {
              out.push_back(*v);
            }
          }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return census;
}

std::vector<PairMask> top_lines(const VeblenConfig& v) {
  std::vector<PairMask> out;
  for (PairMask l : v.lines()) {
    for (int i = 1; i <= kIndexCount; ++i) {
      if (l == top(Index(i))) out.push_back(l);
    }
  }
  return out;
}

std::vector<PairMask> star_lines(const VeblenConfig& v) {
  std::vector<PairMask> out;
  for (PairMask l : v.lines()) {
    for (int i = 1; i <= kIndexCount; ++i) {
      if (l == star(Index(i))) out.push_back(l);
    }
  }
  return out;
}

std::vector<Index> star_triangles(const VeblenConfig& v) {
  std::vector<Index> out;
  for (int i = 1; i <= kIndexCount; ++i) {
    const PairMask s = star(Index(i));
    if (v.has_line(s)) continue;
    const auto ps = pairs_of(s);
    if (v.collinear(ps[0], ps[1]) && v.collinear(ps[0], ps[2]) && v.collinear(ps[1], ps[2])) {
      out.emplace_back(i);
    }
  }
  return out;
}

std::vector<Perm4> aut_perms(const VeblenConfig& v) {
  std::vector<Perm4> out;
  for (const Perm4& phi : Perm4::all()) {
    if (v.mapped(extend(phi)) == v) out.push_back(phi);
  }
  return out;
}

std::string_view side_name(Side side) {
  return side == Side::Plain ? "plain" : "kappa";
}

PairMap witness_map(const LabelingWitness& w) {
  const PairMap e = extend(w.alpha);
  return w.side == Side::Plain ? e : correlation_map() * e;
}

std::optional<LabelingWitness> classify_labeling(const VeblenConfig& v) {
  for (Side side : {Side::Plain, Side::Kappa}) {
    for (CanonicalKind kind : kAllKinds) {
      const VeblenConfig target = canonical(kind);
      for (const Perm4& alpha : Perm4::all()) {
        const LabelingWitness w{kind, alpha, side};
        if (v.mapped(witness_map(w)) == target) return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace spl
