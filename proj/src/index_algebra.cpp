#include "spl/index_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace spl {

namespace {

constexpr std::array<std::array<int, 2>, kPairCount> kPairTable = {
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

int pair_ordinal(int lo, int hi) {
  for (int k = 0; k < kPairCount; ++k) {
    if (kPairTable[k][0] == lo && kPairTable[k][1] == hi) return k;
  }
  throw std::logic_error("unreachable pair");
}

}  // namespace

Pair Pair::from_ordinal(int ordinal) {
  if (ordinal < 0 || ordinal >= kPairCount) throw std::out_of_range("pair ordinal");
  return Pair(kPairTable[ordinal][0], kPairTable[ordinal][1]);
}

const std::array<Pair, kPairCount>& Pair::all() {
  static const std::array<Pair, kPairCount> pairs = {
      Pair(1, 2), Pair(1, 3), Pair(1, 4), Pair(2, 3), Pair(2, 4), Pair(3, 4)};
  return pairs;
}

int Pair::ordinal() const { return pair_ordinal(lo_, hi_); }

std::string Pair::label() const {
  return std::to_string(lo_) + std::to_string(hi_);
}

Pair correlation(Pair u) {
  std::vector<int> rest;
  for (int i = 1; i <= kIndexCount; ++i) {
    if (!u.contains(Index(i))) rest.push_back(i);
  }
  return Pair(rest[0], rest[1]);
}

// ---------------------------------------------------------------------------

Perm4::Perm4() : image_{0, 1, 2, 3} {}

Perm4 Perm4::from_images(std::array<int, kIndexCount> images) {
  Perm4 p;
  std::array<bool, kIndexCount> seen{};
  for (int k = 0; k < kIndexCount; ++k) {
    const int v = images[k];
    if (v < 1 || v > kIndexCount || seen[v - 1]) {
      throw std::invalid_argument("permutation images are not a bijection of 1..4");
    }
    seen[v - 1] = true;
    p.image_[k] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

const std::array<Perm4, 24>& Perm4::all() {
  static const std::array<Perm4, 24> perms = [] {
    std::array<Perm4, 24> out;
    std::array<int, kIndexCount> images = {1, 2, 3, 4};
    int k = 0;
    do {
      out[k++] = Perm4::from_images(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }();
  return perms;
}

std::array<int, kIndexCount> Perm4::images() const {
  std::array<int, kIndexCount> out;
  for (int k = 0; k < kIndexCount; ++k) out[k] = image_[k] + 1;
  return out;
}

Perm4 operator*(const Perm4& f, const Perm4& g) {
  Perm4 out;
  for (int k = 0; k < kIndexCount; ++k) out.image_[k] = f.image_[g.image_[k]];
  return out;
}

Perm4 Perm4::inverse() const {
  Perm4 out;
  for (int k = 0; k < kIndexCount; ++k) out.image_[image_[k]] = static_cast<std::uint8_t>(k);
  return out;
}

std::vector<Index> Perm4::fixed_points() const {
  std::vector<Index> out;
  for (int k = 0; k < kIndexCount; ++k) {
    if (image_[k] == k) out.emplace_back(k + 1);
  }
  return out;
}

std::string Perm4::to_string() const {
  std::string out;
  std::array<bool, kIndexCount> done{};
  for (int start = 0; start < kIndexCount; ++start) {
    if (done[start] || image_[start] == start) continue;
    out += '(';
    int k = start;
    bool first = true;
    while (!done[k]) {
      done[k] = true;
      if (!first) out += ',';
      out += std::to_string(k + 1);
      first = false;
      k = image_[k];
    }
    out += ')';
  }
  return out.empty() ? "id" : out;
}

Perm4 parse_perm(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "id" || s == "()") return Perm4();
  if (s.empty()) throw ParseError(ParseError::Kind::Syntax, "empty permutation");

  std::array<int, kIndexCount> images = {1, 2, 3, 4};
  std::array<bool, kIndexCount> used{};
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') {
      throw ParseError(ParseError::Kind::Syntax,
                       "malformed cycles: expected '(' at offset " + std::to_string(pos));
    }
    ++pos;
    std::vector<int> cycle;
    while (true) {
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
        throw ParseError(ParseError::Kind::Syntax, "malformed cycles: expected an index");
      }
      const int v = s[pos] - '0';
      ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        throw ParseError(ParseError::Kind::Syntax, "malformed cycles: index out of range");
      }
      if (v < 1 || v > kIndexCount) {
        throw ParseError(ParseError::Kind::Syntax, "malformed cycles: index out of range");
      }
      cycle.push_back(v);
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError(ParseError::Kind::Syntax, "malformed cycles: expected ',' or ')'");
    }
    for (int v : cycle) {
      if (used[v - 1]) {
        throw ParseError(ParseError::Kind::NotBijection,
                         "not a bijection: index " + std::to_string(v) + " repeated");
      }
      used[v - 1] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Perm4::from_images(images);
}

Perm4 conjugate(const Perm4& f, const Perm4& alpha) {
  return alpha * f * alpha.inverse();
}

// ---------------------------------------------------------------------------

PairMap::PairMap() : image_{0, 1, 2, 3, 4, 5} {}

std::uint8_t PairMap::apply_mask(std::uint8_t mask) const {
  std::uint8_t out = 0;
  for (int k = 0; k < kPairCount; ++k) {
    if (mask & (1u << k)) out = static_cast<std::uint8_t>(out | (1u << image_[k]));
  }
  return out;
}

PairMap operator*(const PairMap& f, const PairMap& g) {
  PairMap out;
  for (int k = 0; k < kPairCount; ++k) out.image_[k] = f.image_[g.image_[k]];
  return out;
}

PairMap PairMap::inverse() const {
  PairMap out;
  for (int k = 0; k < kPairCount; ++k) out.image_[image_[k]] = static_cast<std::uint8_t>(k);
  return out;
}

PairMap extend(const Perm4& phi) {
  PairMap out;
  for (const Pair& u : Pair::all()) {
    out.image_[u.ordinal()] =
        static_cast<std::uint8_t>(Pair(phi(u.lo()), phi(u.hi())).ordinal());
  }
  return out;
}

PairMap correlation_map() {
  PairMap out;
  for (const Pair& u : Pair::all()) {
    out.image_[u.ordinal()] = static_cast<std::uint8_t>(correlation(u).ordinal());
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string CycleType::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts[k]);
  }
  return out + ")";
}

CycleType cycle_type(const Perm4& phi) {
  CycleType ct;
  std::array<bool, kIndexCount> done{};
  for (int start = 1; start <= kIndexCount; ++start) {
    if (done[start - 1]) continue;
    int len = 0;
    for (int k = start; !done[k - 1]; k = phi(k)) {
      done[k - 1] = true;
      ++len;
    }
    ct.parts.push_back(len);
  }
  std::sort(ct.parts.begin(), ct.parts.end());
  return ct;
}

bool is_subgroup(std::span<const Perm4> h) {
  if (h.empty()) return false;
  auto contains = [&](const Perm4& x) { return std::find(h.begin(), h.end(), x) != h.end(); };
  for (const Perm4& x : h) {
    if (!contains(x.inverse())) return false;
    for (const Perm4& y : h) {
      if (!contains(x * y)) return false;
    }
  }
  return true;
}

std::vector<ConjugacyClass> conjugacy_classes_under(std::span<const Perm4> h) {
  if (!is_subgroup(h)) throw std::invalid_argument("conjugating set is not a subgroup of S4");
  std::vector<ConjugacyClass> out;
  std::array<bool, 24> assigned{};
  const auto& perms = Perm4::all();
  auto position = [&](const Perm4& x) {
    return std::find(perms.begin(), perms.end(), x) - perms.begin();
  };
  // perms is sorted, so the first unassigned member is the least of its class.
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (assigned[k]) continue;
    ConjugacyClass cls{perms[k], {}};
    for (const Perm4& alpha : h) {
      const Perm4 y = conjugate(perms[k], alpha);
      const auto pos = position(y);
      if (!assigned[pos]) {
        assigned[pos] = true;
        cls.members.push_back(y);
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace spl
