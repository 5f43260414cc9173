#include "spl/isomorphism.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

namespace spl {

PointMap PointMap::inverse() const {
  PointMap out{std::vector<PointId>(image.size())};
  for (std::size_t x = 0; x < image.size(); ++x) out.image[image[x]] = static_cast<PointId>(x);
  return out;
}

PointMap operator*(const PointMap& f, const PointMap& g) {
  PointMap out{std::vector<PointId>(g.image.size())};
  for (std::size_t x = 0; x < g.image.size(); ++x) out.image[x] = f.image[g.image[x]];
  return out;
}

PointMap PointMap::identity(int n) {
  PointMap out{std::vector<PointId>(n)};
  std::iota(out.image.begin(), out.image.end(), 0);
  return out;
}

bool is_isomorphism(const Psts& x, const Psts& y, const PointMap& f) {
  const int n = x.point_count();
  if (n != y.point_count() || x.line_count() != y.line_count()) return false;
  if (static_cast<int>(f.image.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (PointId v : f.image) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (const Line& l : x.lines()) {
    const int k = y.line_through(f.image[l[0]], f.image[l[1]]);
    if (k < 0) return false;
    const Line& m = y.lines()[k];
    if (std::find(m.begin(), m.end(), f.image[l[2]]) == m.end()) return false;
  }
  return true;
}

std::string to_text(const PointMap& f, const Psts& from, const Psts& to) {
  std::string out;
  for (int x = 0; x < from.point_count(); ++x) {
    out += from.name(x) + " -> " + to.name(f.image[x]) + "\n";
  }
  return out;
}

std::string CanonicalKey::to_string() const {
  // FNV-1a over the code words; the full code is kept for comparisons.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t w : code_) {
    for (int k = 0; k < 4; ++k) {
      h ^= (w >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

/// (degree, number of free K5 graphs through the point)
std::vector<std::pair<int, int>> point_invariants(const Psts& s) {
  std::vector<std::pair<int, int>> inv(s.point_count());
  for (int x = 0; x < s.point_count(); ++x) inv[x].first = s.degree(x);
  if (s.point_count() >= 5) {
    for (const auto& g : free_complete_subgraphs(s, 5)) {
      for (PointId x : g) ++inv[x].second;
    }
  }
  return inv;
}

using Cells = std::vector<std::vector<int>>;

void refine(const Psts& s, Cells& cells) {
  std::vector<int> color(s.point_count());
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int x : cells[c]) color[x] = static_cast<int>(c);
    }
    Cells next;
    bool split = false;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, int>> sigs;
      for (int x : cell) {
        std::vector<int> sig;
        for (int k : s.lines_through(x)) {
          const Line& l = s.lines()[k];
          std::array<int, 2> other{};
          int j = 0;
          for (int z : l) {
            if (z != x) other[j++] = color[z];
          }
          sig.push_back(std::min(other[0], other[1]) * 64 + std::max(other[0], other[1]));
        }
        std::sort(sig.begin(), sig.end());
        sigs.emplace_back(std::move(sig), x);
      }
      std::sort(sigs.begin(), sigs.end());
      std::size_t start = next.size();
      for (std::size_t k = 0; k < sigs.size(); ++k) {
        if (k == 0 || sigs[k].first != sigs[k - 1].first) next.emplace_back();
        next.back().push_back(sigs[k].second);
      }
      if (next.size() - start > 1) split = true;
    }
    cells = std::move(next);
    if (!split) return;
  }
}

class CanonSearch {
 public:
  explicit CanonSearch(const Psts& s) : s_(s), n_(s.point_count()) {}

  std::vector<std::uint32_t> run() {
    const auto inv = point_invariants(s_);
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return inv[a] < inv[b]; });
    Cells cells;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k == 0 || inv[order[k]] != inv[order[k - 1]]) cells.emplace_back();
      cells.back().push_back(order[k]);
    }
    std::vector<int> prefix;
    node(std::move(cells), prefix);
    return best_code_;
  }

 private:
  std::vector<std::uint32_t> encode(const std::vector<int>& lab) const {
    std::vector<std::uint32_t> lines;
    lines.reserve(s_.line_count());
    for (const Line& l : s_.lines()) {
      lines.push_back((1u << lab[l[0]]) | (1u << lab[l[1]]) | (1u << lab[l[2]]));
    }
    std::sort(lines.begin(), lines.end());
    std::vector<std::uint32_t> code = {static_cast<std::uint32_t>(n_),
                                       static_cast<std::uint32_t>(s_.line_count())};
    code.insert(code.end(), lines.begin(), lines.end());
    return code;
  }

  void record_automorphism(const std::vector<int>& reference, const std::vector<int>& lab) {
    std::vector<int> ref_inv(n_);
    for (int x = 0; x < n_; ++x) ref_inv[reference[x]] = x;
    PointMap gamma{std::vector<PointId>(n_)};
    for (int x = 0; x < n_; ++x) gamma.image[x] = ref_inv[lab[x]];
    if (gamma != PointMap::identity(n_)) autos_.push_back(std::move(gamma));
  }

  void leaf(const Cells& cells) {
    std::vector<int> lab(n_);
    for (std::size_t c = 0; c < cells.size(); ++c) lab[cells[c][0]] = static_cast<int>(c);
    auto code = encode(lab);
    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_code_ = code;
      best_lab_ = lab;
      best_code_ = std::move(code);
      return;
    }
    if (code == first_code_) {
      record_automorphism(first_lab_, lab);
    } else if (code == best_code_) {
      record_automorphism(best_lab_, lab);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = std::move(lab);
    }
  }

  // Union-find orbits of the automorphisms found so far that fix every
  // individualized point of the current path.
  std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) {
      return parent[x] == x ? x : parent[x] = root(parent[x]);
    };
    for (const PointMap& g : autos_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int v) { return g.image[v] == v; })) {
        continue;
      }
      for (int x = 0; x < n_; ++x) parent[root(x)] = root(g.image[x]);
    }
    for (int x = 0; x < n_; ++x) parent[x] = root(x);
    return parent;
  }

  void node(Cells cells, std::vector<int>& prefix) {
    refine(s_, cells);
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > cells[target].size()) target = c;
    }
    const std::vector<int> candidates = cells[target];
    std::vector<int> explored;
    for (int v : candidates) {
      if (!explored.empty()) {
        const auto orbit = stabilizer_orbits(prefix);
        if (std::any_of(explored.begin(), explored.end(),
                        [&](int w) { return orbit[w] == orbit[v]; })) {
          continue;
        }
      }
      explored.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int x : cells[c]) {
          if (x != v) rest.push_back(x);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      node(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  const Psts& s_;
  int n_;
  std::vector<int> first_lab_;
  std::vector<std::uint32_t> first_code_;
  std::vector<int> best_lab_;
  std::vector<std::uint32_t> best_code_;
  std::vector<PointMap> autos_;
};

/// Backtracking matcher with third-point propagation: once two collinear
/// points are mapped, the third point of their line is forced.
class Matcher {
 public:
  Matcher(const Psts& x, const Psts& y)
      : x_(x), y_(y), n_(x.point_count()), inv_x_(point_invariants(x)),
        inv_y_(point_invariants(y)), f_(n_, -1), finv_(n_, -1) {}

  bool compatible() const {
    if (x_.point_count() != y_.point_count() || x_.line_count() != y_.line_count()) return false;
    auto a = inv_x_;
    auto b = inv_y_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  /// Visits complete isomorphisms until `visit` returns false.
  void run(std::optional<FixConstraint> fix, const std::function<bool(const PointMap&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    if (!compatible()) return;
    if (fix) {
      if (fix->from < 0 || fix->from >= n_ || fix->to < 0 || fix->to >= n_) return;
      if (!assign(fix->from, fix->to)) {
        undo(0);
        return;
      }
    }
    search();
    undo(0);
  }

 private:
  bool assign(int u, int v) {
    std::vector<std::pair<int, int>> queue = {{u, v}};
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      if (f_[a] == b) continue;
      if (f_[a] != -1 || finv_[b] != -1 || inv_x_[a] != inv_y_[b]) return false;
      for (int w : trail_) {
        const bool cx = x_.collinear(a, w);
        if (cx != y_.collinear(b, f_[w])) return false;
        if (!cx) continue;
        const int z = *x_.third_point(a, w);
        const int zz = *y_.third_point(b, f_[w]);
        if (f_[z] != -1) {
          if (f_[z] != zz) return false;
        } else {
          queue.emplace_back(z, zz);
        }
      }
      f_[a] = b;
      finv_[b] = a;
      trail_.push_back(a);
    }
    return true;
  }

  void undo(std::size_t size) {
    while (trail_.size() > size) {
      const int a = trail_.back();
      trail_.pop_back();
      finv_[f_[a]] = -1;
      f_[a] = -1;
    }
  }

  int next_point() const {
    int fallback = -1;
    for (int u = 0; u < n_; ++u) {
      if (f_[u] != -1) continue;
      for (int w : trail_) {
        if (x_.collinear(u, w)) return u;
      }
      if (fallback < 0) fallback = u;
    }
    return fallback;
  }

  void search() {
    if (stop_) return;
    if (static_cast<int>(trail_.size()) == n_) {
      PointMap m{std::vector<PointId>(f_.begin(), f_.end())};
      if (!(*visit_)(m)) stop_ = true;
      return;
    }
    const int u = next_point();
    const std::size_t mark = trail_.size();
    for (int v = 0; v < n_ && !stop_; ++v) {
      if (finv_[v] != -1) continue;
      if (assign(u, v)) search();
      undo(mark);
    }
  }

  const Psts& x_;
  const Psts& y_;
  int n_;
  std::vector<std::pair<int, int>> inv_x_;
  std::vector<std::pair<int, int>> inv_y_;
  std::vector<int> f_;
  std::vector<int> finv_;
  std::vector<int> trail_;
  const std::function<bool(const PointMap&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

CanonicalKey canonical_key(const Psts& s) {
  if (s.point_count() > kMaxCanonicalPoints) {
    throw SizeCapExceeded("canonical_key supports at most " +
                          std::to_string(kMaxCanonicalPoints) + " points");
  }
  if (s.point_count() == 0) {
    return CanonicalKey({0u, static_cast<std::uint32_t>(s.line_count())});
  }
  return CanonicalKey(CanonSearch(s).run());
}

std::optional<PointMap> find_isomorphism(const Psts& x, const Psts& y,
                                         std::optional<FixConstraint> fix) {
  std::optional<PointMap> found;
  Matcher(x, y).run(fix, [&](const PointMap& m) {
    found = m;
    return false;
  });
  return found;
}

std::vector<PointMap> all_isomorphisms(const Psts& x, const Psts& y) {
  std::vector<PointMap> out;
  Matcher(x, y).run(std::nullopt, [&](const PointMap& m) {
    out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

AutomorphismGroup automorphism_group(const Psts& s) {
  const auto elements = all_isomorphisms(s, s);
  AutomorphismGroup group;
  group.order = elements.size();
  std::set<PointMap> closure = {PointMap::identity(s.point_count())};
  for (const PointMap& g : elements) {
    if (closure.count(g)) continue;
    group.generators.push_back(g);
    std::vector<PointMap> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<PointMap> fresh;
      for (const PointMap& h : frontier) {
        for (const PointMap& gen : group.generators) {
          PointMap product = gen * h;
          if (closure.insert(product).second) fresh.push_back(std::move(product));
        }
      }
      frontier = std::move(fresh);
    }
  }
  return group;
}

// ---------------------------------------------------------------------------

std::string_view case_name(IsoCase c) { return c == IsoCase::A ? "A" : "B"; }

namespace {

void require_family(const PerspectiveSpec& s, SkewFamily family, const char* what) {
  if (s.skew.family != family) throw std::invalid_argument(what);
}

}  // namespace

std::vector<FamilyWitness> perm_family_witnesses(const PerspectiveSpec& s1,
                                                 const PerspectiveSpec& s2) {
  require_family(s1, SkewFamily::Perm, "perm_family_iso needs permutation skews");
  require_family(s2, SkewFamily::Perm, "perm_family_iso needs permutation skews");
  const Perm4& sigma1 = s1.skew.perm;
  const Perm4& sigma2 = s2.skew.perm;
  const Perm4 sigma2_inv = sigma2.inverse();
  std::vector<FamilyWitness> out;
  for (const Perm4& phi : Perm4::all()) {
    if (phi * sigma1 == sigma2 * phi && s1.axis.mapped(extend(phi)) == s2.axis) {
      out.push_back({phi, IsoCase::A});
    }
  }
  for (const Perm4& phi : Perm4::all()) {
    if (phi * sigma1 == sigma2_inv * phi &&
        s1.axis.mapped(extend(sigma2_inv * phi)) == s2.axis) {
      out.push_back({phi, IsoCase::B});
    }
  }
  return out;
}

std::optional<FamilyWitness> perm_family_iso(const PerspectiveSpec& s1,
                                             const PerspectiveSpec& s2) {
  auto all = perm_family_witnesses(s1, s2);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<FamilyWitness> kappa_family_witnesses(const PerspectiveSpec& s1,
                                                  const PerspectiveSpec& s2) {
  require_family(s1, SkewFamily::Kappa, "kappa_family_iso needs complement skews");
  require_family(s2, SkewFamily::Kappa, "kappa_family_iso needs complement skews");
  const Perm4& phi1 = s1.skew.perm;
  const Perm4& phi2 = s2.skew.perm;
  const Perm4 phi2_inv = phi2.inverse();
  std::vector<FamilyWitness> out;
  for (const Perm4& alpha : Perm4::all()) {
    if (conjugate(phi1, alpha) == phi2 && s1.axis.mapped(extend(alpha)) == s2.axis) {
      out.push_back({alpha, IsoCase::A});
    }
  }
  for (const Perm4& alpha : Perm4::all()) {
    if (conjugate(phi1, alpha) == phi2_inv &&
        s1.axis.mapped(correlation_map() * extend(phi2_inv * alpha)) == s2.axis) {
      out.push_back({alpha, IsoCase::B});
    }
  }
  return out;
}

std::optional<FamilyWitness> kappa_family_iso(const PerspectiveSpec& s1,
                                              const PerspectiveSpec& s2) {
  auto all = kappa_family_witnesses(s1, s2);
  if (all.empty()) return std::nullopt;
  return all.front();
}

PointMap family_witness_map(const PerspectiveSpec& s1, const PerspectiveSpec& s2,
                            const FamilyWitness& w) {
  if (s1.skew.family != s2.skew.family) {
    throw std::invalid_argument("family witness needs two specs of one family");
  }
  PairMap on_pairs = extend(w.perm);
  if (w.iso_case == IsoCase::B) {
    const Perm4 second_inv = s2.skew.perm.inverse();
    on_pairs = s1.skew.family == SkewFamily::Perm
                   ? extend(second_inv * w.perm)
                   : correlation_map() * extend(second_inv * w.perm);
  }
  PointMap f{std::vector<PointId>(kPerspectivePoints)};
  f.image[point::kCenter] = point::kCenter;
  for (int i = 1; i <= kIndexCount; ++i) {
    const Index j = w.perm(Index(i));
    if (w.iso_case == IsoCase::A) {
      f.image[point::a(i)] = point::a(j);
      f.image[point::b(i)] = point::b(j);
    } else {
      f.image[point::a(i)] = point::b(j);
      f.image[point::b(i)] = point::a(j);
    }
  }
  for (const Pair& u : Pair::all()) f.image[point::c(u)] = point::c(on_pairs(u));
  return f;
}

PointMap correlation_swap_map() {
  PointMap f{std::vector<PointId>(kPerspectivePoints)};
  f.image[point::kCenter] = point::kCenter;
  for (int i = 1; i <= kIndexCount; ++i) {
    f.image[point::a(i)] = point::b(i);
    f.image[point::b(i)] = point::a(i);
  }
  for (const Pair& u : Pair::all()) f.image[point::c(u)] = point::c(correlation(u));
  return f;
}

}  // namespace spl
