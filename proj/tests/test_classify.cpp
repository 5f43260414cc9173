#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "spl/classify.hpp"
#include "spl/published.hpp"

using namespace spl;

namespace {

// Independent oracle: union-find over pairwise witness searches.
std::size_t count_classes_by_search(const std::vector<PerspectiveSpec>& specs) {
  std::vector<Psts> built;
  for (const auto& s : specs) built.push_back(build(s).psts);
  std::vector<std::size_t> parent(specs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (std::size_t j = i + 1; j < specs.size(); ++j) {
      if (root(i) == root(j)) continue;
      if (find_isomorphism(built[i], built[j])) parent[root(j)] = root(i);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < specs.size(); ++i) roots.insert(root(i));
  return roots.size();
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("family enumeration") {
  const auto axes = canonical_axes();
  CHECK(enumerate_family(SkewFamily::Perm, axes).size() == 144);
  const auto& census = enumerate_labelings();
  CHECK(enumerate_family(SkewFamily::Kappa, census).size() == 24 * census.size());
  CHECK(enumerate_family(SkewFamily::Perm, census).size() ==
        enumerate_family(SkewFamily::Kappa, census).size());
  CHECK_THROWS_AS(enumerate_family(SkewFamily::Perm, std::vector<VeblenConfig>{}),
                  std::invalid_argument);
}

TEST_CASE("partition counts agree with pairwise search") {
  for (SkewFamily f : {SkewFamily::Perm, SkewFamily::Kappa}) {
    const auto specs = enumerate_family(f, canonical_axes());
    const auto classes = partition_into_classes(specs);
    CHECK(classes.size() == count_classes_by_search(specs));
    std::size_t members = 0;
    for (const IsoClass& c : classes) {
      members += c.members.size();
      CHECK(c.representative == c.members.front());
      CHECK(std::is_sorted(c.members.begin(), c.members.end()));
    }
    CHECK(members == specs.size());
  }
}

TEST_CASE("partition does not depend on input order or workers") {
  auto specs = enumerate_family(SkewFamily::Kappa, canonical_axes());
  const auto base = partition_into_classes(specs, 1);
  std::mt19937 rng(3);
  std::shuffle(specs.begin(), specs.end(), rng);
  const auto other = partition_into_classes(specs, 4);
  REQUIRE(base.size() == other.size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    CHECK(base[k].members == other[k].members);
    CHECK(base[k].key == other[k].key);
    CHECK(to_json(base[k]) == to_json(other[k]));
  }
}

TEST_CASE("the two families never share a class") {
  const auto perm = partition_into_classes(enumerate_family(SkewFamily::Perm, canonical_axes()));
  const auto kappa = partition_into_classes(enumerate_family(SkewFamily::Kappa, canonical_axes()));
  std::vector<PerspectiveSpec> both = enumerate_family(SkewFamily::Perm, canonical_axes());
  const auto k = enumerate_family(SkewFamily::Kappa, canonical_axes());
  both.insert(both.end(), k.begin(), k.end());
  CHECK(partition_into_classes(both).size() == perm.size() + kappa.size());
}

TEST_CASE("branch A is the fixed star-triangle condition") {
  for (const IsoClass& c : partition_into_classes(enumerate_family(SkewFamily::Perm, canonical_axes()))) {
    const PerspectiveSpec& r = c.representative;
    bool condition = false;
    for (Index i : r.skew.perm.fixed_points()) {
      const auto tri = star_triangles(r.axis);
      condition = condition || std::find(tri.begin(), tri.end(), i) != tri.end();
    }
    CHECK((c.branch == Branch::A) == condition);
    CHECK((c.free_k5_count >= 3) == condition);
  }
}

TEST_CASE("every permutation class holds a listed conjugacy representative") {
  for (const IsoClass& c : partition_into_classes(enumerate_family(SkewFamily::Perm, canonical_axes()))) {
    bool found = false;
    for (const PerspectiveSpec& m : c.members) {
      const auto kind = canonical_kind_of(m.axis);
      REQUIRE(kind);
      const auto reps = published::conjugacy_representatives(*kind);
      found = found || std::find(reps.begin(), reps.end(), m.skew.perm) != reps.end();
    }
    CHECK_MESSAGE(found, c.representative.to_string());
  }
}

TEST_CASE("axis conjugacy classes") {
  std::multiset<std::size_t> sizes;
  for (const auto& c : axis_conjugacy_classes(CanonicalKind::G2)) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 6, 6, 8});
  CHECK(axis_conjugacy_classes(CanonicalKind::B2).size() == 10);
  CHECK(axis_conjugacy_classes(CanonicalKind::V5).size() == 10);

  // Listed representatives for G2 and B2 fall in distinct classes covering all.
  for (CanonicalKind k : {CanonicalKind::G2, CanonicalKind::B2}) {
    const auto classes = axis_conjugacy_classes(k);
    std::set<std::size_t> hit;
    for (const Perm4& rep : published::conjugacy_representatives(k)) {
      for (std::size_t c = 0; c < classes.size(); ++c) {
        const auto& m = classes[c].members;
        if (std::binary_search(m.begin(), m.end(), rep)) CHECK(hit.insert(c).second);
      }
    }
    CHECK(hit.size() == classes.size());
  }
}

TEST_CASE("catalogue entries denote distinct classes") {
  for (SkewFamily f : {SkewFamily::Perm, SkewFamily::Kappa}) {
    const auto& catalogue =
        f == SkewFamily::Perm ? published::perm_catalogue() : published::kappa_catalogue();
    std::set<CanonicalKey> keys;
    for (const auto& e : catalogue) {
      CHECK(e.match.skew.family == f);
      keys.insert(canonical_key(build(e.match).psts));
    }
    CHECK(keys.size() == catalogue.size());
  }
  CHECK(published::perm_catalogue().size() == published::kPermClassCount);
  CHECK(published::kappa_catalogue().size() == published::kKappaClassCount);
}

TEST_CASE("published labels") {
  auto classes = partition_into_classes(enumerate_family(SkewFamily::Perm, canonical_axes()));
  attach_published_labels(classes, SkewFamily::Perm);
  std::size_t labeled = 0;
  for (const IsoClass& c : classes) {
    if (!c.published_label) {
      CHECK(c.representative.to_string() == "perm:(1,2)@B2");
      continue;
    }
    ++labeled;
  }
  CHECK(labeled == 42);
  auto id_b2 = std::find_if(classes.begin(), classes.end(), [](const IsoClass& c) {
    return std::find(c.members.begin(), c.members.end(),
                     PerspectiveSpec{{SkewFamily::Perm, Perm4()}, canonical(CanonicalKind::B2)}) !=
           c.members.end();
  });
  REQUIRE(id_b2 != classes.end());
  CHECK(id_b2->published_label == "iv");
}

}
