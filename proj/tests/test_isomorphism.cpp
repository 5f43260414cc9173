#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "spl/isomorphism.hpp"

using namespace spl;

namespace {

PerspectiveSpec perm(const char* cycles, CanonicalKind k) {
  return {{SkewFamily::Perm, parse_perm(cycles)}, canonical(k)};
}
PerspectiveSpec kappa(const char* cycles, CanonicalKind k) {
  return {{SkewFamily::Kappa, parse_perm(cycles)}, canonical(k)};
}

Psts shuffled(const Psts& s, std::mt19937& rng) {
  std::vector<PointId> m(static_cast<std::size_t>(s.point_count()));
  std::iota(m.begin(), m.end(), 0);
  std::shuffle(m.begin(), m.end(), rng);
  return s.relabeled(m);
}

}  // namespace

TEST_SUITE("isomorphism") {

TEST_CASE("point maps") {
  const PointMap f{{1, 2, 0}};
  CHECK(f * f.inverse() == PointMap::identity(3));
  CHECK((f * f).image == std::vector<PointId>{2, 0, 1});
}

TEST_CASE("reflexivity") {
  for (CanonicalKind k : kAllKinds) {
    const Psts s = build(kappa("(1,2,3)", k)).psts;
    const auto f = find_isomorphism(s, s);
    REQUIRE(f);
    CHECK(is_isomorphism(s, s, *f));
  }
}

TEST_CASE("canonical key is invariant under relabeling") {
  std::mt19937 rng(11);
  for (SkewFamily fam : {SkewFamily::Perm, SkewFamily::Kappa}) {
    for (CanonicalKind k : kAllKinds) {
      for (const char* p : {"id", "(1,2)", "(1,2)(3,4)", "(2,3,4)", "(1,2,3,4)"}) {
        const Psts s = build({{fam, parse_perm(p)}, canonical(k)}).psts;
        const CanonicalKey key = canonical_key(s);
        for (int round = 0; round < 3; ++round) {
          const Psts t = shuffled(s, rng);
          CHECK(canonical_key(t) == key);
          const auto f = find_isomorphism(s, t);
          REQUIRE(f);
          CHECK(is_isomorphism(s, t, *f));
        }
      }
    }
  }
}

TEST_CASE("key equality agrees with the witness search") {
  std::vector<Psts> sample;
  for (CanonicalKind k : kAllKinds) {
    for (const Perm4& p : Perm4::all()) {
      if (p.images()[0] > 2) continue;
      sample.push_back(build({{SkewFamily::Perm, p}, canonical(k)}).psts);
    }
  }
  std::vector<CanonicalKey> keys;
  for (const Psts& s : sample) keys.push_back(canonical_key(s));
  for (std::size_t i = 0; i < sample.size(); ++i) {
    for (std::size_t j = i + 1; j < sample.size(); ++j) {
      CHECK((keys[i] == keys[j]) == find_isomorphism(sample[i], sample[j]).has_value());
    }
  }
}

TEST_CASE("non-isomorphic rejections") {
  CHECK_FALSE(find_isomorphism(build(perm("id", CanonicalKind::G2)).psts,
                               build(kappa("id", CanonicalKind::G2)).psts));
  CHECK_FALSE(find_isomorphism(build(perm("(1,2)", CanonicalKind::B2)).psts,
                               build(kappa("(1,2)", CanonicalKind::B2)).psts));
  const Psts small({"x", "y", "z"}, {{0, 1, 2}});
  CHECK_FALSE(find_isomorphism(small, build(perm("id", CanonicalKind::G2)).psts));
}

TEST_CASE("fix constraint") {
  // Six free K5 graphs: some automorphisms of perm:id@G2 move the center.
  const Psts s = build(perm("id", CanonicalKind::G2)).psts;
  for (PointId y = 0; y < s.point_count(); ++y) {
    const auto f = find_isomorphism(s, s, FixConstraint{point::kCenter, y});
    if (f) {
      CHECK(f->image[point::kCenter] == y);
      CHECK(is_isomorphism(s, s, *f));
    }
  }
  const Psts k = build(kappa("id", CanonicalKind::B2)).psts;
  CHECK_FALSE(find_isomorphism(k, k, FixConstraint{point::kCenter, point::a(1)}));
}

TEST_CASE("the correlation swap map") {
  for (const VeblenConfig& axis : enumerate_labelings()) {
    const Psts x = build({{SkewFamily::Kappa, Perm4()}, axis}).psts;
    const Psts y = build({{SkewFamily::Kappa, Perm4()}, axis.correlated()}).psts;
    CHECK(is_isomorphism(x, y, correlation_swap_map()));
    CHECK(find_isomorphism(x, y, FixConstraint{point::kCenter, point::kCenter}));
  }
}

TEST_CASE("automorphism groups") {
  const Psts pasch = canonical(CanonicalKind::G2).to_psts();
  const AutomorphismGroup g = automorphism_group(pasch);
  CHECK(g.order == 24);
  for (const PointMap& gen : g.generators) CHECK(is_isomorphism(pasch, pasch, gen));
  CHECK(all_isomorphisms(pasch, pasch).size() == 24);
  // Every extend(phi) acts on the c points as an automorphism.
  for (const Perm4& phi : Perm4::all()) {
    PointMap f{std::vector<PointId>(6)};
    for (const Pair& u : Pair::all()) f.image[u.ordinal()] = extend(phi)(u).ordinal();
    CHECK(is_isomorphism(pasch, pasch, f));
  }

  for (CanonicalKind k : kAllKinds) {
    for (const char* p : {"id", "(1,2)", "(2,3,4)", "(1,2,3,4)"}) {
      const Psts s = build(kappa(p, k)).psts;
      CHECK(automorphism_group(s).order == all_isomorphisms(s, s).size());
    }
  }
  CHECK(automorphism_group(build(perm("id", CanonicalKind::G2)).psts).order == 720);
  CHECK(automorphism_group(build(perm("(1,2)", CanonicalKind::B2)).psts).order == 8);
}

TEST_CASE("size cap") {
  std::vector<std::string> names;
  for (int k = 0; k <= kMaxCanonicalPoints; ++k) names.push_back("q" + std::to_string(k));
  CHECK_THROWS_AS(canonical_key(Psts(names, {})), SizeCapExceeded);
}

TEST_CASE("witness text lists every source point") {
  const Psts x = build(kappa("id", CanonicalKind::G2)).psts;
  const Psts y = build(kappa("id", CanonicalKind::G2Star)).psts;
  const std::string text = to_text(correlation_swap_map(), x, y);
  CHECK(text.rfind("p -> p\na1 -> b1\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == kPerspectivePoints);
}

TEST_CASE("permutation family criterion") {
  const auto self = perm_family_iso(perm("(1,2,3)", CanonicalKind::V5),
                                    perm("(1,2,3)", CanonicalKind::V5));
  REQUIRE(self);
  CHECK(self->perm == Perm4());
  CHECK(self->iso_case == IsoCase::A);

  const PerspectiveSpec s1 = perm("(1,2,4)", CanonicalKind::V5);
  const PerspectiveSpec s2 = perm("(1,4,2)", CanonicalKind::V5);
  const auto ws = perm_family_witnesses(s1, s2);
  REQUIRE_FALSE(ws.empty());
  CHECK(std::all_of(ws.begin(), ws.end(), [](const FamilyWitness& w) { return w.iso_case == IsoCase::B; }));
  const Psts x = build(s1).psts;
  const Psts y = build(s2).psts;
  for (const FamilyWitness& w : ws) CHECK(is_isomorphism(x, y, family_witness_map(s1, s2, w)));

  const PerspectiveSpec t1 = perm("(1,2)", CanonicalKind::B2);
  const PerspectiveSpec t2 = perm("(3,4)", CanonicalKind::B2);
  CHECK(perm_family_witnesses(t1, t2).empty());
  CHECK_FALSE(find_isomorphism(build(t1).psts, build(t2).psts,
                               FixConstraint{point::kCenter, point::kCenter}));
  CHECK_THROWS_AS(perm_family_iso(kappa("id", CanonicalKind::G2), perm("id", CanonicalKind::G2)),
                  std::invalid_argument);
}

TEST_CASE("complement family criterion") {
  const auto self = kappa_family_iso(kappa("(1,3)", CanonicalKind::B2),
                                     kappa("(1,3)", CanonicalKind::B2));
  REQUIRE(self);
  CHECK(self->perm == Perm4());
  CHECK(self->iso_case == IsoCase::A);

  for (const Perm4& phi : {parse_perm("(1,2)"), parse_perm("(1,3,4)"), parse_perm("(1,2,3,4)")}) {
    for (const Perm4& alpha : Perm4::all()) {
      const PerspectiveSpec s1{{SkewFamily::Kappa, phi}, canonical(CanonicalKind::V5)};
      const PerspectiveSpec s2{{SkewFamily::Kappa, conjugate(phi, alpha)},
                               canonical(CanonicalKind::V5).mapped(extend(alpha))};
      const auto ws = kappa_family_witnesses(s1, s2);
      CHECK(std::find(ws.begin(), ws.end(), FamilyWitness{alpha, IsoCase::A}) != ws.end());
      for (const FamilyWitness& w : ws) {
        CHECK(is_isomorphism(build(s1).psts, build(s2).psts, family_witness_map(s1, s2, w)));
      }
    }
  }
  CHECK_FALSE(kappa_family_iso(kappa("id", CanonicalKind::G2), kappa("(1,2)(3,4)", CanonicalKind::G2)));
}

}
