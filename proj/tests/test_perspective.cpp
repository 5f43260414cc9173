#include <algorithm>

#include "doctest.h"
#include "spl/perspective.hpp"

using namespace spl;

namespace {

PerspectiveSpec perm(const char* cycles, CanonicalKind k) {
  return {{SkewFamily::Perm, parse_perm(cycles)}, canonical(k)};
}
PerspectiveSpec kappa(const char* cycles, CanonicalKind k) {
  return {{SkewFamily::Kappa, parse_perm(cycles)}, canonical(k)};
}

}  // namespace

TEST_SUITE("perspective") {

TEST_CASE("every built structure is a (15_4 20_3) configuration") {
  for (SkewFamily f : {SkewFamily::Perm, SkewFamily::Kappa}) {
    for (const VeblenConfig& axis : enumerate_labelings()) {
      for (const Perm4& p : Perm4::all()) {
        const LabeledPsts s = build({{f, p}, axis});
        CHECK(s.psts.point_count() == kPerspectivePoints);
        CHECK(s.psts.line_count() == kPerspectiveLines);
        CHECK(validate_configuration(s.psts, 4, 3));
      }
    }
  }
}

TEST_CASE("point names and roles are fixed") {
  const LabeledPsts s = build(perm("id", CanonicalKind::G2));
  const std::vector<std::string> names = {"p",  "a1", "a2", "a3", "a4", "b1",  "b2", "b3",
                                          "b4", "c12", "c13", "c14", "c23", "c24", "c34"};
  CHECK(s.psts.names() == names);
  for (PointId x = 0; x < kPerspectivePoints; ++x) CHECK(s.role[x].name() == names[x]);
  CHECK(s.a_star() == std::vector<PointId>{0, 1, 2, 3, 4});
  CHECK(s.b_star() == std::vector<PointId>{0, 5, 6, 7, 8});
}

TEST_CASE("line blocks come in construction order") {
  const PerspectiveSpec spec = kappa("(1,2)", CanonicalKind::B2);
  const LabeledPsts s = build(spec);
  const auto& lines = s.psts.lines();
  for (int k = 0; k < 4; ++k) {
    for (PointId x : lines[k]) CHECK(s.role[x].kind == RoleKind::C);
  }
  for (int k = 0; k < 6; ++k) {
    const Pair u = Pair::from_ordinal(k);
    Line a = {point::a(u.lo()), point::a(u.hi()), point::c(u)};
    std::sort(a.begin(), a.end());
    CHECK(lines[4 + k] == a);
    Line b = {point::b(u.lo()), point::b(u.hi()), point::c(b_join(spec, u.lo(), u.hi()))};
    std::sort(b.begin(), b.end());
    CHECK(lines[10 + k] == b);
  }
  for (int i = 1; i <= 4; ++i) {
    CHECK(lines[15 + i] == Line{point::kCenter, point::a(i), point::b(i)});
  }
}

TEST_CASE("b_join") {
  CHECK(b_join(perm("(2,3,4)", CanonicalKind::G2), Index(1), Index(2)) == Pair(1, 4));
  CHECK(b_join(kappa("id", CanonicalKind::G2), Index(1), Index(3)) == Pair(2, 4));
  for (const Pair& u : Pair::all()) {
    CHECK(b_join(perm("id", CanonicalKind::B2), u.lo(), u.hi()) == u);
  }
  CHECK_THROWS(b_join(perm("id", CanonicalKind::B2), Index(2), Index(2)));
}

TEST_CASE("third point of two b points is the joined c point") {
  for (SkewFamily f : {SkewFamily::Perm, SkewFamily::Kappa}) {
    for (const Perm4& p : Perm4::all()) {
      const PerspectiveSpec spec{{f, p}, canonical(CanonicalKind::V5)};
      const Psts s = build(spec).psts;
      for (const Pair& u : Pair::all()) {
        CHECK(s.third_point(point::b(u.lo()), point::b(u.hi())) ==
              point::c(b_join(spec, u.lo(), u.hi())));
      }
    }
  }
}

TEST_CASE("predicted free K5 graphs") {
  const auto g2 = predicted_free_k5(perm("id", CanonicalKind::G2));
  CHECK(g2.size() == 6);
  for (int i = 1; i <= 4; ++i) {
    CHECK(std::find(g2.begin(), g2.end(), star_k5(Index(i))) != g2.end());
  }
  const LabeledPsts any = build(perm("id", CanonicalKind::G2));
  for (CanonicalKind k : kAllKinds) {
    CHECK(predicted_free_k5(perm("(1,2)(3,4)", k)) ==
          std::vector<std::vector<PointId>>{any.a_star(), any.b_star()});
    for (const Perm4& p : Perm4::all()) {
      CHECK(predicted_free_k5({{SkewFamily::Kappa, p}, canonical(k)}).size() == 2);
    }
  }
  CHECK(predicted_free_k5(perm("(1,2)", CanonicalKind::V5)).size() == 3);
  CHECK(predicted_free_k5(perm("(1,2)", CanonicalKind::B2)).size() == 2);
}

TEST_CASE("star K5 points") {
  CHECK(star_k5(Index(1)) == std::vector<PointId>{1, 5, 9, 10, 11});
}

TEST_CASE("spec text") {
  CHECK(perm("(1,2)(3,4)", CanonicalKind::B2).to_string() == "perm:(1,2)(3,4)@B2");
  CHECK(kappa("id", CanonicalKind::G2Star).to_string() == "kappa:id@G2*");
  const auto& census = enumerate_labelings();
  for (std::size_t n = 0; n < census.size(); ++n) {
    const std::string label = axis_label(census[n]);
    if (!canonical_kind_of(census[n])) CHECK(label == "census:" + std::to_string(n));
  }
}

TEST_CASE("spec ordering") {
  CHECK(perm("(1,2)", CanonicalKind::V6) < kappa("id", CanonicalKind::G2));
  CHECK(perm("(1,2)", CanonicalKind::G2) < perm("id", CanonicalKind::B2));
  CHECK(perm("id", CanonicalKind::B2) < perm("(3,4)", CanonicalKind::B2));
}

}
