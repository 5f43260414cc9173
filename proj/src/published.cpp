#include "spl/published.hpp"

#include <algorithm>

namespace spl::published {

namespace {

std::vector<Index> indices(std::initializer_list<int> values) {
  std::vector<Index> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

std::vector<Perm4> perms(std::initializer_list<const char*> cycles) {
  std::vector<Perm4> out;
  for (const char* c : cycles) out.push_back(parse_perm(c));
  return out;
}

CanonicalKind primary_of(CanonicalKind kind) {
  return is_primary(kind) ? kind : partner(kind);
}

CatalogueEntry entry(std::string label, CanonicalKind kind, SkewFamily family,
                     std::string printed, std::string cycle_type) {
  const Perm4 p = parse_perm(printed);
  return CatalogueEntry{std::move(label), kind,  printed, std::move(cycle_type),
                        PerspectiveSpec{{family, p}, canonical(kind)}, ""};
}

}  // namespace

std::vector<Index> star_triangles(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::G2: return indices({1, 2, 3, 4});
    case CanonicalKind::B2: return indices({1, 2});
    case CanonicalKind::V5: return indices({3});
    default: return {};
  }
}

std::vector<Perm4> axis_group(CanonicalKind kind) {
  std::vector<Perm4> out;
  for (const Perm4& phi : Perm4::all()) {
    switch (primary_of(kind)) {
      case CanonicalKind::G2:
        out.push_back(phi);
        break;
      case CanonicalKind::B2:
        // fixes both sets {1,2} and {3,4}
        if (extend(phi)(Pair(1, 2)) == Pair(1, 2) && extend(phi)(Pair(3, 4)) == Pair(3, 4)) {
          out.push_back(phi);
        }
        break;
      case CanonicalKind::V5:
        if (phi(3) == 3) out.push_back(phi);
        break;
      default:
        break;
    }
  }
  return out;
}

std::string axis_group_description(CanonicalKind kind) {
  switch (primary_of(kind)) {
    case CanonicalKind::G2: return "every permutation of {1,2,3,4}";
    case CanonicalKind::B2: return "permutations fixing the sets {1,2} and {3,4}";
    case CanonicalKind::V5: return "permutations fixing the index 3";
    default: return "";
  }
}

std::vector<Perm4> conjugacy_representatives(CanonicalKind kind) {
  switch (primary_of(kind)) {
    case CanonicalKind::G2:
      return perms({"id", "(1)(2,3,4)", "(1,2)(3,4)", "(1)(2)(3,4)", "(1,2,3,4)"});
    case CanonicalKind::B2:
      return perms({"id", "(1)(2)(3,4)", "(1,2)(3)(4)", "(1)(2,3)(4)", "(1)(2,3,4)",
                    "(4)(1,2,3)", "(1,2)(3,4)", "(1,4)(2,3)", "(1,2,3,4)", "(1,3,2,4)"});
    case CanonicalKind::V5:
      return perms({"id", "(1)(3)(2,4)", "(1)(2)(3,4)", "(1)(2,3,4)", "(3)(1,2,4)",
                    "(1,2)(3,4)", "(1,2,3,4)"});
    default:
      return {};
  }
}

const std::vector<CatalogueEntry>& perm_catalogue() {
  static const std::vector<CatalogueEntry> list = [] {
    using K = CanonicalKind;
    constexpr auto F = SkewFamily::Perm;
    std::vector<CatalogueEntry> out = {
        entry("i", K::G2, F, "id", "(1,1,1,1)"),
        entry("ii", K::G2, F, "(1,2)(3,4)", "(2,2)"),
        entry("iii", K::G2, F, "(1)(2,3,4)", "(1,3)"),
        entry("iv", K::G2, F, "id", "(1,1,2)"),
        entry("v", K::G2, F, "(1,2,3,4)", "(4)"),
        entry("vi", K::G2Star, F, "id", "(1,1,1,1)"),
        entry("vii", K::G2Star, F, "(1,2)(3,4)", "(2,2)"),
        entry("viii", K::G2Star, F, "(1)(2,3,4)", "(1,3)"),
        entry("ix", K::G2Star, F, "(1)(2)(3,4)", "(1,1,2)"),
        entry("x", K::G2Star, F, "(1,2,3,4)", "(4)"),
        entry("xi", K::B2, F, "(1,2)(3,4)", "(2,2)"),
        entry("xii", K::B2, F, "(1,3)(2,4)", "(2,2)"),
        entry("xiii", K::B2, F, "(3)(1,2,4)", "(1,3)"),
        entry("xiv", K::B2, F, "(1,2,3,4)", "(4)"),
        entry("xv", K::B2, F, "(1,3,2,4)", "(4)"),
        entry("xvi", K::B2, F, "(1)(2)(3,4)", "(1,1,2)"),
        entry("xvii", K::B2, F, "(1)(2,3,4)", "(1,3)"),
        entry("xviii", K::B2, F, "(1)(4)(2,3)", "(1,1,2)"),
        entry("xix", K::V4, F, "id", "(1,1,1,1)"),
        entry("xx", K::V4, F, "(1,2)(3,4)", "(2,2)"),
        entry("xxi", K::V4, F, "(1,3)(2,4)", "(2,2)"),
        entry("xxii", K::V4, F, "(1)(2,3,4)", "(1,3)"),
        entry("xxiii", K::V4, F, "(4)(1,2,3)", "(1,3)"),
        entry("xxiv", K::V4, F, "(1)(2)(3,4)", "(1,1,2)"),
        entry("xxv", K::V4, F, "(1,2)(3)(4)", "(1,1,2)"),
        entry("xxvi", K::V4, F, "(1)(2,3)(4)", "(1,1,2)"),
        entry("xxvii", K::V4, F, "(1,2,3,4)", "(4)"),
        entry("xxviii", K::V4, F, "(1,3,2,4)", "(4)"),
        entry("xxix", K::V5, F, "id", "(1,1,1,1)"),
        entry("xxx", K::V5, F, "(3)(1,2,4)", "(1,3)"),
        entry("xxxi", K::V5, F, "(3)(1)(2,4)", "(1,1,2)"),
        entry("xxxii", K::V5, F, "(1,2)(3,4)", "(2,2)"),
        entry("xxxiii", K::V5, F, "(1)(2,3,4)", "(1,3)"),
        entry("xxxiv", K::V5, F, "(1)(2)(3,4)", "(1,1,2)"),
        entry("xxxv", K::V5, F, "(1,2,3,4)", "(4)"),
        entry("xxxvi", K::V6, F, "id", "(1,1,1,1)"),
        entry("xxxvii", K::V6, F, "(1,2)(3,4)", "(2,2)"),
        entry("xxxviii", K::V6, F, "(1)(2,3,4)", "(1,3)"),
        entry("xxxix", K::V6, F, "(3)(1,2,4)", "(1,3)"),
        entry("xl", K::V6, F, "(1)(3)(2,4)", "(1,1,2)"),
        entry("xli", K::V6, F, "(1)(2)(3,4)", "(1,1,2)"),
        entry("xlii", K::V6, F, "(1,2,3,4)", "(4)"),
    };
    // Entry iv prints the identity next to cycle type (1,1,2); it is matched
    // through its stated isomorphism with the identity perspective on B2.
    auto& iv = out[3];
    iv.match = PerspectiveSpec{{F, Perm4()}, canonical(K::B2)};
    iv.note = "matched as perm:id@B2 (printed identity contradicts cycle type (1,1,2))";
    return out;
  }();
  return list;
}

const std::vector<CatalogueEntry>& kappa_catalogue() {
  static const std::vector<CatalogueEntry> list = [] {
    using K = CanonicalKind;
    constexpr auto F = SkewFamily::Kappa;
    std::vector<CatalogueEntry> out;
    auto add = [&](K kind, std::initializer_list<const char*> printed) {
      int k = 0;
      for (const char* p : printed) {
        const Perm4 perm = parse_perm(p);
        out.push_back(entry(std::string(kind_name(kind)) + "/" + std::to_string(++k), kind, F,
                            p, cycle_type(perm).to_string()));
      }
    };
    add(K::G2, {"id", "(1,2)(3,4)", "(1)(2)(3,4)", "(1)(2,3,4)", "(1,2,3,4)"});
    add(K::B2, {"id", "(1)(2)(3,4)", "(1,2)(3)(4)", "(1)(2,3,4)", "(4)(1,2,3)", "(1,2)(3,4)",
                "(1,4)(2,3)", "(1,2,3,4)"});
    add(K::V5, {"id", "(1)(3)(2,4)", "(1)(2)(3,4)", "(1)(2,3,4)", "(3)(1,2,4)", "(1,2,3,4)",
                "(1,2)(3,4)"});
    return out;
  }();
  return list;
}

}  // namespace spl::published
