#include <algorithm>
#include <set>

#include "doctest.h"
#include "spl/index_algebra.hpp"

using namespace spl;

TEST_SUITE("index_algebra") {

TEST_CASE("index bounds") {
  CHECK(Index(1).value() == 1);
  CHECK(Index(4).value() == 4);
  CHECK_THROWS_AS(Index(0), std::out_of_range);
  CHECK_THROWS_AS(Index(5), std::out_of_range);
}

TEST_CASE("pairs follow the global order 12 13 14 23 24 34") {
  const char* labels[] = {"12", "13", "14", "23", "24", "34"};
  for (int k = 0; k < kPairCount; ++k) {
    CHECK(Pair::from_ordinal(k).label() == labels[k]);
    CHECK(Pair::from_ordinal(k).ordinal() == k);
  }
  CHECK(Pair(3, 1) == Pair(1, 3));
  CHECK_THROWS_AS(Pair(2, 2), std::invalid_argument);
}

TEST_CASE("correlation is the complement") {
  CHECK(correlation(Pair(1, 2)) == Pair(3, 4));
  CHECK(correlation(Pair(2, 4)) == Pair(1, 3));
  for (const Pair& u : Pair::all()) {
    CHECK(correlation(correlation(u)) == u);
    for (int i = 1; i <= 4; ++i) {
      CHECK(u.contains(Index(i)) != correlation(u).contains(Index(i)));
    }
  }
}

TEST_CASE("extend applies the permutation elementwise") {
  const Perm4 c4 = parse_perm("(1,2,3,4)");
  CHECK(extend(c4)(Pair(1, 2)) == Pair(2, 3));
  CHECK(extend(Perm4()) == PairMap());
  CHECK(extend(parse_perm("(1,2)"))(Pair(1, 2)) == Pair(1, 2));
  CHECK(extend(parse_perm("(1,2)"))(Pair(1, 3)) == Pair(2, 3));
}

TEST_CASE("extend is a homomorphism commuting with correlation") {
  for (const Perm4& f : Perm4::all()) {
    CHECK(extend(f).inverse() == extend(f.inverse()));
    CHECK(extend(f) * correlation_map() == correlation_map() * extend(f));
    for (const Perm4& g : Perm4::all()) CHECK(extend(f * g) == extend(f) * extend(g));
  }
}

TEST_CASE("composition applies the right factor first") {
  const Perm4 f = parse_perm("(1,2)");
  const Perm4 g = parse_perm("(2,3)");
  CHECK((f * g)(1) == 2);
  CHECK((f * g)(2) == 3);
  CHECK((f * g)(3) == 1);
  CHECK((f * g).to_string() == "(1,2,3)");
}

TEST_CASE("cycle text round-trips") {
  std::set<std::string> seen;
  for (const Perm4& p : Perm4::all()) {
    CHECK(parse_perm(p.to_string()) == p);
    seen.insert(p.to_string());
  }
  CHECK(seen.size() == 24);
  CHECK(parse_perm("()") == Perm4());
  CHECK(parse_perm("id") == Perm4());
  CHECK(parse_perm("(1)(2,3,4)") == parse_perm("(2,3,4)"));
  CHECK(parse_perm(" (1, 2) (3 ,4) ").to_string() == "(1,2)(3,4)");
}

TEST_CASE("parse errors are classified") {
  auto kind_of = [](std::string_view text) {
    try {
      parse_perm(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("no error for " << text);
    return ParseError::Kind::Io;
  };
  CHECK(kind_of("(1,2,2)") == ParseError::Kind::NotBijection);
  CHECK(kind_of("(1,2)(2,3)") == ParseError::Kind::NotBijection);
  CHECK(kind_of("(1,5)") == ParseError::Kind::Syntax);
  CHECK(kind_of("(1,2") == ParseError::Kind::Syntax);
  CHECK(kind_of("1,2") == ParseError::Kind::Syntax);
  CHECK(kind_of("") == ParseError::Kind::Syntax);
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(Perm4()).to_string() == "(1,1,1,1)");
  CHECK(cycle_type(parse_perm("(1,2)(3,4)")).to_string() == "(2,2)");
  CHECK(cycle_type(parse_perm("(2,3,4)")).to_string() == "(1,3)");
  CHECK(cycle_type(parse_perm("(1,2,3,4)")).to_string() == "(4)");
  CHECK(cycle_type(parse_perm("(3,4)")).to_string() == "(1,1,2)");
}

TEST_CASE("conjugation") {
  const Perm4 a = parse_perm("(1,3)");
  const Perm4 f = parse_perm("(1,2)");
  CHECK(conjugate(f, a) == parse_perm("(2,3)"));
  for (const Perm4& x : Perm4::all()) {
    CHECK(cycle_type(conjugate(x, a)) == cycle_type(x));
  }
}

TEST_CASE("conjugacy classes under subgroups") {
  const auto& all = Perm4::all();
  const auto full = conjugacy_classes_under(std::vector<Perm4>(all.begin(), all.end()));
  CHECK(full.size() == 5);
  std::set<CycleType> types;
  for (const auto& c : full) {
    types.insert(cycle_type(c.representative));
    for (const Perm4& m : c.members) CHECK(cycle_type(m) == cycle_type(c.representative));
  }
  CHECK(types.size() == 5);

  const auto trivial = conjugacy_classes_under(std::vector<Perm4>{Perm4()});
  CHECK(trivial.size() == 24);

  // The group fixing both {1,2} and {3,4}.
  const std::vector<Perm4> klein = {Perm4(), parse_perm("(1,2)"), parse_perm("(3,4)"),
                                    parse_perm("(1,2)(3,4)")};
  const auto b2 = conjugacy_classes_under(klein);
  CHECK(b2.size() == 10);
  std::size_t total = 0;
  for (const auto& c : b2) {
    total += c.members.size();
    CHECK(c.representative == c.members.front());
  }
  CHECK(total == 24);

  CHECK_THROWS_AS(conjugacy_classes_under(std::vector<Perm4>{parse_perm("(1,2,3)")}),
                  std::invalid_argument);
}

}
