#include <algorithm>
#include <set>

#include "cyhopf/cartan.hpp"
#include "doctest.h"

using namespace cyhopf;

namespace {

// Closure of the simple roots under all simple reflections, keeping
// positive vectors only.
std::set<Root> closure_roots(const CartanMatrix& c) {
  const std::size_t n = c.rank();
  std::set<Root> all;
  std::vector<Root> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    all.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    Root r = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Root s = r;
      std::int64_t pair = 0;
      for (std::size_t j = 0; j < n; ++j) pair += c(i, j) * r[j];
      s[i] -= pair;
      if (std::all_of(s.begin(), s.end(), [](auto v) { return v >= 0; }) && all.insert(s).second)
        frontier.push_back(s);
    }
  }
  return all;
}

}  // namespace

TEST_CASE("validation") {
  const auto a2 = validate_cartan({{2, -1}, {-1, 2}});
  CHECK(a2.symmetrizer() == std::vector<std::int64_t>{1, 1});
  CHECK(a2.components().size() == 1);

  const auto b2 = validate_cartan({{2, -2}, {-1, 2}});
  CHECK(b2.symmetrizer() == std::vector<std::int64_t>{1, 2});

  const auto a1a1 = validate_cartan(named_cartan("A1xA1"));
  CHECK(a1a1.components().size() == 2);
  CHECK_FALSE(a1a1.same_component(0, 1));

  CHECK_THROWS_WITH(validate_cartan({{2, -2}, {-2, 2}}), doctest::Contains("not finite type"));
  CHECK_THROWS_WITH(validate_cartan({{2, 1}, {1, 2}}), doctest::Contains("not a generalized Cartan matrix"));
  CHECK_THROWS_WITH(validate_cartan({{3, 0}, {0, 2}}), doctest::Contains("not a generalized Cartan matrix"));
  CHECK_THROWS_WITH(validate_cartan({{2, -1}, {0, 2}}), doctest::Contains("not a generalized Cartan matrix"));
  CHECK_THROWS_WITH(validate_cartan({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), doctest::Contains("not symmetrizable"));
  CHECK_THROWS_WITH(validate_cartan({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), doctest::Contains("not finite type"));
  CHECK_THROWS_AS(validate_cartan({}), CartanError);
}

TEST_CASE("symmetrizers of named types") {
  CHECK(validate_cartan(named_cartan("G2")).symmetrizer() == std::vector<std::int64_t>{1, 3});
  CHECK(validate_cartan(named_cartan("B3")).symmetrizer() == std::vector<std::int64_t>{2, 2, 1});
  CHECK(validate_cartan(named_cartan("C3")).symmetrizer() == std::vector<std::int64_t>{1, 1, 2});
  CHECK(validate_cartan(named_cartan("F4")).symmetrizer() == std::vector<std::int64_t>{2, 2, 1, 1});
}

TEST_CASE("longest words") {
  CHECK(longest_word(validate_cartan(named_cartan("A1"))) == std::vector<std::size_t>{0});
  CHECK(longest_word(validate_cartan(named_cartan("A2"))) == std::vector<std::size_t>{0, 1, 0});
  CHECK(longest_word(validate_cartan(named_cartan("A1xA1"))) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("A2 roots") {
  const auto rs = root_system(validate_cartan(named_cartan("A2")));
  CHECK(rs.positive_roots == std::vector<Root>{{1, 0}, {1, 1}, {0, 1}});
  CHECK(rs.heights == std::vector<std::int64_t>{1, 2, 1});
  CHECK(rs.simple_positions == std::vector<std::size_t>{0, 2});
  CHECK(root_to_string(rs.positive_roots[1]) == "a1+a2");
}

TEST_CASE("B2 roots in both orientations") {
  const auto b2 = root_system(validate_cartan({{2, -2}, {-1, 2}}));
  CHECK(std::set<Root>(b2.positive_roots.begin(), b2.positive_roots.end()) ==
        std::set<Root>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
  const auto c2 = root_system(validate_cartan({{2, -1}, {-2, 2}}));
  CHECK(std::set<Root>(c2.positive_roots.begin(), c2.positive_roots.end()) ==
        std::set<Root>{{1, 0}, {0, 1}, {1, 1}, {1, 2}});
}

TEST_CASE("root counts and closure agreement") {
  const std::vector<std::pair<const char*, std::size_t>> types{
      {"A1", 1},  {"A2", 3},  {"A3", 6},     {"A4", 10},    {"B2", 4},   {"G2", 6},       {"B3", 9},
      {"C3", 9},  {"D4", 12}, {"F4", 24},    {"A1xA1", 2},  {"A2xA1", 4}, {"B2xA1", 5}, {"A1xA1xA1", 3}};
  for (const auto& [name, count] : types) {
    CAPTURE(name);
    const auto c = validate_cartan(named_cartan(name));
    const auto rs = root_system(c);
    CHECK(rs.size() == count);
    CHECK(std::set<Root>(rs.positive_roots.begin(), rs.positive_roots.end()) == closure_roots(c));
    for (std::size_t k = 0; k < c.rank(); ++k) {
      Root ak(c.rank(), 0);
      ak[k] = 1;
      CHECK(rs.positive_roots[rs.simple_positions[k]] == ak);
    }
  }
}

TEST_CASE("alternative reduced words give the same root set") {
  for (const char* name : {"A2", "A3", "B2", "G2", "B3", "D4", "A2xA1"}) {
    CAPTURE(name);
    const auto c = validate_cartan(named_cartan(name));
    std::vector<std::size_t> rev(c.rank());
    for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = rev.size() - 1 - i;
    const auto w1 = longest_word(c);
    const auto w2 = longest_word(c, rev);
    const auto r1 = positive_roots(c, w1), r2 = positive_roots(c, w2);
    CHECK(std::set<Root>(r1.positive_roots.begin(), r1.positive_roots.end()) ==
          std::set<Root>(r2.positive_roots.begin(), r2.positive_roots.end()));
  }
}

TEST_CASE("unreduced words are rejected") {
  const auto c = validate_cartan(named_cartan("A2"));
  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_WITH(positive_roots(c, bad), doctest::Contains("word not reduced"));
  const std::vector<std::size_t> short_word{0, 1};
  CHECK_THROWS_AS(positive_roots(c, short_word), CartanError);
}

TEST_CASE("parse_cartan") {
  CHECK(parse_cartan("2 -1; -1 2") == named_cartan("A2"));
  CHECK(parse_cartan(" A2xA1 ") == named_cartan("A2xA1"));
  CHECK_THROWS(parse_cartan("2 x; 1 2"));
  CHECK_THROWS(named_cartan("E8"));
}
