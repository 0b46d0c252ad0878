#include <random>

#include "../common/fixtures.hpp"
#include "cyhopf/datum.hpp"
#include "doctest.h"

using namespace cyhopf;

namespace {

Monomial m(const char* s) { return Monomial::parse(s); }

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

TEST_CASE("reference data validate") {
  CHECK(datum_violations(fixtures::uqsl2()).empty());
  CHECK(datum_violations(fixtures::eg_pointed()).empty());
  const auto d = validate_datum(fixtures::eg_pointed());
  CHECK(d.theta() == 3);
  CHECK(d.s() == 3);
  CHECK(d.q(0, 1) == m("q"));
  CHECK(d.q(1, 0) == m("q^-2"));
}

TEST_CASE("linking violations") {
  auto raw = fixtures::uqsl2();
  raw.chi[1] = {m("q^3")};
  const auto v = datum_violations(raw);
  CHECK(has(v, "illegal linking at (1,2)"));

  auto same = fixtures::eg_pointed();
  same.linking.insert({0, 1});
  CHECK(has(datum_violations(same), "illegal linking at (1,2)"));

  auto inverse_group = fixtures::uqsl2();
  inverse_group.g = {{1}, {-1}};
  inverse_group.chi = {{m("q^2")}, {m("q^-2")}};
  CHECK(has(datum_violations(inverse_group), "illegal linking at (1,2)"));
}

TEST_CASE("q-compatibility and roots of unity") {
  auto raw = fixtures::eg_pointed();
  raw.chi[1][0] = m("q^2");
  CHECK(has(datum_violations(raw), "q-compatibility failed at (1,2)"));

  auto unity = fixtures::uqsl2();
  unity.chi[0] = {m("-1")};
  unity.linking.clear();
  const auto v = datum_violations(unity);
  CHECK(has(v, "chi_i(g_i) is a root of unity at 1"));

  // q_12 q_21 = q_11^-1 holds but q_22 = q^4 differs from q_11 = q.
  DatumData a2;
  a2.group_rank = 2;
  a2.parameters = {"q"};
  a2.cartan = named_cartan("A2");
  a2.g = {{1, 0}, {0, 1}};
  a2.chi = {{m("q"), m("q^-3")}, {m("q^2"), m("q^4")}};
  CHECK(has(datum_violations(a2), "q-compatibility failed at (1,2)"));

  DatumData empty;
  empty.group_rank = 1;
  CHECK_FALSE(datum_violations(empty).empty());
  CHECK_THROWS_AS(validate_datum(empty), ValidationError);
}

TEST_CASE("root characters") {
  const auto d = validate_datum(fixtures::eg_pointed());
  const auto& rs = d.roots();
  CHECK(chi_beta(d, rs, 1)[0] == m("q^2"));
  CHECK(chi_beta(d, rs, 1) == character_product(d.chi(0), d.chi(1)));
  for (std::size_t k = 0; k < d.theta(); ++k) {
    CHECK(chi_beta(d, rs, rs.simple_positions[k]) == d.chi(k));
    CHECK(g_beta(d, rs, rs.simple_positions[k]) == d.g(k));
  }
  CHECK(g_beta(d, rs, 1) == ExponentVector{1, 1, 0});
  CHECK_THROWS(chi_beta(d, rs, 4));
}

TEST_CASE("q-free compatibility holds on valid data") {
  for (const auto& raw : {fixtures::uqsl2(), fixtures::eg_pointed()}) {
    const auto d = validate_datum(raw);
    for (std::size_t i = 0; i < d.theta(); ++i)
      for (std::size_t j = 0; j < d.theta(); ++j) CHECK(d.q(i, j) * d.q(j, i) == d.q(i, i).pow(d.cartan()(i, j)));
  }
}

TEST_CASE("PBW degrees") {
  const auto rs = root_system(validate_cartan(named_cartan("A2")));
  const auto a = pbw_degree(rs, {1, 0, 0}), b = pbw_degree(rs, {0, 1, 0}), c = pbw_degree(rs, {0, 0, 1});
  CHECK(a.total == 1);
  CHECK(b.total == 2);
  CHECK(pbw_compare(a, b) < 0);
  CHECK(pbw_compare(c, a) > 0);
  CHECK(pbw_compare(a, a) == 0);
  CHECK_THROWS(pbw_degree(rs, {-1, 0, 0}));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> v(0, 3);
  auto rnd = [&] { return pbw_degree(rs, {v(rng), v(rng), v(rng)}); };
  for (int i = 0; i < 500; ++i) {
    const auto x = rnd(), y = rnd(), z = rnd();
    CHECK((pbw_compare(x, y) == 0) == (x == y));
    CHECK((pbw_compare(x, y) < 0) == (pbw_compare(y, x) > 0));
    if (pbw_compare(x, y) <= 0 && pbw_compare(y, z) <= 0) CHECK(pbw_compare(x, z) <= 0);
  }
}

TEST_CASE("datum text format") {
  const auto d = fixtures::uqsl2();
  CHECK(d.group_rank == 1);
  CHECK(d.linking.count({0, 1}) == 1);
  CHECK(parse_datum(format_datum(d)) == d);
  CHECK(parse_datum(format_datum(fixtures::eg_pointed())) == fixtures::eg_pointed());

  auto err = [](const char* text) -> ParseError {
    try {
      parse_datum(text);
    } catch (const ParseError& e) {
      return e;
    }
    FAIL("expected a parse error");
    return ParseError(0, "", "");
  };
  const auto unknown = err("group_rank: 1\nparameters: q\ncolour: red\n");
  CHECK(unknown.line() == 3);
  CHECK(unknown.key() == "colour");
  CHECK(err("group_rank: 1\nparameters: q\ncartan: A1\ng: 1\nchi: t\n").key() == "chi");
  CHECK(err("group_rank: 1\nparameters: q\ncartan: A1\ng: 1 2\nchi: q\n").key() == "g");
  CHECK(err("group_rank: 1\nparameters: q\ncartan: A1\ng: 1\n").key() == "chi");
  CHECK(err("group_rank: 1\ngroup_rank: 1\n").line() == 2);
  CHECK(err("group_rank: 1\nparameters: q\ncartan: A1xA1\ng: 1; 1\nchi: q; q^-1\nlinking: 1 3 1\n").key() == "linking");
  CHECK(err("group_rank: 1\nparameters: q\ncartan: Z9\ng: 1\nchi: q\n").key() == "cartan");
}
