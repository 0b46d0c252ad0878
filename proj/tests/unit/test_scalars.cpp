#include <random>

#include "cyhopf/scalars.hpp"
#include "doctest.h"

using namespace cyhopf;

namespace {

Monomial m(const char* s) { return Monomial::parse(s); }

std::vector<std::int64_t> mul(const IntMatrix& a, const std::vector<std::int64_t>& z) { return a.apply(z); }

}  // namespace

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(-7, 2).to_string() == "-7/2");
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), ArithmeticError);
}

TEST_CASE("floor division and bezout") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_mod(-7, 2) == 1);
  const auto b = extended_gcd(12, -18);
  CHECK(b.g == 6);
  CHECK(12 * b.x + -18 * b.y == 6);
}

TEST_CASE("monomial laws") {
  CHECK(m("q^1/2") * m("q^3/2") == m("q^2"));
  CHECK(m("q^3/2").pow(2) == m("q^3"));
  CHECK((m("-q") * m("-q^-1")).is_one());
  CHECK(m("1").is_one());
  CHECK(m("-1").is_root_of_unity());
  CHECK_FALSE(m("q^2").is_root_of_unity());
  CHECK(m("-q^3/2*t").to_string() == "-q^3/2*t^1");
  CHECK(m("t^2*q^-1") == m("q^-1*t^2"));
  CHECK(m("q^2").pow(Rational(1, 2)) == m("q"));
  CHECK_THROWS_WITH_AS(m("-q").pow(Rational(1, 2)), doctest::Contains("non-monomial result"), ArithmeticError);
  CHECK(m("-q").pow(Rational(2)) == m("q^2"));
  CHECK(m("q^0") == m("1"));
  CHECK_THROWS(Monomial::parse("q^"));
  CHECK_THROWS(Monomial::parse("2*q"));
}

TEST_CASE("monomial group laws on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> e(-6, 6), d(1, 3), s(0, 1);
  auto rnd = [&] {
    return Monomial::from_terms(s(rng) ? -1 : 1, {{"q", Rational(e(rng), d(rng))}, {"t", Rational(e(rng), d(rng))}});
  };
  for (int i = 0; i < 500; ++i) {
    const auto a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a * a.inverse()).is_one());
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) == a.inverse().pow(2));
  }
}

TEST_CASE("integer affine solver") {
  SUBCASE("unique") {
    const auto sol = solve_integer_affine(IntMatrix::from_rows({{2}}, 1), std::vector<Rational>{4});
    REQUIRE(sol);
    CHECK(sol->particular == std::vector<std::int64_t>{2});
    CHECK(sol->kernel.empty());
  }
  SUBCASE("kernel") {
    const auto sol = solve_integer_affine(IntMatrix::from_rows({{1, 1}}, 2), std::vector<Rational>{0});
    REQUIRE(sol);
    CHECK(sol->particular == std::vector<std::int64_t>{0, 0});
    REQUIRE(sol->kernel.size() == 1);
    CHECK(sol->kernel[0] == std::vector<std::int64_t>{1, -1});
  }
  SUBCASE("no integer solution") {
    CHECK_FALSE(solve_integer_affine(IntMatrix::from_rows({{2}}, 1), std::vector<Rational>{1}));
  }
  SUBCASE("no rational solution") {
    CHECK_FALSE(solve_integer_affine(IntMatrix::from_rows({{1, 1}, {2, 2}}, 2), std::vector<Rational>{1, 3}));
  }
  SUBCASE("fractional right-hand side") {
    CHECK_FALSE(solve_integer_affine(IntMatrix::from_rows({{1}}, 1), std::vector<Rational>{Rational(1, 2)}));
  }
}

TEST_CASE("integer affine solver on random systems") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> v(-4, 4), dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = v(rng);
    std::vector<std::int64_t> z0(cols);
    for (auto& x : z0) x = v(rng);
    const auto b_int = mul(a, z0);
    const std::vector<Rational> b(b_int.begin(), b_int.end());
    const auto sol = solve_integer_affine(a, b);
    REQUIRE(sol);
    CHECK(mul(a, sol->particular) == b_int);
    for (const auto& k : sol->kernel) CHECK(is_zero(mul(a, k)));
    // z0 - particular lies in the kernel lattice: solve against the kernel basis.
    if (!sol->kernel.empty()) {
      IntMatrix kb(cols, sol->kernel.size());
      for (std::size_t t = 0; t < sol->kernel.size(); ++t)
        for (std::size_t j = 0; j < cols; ++j) kb(j, t) = sol->kernel[t][j];
      std::vector<Rational> diff;
      for (std::size_t j = 0; j < cols; ++j) diff.emplace_back(z0[j] - sol->particular[j]);
      CHECK(solve_integer_affine(kb, diff));
    } else {
      CHECK(sol->particular == z0);
    }
  }
}

TEST_CASE("exponent system") {
  // q^{2a} t^{b} == q^4 t^-1 with sign: (-q)^a == q^2 forces a even.
  ExponentSystem sys(2);
  const std::vector<Monomial> row1{m("q^2"), m("t")};
  sys.add_monomial_equation(row1, m("q^4*t^-1"));
  auto sol = sys.solve();
  REQUIRE(sol);
  CHECK(sol->particular == std::vector<std::int64_t>{2, -1});

  ExponentSystem odd(1);
  const std::vector<Monomial> neg{m("-q")};
  odd.add_monomial_equation(neg, m("-q^3"));
  sol = odd.solve();
  REQUIRE(sol);
  CHECK(sol->particular == std::vector<std::int64_t>{3});

  ExponentSystem bad(1);
  bad.add_monomial_equation(neg, m("q^3"));
  CHECK_FALSE(bad.solve());

  ExponentSystem sign_only(1);
  const std::vector<Monomial> minus{m("-1")};
  sign_only.add_monomial_equation(minus, m("1"));
  sol = sign_only.solve();
  REQUIRE(sol);
  CHECK(sol->particular == std::vector<std::int64_t>{0});
  REQUIRE(sol->kernel.size() == 1);
  CHECK(sol->kernel[0] == std::vector<std::int64_t>{2});
}

TEST_CASE("multiplicative systems") {
  SUBCASE("chain") {
    const auto a = IntMatrix::from_rows({{1, 1, 0}, {0, 1, 1}}, 3);
    const std::vector<Monomial> c{m("q"), m("q")};
    const auto sol = solve_multiplicative_system(a, c);
    REQUIRE(sol);
    CHECK(sol.assignment[0] * sol.assignment[1] == m("q"));
    CHECK(sol.assignment[1] * sol.assignment[2] == m("q"));
  }
  SUBCASE("inconsistent") {
    const auto a = IntMatrix::from_rows({{1, 1}, {1, 1}}, 2);
    const std::vector<Monomial> c{m("q"), m("q^2")};
    const auto sol = solve_multiplicative_system(a, c);
    CHECK_FALSE(sol);
    CHECK(sol.status == MultiplicativeSolution::Status::inconsistent);
    REQUIRE(sol.relation.size() == 2);
    CHECK(sol.relation[0] == -sol.relation[1]);
  }
  SUBCASE("square root") {
    const auto a = IntMatrix::from_rows({{2}}, 1);
    const std::vector<Monomial> c{m("q")};
    const auto sol = solve_multiplicative_system(a, c);
    REQUIRE(sol);
    CHECK(sol.assignment[0] == m("q^1/2"));
  }
  SUBCASE("square root of -1") {
    const auto a = IntMatrix::from_rows({{2}}, 1);
    const std::vector<Monomial> c{m("-1")};
    const auto sol = solve_multiplicative_system(a, c);
    CHECK(sol.status == MultiplicativeSolution::Status::outside_value_group);
  }
  SUBCASE("random consistent systems") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> v(-3, 3), e(-5, 5), s(0, 1), dim(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = dim(rng), cols = dim(rng);
      IntMatrix a(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = v(rng);
      std::vector<Monomial> x;
      for (std::size_t j = 0; j < cols; ++j)
        x.push_back(Monomial::from_terms(s(rng) ? -1 : 1, {{"q", Rational(e(rng))}, {"t", Rational(e(rng))}}));
      std::vector<Monomial> c(rows);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) c[i] *= x[j].pow(a(i, j));
      const auto sol = solve_multiplicative_system(a, c);
      REQUIRE(sol);
      for (std::size_t i = 0; i < rows; ++i) {
        Monomial lhs;
        for (std::size_t j = 0; j < cols; ++j) lhs *= sol.assignment[j].pow(a(i, j));
        CHECK(lhs == c[i]);
      }
    }
  }
}

TEST_CASE("determinant and unimodular inverse") {
  const auto a = IntMatrix::from_rows({{2, 3}, {1, 2}}, 2);
  CHECK(determinant(a) == 1);
  CHECK(a * unimodular_inverse(a) == IntMatrix::identity(2));
  CHECK(determinant(IntMatrix::from_rows({{2, 0}, {0, 2}}, 2)) == 4);
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix::from_rows({{2, 0}, {0, 1}}, 2)), ArithmeticError);
}

TEST_CASE("lattice basis is canonical") {
  const auto b1 = lattice_basis({{2, 4}, {0, 6}}, 2);
  const auto b2 = lattice_basis({{2, 10}, {2, 4}}, 2);
  CHECK(b1 == b2);
}
