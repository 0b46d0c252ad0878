#pragma once

// Exact scalars: checked 64-bit rationals and the signed monomial group
// {±1} x prod_P P^Q in which every character value lives.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyhopf/error.hpp"

namespace cyhopf {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

/// Extended gcd: returns (g, x, y) with a*x + b*y == g >= 0.
struct Bezout {
  std::int64_t g, x, y;
};
Bezout extended_gcd(std::int64_t a, std::int64_t b);

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(implicit)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "3", "-2", "3/2", "-1/3".
  std::string to_string() const;
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A nonzero scalar sign * prod_P P^{e_P} with e_P rational and the
/// parameters P treated as algebraically independent non-roots of unity.
///
/// Canonical form: exponents sorted by name, no zero exponent stored.
class Monomial {
 public:
  using Term = std::pair<std::string, Rational>;

  Monomial() = default;  // the identity 1
  static Monomial parameter(std::string name, Rational exponent = 1);
  static Monomial minus_one();
  /// Builds from an arbitrary term list (merged, zeros dropped).
  static Monomial from_terms(int sign, std::vector<Term> terms);

  int sign() const noexcept { return negative_ ? -1 : 1; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Rational exponent(std::string_view name) const;

  /// Value is ±1.
  bool is_root_of_unity() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept { return terms_.empty() && !negative_; }

  Monomial inverse() const;
  Monomial pow(std::int64_t n) const;
  /// Rational power; a negative sign with a non-integral exponent throws
  /// ArithmeticError("non-monomial result").
  Monomial pow(const Rational& r) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Total order used for deterministic tie-breaking only.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  /// First nonzero exponent (in name order) is positive.
  bool lex_positive() const noexcept { return !terms_.empty() && terms_.front().second.sign() > 0; }

  /// "1", "-1", "q^-2", "-q^3/2*t^1".
  std::string to_string() const;
  static Monomial parse(std::string_view text);

 private:
  bool negative_ = false;
  std::vector<Term> terms_;
};

/// A group element y_1^{z_1}...y_s^{z_s} of the free abelian group Gamma.
using ExponentVector = std::vector<std::int64_t>;

/// A character of Gamma, given by its values on the generators y_1..y_s.
using Character = std::vector<Monomial>;

/// chi(y^z) = prod_h chi(y_h)^{z_h}.
Monomial evaluate(const Character& chi, const ExponentVector& z);
Character character_product(const Character& a, const Character& b);
Character character_power(const Character& a, std::int64_t n);
bool is_trivial(const Character& chi);

ExponentVector add(const ExponentVector& a, const ExponentVector& b);
ExponentVector scale(const ExponentVector& a, std::int64_t k);
bool is_zero(const ExponentVector& a);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::int64_t> row(std::size_t i) const;
  std::vector<std::int64_t> column(std::size_t j) const;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;
  IntMatrix transpose() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Exact determinant (fraction-free elimination).
std::int64_t determinant(const IntMatrix& m);
/// Inverse of a unimodular matrix; throws ArithmeticError if det != ±1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Solution set { particular + sum c_t kernel[t] : c in Z^r } of A z = b.
///
/// The kernel basis is in row Hermite normal form and the particular
/// solution is reduced modulo it, so both are canonical.
struct AffineLattice {
  std::vector<std::int64_t> particular;
  std::vector<std::vector<std::int64_t>> kernel;
};

/// Integer solutions of A z = b; nullopt when there is no rational or no
/// integer solution.
std::optional<AffineLattice> solve_integer_affine(const IntMatrix& a, std::span<const Rational> b);

/// Row Hermite normal form of the lattice spanned by `vectors` (zero rows
/// dropped). Pivots positive, entries above each pivot reduced to [0, pivot).
std::vector<std::vector<std::int64_t>> lattice_basis(std::vector<std::vector<std::int64_t>> vectors,
                                                     std::size_t dim);

/// Integer unknowns z_1..z_n constrained by monomial equations
/// prod_j base[i][j]^{z_j} == target[i] and plain integer rows.
///
/// Each monomial equation expands into one integer row per parameter
/// (denominators cleared) plus a parity row for the sign.
class ExponentSystem {
 public:
  explicit ExponentSystem(std::size_t unknowns) : n_(unknowns) {}

  void add_monomial_equation(std::span<const Monomial> bases, const Monomial& target);
  void add_linear_equation(std::span<const std::int64_t> coeffs, std::int64_t rhs);

  std::size_t unknowns() const noexcept { return n_; }
  std::optional<AffineLattice> solve() const;

 private:
  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<std::vector<std::int64_t>> parity_rows_;
  std::vector<std::int64_t> parity_rhs_;
};

/// Outcome of solving prod_j x_j^{A[i][j]} = c_i over the monomial group.
struct MultiplicativeSolution {
  enum class Status {
    solved,
    /// A relation r with r^T A = 0 and prod c_i^{r_i} != 1: no solution in
    /// any field.
    inconsistent,
    /// Solvable over an algebraically closed field, but only with roots of
    /// unity other than ±1.
    outside_value_group,
  };
  Status status = Status::solved;
  std::vector<Monomial> assignment;
  std::vector<std::int64_t> relation;
  std::string message;

  explicit operator bool() const noexcept { return status == Status::solved; }
};

MultiplicativeSolution solve_multiplicative_system(const IntMatrix& a, std::span<const Monomial> c);

}  // namespace cyhopf
