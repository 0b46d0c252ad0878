#pragma once

// Generic data (D, lambda) of finite Cartan type: validation, characters and
// group-likes of root vectors, PBW degrees.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyhopf/cartan.hpp"
#include "cyhopf/scalars.hpp"

namespace cyhopf {

/// Unvalidated datum as read from a file or built in code. Indices 0-based.
struct DatumData {
  std::size_t group_rank = 0;
  /// Declared parameter names (informational; the parser enforces them).
  std::vector<std::string> parameters;
  std::vector<std::vector<std::int64_t>> cartan;
  /// g[i] = g_i as an exponent vector of length s.
  std::vector<ExponentVector> g;
  /// chi[i][h] = chi_i(y_h).
  std::vector<Character> chi;
  /// Pairs (i, j), i < j, with lambda_ij = 1.
  std::set<std::pair<std::size_t, std::size_t>> linking;

  friend bool operator==(const DatumData&, const DatumData&) = default;
};

/// A validated datum together with the root system of its Cartan matrix
/// (default reduced word).
class GenericDatum {
 public:
  /// Throws ValidationError listing every violated condition, or CartanError
  /// for an invalid Cartan matrix.
  static GenericDatum validate(DatumData raw);

  const DatumData& data() const noexcept { return data_; }
  std::size_t s() const noexcept { return data_.group_rank; }
  std::size_t theta() const noexcept { return data_.g.size(); }
  const CartanMatrix& cartan() const noexcept { return roots_.cartan; }
  const RootSystem& roots() const noexcept { return roots_; }
  const ExponentVector& g(std::size_t i) const { return data_.g[i]; }
  const Character& chi(std::size_t i) const { return data_.chi[i]; }

  /// q_ij = chi_j(g_i).
  Monomial q(std::size_t i, std::size_t j) const { return evaluate(data_.chi[j], data_.g[i]); }
  bool linked(std::size_t i, std::size_t j) const {
    return data_.linking.count({std::min(i, j), std::max(i, j)}) != 0;
  }

 private:
  DatumData data_;
  RootSystem roots_;
};

/// Every violated condition of `raw`, in a fixed order; empty iff valid.
/// Messages use 1-based indices:
///   "q-compatibility failed at (i,j)"
///   "chi_i(g_i) is a root of unity at i"
///   "illegal linking at (i,j)"
/// Structural problems (wrong lengths, theta = 0) are reported first.
std::vector<std::string> datum_violations(const DatumData& raw);

inline GenericDatum validate_datum(DatumData raw) { return GenericDatum::validate(std::move(raw)); }

/// chi_beta = prod_i chi_i^{m_i} for beta = sum m_i alpha_i.
Character chi_of_root(const GenericDatum& d, const Root& beta);
/// g_beta = sum_i m_i g_i.
ExponentVector g_of_root(const GenericDatum& d, const Root& beta);

/// chi_{beta_t} and g_{beta_t} for the t-th root (0-based) of `rs`.
Character chi_beta(const GenericDatum& d, const RootSystem& rs, std::size_t t);
ExponentVector g_beta(const GenericDatum& d, const RootSystem& rs, std::size_t t);

struct PBWDegree {
  std::vector<std::int64_t> a;
  std::int64_t total = 0;

  friend bool operator==(const PBWDegree&, const PBWDegree&) = default;
};

/// total = sum_t a_t ht(beta_t); negative exponents throw.
PBWDegree pbw_degree(const RootSystem& rs, const std::vector<std::int64_t>& a);

/// Compares total first, then a_p, a_{p-1}, ..., a_1.
std::strong_ordering pbw_compare(const PBWDegree& x, const PBWDegree& y);

// ---------------------------------------------------------------- text format

/// Parses the key/value datum format:
///
///   # comment
///   group_rank: 1
///   parameters: q
///   cartan: A1xA1            (or "2 0; 0 2")
///   g: 1; 1                  (theta rows of s integers)
///   chi: q^-2; q^2           (theta rows of s monomials)
///   linking: 1 2 1           ("i j v" triples separated by ';', 1-based)
///
/// Unknown or repeated keys, undeclared parameter names and malformed values
/// raise ParseError with the offending line and key.
DatumData parse_datum(std::string_view text);
DatumData read_datum_file(const std::string& path);

/// Inverse of parse_datum (explicit Cartan matrix, sorted linking).
std::string format_datum(const DatumData& d);

}  // namespace cyhopf
