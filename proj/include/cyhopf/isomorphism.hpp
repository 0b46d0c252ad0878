#pragma once

// Isomorphisms of generic data, canonical group data and the classification
// of CY algebras U(D, lambda) of global dimension at most 4.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyhopf/datum.hpp"

namespace cyhopf {

/// (phi, sigma, alpha): phi(y_j) = prod_m y'_m^{matrix(m, j)}, so phi acts on
/// exponent vectors by z -> matrix * z; x_i -> alpha_i x'_{sigma(i)}.
struct DatumIsomorphism {
  IntMatrix matrix;
  std::vector<std::size_t> sigma;
  std::vector<Monomial> alpha;

  friend bool operator==(const DatumIsomorphism&, const DatumIsomorphism&) = default;
};

/// Every condition of the isomorphism definition violated by `iso` as a map
/// from `from` to `to`; empty iff it is an isomorphism.
std::vector<std::string> verify_isomorphism(const GenericDatum& from, const GenericDatum& to,
                                            const DatumIsomorphism& iso);

/// The isomorphism from the target back to the source.
DatumIsomorphism inverse_isomorphism(const DatumIsomorphism& iso);

/// Transports `d` along phi = `matrix` (unimodular) and `sigma`: the result
/// has g'_{sigma(i)} = phi(g_i), chi'_{sigma(i)} = chi_i phi^{-1} and the
/// permuted Cartan matrix and linking. alpha is solved from the linking
/// condition.
struct Transported {
  DatumData datum;
  DatumIsomorphism witness;
};
Transported transform_datum(const GenericDatum& d, const IntMatrix& matrix, const std::vector<std::size_t>& sigma);

struct IsomorphismOptions {
  /// Coefficients of the homogeneous lattice basis are searched in [-bound, bound].
  std::int64_t bound = 8;
  /// Hard cap on the number of candidate matrices examined.
  std::uint64_t candidate_limit = 2'000'000;
};

struct IsomorphismResult {
  enum class Status { found, none, inconclusive };
  Status status = Status::none;
  std::optional<DatumIsomorphism> witness;
  std::string message;
};

/// Searches sigma in lexicographic order (Cartan-compatible ones only) and,
/// for each, group matrices solving conditions (i) and (ii) in shells of
/// increasing coefficient size. "inconclusive" is returned only when an
/// infinite solution lattice was cut off by the bound or the candidate limit
/// and no witness was found.
IsomorphismResult find_isomorphism(const GenericDatum& a, const GenericDatum& b, const IsomorphismOptions& opts = {});

/// Unimodular reductions of the group data (sigma = id): g_1 = y_1^k with
/// k > 0; for theta = 2 and s >= 2, g_2 = y_1^{l_1} y_2^{l_2} with l_2 >= 0
/// and 0 <= l_1 < l_2 when l_2 > 0. Requires s <= 3 and theta <= 2; throws
/// UnsupportedError otherwise.
Transported canonicalize_group_data(const GenericDatum& d);

struct ClassificationLabel {
  std::int64_t dimension = 0;
  /// "dim3/Case2/II", "dim4/Case2/V", "dim4/Case1", ...
  std::string case_name;
  std::vector<std::pair<std::string, std::int64_t>> integers;
  std::vector<std::pair<std::string, Monomial>> scalars;
  /// Canonical representative and an isomorphism onto it (absent for group
  /// algebras).
  std::optional<DatumData> canonical;
  std::optional<DatumIsomorphism> witness;

  /// "dim4 Case 2 (V), k=2, l1=1, l2=3, q=q^1"
  std::string to_string() const;
};

struct ClassificationResult {
  enum class Status { classified, not_cy, dimension_too_large };
  Status status = Status::not_cy;
  std::int64_t dimension = 0;
  std::optional<ClassificationLabel> label;
};

/// Matches a validated datum against the CY cases of dimension <= 4. The
/// representative has chi_1(y_1) lexicographically positive. Throws Error
/// ("no matching case") if a CY datum of dimension <= 4 fits no case.
ClassificationResult classify(const GenericDatum& d);

/// The group algebra of Z^s (theta = 0), CY of dimension s.
ClassificationResult classify_group_algebra(std::size_t s);

}  // namespace cyhopf
