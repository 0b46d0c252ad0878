#pragma once

// Homological invariants of U(D, lambda) and of the Nichols algebra B(V):
// global dimension, integral character, Nakayama automorphisms and the
// Calabi-Yau verdicts.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyhopf/datum.hpp"

namespace cyhopf {

/// x_k -> x_scalars[k] x_k, y_h -> y_scalars[h] y_h.
struct DiagonalAutomorphism {
  std::vector<Monomial> x_scalars;
  std::vector<Monomial> y_scalars;

  bool is_identity() const;
  friend bool operator==(const DiagonalAutomorphism&, const DiagonalAutomorphism&) = default;
};

enum class AlgebraKind { pointed, nichols };

struct CYReport {
  AlgebraKind algebra = AlgebraKind::pointed;
  /// p + s for U(D, lambda), p for B(V).
  std::int64_t dimension = 0;
  bool is_cy = false;
  /// xi(y_h); empty for B(V).
  Character integral_character;
  DiagonalAutomorphism nakayama;
  /// z with S^2 = conjugation by y^z (U(D, lambda) only).
  std::optional<ExponentVector> conjugator;
  std::vector<std::string> failures;
  std::int64_t dualizing_shift = 0;
  /// "_ψ A[n]" or "_φ R[n]".
  std::string dualizing_complex;

  friend bool operator==(const CYReport&, const CYReport&) = default;
};

// Every function taking a RootSystem requires it to belong to the datum's
// Cartan matrix (any reduced word of w_0); the overloads without one use the
// datum's default word.

/// p + s.
std::int64_t gldim(const GenericDatum& d, const RootSystem& rs);
std::int64_t gldim(const GenericDatum& d);

/// xi(y_h) = prod_t chi_{beta_t}(y_h).
Character integral_character(const GenericDatum& d, const RootSystem& rs);
Character integral_character(const GenericDatum& d);

/// psi(x_k) = prod_{t != j_k} chi_{beta_t}(g_k) x_k, psi(y_h) = xi(y_h) y_h.
DiagonalAutomorphism nakayama_U(const GenericDatum& d, const RootSystem& rs);
DiagonalAutomorphism nakayama_U(const GenericDatum& d);

/// phi(x_k) = prod_{t < j_k} chi_k(g_{beta_t})^{-1} prod_{t > j_k} chi_{beta_t}(g_k) x_k.
DiagonalAutomorphism nakayama_nichols(const GenericDatum& d, const RootSystem& rs);
DiagonalAutomorphism nakayama_nichols(const GenericDatum& d);

/// All z in Z^s with chi_k(y^z) = chi_k(g_k)^{-1} for every k.
std::optional<AffineLattice> s2_conjugators(const GenericDatum& d);
/// The canonical representative of s2_conjugators, if any.
std::optional<ExponentVector> s2_inner(const GenericDatum& d);

CYReport is_cy_U(const GenericDatum& d, const RootSystem& rs);
CYReport is_cy_U(const GenericDatum& d);
CYReport is_cy_nichols(const GenericDatum& d, const RootSystem& rs);
CYReport is_cy_nichols(const GenericDatum& d);

/// prod_{t != j_k} chi_{beta_t}(g_k) equals
/// prod_{t < j_k} chi_k(g_{beta_t})^{-1} prod_{t > j_k} chi_{beta_t}(g_k) for all k.
bool coeff_identity_check(const GenericDatum& d, const RootSystem& rs);
bool coeff_identity_check(const GenericDatum& d);

struct CYRelationCheck {
  bool cy_U = false;
  bool cy_nichols = false;
  /// cy_U implies phi(x_k) = chi_k(g_k)^{-1} x_k for all k.
  bool nichols_twist_ok = true;
  /// cy_nichols implies psi(x_k) = x_k, psi(y_h) = xi(y_h) y_h and xi != eps.
  bool pointed_twist_ok = true;
  std::vector<std::string> problems;

  bool ok() const { return !(cy_U && cy_nichols) && nichols_twist_ok && pointed_twist_ok; }
};

CYRelationCheck cy_relation_check(const GenericDatum& d, const RootSystem& rs);
CYRelationCheck cy_relation_check(const GenericDatum& d);

}  // namespace cyhopf
