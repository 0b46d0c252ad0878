#include "cyhopf/homology.hpp"

namespace cyhopf {

namespace {

void check_roots(const GenericDatum& d, const RootSystem& rs) {
  if (!(rs.cartan == d.cartan())) throw Error("root system does not belong to the datum's Cartan matrix");
}

std::int64_t p_of(const RootSystem& rs) { return static_cast<std::int64_t>(rs.size()); }

// prod_{t != j_k} chi_{beta_t}(g_k).
Monomial psi_scalar(const GenericDatum& d, const RootSystem& rs, std::size_t k) {
  Monomial out;
  for (std::size_t t = 0; t < rs.size(); ++t)
    if (t != rs.simple_positions[k]) out *= evaluate(chi_beta(d, rs, t), d.g(k));
  return out;
}

Monomial phi_scalar(const GenericDatum& d, const RootSystem& rs, std::size_t k) {
  const std::size_t jk = rs.simple_positions[k];
  Monomial out;
  for (std::size_t t = 0; t < jk; ++t) out *= evaluate(d.chi(k), g_beta(d, rs, t)).inverse();
  for (std::size_t t = jk + 1; t < rs.size(); ++t) out *= evaluate(chi_beta(d, rs, t), d.g(k));
  return out;
}

}  // namespace

bool DiagonalAutomorphism::is_identity() const {
  for (const auto& m : x_scalars)
    if (!m.is_one()) return false;
  for (const auto& m : y_scalars)
    if (!m.is_one()) return false;
  return true;
}

std::int64_t gldim(const GenericDatum& d, const RootSystem& rs) {
  check_roots(d, rs);
  return p_of(rs) + static_cast<std::int64_t>(d.s());
}
std::int64_t gldim(const GenericDatum& d) { return gldim(d, d.roots()); }

Character integral_character(const GenericDatum& d, const RootSystem& rs) {
  check_roots(d, rs);
  Character xi(d.s());
  for (std::size_t t = 0; t < rs.size(); ++t) xi = character_product(xi, chi_beta(d, rs, t));
  return xi;
}
Character integral_character(const GenericDatum& d) { return integral_character(d, d.roots()); }

DiagonalAutomorphism nakayama_U(const GenericDatum& d, const RootSystem& rs) {
  check_roots(d, rs);
  DiagonalAutomorphism psi;
  for (std::size_t k = 0; k < d.theta(); ++k) psi.x_scalars.push_back(psi_scalar(d, rs, k));
  psi.y_scalars = integral_character(d, rs);
  return psi;
}
DiagonalAutomorphism nakayama_U(const GenericDatum& d) { return nakayama_U(d, d.roots()); }

DiagonalAutomorphism nakayama_nichols(const GenericDatum& d, const RootSystem& rs) {
  check_roots(d, rs);
  DiagonalAutomorphism phi;
  for (std::size_t k = 0; k < d.theta(); ++k) phi.x_scalars.push_back(phi_scalar(d, rs, k));
  phi.y_scalars.assign(d.s(), Monomial());
  return phi;
}
DiagonalAutomorphism nakayama_nichols(const GenericDatum& d) { return nakayama_nichols(d, d.roots()); }

std::optional<AffineLattice> s2_conjugators(const GenericDatum& d) {
  // Conjugation by y^z scales x_k by chi_k(y^z); S^2 scales it by chi_k(g_k)^{-1}.
  ExponentSystem sys(d.s());
  for (std::size_t k = 0; k < d.theta(); ++k) sys.add_monomial_equation(d.chi(k), d.q(k, k).inverse());
  return sys.solve();
}

std::optional<ExponentVector> s2_inner(const GenericDatum& d) {
  auto lattice = s2_conjugators(d);
  if (!lattice) return std::nullopt;
  return lattice->particular;
}

CYReport is_cy_U(const GenericDatum& d, const RootSystem& rs) {
  CYReport r;
  r.algebra = AlgebraKind::pointed;
  r.dimension = p_of(rs) + static_cast<std::int64_t>(d.s());
  r.integral_character = integral_character(d, rs);
  r.nakayama = nakayama_U(d, rs);
  r.conjugator = s2_inner(d);
  if (!is_trivial(r.integral_character)) r.failures.push_back("integral character is not trivial");
  if (!r.conjugator) r.failures.push_back("S^2 is not inner");
  r.is_cy = r.failures.empty();
  r.dualizing_shift = r.dimension;
  r.dualizing_complex = "_ψ A[" + std::to_string(r.dualizing_shift) + "]";
  return r;
}
CYReport is_cy_U(const GenericDatum& d) { return is_cy_U(d, d.roots()); }

CYReport is_cy_nichols(const GenericDatum& d, const RootSystem& rs) {
  CYReport r;
  r.algebra = AlgebraKind::nichols;
  r.dimension = p_of(rs);
  r.nakayama = nakayama_nichols(d, rs);
  for (std::size_t k = 0; k < d.theta(); ++k)
    if (!r.nakayama.x_scalars[k].is_one()) r.failures.push_back("phi(x_" + std::to_string(k + 1) + ") != x_" + std::to_string(k + 1));
  r.is_cy = r.failures.empty();
  r.dualizing_shift = r.dimension;
  r.dualizing_complex = "_φ R[" + std::to_string(r.dualizing_shift) + "]";
  return r;
}
CYReport is_cy_nichols(const GenericDatum& d) { return is_cy_nichols(d, d.roots()); }

bool coeff_identity_check(const GenericDatum& d, const RootSystem& rs) {
  check_roots(d, rs);
  for (std::size_t k = 0; k < d.theta(); ++k)
    if (psi_scalar(d, rs, k) != phi_scalar(d, rs, k)) return false;
  return true;
}
bool coeff_identity_check(const GenericDatum& d) { return coeff_identity_check(d, d.roots()); }

CYRelationCheck cy_relation_check(const GenericDatum& d, const RootSystem& rs) {
  CYRelationCheck c;
  const auto u = is_cy_U(d, rs);
  const auto n = is_cy_nichols(d, rs);
  c.cy_U = u.is_cy;
  c.cy_nichols = n.is_cy;
  if (c.cy_U && c.cy_nichols) c.problems.push_back("both algebras are CY");
  if (c.cy_U)
    for (std::size_t k = 0; k < d.theta(); ++k)
      if (n.nakayama.x_scalars[k] != d.q(k, k).inverse()) {
        c.nichols_twist_ok = false;
        c.problems.push_back("phi(x_" + std::to_string(k + 1) + ") != chi_k(g_k)^-1 x_k");
      }
  if (c.cy_nichols) {
    for (std::size_t k = 0; k < d.theta(); ++k)
      if (!u.nakayama.x_scalars[k].is_one()) {
        c.pointed_twist_ok = false;
        c.problems.push_back("psi(x_" + std::to_string(k + 1) + ") != x_k");
      }
    if (u.nakayama.y_scalars != u.integral_character || is_trivial(u.integral_character)) {
      c.pointed_twist_ok = false;
      c.problems.push_back("psi on the group is not the nontrivial winding by xi");
    }
  }
  return c;
}
CYRelationCheck cy_relation_check(const GenericDatum& d) { return cy_relation_check(d, d.roots()); }

}  // namespace cyhopf
