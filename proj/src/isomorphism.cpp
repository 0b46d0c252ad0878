#include "cyhopf/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "cyhopf/homology.hpp"

namespace cyhopf {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool is_permutation_of(const std::vector<std::size_t>& sigma, std::size_t n) {
  if (sigma.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : sigma) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool cartan_compatible(const CartanMatrix& a, const CartanMatrix& b, const std::vector<std::size_t>& sigma) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j)
      if (a(i, j) != b(sigma[i], sigma[j])) return false;
  return true;
}

// Condition (iii) for a fixed sigma; independent of the group isomorphism.
MultiplicativeSolution solve_alpha(const GenericDatum& from, const GenericDatum& to,
                                   const std::vector<std::size_t>& sigma) {
  const std::size_t theta = from.theta();
  MultiplicativeSolution out;
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<Monomial> rhs;
  for (std::size_t i = 0; i < theta; ++i)
    for (std::size_t j = i + 1; j < theta; ++j) {
      if (from.cartan().same_component(i, j)) continue;
      const bool here = from.linked(i, j), there = to.linked(sigma[i], sigma[j]);
      if (here != there) {
        out.status = MultiplicativeSolution::Status::inconsistent;
        out.message = "linking pattern differs at " + pair_label(i, j);
        return out;
      }
      if (!here) continue;
      std::vector<std::int64_t> row(theta, 0);
      row[i] = row[j] = 1;
      rows.push_back(std::move(row));
      // 1 = alpha_i alpha_j, or 1 = -alpha_i alpha_j chi_j(g_i) when sigma swaps the pair.
      rhs.push_back(sigma[i] < sigma[j] ? Monomial() : (Monomial::minus_one() * from.q(i, j)).inverse());
    }
  if (rows.empty()) {
    out.assignment.assign(theta, Monomial());
    return out;
  }
  return solve_multiplicative_system(IntMatrix::from_rows(rows, theta), rhs);
}

std::size_t unknown(std::size_t s, std::size_t m, std::size_t j) { return m * s + j; }

// Conditions (i) and (ii) as an integer system in the entries of M.
std::optional<AffineLattice> group_matrices(const GenericDatum& from, const GenericDatum& to,
                                            const std::vector<std::size_t>& sigma) {
  const std::size_t s = from.s(), n = s * s;
  ExponentSystem sys(n);
  for (std::size_t i = 0; i < from.theta(); ++i) {
    const auto& gi = from.g(i);
    const auto& gt = to.g(sigma[i]);
    for (std::size_t m = 0; m < s; ++m) {
      std::vector<std::int64_t> row(n, 0);
      for (std::size_t j = 0; j < s; ++j) row[unknown(s, m, j)] = gi[j];
      sys.add_linear_equation(row, gt[m]);
    }
    const auto& chi_t = to.chi(sigma[i]);
    for (std::size_t j = 0; j < s; ++j) {
      std::vector<Monomial> bases(n);
      for (std::size_t m = 0; m < s; ++m) bases[unknown(s, m, j)] = chi_t[m];
      sys.add_monomial_equation(bases, from.chi(i)[j]);
    }
  }
  return sys.solve();
}

IntMatrix to_matrix(const std::vector<std::int64_t>& z, std::size_t s) {
  IntMatrix m(s, s);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) m(a, b) = z[unknown(s, a, b)];
  return m;
}

std::vector<std::size_t> invert(const std::vector<std::size_t>& sigma) {
  std::vector<std::size_t> inv(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) inv[sigma[i]] = i;
  return inv;
}

}  // namespace

std::vector<std::string> verify_isomorphism(const GenericDatum& from, const GenericDatum& to,
                                            const DatumIsomorphism& iso) {
  std::vector<std::string> p;
  const std::size_t theta = from.theta(), s = from.s();
  if (to.theta() != theta) return {"theta differs"};
  if (to.s() != s) return {"group ranks differ"};
  if (!is_permutation_of(iso.sigma, theta)) return {"sigma is not a permutation"};
  if (iso.alpha.size() != theta) return {"alpha has wrong length"};
  if (iso.matrix.rows() != s || iso.matrix.cols() != s) return {"matrix has wrong shape"};
  const auto det = determinant(iso.matrix);
  if (det != 1 && det != -1) p.push_back("matrix is not unimodular");
  if (!cartan_compatible(from.cartan(), to.cartan(), iso.sigma)) p.push_back("Cartan matrices do not match under sigma");
  for (std::size_t i = 0; i < theta; ++i) {
    if (iso.matrix.apply(from.g(i)) != to.g(iso.sigma[i]))
      p.push_back("phi(g_" + std::to_string(i + 1) + ") != g'_" + std::to_string(iso.sigma[i] + 1));
    for (std::size_t j = 0; j < s; ++j)
      if (from.chi(i)[j] != evaluate(to.chi(iso.sigma[i]), iso.matrix.column(j))) {
        p.push_back("chi_" + std::to_string(i + 1) + " != chi'_" + std::to_string(iso.sigma[i] + 1) + " phi");
        break;
      }
  }
  for (std::size_t i = 0; i < theta; ++i)
    for (std::size_t j = i + 1; j < theta; ++j) {
      if (from.cartan().same_component(i, j)) continue;
      const bool swapped = iso.sigma[i] > iso.sigma[j];
      const bool here = from.linked(i, j), there = to.linked(iso.sigma[i], iso.sigma[j]);
      bool ok = here == there;
      if (ok && here) {
        Monomial rhs = iso.alpha[i] * iso.alpha[j];
        if (swapped) rhs = Monomial::minus_one() * rhs * from.q(i, j);
        ok = rhs.is_one();
      }
      if (!ok) p.push_back("linking condition fails at " + pair_label(i, j));
    }
  return p;
}

DatumIsomorphism inverse_isomorphism(const DatumIsomorphism& iso) {
  DatumIsomorphism inv;
  inv.matrix = unimodular_inverse(iso.matrix);
  inv.sigma = invert(iso.sigma);
  inv.alpha.resize(iso.alpha.size());
  for (std::size_t i = 0; i < iso.alpha.size(); ++i) inv.alpha[iso.sigma[i]] = iso.alpha[i].inverse();
  return inv;
}

Transported transform_datum(const GenericDatum& d, const IntMatrix& matrix, const std::vector<std::size_t>& sigma) {
  const std::size_t theta = d.theta(), s = d.s();
  if (!is_permutation_of(sigma, theta)) throw Error("sigma is not a permutation");
  if (matrix.rows() != s || matrix.cols() != s) throw Error("matrix has wrong shape");
  const IntMatrix inv = unimodular_inverse(matrix);
  DatumData out;
  out.group_rank = s;
  out.parameters = d.data().parameters;
  out.cartan.assign(theta, std::vector<std::int64_t>(theta, 0));
  out.g.resize(theta);
  out.chi.resize(theta);
  for (std::size_t i = 0; i < theta; ++i) {
    for (std::size_t j = 0; j < theta; ++j) out.cartan[sigma[i]][sigma[j]] = d.cartan()(i, j);
    out.g[sigma[i]] = matrix.apply(d.g(i));
    Character chi(s);
    for (std::size_t m = 0; m < s; ++m) chi[m] = evaluate(d.chi(i), inv.column(m));
    out.chi[sigma[i]] = std::move(chi);
  }
  for (const auto& [i, j] : d.data().linking)
    out.linking.insert({std::min(sigma[i], sigma[j]), std::max(sigma[i], sigma[j])});
  const auto target = GenericDatum::validate(out);
  auto alpha = solve_alpha(d, target, sigma);
  if (!alpha) throw Error("cannot solve the linking scalars: " + alpha.message);
  return {std::move(out), DatumIsomorphism{matrix, sigma, std::move(alpha.assignment)}};
}

IsomorphismResult find_isomorphism(const GenericDatum& a, const GenericDatum& b, const IsomorphismOptions& opts) {
  IsomorphismResult result;
  if (a.theta() != b.theta()) {
    result.message = "theta differs";
    return result;
  }
  if (a.s() != b.s()) {
    result.message = "group ranks differ";
    return result;
  }
  const std::size_t theta = a.theta(), s = a.s();
  std::vector<std::size_t> sigma(theta);
  std::iota(sigma.begin(), sigma.end(), 0);
  bool truncated = false;
  std::string alpha_problem;
  std::uint64_t examined = 0;
  do {
    if (!cartan_compatible(a.cartan(), b.cartan(), sigma)) continue;
    const auto alpha = solve_alpha(a, b, sigma);
    if (alpha.status == MultiplicativeSolution::Status::outside_value_group) {
      alpha_problem = alpha.message;
      continue;
    }
    if (!alpha) continue;
    const auto lattice = group_matrices(a, b, sigma);
    if (!lattice) continue;
    const std::size_t r = lattice->kernel.size();
    auto accept = [&](const std::vector<std::int64_t>& z) {
      const IntMatrix m = to_matrix(z, s);
      const auto det = determinant(m);
      if (det != 1 && det != -1) return false;
      result.status = IsomorphismResult::Status::found;
      result.witness = DatumIsomorphism{m, sigma, alpha.assignment};
      return true;
    };
    if (r == 0) {
      if (accept(lattice->particular)) return result;
      continue;
    }
    // Shells of increasing max-norm over the coefficient vector.
    bool found = false;
    for (std::int64_t n = 0; n <= opts.bound && !found; ++n) {
      std::vector<std::int64_t> c(r, -n);
      while (true) {
        const bool on_shell = std::any_of(c.begin(), c.end(), [n](std::int64_t v) { return v == n || v == -n; });
        if (on_shell) {
          if (++examined > opts.candidate_limit) {
            truncated = true;
            break;
          }
          std::vector<std::int64_t> z = lattice->particular;
          for (std::size_t t = 0; t < r; ++t)
            if (c[t] != 0)
              for (std::size_t u = 0; u < z.size(); ++u) z[u] = checked_add(z[u], checked_mul(c[t], lattice->kernel[t][u]));
          if (accept(z)) {
            found = true;
            break;
          }
        }
        std::size_t pos = 0;
        while (pos < r && c[pos] == n) c[pos++] = -n;
        if (pos == r) break;
        ++c[pos];
      }
      if (examined > opts.candidate_limit) break;
    }
    if (found) return result;
    truncated = true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  if (truncated) {
    result.status = IsomorphismResult::Status::inconclusive;
    result.message = "search bound " + std::to_string(opts.bound) + " exhausted on an infinite solution lattice";
  } else if (!alpha_problem.empty()) {
    result.status = IsomorphismResult::Status::inconclusive;
    result.message = "linking scalars " + alpha_problem;
  } else {
    result.message = "no isomorphism";
  }
  return result;
}

// ---------------------------------------------------------------- canonical forms

namespace {

// Unimodular U (rows acting on coordinates offset..s-1 only) with
// U v = (.., g, 0, .., 0), g = gcd of v[offset..] >= 0.
IntMatrix axis_reducer(const ExponentVector& v, std::size_t offset) {
  const std::size_t s = v.size();
  IntMatrix u = IntMatrix::identity(s);
  ExponentVector w = v;
  for (std::size_t i = offset + 1; i < s; ++i) {
    if (w[i] == 0) continue;
    const std::int64_t a = w[offset], b = w[i];
    Bezout e = extended_gcd(a, b);
    if (a != 0 && b % a == 0) e = {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};
    const std::int64_t p = a / e.g, q = b / e.g;
    for (std::size_t col = 0; col < s; ++col) {
      const std::int64_t r1 = u(offset, col), r2 = u(i, col);
      u(offset, col) = checked_add(checked_mul(e.x, r1), checked_mul(e.y, r2));
      u(i, col) = checked_sub(checked_mul(p, r2), checked_mul(q, r1));
    }
    w[offset] = e.g;
    w[i] = 0;
  }
  if (w[offset] < 0)
    for (std::size_t col = 0; col < s; ++col) u(offset, col) = -u(offset, col);
  return u;
}

}  // namespace

Transported canonicalize_group_data(const GenericDatum& d) {
  if (d.s() > 3 || d.theta() > 2)
    throw UnsupportedError("unsupported: canonical group data need group rank <= 3 and theta <= 2");
  const std::size_t s = d.s();
  IntMatrix m = axis_reducer(d.g(0), 0);
  if (d.theta() == 2 && s >= 2) {
    m = axis_reducer(m.apply(d.g(1)), 1) * m;
    const auto h = m.apply(d.g(1));
    if (h[1] > 0) {
      IntMatrix shear = IntMatrix::identity(s);
      shear(0, 1) = -floor_div(h[0], h[1]);
      m = shear * m;
    }
  }
  std::vector<std::size_t> id(d.theta());
  std::iota(id.begin(), id.end(), 0);
  return transform_datum(d, m, id);
}

// ---------------------------------------------------------------- classification

namespace {

const char* roman(int n) {
  static const char* names[] = {"", "I", "II", "III", "IV", "V", "VI"};
  return names[n];
}

[[noreturn]] void no_match(const std::string& why) { throw Error("no matching case: " + why); }

// Representative of {q1^b x^{±1} : b in Z} with the first exponent of q1
// reduced into [0, a).
Monomial reduce_against(const Monomial& q1, const Monomial& x) {
  const auto& [pivot, a] = q1.terms().front();
  auto reduce = [&](const Monomial& y) {
    const Rational ratio = y.exponent(pivot) / a;
    return y * q1.pow(-floor_div(ratio.num(), ratio.den()));
  };
  return std::min(reduce(x), reduce(x.inverse()));
}

}  // namespace

std::string ClassificationLabel::to_string() const {
  // "dim4/Case2/V" -> "dim4 Case 2 (V)"
  std::string out = "dim" + std::to_string(dimension) + " Case ";
  const auto first = case_name.find('/');
  const auto second = case_name.find('/', first + 1);
  out += case_name.substr(first + 5, second == std::string::npos ? std::string::npos : second - first - 5);
  if (second != std::string::npos) out += " (" + case_name.substr(second + 1) + ")";
  for (const auto& [name, v] : integers) out += ", " + name + "=" + std::to_string(v);
  for (const auto& [name, v] : scalars) out += ", " + name + "=" + v.to_string();
  return out;
}

ClassificationResult classify_group_algebra(std::size_t s) {
  if (s == 0) throw Error("group algebra needs positive rank");
  ClassificationResult r;
  r.dimension = static_cast<std::int64_t>(s);
  if (s > 4) {
    r.status = ClassificationResult::Status::dimension_too_large;
    return r;
  }
  r.status = ClassificationResult::Status::classified;
  r.label = ClassificationLabel{r.dimension, "dim" + std::to_string(s) + "/Case1", {}, {}, std::nullopt, std::nullopt};
  return r;
}

ClassificationResult classify(const GenericDatum& d) {
  ClassificationResult r;
  r.dimension = gldim(d);
  if (!is_cy_U(d).is_cy) {
    r.status = ClassificationResult::Status::not_cy;
    return r;
  }
  if (r.dimension > 4) {
    r.status = ClassificationResult::Status::dimension_too_large;
    return r;
  }
  const auto& c = d.cartan();
  if (d.theta() != 2 || c(0, 1) != 0 || (d.s() != 1 && d.s() != 2))
    no_match("CY datum of dimension " + std::to_string(r.dimension) + " with Cartan matrix " + c.to_string());

  // Pick sigma so that the canonical chi_1(y_1) is lexicographically positive.
  std::optional<Transported> best;
  std::vector<std::size_t> sigma;
  for (const std::vector<std::size_t>& candidate : {std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{1, 0}}) {
    const auto permuted = transform_datum(d, IntMatrix::identity(d.s()), candidate);
    auto canon = canonicalize_group_data(GenericDatum::validate(permuted.datum));
    if (canon.datum.chi[0][0].lex_positive()) {
      best = std::move(canon);
      sigma = candidate;
      break;
    }
  }
  if (!best) no_match("no representative with chi_1(y_1) lexicographically positive");
  DatumData& cd = best->datum;
  IntMatrix matrix = best->witness.matrix;

  const bool linked = !cd.linking.empty();
  const Monomial q = cd.chi[0][0];
  const std::int64_t k = cd.g[0][0];
  ClassificationLabel label;
  label.dimension = r.dimension;
  if (!is_trivial(character_product(cd.chi[0], cd.chi[1]))) no_match("chi_2 != chi_1^-1");

  if (d.s() == 1) {
    if (cd.g[1][0] != k) no_match("g_1 != g_2");
    label.case_name = std::string("dim3/Case2/") + roman(linked ? 2 : 1);
    label.integers = {{"k", k}};
    label.scalars = {{"q", q}};
  } else {
    const std::int64_t l1 = cd.g[1][0], l2 = cd.g[1][1];
    if (l2 == 0) {
      if (l1 != k) no_match("g_1 != g_2 with l2 = 0");
      // Remaining freedom y_2 -> y_1^b y_2^{±1} acts on q2 = chi_1(y_2).
      const Monomial q2 = cd.chi[0][1];
      const Monomial target = reduce_against(q, q2);
      IntMatrix shear = IntMatrix::identity(2);
      // chi'_1(y'_2) = q2^d q1^{-b d} for phi(y_2) = y_1^b y_2^d.
      for (const std::int64_t dsign : {1, -1}) {
        const Monomial x = dsign == 1 ? q2 : q2.inverse();
        const Monomial ratio = target / x;  // = q1^{-b d}
        const Rational e = ratio.exponent(q.terms().front().first) / q.terms().front().second;
        if (e.is_integer() && q.pow(e.num()) == ratio) {
          shear(0, 1) = -e.num() * dsign;
          shear(1, 1) = dsign;
          break;
        }
      }
      if (shear(1, 1) != 1 || shear(0, 1) != 0) {
        const auto reduced = transform_datum(GenericDatum::validate(cd), shear, {0, 1});
        cd = reduced.datum;
        matrix = shear * matrix;
      }
      if (cd.chi[0][1] != target) no_match("cannot reduce q2");
      label.case_name = std::string("dim4/Case2/") + roman(linked ? 2 : 1);
      label.integers = {{"k", k}};
      label.scalars = {{"q1", q}, {"q2", target}};
    } else {
      // chi_1(y_2)^{l2} = q^{k - l1}
      if (cd.chi[0][1].pow(l2) != q.pow(k - l1)) no_match("chi_1(y_2)^l2 != q^(k-l1)");
      if (l1 == 0) {
        label.case_name = std::string("dim4/Case2/") + roman(linked ? 4 : 3);
        label.integers = {{"k", k}, {"l", l2}};
      } else {
        label.case_name = std::string("dim4/Case2/") + roman(linked ? 6 : 5);
        label.integers = {{"k", k}, {"l1", l1}, {"l2", l2}};
      }
      label.scalars = {{"q", q}, {"chi1_y2", cd.chi[0][1]}};
    }
  }
  // One isomorphism straight from d, so alpha matches the final form.
  Transported direct = transform_datum(d, matrix, sigma);
  if (!(direct.datum == cd)) no_match("witness does not reproduce the canonical form");
  label.canonical = cd;
  label.witness = std::move(direct.witness);
  r.status = ClassificationResult::Status::classified;
  r.label = std::move(label);
  return r;
}

}  // namespace cyhopf
