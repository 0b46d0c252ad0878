#include "cyhopf/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace cyhopf {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow");
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = checked_sub(old_r, checked_mul(q, r));
    std::swap(old_r, r);
    old_s = checked_sub(old_s, checked_mul(q, s));
    std::swap(old_s, s);
    old_t = checked_sub(old_t, checked_mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// ---------------------------------------------------------------- Rational

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ArithmeticError("zero denominator");
  if (d < 0) {
    n = checked_mul(n, -1);
    d = checked_mul(d, -1);
  }
  const std::int64_t g = std::gcd(n, d);
  num_ = n / g;
  den_ = d / g;
}

Rational Rational::operator-() const { return Rational(checked_mul(num_, -1), den_); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational(checked_add(a.num_, b.num_));
  const std::int64_t g = std::gcd(a.den_, b.den_);
  const std::int64_t l = checked_mul(a.den_ / g, b.den_);
  return Rational(checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.den_ == 1 && b.den_ == 1) return Rational(checked_mul(a.num_, b.num_));
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return Rational(checked_mul(a.num_ / g1, b.num_ / g2), checked_mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw ArithmeticError("division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || begin == s.data() + s.size())
    throw Error("malformed integer '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(trim(text.substr(0, slash))), parse_int(trim(text.substr(slash + 1))));
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::parameter(std::string name, Rational exponent) {
  Monomial m;
  if (!exponent.is_zero()) m.terms_.emplace_back(std::move(name), exponent);
  return m;
}

Monomial Monomial::minus_one() {
  Monomial m;
  m.negative_ = true;
  return m;
}

Monomial Monomial::from_terms(int sign, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Monomial m;
  m.negative_ = sign < 0;
  for (auto& t : terms) {
    if (!m.terms_.empty() && m.terms_.back().first == t.first) {
      m.terms_.back().second += t.second;
    } else {
      m.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(m.terms_, [](const Term& t) { return t.second.is_zero(); });
  return m;
}

Rational Monomial::exponent(std::string_view name) const {
  for (const auto& [n, e] : terms_)
    if (n == name) return e;
  return Rational(0);
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (auto& t : m.terms_) t.second = -t.second;
  return m;
}

Monomial Monomial::pow(std::int64_t n) const {
  if (n == 0) return Monomial();
  Monomial m = *this;
  m.negative_ = negative_ && (n % 2 != 0);
  for (auto& t : m.terms_) t.second = t.second * Rational(n);
  return m;
}

Monomial Monomial::pow(const Rational& r) const {
  if (r.is_integer()) return pow(r.num());
  if (negative_) throw ArithmeticError("non-monomial result");
  Monomial m = *this;
  for (auto& t : m.terms_) t.second = t.second * r;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.negative_ = a.negative_ != b.negative_;
  m.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      m.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      m.terms_.push_back(*j++);
    } else {
      Rational e = i->second + j->second;
      if (!e.is_zero()) m.terms_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.negative_ <=> b.negative_; c != 0) return c;
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = a.terms_[k].first <=> b.terms_[k].first; c != 0) return c;
    if (auto c = a.terms_[k].second <=> b.terms_[k].second; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string Monomial::to_string() const {
  if (terms_.empty()) return negative_ ? "-1" : "1";
  std::string out = negative_ ? "-" : "";
  bool first = true;
  for (const auto& [name, e] : terms_) {
    if (!first) out += '*';
    first = false;
    out += name;
    out += '^';
    out += e.to_string();
  }
  return out;
}

Monomial Monomial::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error("empty monomial");
  int sign = 1;
  if (text.front() == '-') {
    sign = -1;
    text.remove_prefix(1);
    text = trim(text);
  }
  if (text == "1") return sign < 0 ? minus_one() : Monomial();
  std::vector<Term> terms;
  while (true) {
    const auto star = text.find('*');
    const std::string_view factor = trim(text.substr(0, star));
    const auto caret = factor.find('^');
    const std::string_view name = trim(factor.substr(0, caret));
    if (!valid_name(name)) throw Error("malformed monomial factor '" + std::string(factor) + "'");
    Rational e(1);
    if (caret != std::string_view::npos) e = Rational::parse(factor.substr(caret + 1));
    terms.emplace_back(std::string(name), e);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return from_terms(sign, std::move(terms));
}

// ---------------------------------------------------------------- characters

Monomial evaluate(const Character& chi, const ExponentVector& z) {
  if (chi.size() != z.size()) throw Error("character / group element rank mismatch");
  Monomial out;
  for (std::size_t h = 0; h < z.size(); ++h)
    if (z[h] != 0) out *= chi[h].pow(z[h]);
  return out;
}

Character character_product(const Character& a, const Character& b) {
  Character out(a.size());
  for (std::size_t h = 0; h < a.size(); ++h) out[h] = a[h] * b[h];
  return out;
}

Character character_power(const Character& a, std::int64_t n) {
  Character out(a.size());
  for (std::size_t h = 0; h < a.size(); ++h) out[h] = a[h].pow(n);
  return out;
}

bool is_trivial(const Character& chi) {
  return std::all_of(chi.begin(), chi.end(), [](const Monomial& m) { return m.is_one(); });
}

ExponentVector add(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector out(a.size());
  for (std::size_t h = 0; h < a.size(); ++h) out[h] = checked_add(a[h], b[h]);
  return out;
}

ExponentVector scale(const ExponentVector& a, std::int64_t k) {
  ExponentVector out(a.size());
  for (std::size_t h = 0; h < a.size(); ++h) out[h] = checked_mul(a[h], k);
  return out;
}

bool is_zero(const ExponentVector& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::int64_t> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<std::int64_t> IntMatrix::column(std::size_t j) const {
  std::vector<std::int64_t> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error("matrix dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t v = a(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(v, b(k, j)));
    }
  return out;
}

std::vector<std::int64_t> IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw Error("matrix/vector dimension mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = checked_add(out[i], checked_mul((*this)(i, j), v[j]));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j))) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  const std::int64_t det = determinant(m);
  if (det != 1 && det != -1) throw ArithmeticError("matrix is not unimodular");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c].is_zero()) ++p;
    std::swap(a[p], a[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a[i][n + j].num();
  return out;
}

// ---------------------------------------------------------------- lattices

namespace {

// Column operation on (H | U): [c1, c2] <- [c1, c2] * [[x, -b/g], [y, a/g]].
void combine_columns(IntMatrix& h, IntMatrix& u, std::size_t c1, std::size_t c2, std::int64_t a,
                     std::int64_t b) {
  Bezout e = extended_gcd(a, b);
  if (a != 0 && b % a == 0) e = {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};  // keep c1, pure elimination
  const std::int64_t p = a / e.g, q = b / e.g;
  auto op = [&](IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const std::int64_t v1 = m(i, c1), v2 = m(i, c2);
      m(i, c1) = checked_add(checked_mul(e.x, v1), checked_mul(e.y, v2));
      m(i, c2) = checked_sub(checked_mul(p, v2), checked_mul(q, v1));
    }
  };
  op(h);
  op(u);
}

void combine_rows(std::vector<std::int64_t>& r1, std::vector<std::int64_t>& r2, std::int64_t a, std::int64_t b) {
  Bezout e = extended_gcd(a, b);
  if (a != 0 && b % a == 0) e = {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};
  const std::int64_t p = a / e.g, q = b / e.g;
  for (std::size_t j = 0; j < r1.size(); ++j) {
    const std::int64_t v1 = r1[j], v2 = r2[j];
    r1[j] = checked_add(checked_mul(e.x, v1), checked_mul(e.y, v2));
    r2[j] = checked_sub(checked_mul(p, v2), checked_mul(q, v1));
  }
}

void reduce_modulo(std::vector<std::int64_t>& v, const std::vector<std::vector<std::int64_t>>& basis) {
  for (const auto& b : basis) {
    std::size_t c = 0;
    while (b[c] == 0) ++c;
    const std::int64_t f = floor_div(v[c], b[c]);
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = checked_sub(v[j], checked_mul(f, b[j]));
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> lattice_basis(std::vector<std::vector<std::int64_t>> rows,
                                                     std::size_t dim) {
  std::size_t piv = 0;
  for (std::size_t col = 0; col < dim && piv < rows.size(); ++col) {
    for (std::size_t k = piv + 1; k < rows.size(); ++k)
      if (rows[k][col] != 0) combine_rows(rows[piv], rows[k], rows[piv][col], rows[k][col]);
    if (rows[piv][col] == 0) {
      // pivot row may be zero here while a lower row is not: bring one up
      std::size_t k = piv + 1;
      while (k < rows.size() && rows[k][col] == 0) ++k;
      if (k == rows.size()) continue;
      std::swap(rows[piv], rows[k]);
    }
    if (rows[piv][col] < 0)
      for (auto& v : rows[piv]) v = checked_mul(v, -1);
    const std::int64_t p = rows[piv][col];
    for (std::size_t k = 0; k < piv; ++k) {
      const std::int64_t f = floor_div(rows[k][col], p);
      if (f != 0)
        for (std::size_t j = 0; j < dim; ++j) rows[k][j] = checked_sub(rows[k][j], checked_mul(f, rows[piv][j]));
    }
    ++piv;
  }
  rows.resize(piv);
  return rows;
}

std::optional<AffineLattice> solve_integer_affine(const IntMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw Error("solve_integer_affine: dimension mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(n);
  std::vector<std::int64_t> pivot_col_of_row(m, -1);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < m && rank < n; ++i) {
    for (std::size_t j = rank + 1; j < n; ++j)
      if (h(i, j) != 0) combine_columns(h, u, rank, j, h(i, rank), h(i, j));
    if (h(i, rank) == 0) {
      // the whole remaining row is zero; move on
      continue;
    }
    if (h(i, rank) < 0)
      for (auto* mat : {&h, &u})
        for (std::size_t r = 0; r < mat->rows(); ++r) (*mat)(r, rank) = checked_mul((*mat)(r, rank), -1);
    pivot_col_of_row[i] = static_cast<std::int64_t>(rank);
    ++rank;
  }

  std::vector<std::int64_t> y(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    Rational residual = b[i];
    for (std::size_t c = 0; c < rank; ++c)
      if (h(i, c) != 0 && static_cast<std::int64_t>(c) != pivot_col_of_row[i])
        residual -= Rational(checked_mul(h(i, c), y[c]));
    if (pivot_col_of_row[i] >= 0) {
      const auto c = static_cast<std::size_t>(pivot_col_of_row[i]);
      const Rational q = residual / Rational(h(i, c));
      if (!q.is_integer()) return std::nullopt;
      y[c] = q.num();
    } else if (!residual.is_zero()) {
      return std::nullopt;
    }
  }

  AffineLattice out;
  out.particular = u.apply(y);
  std::vector<std::vector<std::int64_t>> kernel;
  for (std::size_t c = rank; c < n; ++c) kernel.push_back(u.column(c));
  out.kernel = lattice_basis(std::move(kernel), n);
  reduce_modulo(out.particular, out.kernel);
  return out;
}

// ---------------------------------------------------------------- ExponentSystem

void ExponentSystem::add_monomial_equation(std::span<const Monomial> bases, const Monomial& target) {
  if (bases.size() != n_) throw Error("ExponentSystem: wrong number of bases");
  std::vector<std::string> names;
  for (const auto& m : bases)
    for (const auto& [name, e] : m.terms()) names.push_back(name);
  for (const auto& [name, e] : target.terms()) names.push_back(name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  for (const auto& name : names) {
    std::vector<Rational> row(n_);
    for (std::size_t j = 0; j < n_; ++j) row[j] = bases[j].exponent(name);
    rows_.push_back(std::move(row));
    rhs_.push_back(target.exponent(name));
  }
  std::vector<std::int64_t> bits(n_);
  bool any = target.sign() < 0;
  for (std::size_t j = 0; j < n_; ++j) {
    bits[j] = bases[j].sign() < 0 ? 1 : 0;
    any = any || bits[j] != 0;
  }
  if (any) {
    parity_rows_.push_back(std::move(bits));
    parity_rhs_.push_back(target.sign() < 0 ? 1 : 0);
  }
}

void ExponentSystem::add_linear_equation(std::span<const std::int64_t> coeffs, std::int64_t rhs) {
  if (coeffs.size() != n_) throw Error("ExponentSystem: wrong number of coefficients");
  rows_.emplace_back(coeffs.begin(), coeffs.end());
  rhs_.emplace_back(rhs);
}

std::optional<AffineLattice> ExponentSystem::solve() const {
  const std::size_t slack = parity_rows_.size();
  const std::size_t total = n_ + slack;
  IntMatrix a(rows_.size() + slack, total);
  std::vector<Rational> b;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::int64_t l = 1;
    for (const auto& v : rows_[i]) l = std::lcm(l, v.den());
    for (std::size_t j = 0; j < n_; ++j) a(i, j) = (rows_[i][j] * Rational(l)).num();
    b.push_back(rhs_[i] * Rational(l));
  }
  for (std::size_t p = 0; p < slack; ++p) {
    const std::size_t i = rows_.size() + p;
    for (std::size_t j = 0; j < n_; ++j) a(i, j) = parity_rows_[p][j];
    a(i, n_ + p) = -2;
    b.emplace_back(parity_rhs_[p]);
  }
  auto full = solve_integer_affine(a, b);
  if (!full) return std::nullopt;
  if (slack == 0) return full;
  AffineLattice out;
  out.particular.assign(full->particular.begin(), full->particular.begin() + static_cast<std::ptrdiff_t>(n_));
  std::vector<std::vector<std::int64_t>> gens;
  for (const auto& k : full->kernel) gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n_));
  out.kernel = lattice_basis(std::move(gens), n_);
  reduce_modulo(out.particular, out.kernel);
  return out;
}

// ---------------------------------------------------------------- multiplicative systems

MultiplicativeSolution solve_multiplicative_system(const IntMatrix& a, std::span<const Monomial> c) {
  if (c.size() != a.rows()) throw Error("solve_multiplicative_system: dimension mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  // Diagonalize U A V = D by unimodular row (U) and column (V) operations.
  std::vector<std::vector<std::int64_t>> u(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;
  IntMatrix dm = a;
  IntMatrix v = IntMatrix::identity(n);
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // bring the smallest nonzero entry of the trailing block to (t, t)
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (dm(i, j) != 0 && (bi == m || std::llabs(dm(i, j)) < std::llabs(dm(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == m) break;
    for (std::size_t j = 0; j < n; ++j) std::swap(dm(t, j), dm(bi, j));
    std::swap(u[t], u[bi]);
    for (std::size_t i = 0; i < m; ++i) std::swap(dm(i, t), dm(i, bj));
    for (std::size_t i = 0; i < n; ++i) std::swap(v(i, t), v(i, bj));
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (dm(i, t) == 0) continue;
        clean = false;
        std::vector<std::int64_t> rt = dm.row(t), ri = dm.row(i);
        const std::int64_t at = dm(t, t), ai = dm(i, t);
        std::vector<std::int64_t> ut = u[t], ui = u[i];
        combine_rows(rt, ri, at, ai);
        combine_rows(ut, ui, at, ai);
        for (std::size_t j = 0; j < n; ++j) {
          dm(t, j) = rt[j];
          dm(i, j) = ri[j];
        }
        u[t] = ut;
        u[i] = ui;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (dm(t, j) == 0) continue;
        clean = false;
        combine_columns(dm, v, t, j, dm(t, t), dm(t, j));
      }
    }
    if (dm(t, t) < 0) {
      for (std::size_t j = 0; j < n; ++j) dm(t, j) = -dm(t, j);
      for (auto& x : u[t]) x = -x;
    }
    ++t;
  }
  const std::size_t rank = t;

  // w = U c (multiplicatively)
  std::vector<Monomial> w(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      if (u[i][k] != 0) w[i] *= c[k].pow(u[i][k]);

  MultiplicativeSolution out;
  for (std::size_t i = rank; i < m; ++i) {
    if (!w[i].is_one()) {
      out.status = MultiplicativeSolution::Status::inconsistent;
      out.relation = u[i];
      out.message = "kernel relation evaluates to " + w[i].to_string() + " != 1";
      return out;
    }
  }
  std::vector<Monomial> y(n);
  for (std::size_t i = 0; i < rank; ++i) {
    const std::int64_t di = dm(i, i);
    if (w[i].sign() < 0 && di % 2 == 0) {
      out.status = MultiplicativeSolution::Status::outside_value_group;
      out.message = "requires an even root of -1";
      return out;
    }
    Monomial root = Monomial::from_terms(w[i].sign(), {});
    for (const auto& [name, e] : w[i].terms()) root *= Monomial::parameter(name, e / Rational(di));
    y[i] = root;
  }
  out.assignment.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (v(j, k) != 0) out.assignment[j] *= y[k].pow(v(j, k));
  return out;
}

}  // namespace cyhopf
