#include "cyhopf/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace cyhopf {

namespace {

std::vector<std::vector<std::int64_t>> type_a(std::size_t n) {
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

std::vector<std::vector<std::int64_t>> single_type(std::string_view name) {
  if (name == "A1") return type_a(1);
  if (name == "A2") return type_a(2);
  if (name == "A3") return type_a(3);
  if (name == "A4") return type_a(4);
  if (name == "B2") return {{2, -2}, {-1, 2}};
  if (name == "G2") return {{2, -3}, {-1, 2}};
  if (name == "B3") return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  if (name == "C3") return {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
  if (name == "D4") return {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  if (name == "F4") return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
  throw CartanError("unknown Cartan type '" + std::string(name) + "'");
}

// Leading principal minors of a symmetric rational matrix, all positive.
bool positive_definite(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= Rational(0)) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::int64_t>> named_cartan(std::string_view name) {
  std::vector<std::vector<std::int64_t>> out;
  std::size_t start = 0;
  while (start <= name.size()) {
    const std::size_t x = name.find('x', start);
    const std::string_view part = name.substr(start, x == std::string_view::npos ? x : x - start);
    const auto block = single_type(part);
    const std::size_t offset = out.size(), n = block.size();
    for (auto& row : out) row.resize(offset + n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> row(offset + n, 0);
      for (std::size_t j = 0; j < n; ++j) row[offset + j] = block[i][j];
      out.push_back(std::move(row));
    }
    if (x == std::string_view::npos) break;
    start = x + 1;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> parse_cartan(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && std::isalpha(static_cast<unsigned char>(text.front()))) return named_cartan(text);
  std::vector<std::vector<std::int64_t>> rows;
  std::stringstream all{std::string(text)};
  std::string row_text;
  while (std::getline(all, row_text, ';')) {
    std::stringstream rs(row_text);
    std::vector<std::int64_t> row;
    std::string tok;
    while (rs >> tok) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw CartanError("malformed Cartan entry '" + tok + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<std::int64_t>>& entries) {
  const std::size_t n = entries.size();
  if (n == 0) throw CartanError("not a generalized Cartan matrix: empty");
  for (const auto& row : entries)
    if (row.size() != n) throw CartanError("not a generalized Cartan matrix: not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t a = entries[i][j];
      if (i == j && a != 2) throw CartanError("not a generalized Cartan matrix: a_ii != 2");
      if (i != j && a > 0) throw CartanError("not a generalized Cartan matrix: positive off-diagonal entry");
      if (i != j && (a == 0) != (entries[j][i] == 0))
        throw CartanError("not a generalized Cartan matrix: a_ij = 0 but a_ji != 0");
    }

  CartanMatrix c;
  c.entries_ = IntMatrix::from_rows(entries, n);
  c.component_index_.assign(n, n);
  // Components by DFS; within each, propagate d_j = d_i a_ij / a_ji.
  std::vector<Rational> d(n, Rational(0));
  for (std::size_t root = 0; root < n; ++root) {
    if (c.component_index_[root] != n) continue;
    const std::size_t idx = c.components_.size();
    std::vector<std::size_t> members, stack{root};
    c.component_index_[root] = idx;
    d[root] = Rational(1);
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      members.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || entries[i][j] == 0) continue;
        const Rational dj = d[i] * Rational(entries[i][j], entries[j][i]);
        if (c.component_index_[j] == n) {
          c.component_index_[j] = idx;
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw CartanError("not symmetrizable");
        }
      }
    }
    std::sort(members.begin(), members.end());
    c.components_.push_back(std::move(members));
  }
  c.d_.assign(n, 0);
  for (const auto& comp : c.components_) {
    std::int64_t l = 1;
    for (auto i : comp) l = std::lcm(l, d[i].den());
    std::int64_t g = 0;
    for (auto i : comp) g = std::gcd(g, (d[i] * Rational(l)).num());
    for (auto i : comp) c.d_[i] = (d[i] * Rational(l)).num() / g;
  }
  std::vector<std::vector<Rational>> sym(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym[i][j] = Rational(checked_mul(c.d_[i], entries[i][j]));
  if (!positive_definite(sym)) throw CartanError("not finite type");
  return c;
}

std::string CartanMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < rank(); ++j) {
      if (j) out += ' ';
      out += std::to_string(entries_(i, j));
    }
  }
  return out;
}

Root reflect(const CartanMatrix& cartan, std::size_t i, const Root& beta) {
  std::int64_t pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing = checked_add(pairing, checked_mul(cartan(i, j), beta[j]));
  Root out = beta;
  out[i] = checked_sub(out[i], pairing);
  return out;
}

namespace {

Root simple_root(std::size_t n, std::size_t i) {
  Root r(n, 0);
  r[i] = 1;
  return r;
}

// w(beta) for w = s_{word[0]} ... s_{word[len-1]}.
Root apply_word(const CartanMatrix& cartan, std::span<const std::size_t> word, Root beta) {
  for (std::size_t t = word.size(); t-- > 0;) beta = reflect(cartan, word[t], beta);
  return beta;
}

bool is_positive(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v >= 0; }) &&
         std::any_of(r.begin(), r.end(), [](std::int64_t v) { return v > 0; });
}

}  // namespace

std::vector<std::size_t> longest_word(const CartanMatrix& cartan, std::span<const std::size_t> priority) {
  const std::size_t n = cartan.rank();
  std::vector<std::size_t> order(priority.begin(), priority.end());
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != n || std::set<std::size_t>(order.begin(), order.end()).size() != n ||
      *std::max_element(order.begin(), order.end()) >= n)
    throw CartanError("priority must be a permutation of the simple indices");
  std::vector<std::size_t> word;
  while (true) {
    bool extended = false;
    for (std::size_t i : order) {
      if (is_positive(apply_word(cartan, word, simple_root(n, i)))) {
        word.push_back(i);
        extended = true;
        break;
      }
    }
    if (!extended) return word;
  }
}

RootSystem positive_roots(const CartanMatrix& cartan, std::span<const std::size_t> word) {
  const std::size_t n = cartan.rank();
  RootSystem rs{cartan, {word.begin(), word.end()}, {}, {}, std::vector<std::size_t>(n, word.size())};
  std::set<Root> seen;
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (word[t] >= n) throw CartanError("word letter out of range");
    Root beta = apply_word(cartan, word.subspan(0, t), simple_root(n, word[t]));
    if (!is_positive(beta) || !seen.insert(beta).second) throw CartanError("word not reduced");
    rs.heights.push_back(std::accumulate(beta.begin(), beta.end(), std::int64_t{0}));
    for (std::size_t k = 0; k < n; ++k)
      if (beta == simple_root(n, k)) rs.simple_positions[k] = t;
    rs.positive_roots.push_back(std::move(beta));
  }
  for (std::size_t i = 0; i < n; ++i)
    if (is_positive(apply_word(cartan, word, simple_root(n, i))))
      throw CartanError("word is not a reduced expression of the longest element");
  return rs;
}

RootSystem root_system(const CartanMatrix& cartan) {
  const auto word = longest_word(cartan);
  return positive_roots(cartan, word);
}

std::string root_to_string(const Root& beta) {
  std::string out;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (beta[i] != 1) out += std::to_string(beta[i]);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cyhopf
