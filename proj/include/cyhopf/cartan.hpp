#pragma once

// Finite-type Cartan matrices and their positive roots, ordered by a fixed
// reduced expression of the longest Weyl group element.
//
// Conventions: indices are 0-based in code and 1-based in every text
// format. The simple reflection acts by s_i(alpha_j) = alpha_j - a_ij alpha_i.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyhopf/scalars.hpp"

namespace cyhopf {

/// Coordinates of beta = sum_i m_i alpha_i.
using Root = std::vector<std::int64_t>;

class CartanMatrix {
 public:
  /// Validates a generalized Cartan matrix of finite type. Throws
  /// CartanError with "not a generalized Cartan matrix", "not symmetrizable"
  /// or "not finite type".
  static CartanMatrix validate(const std::vector<std::vector<std::int64_t>>& entries);

  std::size_t rank() const noexcept { return entries_.rows(); }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const IntMatrix& entries() const noexcept { return entries_; }

  /// Minimal positive d with d_i a_ij = d_j a_ji (gcd 1 on each component).
  const std::vector<std::int64_t>& symmetrizer() const noexcept { return d_; }
  /// Connected components of {(i, j) : a_ij != 0}, each sorted, ordered by
  /// smallest member.
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }
  std::size_t component_of(std::size_t i) const { return component_index_[i]; }
  bool same_component(std::size_t i, std::size_t j) const { return component_index_[i] == component_index_[j]; }

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.entries_ == b.entries_; }

  /// "2 -1; -1 2"
  std::string to_string() const;

 private:
  IntMatrix entries_;
  std::vector<std::int64_t> d_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> component_index_;
};

/// Free-function spelling of CartanMatrix::validate.
inline CartanMatrix validate_cartan(const std::vector<std::vector<std::int64_t>>& entries) {
  return CartanMatrix::validate(entries);
}

/// Entries of a named type: A1..A4, B2, B3, C3, D4, G2, F4 and products
/// joined by 'x' ("A2xA1"). B2 and G2 list the short simple root first.
std::vector<std::vector<std::int64_t>> named_cartan(std::string_view name);

/// Accepts a named type or a literal "2 -1; -1 2".
std::vector<std::vector<std::int64_t>> parse_cartan(std::string_view text);

/// s_i(beta).
Root reflect(const CartanMatrix& cartan, std::size_t i, const Root& beta);

/// Reduced expression of w_0 built greedily: at each step the first index in
/// `priority` whose reflection increases the length is appended. The default
/// priority is 0, 1, ..., theta-1.
std::vector<std::size_t> longest_word(const CartanMatrix& cartan, std::span<const std::size_t> priority = {});

struct RootSystem {
  CartanMatrix cartan;
  std::vector<std::size_t> reduced_word;
  /// beta_t = s_{i_1} ... s_{i_{t-1}}(alpha_{i_t}).
  std::vector<Root> positive_roots;
  std::vector<std::int64_t> heights;
  /// simple_positions[k] = t with beta_t = alpha_k.
  std::vector<std::size_t> simple_positions;

  std::size_t size() const noexcept { return positive_roots.size(); }
};

/// Roots for a given reduced expression of w_0; throws CartanError("word not
/// reduced") when a root repeats or turns negative, and when the word is
/// reduced but not of maximal length.
RootSystem positive_roots(const CartanMatrix& cartan, std::span<const std::size_t> word);

/// positive_roots(cartan, longest_word(cartan)).
RootSystem root_system(const CartanMatrix& cartan);

/// "a1+a2", "2a1+a2".
std::string root_to_string(const Root& beta);

}  // namespace cyhopf
