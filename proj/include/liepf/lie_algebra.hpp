#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "liepf/numeric.hpp"

namespace liepf {

/// Integer weight in the fundamental-weight basis; coords[i] = lambda(H_{i+1}).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static Weight fundamental(std::size_t rank, std::size_t node);  // node is 1-based

  std::size_t rank() const { return coords_.size(); }
  const std::vector<std::int64_t>& coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a);

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  std::string to_string() const;  // "[1,0,2]"

 private:
  std::vector<std::int64_t> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RationalSquare = std::vector<std::vector<Rational>>;

/// Immutable root datum of a simple Lie algebra under Bourbaki node numbering.
///
/// The invariant form is normalised so that long roots have squared length 2.
/// All data is exact; a scaled integer copy of the weight form is kept for the
/// hot loops (orbits, Freudenthal, Verlinde angles).
class SimpleLieAlgebra {
 public:
  char type_tag() const { return type_; }
  int rank() const { return rank_; }
  std::string designator() const;

  /// a_ij = alpha_j(H_i).
  const IntMatrix& cartan() const { return cartan_; }
  /// (alpha_i, alpha_j).
  const RationalSquare& form_matrix() const { return root_form_; }
  /// (varpi_i, varpi_j).
  const RationalSquare& weight_form() const { return weight_form_; }

  const Weight& highest_root_theta() const { return theta_; }
  const std::vector<std::int64_t>& comarks() const { return comarks_; }
  const Weight& rho() const { return rho_; }
  std::int64_t dual_coxeter() const { return dual_coxeter_; }

  /// Positive roots in fundamental-weight coordinates, ordered by height then lexicographically.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  /// The same roots expanded over the simple roots.
  const std::vector<std::vector<std::int64_t>>& positive_roots_simple() const { return positive_roots_simple_; }
  /// (alpha_i, alpha_i) == 2 for long roots.
  bool is_long_root(std::size_t root_index) const;

  std::int64_t dim_g() const { return rank_ + 2 * static_cast<std::int64_t>(positive_roots_.size()); }
  BigInt cartan_determinant() const;

  /// Simple root alpha_i (1-based) in fundamental-weight coordinates.
  Weight simple_root(std::size_t node) const;

  /// Integer-scaled form: (x, y) = inner_scaled(x, y) / form_scale().
  std::int64_t form_scale() const { return scale_; }
  std::int64_t inner_scaled(const Weight& x, const Weight& y) const;
  /// (alpha, x) * form_scale() for the positive root with the given index.
  std::int64_t root_pairing_scaled(std::size_t root_index, const Weight& x) const;

  /// lambda(H_theta) = sum_i lambda_i * comark_i.
  std::int64_t theta_coroot_pairing(const Weight& w) const;

  void require_rank(const Weight& w) const;

 private:
  friend SimpleLieAlgebra build_algebra(char type_tag, int rank);

  char type_ = 'A';
  int rank_ = 0;
  IntMatrix cartan_;
  RationalSquare root_form_;
  RationalSquare weight_form_;
  std::vector<Rational> half_root_lengths_;  // (alpha_i, alpha_i) / 2
  Weight theta_;
  std::vector<std::int64_t> comarks_;
  Weight rho_;
  std::int64_t dual_coxeter_ = 0;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<std::int64_t>> positive_roots_simple_;
  std::vector<bool> long_root_;
  std::int64_t scale_ = 1;
  IntMatrix weight_form_scaled_;
  std::vector<std::int64_t> half_root_lengths_scaled_;
};

/// Throws DomainError for impossible types such as F5 or E9.
SimpleLieAlgebra build_algebra(char type_tag, int rank);

/// Parses "A1", "E8", "g2" (case-insensitive letter, decimal rank).
SimpleLieAlgebra build_algebra(std::string_view designator);

Rational inner(const SimpleLieAlgebra& alg, const Weight& lambda, const Weight& mu);

/// s_i(mu) = mu - mu(H_i) alpha_i, node 1-based.
Weight reflect(const SimpleLieAlgebra& alg, const Weight& mu, std::size_t node);

Weight dominant_representative(const SimpleLieAlgebra& alg, Weight mu);

constexpr std::size_t kDefaultOrbitCap = 10'000'000;

/// Full Weyl orbit of lambda, sorted lexicographically.  Throws CapExceeded past `cap`.
std::vector<Weight> weyl_orbit(const SimpleLieAlgebra& alg, const Weight& lambda,
                               std::size_t cap = kDefaultOrbitCap);

/// Calls `visit` once per orbit element without collecting them.
void for_each_in_orbit(const SimpleLieAlgebra& alg, const Weight& lambda, std::size_t cap,
                       const std::function<void(const Weight&)>& visit);

/// |W| from the type's closed form.
BigInt weyl_group_order(const SimpleLieAlgebra& alg);

/// |W . lambda| = |W| / |W_lambda| for dominant lambda, via the stabiliser's Dynkin sub-diagram.
BigInt orbit_size(const SimpleLieAlgebra& alg, const Weight& dominant);

/// Dominant weights with (lambda, theta) <= level, in lexicographic order.
std::vector<Weight> alcove(const SimpleLieAlgebra& alg, std::int64_t level);

/// Parses "1,0,2" into a weight; rank is checked against `alg` when given.
Weight parse_weight(std::string_view text);

}  // namespace liepf
