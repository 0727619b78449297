#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liepf/lie_algebra.hpp"

namespace liepf {

/// Standard parabolic P_Sigma: sigma holds the (1-based) simple roots of the
/// Levi, gamma = Pi \ sigma.  Sigma = Pi is G itself, sigma empty is the Borel.
class ParabolicType {
 public:
  ParabolicType(const SimpleLieAlgebra& alg, std::vector<int> sigma);

  static ParabolicType borel(const SimpleLieAlgebra& alg) { return {alg, {}}; }
  static ParabolicType whole_group(const SimpleLieAlgebra& alg);

  const std::string& algebra() const { return algebra_; }
  int rank() const { return rank_; }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& gamma() const { return gamma_; }

  friend bool operator==(const ParabolicType&, const ParabolicType&) = default;

 private:
  std::string algebra_;
  int rank_ = 0;
  std::vector<int> sigma_;
  std::vector<int> gamma_;
};

/// A dominant weight as (P, chi): sigma = zero coordinates, chi = the
/// (strictly positive) coordinates on gamma, in gamma order.
std::pair<ParabolicType, std::vector<std::int64_t>> parabolic_from_weight(const SimpleLieAlgebra& alg,
                                                                         const Weight& lambda);

/// Inverse of parabolic_from_weight.
Weight weight_from_parabolic(const ParabolicType& type, const std::vector<std::int64_t>& character);

/// Basis {varpi_j : j in gamma} of X(P_Sigma).
std::vector<Weight> character_group_basis(const ParabolicType& type);

enum class GeneratorKind { determinant, pfaffian, conjectural };

std::string to_string(GeneratorKind kind);

/// Pic(M_par) = Z L x prod_i X(P_i).
struct PicardDescription {
  std::string algebra;
  int rank = 0;
  GeneratorKind generator_kind = GeneratorKind::determinant;
  /// d(G) with L^d(G) = D_rho(G) for E6, E7, E8, F4; never asserted as proven.
  std::optional<int> conjectural_d;
  /// Node of the fundamental representation rho(G) paired with conjectural_d.
  std::optional<int> conjectural_node;
  /// Basis of X(P_i) for every labelled point.
  std::vector<std::vector<Weight>> factors;
};

PicardDescription picard_of_parabolic_moduli(const SimpleLieAlgebra& alg, const std::vector<ParabolicType>& labels);

/// Class of L(level, chi) in the basis above: level first, then each label's
/// gamma-indexed character coordinates.
std::vector<std::int64_t> line_bundle_coords(const SimpleLieAlgebra& alg, std::int64_t level,
                                             const std::vector<Weight>& labels);

}  // namespace liepf
