#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liepf/config.hpp"
#include "liepf/lie_algebra.hpp"
#include "liepf/real.hpp"

namespace liepf {

/// Raised when the high-precision Verlinde sum does not land on an integer.
class IntegralityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Diagonal of the Smith normal form of an integer matrix (non-zero entries only).
std::vector<std::int64_t> smith_invariants(std::vector<std::vector<std::int64_t>> matrix);

struct LatticeIndices {
  BigInt p_over_q;      ///< |P/Q| = det(Cartan)
  BigInt q_over_qlong;  ///< index of the long-root lattice in Q
};

LatticeIndices lattice_indices(const SimpleLieAlgebra& alg);

/// The Weyl group as matrices on fundamental-weight coordinates.
class WeylGroup {
 public:
  /// Throws CapExceeded when |W| exceeds `cap`.
  WeylGroup(const SimpleLieAlgebra& alg, std::size_t cap);

  std::size_t size() const { return images_.size(); }
  /// w(x) for the element with the given index.
  Weight apply(std::size_t element, const Weight& x) const;
  int sign(std::size_t element) const { return signs_[element]; }

 private:
  int rank_ = 0;
  // images_[w][i] = w(varpi_{i+1})
  std::vector<std::vector<Weight>> images_;
  std::vector<int> signs_;
};

/// Weyl character formula at exp(2 pi i xi), xi a rational vector in
/// fundamental-weight coordinates (paired through the invariant form).
ComplexReal character_value(const SimpleLieAlgebra& alg, const Weight& lambda, const std::vector<Rational>& xi,
                            long precision_bits = 128, std::size_t weyl_cap = Limits{}.weyl_cap);

struct VerlindeQuery {
  SimpleLieAlgebra algebra;
  std::int64_t level = 0;
  std::int64_t genus = 0;
  std::vector<Weight> labels;
  long precision_bits = 128;
};

struct VerlindeOptions {
  Limits limits;
  Execution execution = Execution::parallel;
  /// g = 1 with only trivial labels returns |P_level| without summing.
  bool allow_fast_path = true;
  double integrality_tolerance = 1e-6;
  std::int64_t max_genus = 64;
};

struct VerlindeResult {
  BigInt dimension;
  std::size_t alcove_size = 0;
  double integrality_residual = 0.0;
  bool used_fast_path = false;
};

VerlindeResult verlinde_dimension(const VerlindeQuery& query, const VerlindeOptions& options = {});

}  // namespace liepf
