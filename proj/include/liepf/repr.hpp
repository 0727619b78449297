#pragma once

#include <functional>
#include <map>
#include <memory>

#include "liepf/config.hpp"
#include "liepf/lie_algebra.hpp"

namespace liepf {

/// A W-invariant character stored on dominant representatives only.
class FormalCharacter {
 public:
  FormalCharacter(std::shared_ptr<const SimpleLieAlgebra> alg, std::map<Weight, BigInt> dominant_mults);

  const SimpleLieAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const SimpleLieAlgebra>& algebra_ptr() const { return alg_; }
  const std::map<Weight, BigInt>& dominant_mults() const { return mults_; }

  /// Sum of multiplicity times orbit size.
  BigInt dimension() const;

  /// Visits every weight of the full multiset (one call per orbit element).
  void for_each_weight(const std::function<void(const Weight&, const BigInt&)>& visit,
                       std::size_t orbit_cap = Limits{}.orbit_cap) const;

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b);

 private:
  std::shared_ptr<const SimpleLieAlgebra> alg_;
  std::map<Weight, BigInt> mults_;
};

/// prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha).
BigInt weyl_dimension(const SimpleLieAlgebra& alg, const Weight& lambda);

/// Freudenthal multiplicities of L_lambda on dominant weights.
FormalCharacter dominant_character(const SimpleLieAlgebra& alg, const Weight& lambda, const Limits& limits = {});

/// Character of V (x) W.
FormalCharacter tensor_character(const FormalCharacter& a, const FormalCharacter& b, const Limits& limits = {});

}  // namespace liepf
