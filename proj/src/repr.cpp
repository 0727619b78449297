#include "liepf/repr.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace liepf {

FormalCharacter::FormalCharacter(std::shared_ptr<const SimpleLieAlgebra> alg, std::map<Weight, BigInt> dominant_mults)
    : alg_(std::move(alg)), mults_(std::move(dominant_mults)) {
  for (const auto& [w, m] : mults_) {
    alg_->require_rank(w);
    if (!w.is_dominant()) throw DomainError("character key " + w.to_string() + " is not dominant");
    if (m < 1) throw DomainError("character multiplicity must be positive");
  }
}

BigInt FormalCharacter::dimension() const {
  BigInt total = 0;
  for (const auto& [w, m] : mults_) total += m * orbit_size(*alg_, w);
  return total;
}

void FormalCharacter::for_each_weight(const std::function<void(const Weight&, const BigInt&)>& visit,
                                      std::size_t orbit_cap) const {
  for (const auto& [w, m] : mults_) {
    for_each_in_orbit(*alg_, w, orbit_cap, [&](const Weight& image) { visit(image, m); });
  }
}

bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
  return a.alg_->designator() == b.alg_->designator() && a.mults_ == b.mults_;
}

BigInt weyl_dimension(const SimpleLieAlgebra& alg, const Weight& lambda) {
  alg.require_rank(lambda);
  if (!lambda.is_dominant()) throw DomainError("weyl_dimension needs a dominant weight, got " + lambda.to_string());
  const Weight shifted = lambda + alg.rho();
  BigInt num = 1, den = 1;
  for (std::size_t r = 0; r < alg.positive_roots().size(); ++r) {
    num *= alg.root_pairing_scaled(r, shifted);
    den *= alg.root_pairing_scaled(r, alg.rho());
  }
  if (num % den != 0) throw InternalError("Weyl dimension is not integral for " + lambda.to_string());
  return num / den;
}

FormalCharacter dominant_character(const SimpleLieAlgebra& alg, const Weight& lambda, const Limits& limits) {
  alg.require_rank(lambda);
  if (!lambda.is_dominant()) throw DomainError("highest weight must be dominant, got " + lambda.to_string());

  const auto& roots = alg.positive_roots();
  std::vector<std::int64_t> root_height;
  for (const auto& c : alg.positive_roots_simple()) {
    std::int64_t h = 0;
    for (auto x : c) h += x;
    root_height.push_back(h);
  }

  // Dominant weights below lambda, reached by subtracting positive roots.
  std::unordered_map<Weight, std::int64_t, WeightHash> depth{{lambda, 0}};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight mu = std::move(queue.front());
    queue.pop_front();
    const std::int64_t d = depth[mu];
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight nu = mu - roots[r];
      if (!nu.is_dominant() || depth.count(nu)) continue;
      depth.emplace(nu, d + root_height[r]);
      if (depth.size() > limits.weight_system_cap) {
        throw CapExceeded("dominant weight system of " + lambda.to_string() + " in " + alg.designator() +
                          " exceeds the cap of " + std::to_string(limits.weight_system_cap));
      }
      queue.push_back(std::move(nu));
    }
  }

  std::vector<std::pair<std::int64_t, Weight>> ordered;
  ordered.reserve(depth.size());
  for (const auto& [w, d] : depth) ordered.emplace_back(d, w);
  std::sort(ordered.begin(), ordered.end());

  const Weight top = lambda + alg.rho();
  const std::int64_t top_norm = alg.inner_scaled(top, top);
  std::unordered_map<Weight, BigInt, WeightHash> mult;
  mult.emplace(lambda, BigInt(1));

  for (const auto& [d, mu] : ordered) {
    if (d == 0) continue;
    BigInt numerator = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      Weight nu = mu;
      for (;;) {
        nu += roots[r];
        auto it = mult.find(dominant_representative(alg, nu));
        if (it == mult.end()) break;
        numerator += it->second * alg.root_pairing_scaled(r, nu);
      }
    }
    const Weight shifted = mu + alg.rho();
    const std::int64_t denom = top_norm - alg.inner_scaled(shifted, shifted);
    numerator *= 2;
    if (denom <= 0 || numerator % denom != 0) {
      throw InternalError("Freudenthal recursion produced a non-integral multiplicity at " + mu.to_string());
    }
    BigInt m = numerator / denom;
    if (m > 0) mult.emplace(mu, std::move(m));
  }

  std::map<Weight, BigInt> sorted(mult.begin(), mult.end());
  return FormalCharacter(std::make_shared<const SimpleLieAlgebra>(alg), std::move(sorted));
}

FormalCharacter tensor_character(const FormalCharacter& a, const FormalCharacter& b, const Limits& limits) {
  if (a.algebra().designator() != b.algebra().designator()) {
    throw DomainError("tensor product of characters of different algebras: " + a.algebra().designator() + " vs " +
                      b.algebra().designator());
  }
  std::vector<std::pair<Weight, BigInt>> left;
  a.for_each_weight([&](const Weight& w, const BigInt& m) { left.emplace_back(w, m); }, limits.orbit_cap);
  std::vector<std::pair<Weight, BigInt>> right;
  b.for_each_weight([&](const Weight& w, const BigInt& m) { right.emplace_back(w, m); }, limits.orbit_cap);

  // The product is W-invariant, so counting the dominant sums is enough.
  std::map<Weight, BigInt> product;
  for (const auto& [x, mx] : left) {
    for (const auto& [y, my] : right) {
      Weight s = x + y;
      if (!s.is_dominant()) continue;
      product[s] += mx * my;
    }
  }
  return FormalCharacter(a.algebra_ptr(), std::move(product));
}

}  // namespace liepf
