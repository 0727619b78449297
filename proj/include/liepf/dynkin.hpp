#pragma once

#include <string>
#include <vector>

#include "liepf/config.hpp"
#include "liepf/lie_algebra.hpp"
#include "liepf/repr.hpp"

namespace liepf {

enum class IndexMethod { character_sum, casimir };

std::string to_string(IndexMethod method);

struct IndexReport {
  std::string algebra;
  Weight highest_weight;
  BigInt dimension;
  BigInt index;
  IndexMethod method = IndexMethod::casimir;
  bool is_minimal_witness = false;
};

/// Sum of mu(H_theta)^2 over the full weight multiset of a character (the
/// un-halved Dynkin index).  Each dominant weight's orbit is one work item.
BigInt theta_square_sum(const FormalCharacter& character, Execution execution = Execution::parallel,
                        std::size_t orbit_cap = Limits{}.orbit_cap);

/// Dynkin index of an arbitrary (possibly reducible) character: half the theta square sum.
BigInt index_of_character(const FormalCharacter& character, Execution execution = Execution::parallel,
                          std::size_t orbit_cap = Limits{}.orbit_cap);

/// d = 1/2 sum_mu n_mu mu(H_theta)^2 evaluated on the Freudenthal character of L_lambda.
BigInt index_character_sum(const SimpleLieAlgebra& alg, const Weight& lambda, const Limits& limits = {},
                           Execution execution = Execution::parallel);

/// d = dim L_lambda * (lambda, lambda + 2 rho) / dim g.
BigInt index_casimir(const SimpleLieAlgebra& alg, const Weight& lambda);

struct MinimalIndex {
  BigInt d_g;
  /// Fundamental weights achieving d_g, in node order.
  std::vector<Weight> witnesses;
  /// Index of every fundamental representation, node order.
  std::vector<BigInt> fundamental_indices;
};

MinimalIndex minimal_index(const SimpleLieAlgebra& alg);

IndexReport index_report(const SimpleLieAlgebra& alg, const Weight& lambda, IndexMethod method,
                         const Limits& limits = {});

struct FundamentalIndexEntry {
  int node = 0;  // Bourbaki numbering
  Weight weight;
  BigInt dimension;
  BigInt index;
};

/// Indices of the eight fundamental representations of E8, node order.
std::vector<FundamentalIndexEntry> e8_fundamental_table();

}  // namespace liepf
