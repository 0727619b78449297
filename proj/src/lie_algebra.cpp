#include "liepf/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "liepf/matrix.hpp"

namespace liepf {

// ---- Weight --------------------------------------------------------------

Weight Weight::fundamental(std::size_t rank, std::size_t node) {
  if (node < 1 || node > rank) throw DomainError("fundamental weight index out of range");
  Weight w(rank);
  w.coords_[node - 1] = 1;
  return w;
}

bool Weight::is_dominant() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (rank() != rhs.rank()) throw DomainError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (rank() != rhs.rank()) throw DomainError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Weight operator*(std::int64_t k, Weight a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ']';
  return os.str();
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto c : w.coords()) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---- construction --------------------------------------------------------

namespace {

struct Diagram {
  std::vector<Rational> lengths;  // (alpha_i, alpha_i)
  std::vector<std::tuple<int, int, Rational>> bonds;  // 1-based nodes, (alpha_i, alpha_j)
};

void chain(Diagram& d, int from, int to, const Rational& value) {
  for (int i = from; i < to; ++i) d.bonds.emplace_back(i, i + 1, value);
}

Diagram diagram_for(char type, int rank) {
  Diagram d;
  d.lengths.assign(rank, Rational(2));
  switch (type) {
    case 'A':
      chain(d, 1, rank, -1);
      break;
    case 'B':
      chain(d, 1, rank, -1);
      d.lengths[rank - 1] = 1;
      break;
    case 'C':
      for (int i = 0; i < rank - 1; ++i) d.lengths[i] = 1;
      chain(d, 1, rank - 1, Rational(-1, 2));
      d.bonds.emplace_back(rank - 1, rank, Rational(-1));
      break;
    case 'D':
      chain(d, 1, rank - 1, -1);
      d.bonds.emplace_back(rank - 2, rank, Rational(-1));
      break;
    case 'E':
      d.bonds.emplace_back(1, 3, Rational(-1));
      d.bonds.emplace_back(2, 4, Rational(-1));
      chain(d, 3, rank, -1);
      break;
    case 'F':
      d.lengths[2] = 1;
      d.lengths[3] = 1;
      d.bonds.emplace_back(1, 2, Rational(-1));
      d.bonds.emplace_back(2, 3, Rational(-1));
      d.bonds.emplace_back(3, 4, Rational(-1, 2));
      break;
    case 'G':
      d.lengths[0] = Rational(2, 3);
      d.bonds.emplace_back(1, 2, Rational(-1));
      break;
    default:
      break;
  }
  return d;
}

void validate_type(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok) {
    throw DomainError(std::string("invalid simple type: ") + type + std::to_string(rank));
  }
}

std::int64_t lcm_of_denominators(const std::vector<Rational>& values) {
  std::int64_t l = 1;
  for (const auto& v : values) l = std::lcm(l, static_cast<std::int64_t>(denominator(v)));
  return l;
}

}  // namespace

SimpleLieAlgebra build_algebra(char type_tag, int rank) {
  type_tag = static_cast<char>(std::toupper(static_cast<unsigned char>(type_tag)));
  validate_type(type_tag, rank);

  SimpleLieAlgebra alg;
  alg.type_ = type_tag;
  alg.rank_ = rank;
  const auto n = static_cast<std::size_t>(rank);

  Diagram diagram = diagram_for(type_tag, rank);
  RationalMatrix root_form(n, n);
  for (std::size_t i = 0; i < n; ++i) root_form(i, i) = diagram.lengths[i];
  for (const auto& [i, j, v] : diagram.bonds) {
    root_form(i - 1, j - 1) = v;
    root_form(j - 1, i - 1) = v;
  }

  alg.root_form_.assign(n, std::vector<Rational>(n));
  alg.cartan_.assign(n, std::vector<std::int64_t>(n));
  alg.half_root_lengths_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    alg.half_root_lengths_[i] = root_form(i, i) / 2;
    for (std::size_t j = 0; j < n; ++j) {
      alg.root_form_[i][j] = root_form(i, j);
      alg.cartan_[i][j] = static_cast<std::int64_t>(
          to_integer(2 * root_form(i, j) / root_form(i, i), "Cartan entry"));
    }
  }

  // (varpi_i, varpi_j) = D B^{-1} D with D = diag((alpha_i, alpha_i) / 2).
  RationalMatrix diag(n, n);
  for (std::size_t i = 0; i < n; ++i) diag(i, i) = alg.half_root_lengths_[i];
  RationalMatrix weight_form = diag * inverse(root_form) * diag;
  alg.weight_form_.assign(n, std::vector<Rational>(n));
  std::vector<Rational> all_entries(alg.half_root_lengths_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      alg.weight_form_[i][j] = weight_form(i, j);
      all_entries.push_back(weight_form(i, j));
    }
  alg.scale_ = lcm_of_denominators(all_entries);
  alg.weight_form_scaled_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      alg.weight_form_scaled_[i][j] =
          static_cast<std::int64_t>(to_integer(weight_form(i, j) * alg.scale_, "scaled form"));
  alg.half_root_lengths_scaled_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    alg.half_root_lengths_scaled_[i] =
        static_cast<std::int64_t>(to_integer(alg.half_root_lengths_[i] * alg.scale_, "scaled root length"));

  // Positive roots: close the simple roots under simple reflections, keep positive ones.
  auto to_weight = [&](const std::vector<std::int64_t>& c) {
    Weight w(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) w[i] += c[k] * alg.cartan_[i][k];
    return w;
  };
  std::vector<std::vector<std::int64_t>> roots;
  std::set<std::vector<std::int64_t>> seen;
  std::deque<std::vector<std::int64_t>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    roots.push_back(beta);
    Weight as_weight = to_weight(beta);
    for (std::size_t i = 0; i < n; ++i) {
      auto image = beta;
      image[i] -= as_weight[i];
      bool positive = std::all_of(image.begin(), image.end(), [](std::int64_t c) { return c >= 0; }) &&
                      std::any_of(image.begin(), image.end(), [](std::int64_t c) { return c > 0; });
      if (positive && seen.insert(image).second) queue.push_back(image);
    }
  }
  auto height = [](const std::vector<std::int64_t>& c) { return std::accumulate(c.begin(), c.end(), std::int64_t{0}); };
  std::sort(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
    auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  alg.positive_roots_simple_ = roots;
  for (const auto& c : roots) {
    alg.positive_roots_.push_back(to_weight(c));
    Rational norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += c[i] * c[j] * root_form(i, j);
    alg.long_root_.push_back(norm == 2);
  }

  const auto& theta_simple = roots.back();
  alg.theta_ = alg.positive_roots_.back();
  alg.comarks_.resize(n);
  for (std::size_t k = 0; k < n; ++k)
    alg.comarks_[k] =
        static_cast<std::int64_t>(to_integer(theta_simple[k] * alg.half_root_lengths_[k], "comark"));
  alg.dual_coxeter_ = 1 + std::accumulate(alg.comarks_.begin(), alg.comarks_.end(), std::int64_t{0});
  alg.rho_ = Weight(std::vector<std::int64_t>(n, 1));
  return alg;
}

SimpleLieAlgebra build_algebra(std::string_view designator) {
  if (designator.size() < 2 || !std::isalpha(static_cast<unsigned char>(designator[0]))) {
    throw DomainError("malformed algebra designator: '" + std::string(designator) + "'");
  }
  int rank = 0;
  auto digits = designator.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw DomainError("malformed algebra designator: '" + std::string(designator) + "'");
  }
  return build_algebra(designator[0], rank);
}

std::string SimpleLieAlgebra::designator() const { return std::string(1, type_) + std::to_string(rank_); }

bool SimpleLieAlgebra::is_long_root(std::size_t root_index) const { return long_root_.at(root_index); }

BigInt SimpleLieAlgebra::cartan_determinant() const {
  RationalMatrix m(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m(i, j) = cartan_[i][j];
  return to_integer(determinant(m), "Cartan determinant");
}

Weight SimpleLieAlgebra::simple_root(std::size_t node) const {
  if (node < 1 || node > static_cast<std::size_t>(rank_)) throw DomainError("simple root index out of range");
  Weight w(rank_);
  for (int i = 0; i < rank_; ++i) w[i] = cartan_[i][node - 1];
  return w;
}

std::int64_t SimpleLieAlgebra::inner_scaled(const Weight& x, const Weight& y) const {
  std::int64_t total = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < rank_; ++j) row += weight_form_scaled_[i][j] * y[j];
    total += x[i] * row;
  }
  return total;
}

std::int64_t SimpleLieAlgebra::root_pairing_scaled(std::size_t root_index, const Weight& x) const {
  const auto& c = positive_roots_simple_.at(root_index);
  std::int64_t total = 0;
  for (int k = 0; k < rank_; ++k) total += c[k] * half_root_lengths_scaled_[k] * x[k];
  return total;
}

std::int64_t SimpleLieAlgebra::theta_coroot_pairing(const Weight& w) const {
  std::int64_t total = 0;
  for (int i = 0; i < rank_; ++i) total += w[i] * comarks_[i];
  return total;
}

void SimpleLieAlgebra::require_rank(const Weight& w) const {
  if (w.rank() != static_cast<std::size_t>(rank_)) {
    throw DomainError("weight " + w.to_string() + " has length " + std::to_string(w.rank()) + ", expected " +
                      std::to_string(rank_) + " for " + designator());
  }
}

// ---- weights and orbits --------------------------------------------------

Rational inner(const SimpleLieAlgebra& alg, const Weight& lambda, const Weight& mu) {
  alg.require_rank(lambda);
  alg.require_rank(mu);
  Rational total = 0;
  const auto& g = alg.weight_form();
  for (int i = 0; i < alg.rank(); ++i)
    for (int j = 0; j < alg.rank(); ++j)
      if (lambda[i] != 0 && mu[j] != 0) total += g[i][j] * lambda[i] * mu[j];
  return total;
}

Weight reflect(const SimpleLieAlgebra& alg, const Weight& mu, std::size_t node) {
  Weight out(mu);
  const std::int64_t k = mu[node - 1];
  if (k == 0) return out;
  const auto& a = alg.cartan();
  for (int i = 0; i < alg.rank(); ++i) out[i] -= k * a[i][node - 1];
  return out;
}

Weight dominant_representative(const SimpleLieAlgebra& alg, Weight mu) {
  alg.require_rank(mu);
  const auto& a = alg.cartan();
  for (;;) {
    int node = -1;
    for (int i = 0; i < alg.rank(); ++i)
      if (mu[i] < 0) {
        node = i;
        break;
      }
    if (node < 0) return mu;
    const std::int64_t k = mu[node];
    for (int i = 0; i < alg.rank(); ++i) mu[i] -= k * a[i][node];
  }
}

void for_each_in_orbit(const SimpleLieAlgebra& alg, const Weight& lambda, std::size_t cap,
                       const std::function<void(const Weight&)>& visit) {
  alg.require_rank(lambda);
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::vector<Weight> frontier{lambda};
  visit(lambda);
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      for (int i = 1; i <= alg.rank(); ++i) {
        if (mu[i - 1] == 0) continue;
        Weight image = reflect(alg, mu, i);
        if (seen.insert(image).second) {
          if (seen.size() > cap) {
            throw CapExceeded("Weyl orbit of " + lambda.to_string() + " in " + alg.designator() +
                              " exceeds the orbit cap of " + std::to_string(cap));
          }
          visit(image);
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }
}

std::vector<Weight> weyl_orbit(const SimpleLieAlgebra& alg, const Weight& lambda, std::size_t cap) {
  std::vector<Weight> orbit;
  for_each_in_orbit(alg, lambda, cap, [&](const Weight& w) { orbit.push_back(w); });
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt power_of_two(int n) { return BigInt(1) << n; }

// Order of the Weyl group of a connected Dynkin diagram given by its nodes.
BigInt component_order(const IntMatrix& cartan, const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  std::vector<int> degree(n, 0);
  int max_bond = 1;
  std::pair<int, int> multiple_bond{-1, -1};
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto bond = cartan[nodes[a]][nodes[b]] * cartan[nodes[b]][nodes[a]];
      if (bond == 0) continue;
      ++degree[a];
      ++degree[b];
      if (bond > 1) multiple_bond = {a, b};
      max_bond = std::max<int>(max_bond, static_cast<int>(bond));
    }
  if (max_bond == 3) return 12;  // G2
  if (max_bond == 2) {
    if (n == 4 && degree[multiple_bond.first] == 2 && degree[multiple_bond.second] == 2) return 1152;  // F4
    return power_of_two(n) * factorial(n);  // B_n and C_n
  }
  int branch = -1;
  for (int a = 0; a < n; ++a)
    if (degree[a] == 3) branch = a;
  if (branch < 0) return factorial(n + 1);  // A_n
  // Arm lengths away from the branch node.
  std::vector<int> arms;
  for (int start = 0; start < n; ++start) {
    if (start == branch || cartan[nodes[start]][nodes[branch]] == 0) continue;
    int length = 1, previous = branch, current = start;
    for (;;) {
      int next = -1;
      for (int c = 0; c < n; ++c)
        if (c != previous && c != current && cartan[nodes[current]][nodes[c]] != 0) next = c;
      if (next < 0) break;
      previous = current;
      current = next;
      ++length;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return power_of_two(n - 1) * factorial(n);  // D_n
  if (n == 6) return 51840;
  if (n == 7) return 2903040;
  return 696729600;
}

BigInt subdiagram_order(const IntMatrix& cartan, const std::vector<int>& subset) {
  BigInt order = 1;
  std::vector<bool> used(subset.size(), false);
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> component{subset[s]};
    used[s] = true;
    for (std::size_t head = 0; head < component.size(); ++head)
      for (std::size_t t = 0; t < subset.size(); ++t)
        if (!used[t] && cartan[component[head]][subset[t]] != 0) {
          used[t] = true;
          component.push_back(subset[t]);
        }
    order *= component_order(cartan, component);
  }
  return order;
}

}  // namespace

BigInt weyl_group_order(const SimpleLieAlgebra& alg) {
  std::vector<int> all(alg.rank());
  std::iota(all.begin(), all.end(), 0);
  return subdiagram_order(alg.cartan(), all);
}

BigInt orbit_size(const SimpleLieAlgebra& alg, const Weight& dominant) {
  alg.require_rank(dominant);
  if (!dominant.is_dominant()) throw DomainError("orbit_size expects a dominant weight, got " + dominant.to_string());
  std::vector<int> stabiliser;
  for (int i = 0; i < alg.rank(); ++i)
    if (dominant[i] == 0) stabiliser.push_back(i);
  return weyl_group_order(alg) / subdiagram_order(alg.cartan(), stabiliser);
}

std::vector<Weight> alcove(const SimpleLieAlgebra& alg, std::int64_t level) {
  if (level < 0) throw DomainError("level must be non-negative");
  std::vector<Weight> out;
  Weight current(alg.rank());
  const auto& comarks = alg.comarks();
  std::function<void(int, std::int64_t)> fill = [&](int index, std::int64_t budget) {
    if (index == alg.rank()) {
      out.push_back(current);
      return;
    }
    for (std::int64_t c = 0; c * comarks[index] <= budget; ++c) {
      current[index] = c;
      fill(index + 1, budget - c * comarks[index]);
    }
    current[index] = 0;
  };
  fill(0, level);
  return out;
}

Weight parse_weight(std::string_view text) {
  std::vector<std::int64_t> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw DomainError("malformed weight coordinates: '" + std::string(text) + "'");
    }
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Weight(std::move(coords));
}

}  // namespace liepf
