#include "eqbif/so2_rep.hpp"

#include <algorithm>
#include <sstream>

#include "eqbif/combinatorics.hpp"
#include "eqbif/error.hpp"

namespace eqbif {

namespace {

void require_dimension(int n) {
  if (n < 2) {
    throw Error(ErrorCode::invalid_argument,
                "harmonic spaces need n >= 2, got n = " + std::to_string(n));
  }
}

void require_degree(int m) {
  if (m < 0) {
    throw Error(ErrorCode::invalid_argument, "degree m must be >= 0, got " + std::to_string(m));
  }
}

}  // namespace

SO2Rep SO2Rep::copies(std::uint64_t k, Weight m) {
  SO2Rep rep;
  if (k != 0) rep.weights_.emplace_back(m, k);
  return rep;
}

SO2Rep SO2Rep::from_weights(std::vector<Entry> weights) {
  std::sort(weights.begin(), weights.end());
  SO2Rep rep;
  for (const auto& [m, k] : weights) {
    if (k == 0) continue;
    if (!rep.weights_.empty() && rep.weights_.back().first == m) {
      rep.weights_.back().second += k;
    } else {
      rep.weights_.emplace_back(m, k);
    }
  }
  return rep;
}

std::uint64_t SO2Rep::multiplicity(Weight m) const {
  auto it = std::lower_bound(weights_.begin(), weights_.end(), m,
                             [](const Entry& e, Weight w) { return e.first < w; });
  return (it != weights_.end() && it->first == m) ? it->second : 0;
}

std::uint64_t SO2Rep::dimension() const {
  std::uint64_t dim = 0;
  for (const auto& [m, k] : weights_) dim += (m == 0) ? k : 2 * k;
  return dim;
}

std::optional<SO2Rep::Weight> SO2Rep::top_weight() const {
  if (weights_.empty()) return std::nullopt;
  return weights_.back().first;
}

SO2Rep& SO2Rep::operator+=(const SO2Rep& rhs) {
  std::vector<Entry> merged;
  merged.reserve(weights_.size() + rhs.weights_.size());
  auto a = weights_.begin();
  auto b = rhs.weights_.begin();
  while (a != weights_.end() || b != rhs.weights_.end()) {
    if (b == rhs.weights_.end() || (a != weights_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == weights_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  weights_ = std::move(merged);
  return *this;
}

SO2Rep SO2Rep::scaled(std::uint64_t k) const {
  if (k == 0) return {};
  SO2Rep rep = *this;
  for (auto& e : rep.weights_) e.second *= k;
  return rep;
}

std::string SO2Rep::to_string() const {
  if (weights_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, k] : weights_) {
    if (!first) os << " + ";
    os << "R[" << k << ',' << m << ']';
    first = false;
  }
  return os.str();
}

std::uint64_t harmonic_dim(int n, int m) {
  require_dimension(n);
  require_degree(m);
  if (n == 2) return m == 0 ? 1 : 2;
  const auto un = static_cast<std::uint64_t>(n);
  const auto um = static_cast<std::uint64_t>(m);
  // (2m + n - 2) (n - 3 + m)! / (m! (n - 2)!)
  BigInt value = BigInt(2 * um + un - 2) * factorial(un - 3 + um);
  value /= factorial(um) * factorial(un - 2);
  return to_u64(value);
}

std::uint64_t weight_multiplicity(int n, int m, std::uint64_t i) {
  require_dimension(n);
  require_degree(m);
  const auto um = static_cast<std::uint64_t>(m);
  if (i > um) return 0;
  if (n == 2) return i == um ? 1 : 0;
  // Chains m >= m_1 >= ... >= m_{n-3} >= i: n - 3 free entries in [i, m].
  const auto free_entries = static_cast<std::uint64_t>(n - 3);
  return to_u64(binomial(um - i + free_entries, free_entries));
}

SO2Rep so2_decompose(int n, int m) {
  require_dimension(n);
  require_degree(m);
  std::vector<SO2Rep::Entry> weights;
  for (std::uint64_t i = 0; i <= static_cast<std::uint64_t>(m); ++i) {
    const std::uint64_t k = weight_multiplicity(n, m, i);
    if (k != 0) weights.emplace_back(i, k);
  }
  return SO2Rep::from_weights(std::move(weights));
}

SO2Rep direct_sum(std::span<const SO2Rep> reps, std::span<const std::uint64_t> multiplicities) {
  if (reps.size() != multiplicities.size()) {
    throw Error(ErrorCode::length_mismatch,
                "direct_sum: " + std::to_string(reps.size()) + " representations but " +
                    std::to_string(multiplicities.size()) + " multiplicities");
  }
  SO2Rep total;
  for (std::size_t j = 0; j < reps.size(); ++j) total += reps[j].scaled(multiplicities[j]);
  return total;
}

}  // namespace eqbif
