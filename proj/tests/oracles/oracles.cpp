#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace oracle {

std::uint64_t enumerate_chains(int n, int m, int i) {
  if (n == 2) return i == m ? 1 : 0;
  const int length = n - 3;
  std::uint64_t count = 0;
  std::function<void(int, int)> walk = [&](int depth, int upper) {
    if (depth == length) {
      if (upper >= i) ++count;
      return;
    }
    for (int next = i; next <= upper; ++next) walk(depth + 1, next);
  };
  if (m >= i) walk(0, m);
  return count;
}

namespace {

void exponent_vectors(int n, int degree, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == n - 1) {
    current.push_back(degree);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    current.push_back(e);
    exponent_vectors(n, degree - e, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> monomials(int n, int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 0) return out;
  std::vector<int> current;
  exponent_vectors(n, degree, current, out);
  return out;
}

constexpr std::uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t monomial_count(int n, int degree) { return monomials(n, degree).size(); }

std::uint64_t harmonic_dim_by_counting(int n, int m) {
  return monomial_count(n, m) - monomial_count(n, m - 2);
}

std::uint64_t laplacian_rank_mod_p(int n, int m) {
  const auto source = monomials(n, m);
  const auto target = monomials(n, m - 2);
  if (target.empty()) return 0;
  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = r;

  // Columns are images of source monomials.
  std::vector<std::vector<std::uint64_t>> mat(target.size(), std::vector<std::uint64_t>(source.size(), 0));
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (int v = 0; v < n; ++v) {
      const int e = source[c][v];
      if (e < 2) continue;
      auto img = source[c];
      img[v] -= 2;
      mat[row_of.at(img)][c] = (mat[row_of.at(img)][c] + static_cast<std::uint64_t>(e) * (e - 1)) % kPrime;
    }
  }

  std::uint64_t rank = 0;
  const std::size_t rows = mat.size(), cols = source.size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && mat[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(mat[pivot], mat[rank]);
    const std::uint64_t inv = powmod(mat[rank][c], kPrime - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || mat[r][c] == 0) continue;
      const std::uint64_t f = mulmod(mat[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) {
        mat[r][k] = (mat[r][k] + kPrime - mulmod(f, mat[rank][k])) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

Dense dense_mul(const Dense& a, const Dense& b) {
  const std::size_t len = std::max(a.size(), b.size());
  auto at = [](const Dense& x, std::size_t i) { return i < x.size() ? x[i] : 0LL; };
  Dense c(len, 0);
  if (len == 0) return c;
  c[0] = at(a, 0) * at(b, 0);
  for (std::size_t i = 1; i < len; ++i) c[i] = at(a, i) * at(b, 0) + at(a, 0) * at(b, i);
  return c;
}

Dense dense_add(const Dense& a, const Dense& b) {
  Dense c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

Dense dense_pow_closed_form(const Dense& a, unsigned p) {
  Dense c(std::max<std::size_t>(a.size(), 1), 0);
  const long long a0 = a.empty() ? 0 : a[0];
  auto ipow = [](long long base, unsigned e) {
    long long r = 1;
    for (unsigned k = 0; k < e; ++k) r *= base;
    return r;
  };
  c[0] = ipow(a0, p);
  if (p == 0) return c;
  for (std::size_t i = 1; i < a.size(); ++i) c[i] = static_cast<long long>(p) * ipow(a0, p - 1) * a[i];
  return c;
}

bool dense_is_zero(const Dense& a) {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

Dense degree_by_factors(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& weights) {
  // deg(-Id) on R[1,0] is (-1); on R[1,m] it is (1, 0, ..., -1 at m).
  Dense result{1};
  for (const auto& [m, k] : weights) {
    Dense factor(m + 1, 0);
    if (m == 0) {
      factor[0] = -1;
    } else {
      factor[0] = 1;
      factor[m] = -1;
    }
    for (std::uint64_t c = 0; c < k; ++c) result = dense_mul(result, factor);
  }
  return result;
}

namespace {

// Eigenvalues of the symmetric tridiagonal matrix (diag, off) below x, by the
// Sturm sequence of the LDL^T factorisation.
int count_below(const std::vector<double>& diag, const std::vector<double>& off, double x) {
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double o2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
    d = diag[i] - x - (i == 0 ? 0.0 : o2 / d);
    if (d == 0.0) d = -1e-300;
    if (d < 0) ++count;
  }
  return count;
}

std::vector<double> fd_once(int n, int m, double gamma, double lambda_max, int cells) {
  const double h = gamma / cells;
  const double beta = static_cast<double>(m) * (m + n - 2);
  std::vector<double> diag(cells), off(cells > 0 ? cells - 1 : 0), weight(cells);
  auto flux = [&](double t) { return std::pow(std::sin(t), n - 1); };
  for (int i = 0; i < cells; ++i) {
    const double t = (i + 0.5) * h;
    const double s = std::sin(t);
    weight[i] = std::pow(s, n - 1);
    const double left = flux(i * h);
    const double right = (i == cells - 1) ? 2.0 * flux(gamma) : flux((i + 1) * h);
    diag[i] = (left + right) / (h * h) + beta * std::pow(s, n - 3);
    if (i + 1 < cells) off[i] = -flux((i + 1) * h) / (h * h);
  }
  for (int i = 0; i < cells; ++i) diag[i] /= weight[i];
  for (int i = 0; i + 1 < cells; ++i) off[i] /= std::sqrt(weight[i] * weight[i + 1]);

  const int total = count_below(diag, off, lambda_max * 1.05);
  std::vector<double> out;
  double lo = 0.0;
  for (int k = 0; k < total; ++k) {
    double a = lo, b = lambda_max * 1.05;
    for (int it = 0; it < 200 && b - a > 1e-12 * b; ++it) {
      const double mid = 0.5 * (a + b);
      if (count_below(diag, off, mid) > k) b = mid; else a = mid;
    }
    out.push_back(0.5 * (a + b));
    lo = out.back() * (1 - 1e-12);
  }
  return out;
}

}  // namespace

std::vector<double> fd_mode_eigenvalues(int n, int m, double gamma, double lambda_max, int cells) {
  if (n < 2 || m < 0 || !(gamma > 0.0)) throw std::invalid_argument("bad radial problem");
  const std::vector<double> coarse = fd_once(n, m, gamma, lambda_max, cells);
  const std::vector<double> fine = fd_once(n, m, gamma, lambda_max, 2 * cells);
  std::vector<double> out;
  for (std::size_t k = 0; k < std::min(coarse.size(), fine.size()); ++k) {
    const double extrapolated = (4.0 * fine[k] - coarse[k]) / 3.0;
    if (extrapolated <= lambda_max) out.push_back(extrapolated);
  }
  return out;
}

}  // namespace oracle
