#pragma once

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "qtchar/cartan.hpp"

namespace qtchar::oracle {

using Vec = std::vector<int>;

inline int pair_roots(const std::vector<std::vector<int>>& c, const Vec& a, const Vec& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) s += a[i] * c[i][j] * b[j];
  return s;
}

/// Positive roots as the positive part of the orbit of the simple roots under
/// simple reflections.
inline std::vector<Vec> reflection_positive_roots(const DynkinDiagram& d) {
  const auto c = cartan_matrix(d);
  const size_t n = c.size();
  std::set<Vec> seen;
  std::vector<Vec> todo;
  for (size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    Vec b = todo.back();
    todo.pop_back();
    for (size_t i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      Vec r = b;
      r[i] -= pair_roots(c, b, e);
      bool pos = true, nonzero = false;
      for (int x : r) {
        pos = pos && x >= 0;
        nonzero = nonzero || x != 0;
      }
      if (pos && nonzero && seen.insert(r).second) todo.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

/// Weyl dimension formula, weights in fundamental coordinates.
inline std::int64_t weyl_dimension(const DynkinDiagram& d, const Vec& lambda) {
  long double num = 1, den = 1;
  for (const auto& a : reflection_positive_roots(d)) {
    std::int64_t x = 0, h = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      x += a[i] * (lambda[i] + 1);
      h += a[i];
    }
    num *= x;
    den *= h;
  }
  return std::llround(num / den);
}

/// Freudenthal multiplicity formula. Weights are written lambda - beta with
/// beta in simple-root coordinates; the ADE form makes every quantity integral.
class Freudenthal {
 public:
  Freudenthal(const DynkinDiagram& d, Vec lambda)
      : c_(cartan_matrix(d)), lambda_(std::move(lambda)), roots_(reflection_positive_roots(d)) {}

  std::int64_t at_beta(const Vec& beta) {
    for (int x : beta)
      if (x < 0) return 0;
    if (std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; })) return 1;
    if (auto it = memo_.find(beta); it != memo_.end()) return it->second;
    std::int64_t denom = -pair_roots(c_, beta, beta);
    for (size_t i = 0; i < beta.size(); ++i) denom += 2 * beta[i] * (lambda_[i] + 1);
    std::int64_t result = 0;
    if (denom > 0) {
      std::int64_t sum = 0;
      for (const auto& a : roots_) {
        std::int64_t lam_a = 0;
        for (size_t i = 0; i < a.size(); ++i) lam_a += a[i] * lambda_[i];
        Vec b = beta;
        for (int j = 1;; ++j) {
          bool neg = false;
          for (size_t i = 0; i < b.size(); ++i) {
            b[i] -= a[i];
            neg = neg || b[i] < 0;
          }
          if (neg) break;
          // (mu + j a, a) with mu + j a = lambda - b
          sum += at_beta(b) * (lam_a - pair_roots(c_, b, a));
        }
      }
      if ((2 * sum) % denom != 0) throw std::logic_error("Freudenthal: non-integral multiplicity");
      result = 2 * sum / denom;
    }
    memo_.emplace(beta, result);
    return result;
  }

  /// Multiplicity of the weight mu (fundamental coordinates); 0 unless
  /// lambda - mu is a nonnegative integral combination of simple roots.
  std::int64_t at_weight(const Vec& mu) {
    auto beta = root_coordinates(mu);
    return beta ? at_beta(*beta) : 0;
  }

  std::optional<Vec> root_coordinates(const Vec& mu) const {
    const size_t n = c_.size();
    std::vector<std::vector<long double>> a(n, std::vector<long double>(n + 1));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) a[i][j] = c_[i][j];
      a[i][n] = lambda_[i] - mu[i];
    }
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      for (size_t r = col; r < n; ++r)
        if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
      std::swap(a[col], a[piv]);
      for (size_t r = 0; r < n; ++r) {
        if (r == col) continue;
        const long double f = a[r][col] / a[col][col];
        for (size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
      }
    }
    Vec beta(n);
    for (size_t i = 0; i < n; ++i) beta[i] = static_cast<int>(std::llround(a[i][n] / a[i][i]));
    for (size_t i = 0; i < n; ++i) {
      int s = 0;
      for (size_t j = 0; j < n; ++j) s += c_[i][j] * beta[j];
      if (s != lambda_[i] - mu[i]) return std::nullopt;
    }
    for (int x : beta)
      if (x < 0) return std::nullopt;
    return beta;
  }

  /// All dominant weights with nonzero multiplicity.
  std::map<Vec, std::int64_t> dominant_multiplicities() {
    std::map<Vec, std::int64_t> out;
    std::vector<Vec> todo{Vec(c_.size(), 0)};
    std::set<Vec> seen{todo.front()};
    while (!todo.empty()) {
      Vec beta = todo.back();
      todo.pop_back();
      Vec mu = lambda_;
      bool dominant = true;
      for (size_t i = 0; i < mu.size(); ++i) {
        for (size_t j = 0; j < mu.size(); ++j) mu[i] -= c_[i][j] * beta[j];
        dominant = dominant && mu[i] >= 0;
      }
      const auto m = at_beta(beta);
      if (m == 0) continue;
      if (dominant) out[mu] = m;
      for (size_t i = 0; i < beta.size(); ++i) {
        Vec next = beta;
        ++next[i];
        if (seen.insert(next).second) todo.push_back(next);
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<int>> c_;
  Vec lambda_;
  std::vector<Vec> roots_;
  std::map<Vec, std::int64_t> memo_;
};

}  // namespace qtchar::oracle
