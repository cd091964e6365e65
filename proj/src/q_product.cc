// Copyright 2026 The gbm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbm/q_product.h"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gbm {

QMatrix::QMatrix(std::vector<std::vector<Rational>> q) : q_(std::move(q)) {
  if (q_.empty()) throw std::invalid_argument("Q must be nonempty");
  for (size_t i = 0; i < q_.size(); ++i) {
    if (q_[i].size() != q_.size()) throw std::invalid_argument("Q not square");
    for (size_t j = 0; j < q_.size(); ++j) {
      if (q_[i][j] != q_[j][i]) throw std::invalid_argument("Q not symmetric");
      if (q_[i][j] < -1 || q_[i][j] > 1) {
        throw std::invalid_argument("Q entries must lie in [-1, 1]");
      }
    }
  }
}

QMatrix QMatrix::Constant(int k, const Rational& q) {
  return QMatrix(std::vector<std::vector<Rational>>(k, std::vector<Rational>(k, q)));
}

Rational QProductEval(const std::vector<UncoloredT>& ts, const QMatrix& q,
                      const ColoredPairPartition& p) {
  if (static_cast<int>(ts.size()) != p.num_colors || q.size() != p.num_colors) {
    throw std::invalid_argument("need one t-function and Q row per color");
  }
  Rational value = 1;
  for (const auto& [p1, p2] : Crossings(p.base)) {
    value *= q(p.ColorOfPoint(p1.first), p.ColorOfPoint(p2.first));
    if (value == 0) return 0;
  }
  for (int b = 0; b < p.num_colors; ++b) {
    value *= ts[b](ColorClass(p, b));
    if (value == 0) return 0;
  }
  return value;
}

namespace {

long CountColorings(int n, int m) {
  long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= n;
    if (total > kMaxColoringSum) {
      throw CapacityError("coloring sum exceeds budget");
    }
  }
  return total;
}

// Crossings as index pairs into v.pairs().
std::vector<std::pair<int, int>> CrossingIndices(const PairPartition& v) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [a, b] : Crossings(v)) {
    out.emplace_back(v.PairIndexOf(a.first), v.PairIndexOf(b.first));
  }
  return out;
}

// Restricted-growth string of a coloring.
std::vector<int> Kernel(const std::vector<int>& colors) {
  std::map<int, int> relabel;
  std::vector<int> out(colors.size());
  for (size_t i = 0; i < colors.size(); ++i) {
    auto it = relabel.emplace(colors[i], static_cast<int>(relabel.size())).first;
    out[i] = it->second;
  }
  return out;
}

}  // namespace

Rational TQStarN(const UncoloredT& t, const QMatrix& q_base, int n,
                 const PairPartition& v) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const int m = v.m();
  const long total = CountColorings(n, m);
  const auto cross = CrossingIndices(v);
  std::map<std::vector<int>, Rational> t_cache;
  auto t_product = [&](const std::vector<int>& colors) -> const Rational& {
    std::vector<int> kernel = Kernel(colors);
    auto it = t_cache.find(kernel);
    if (it != t_cache.end()) return it->second;
    const int classes = *std::max_element(kernel.begin(), kernel.end()) + 1;
    ColoredPairPartition p(v, kernel, classes);
    Rational prod = 1;
    for (int b = 0; b < classes && prod != 0; ++b) prod *= t(ColorClass(p, b));
    return t_cache.emplace(std::move(kernel), prod).first->second;
  };
  Rational sum = 0;
  std::vector<int> colors(m, 0);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = m - 1; i >= 0; --i) {
      colors[i] = static_cast<int>(c % n);
      c /= n;
    }
    const Rational tp = m == 0 ? Rational(1) : t_product(colors);
    if (tp == 0) continue;
    Rational w = tp;
    for (const auto& [i, j] : cross) {
      w *= q_base.Periodic(colors[i], colors[j]);
      if (w == 0) break;
    }
    sum += w;
  }
  return sum / Pow(Rational(n), m);
}

Rational TQLimit(const QMatrix& q_base, const PairPartition& v) {
  const int n = q_base.size();
  const int m = v.m();
  const long total = CountColorings(n, m);
  const auto cross = CrossingIndices(v);
  Rational sum = 0;
  std::vector<int> colors(m, 0);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = m - 1; i >= 0; --i) {
      colors[i] = static_cast<int>(c % n);
      c /= n;
    }
    Rational w = 1;
    for (const auto& [i, j] : cross) w *= q_base(colors[i], colors[j]);
    sum += w;
  }
  return sum / Pow(Rational(n), m);
}

std::vector<CltPoint> CltErrorCurve(const UncoloredT& t, const QMatrix& q_base,
                                    const PairPartition& v,
                                    const std::vector<int>& n_list) {
  const Rational limit = TQLimit(q_base, v);
  std::vector<CltPoint> out;
  for (int n : n_list) {
    const Rational value = TQStarN(t, q_base, n, v);
    out.push_back({n, value, abs(value - limit)});
  }
  return out;
}

PsdResult GramPsdCheck(const std::vector<BrokenPairPartition>& family,
                       const TFunction& t) {
  const auto g = GramMatrix(family, t);
  const int n = static_cast<int>(g.size());
  Eigen::MatrixXd m(n, n);
  bool symmetric = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = g[i][j].get_d();
      symmetric &= g[i][j] == g[j][i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, Eigen::EigenvaluesOnly);
  const double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig, symmetric, symmetric && min_eig >= kPsdTolerance};
}

StirlingResult StirlingCheck(int n) {
  if (n >= 0) throw std::invalid_argument("N must be negative");
  const int size = -n + 1;
  if (size > 8) throw CapacityError("Stirling check limited to |N| <= 7");
  StirlingResult res;
  const Rational x(n);
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  res.by_enumeration = 0;
  do {
    long cycles = 0;
    for (const auto& [len, count] : CycleType(perm)) cycles += count;
    res.by_enumeration += Pow(x, cycles);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Unsigned Stirling numbers: s(k+1, j) = k s(k, j) + s(k, j-1).
  std::vector<std::vector<mpz_class>> s(size + 1,
                                        std::vector<mpz_class>(size + 1, 0));
  s[0][0] = 1;
  for (int k = 0; k < size; ++k) {
    for (int j = 1; j <= k + 1; ++j) s[k + 1][j] = k * s[k][j] + s[k][j - 1];
  }
  res.by_stirling_numbers = 0;
  for (int j = 0; j <= size; ++j) {
    res.by_stirling_numbers += Rational(s[size][j]) * Pow(x, j);
  }
  res.rising_factorial = 1;
  for (int k = 0; k < size; ++k) res.rising_factorial *= x + k;
  res.pass = res.by_enumeration == 0 &&
             res.by_enumeration == res.by_stirling_numbers &&
             res.by_stirling_numbers == res.rising_factorial;
  return res;
}

}  // namespace gbm
