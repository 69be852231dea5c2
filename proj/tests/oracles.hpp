#pragma once

// Independent reference implementations used only by the tests. They follow
// the definitions directly and share no code paths with the library beyond
// the value types.

#include <bsbott/core.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using bsbott::Assembly;
using bsbott::Block;
using bsbott::Integer;
using bsbott::OrderedPartition;

using Rows = std::vector<std::vector<long long>>;

/// Entry rule of a word's Bott matrix, straight from the definition.
inline Rows beta(const std::vector<int>& w) {
  const std::size_t m = w.size();
  Rows b(m, std::vector<long long>(m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    b[j][j] = -1;
    for (std::size_t k = 0; k < j; ++k) {
      const int d = std::abs(w[j] - w[k]);
      b[j][k] = d == 0 ? -2 : (d == 1 ? 1 : 0);
    }
  }
  return b;
}

inline Rows rows_of(const bsbott::IntegerMatrix& a) {
  Rows out(static_cast<std::size_t>(a.rows()), std::vector<long long>(static_cast<std::size_t>(a.cols())));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j).convert_to<long long>();
    }
  }
  return out;
}

/// Determinant by Laplace expansion along rows, memoized over column subsets.
inline long long det_laplace(const Rows& a) {
  const std::size_t n = a.size();
  std::vector<long long> dp(std::size_t{1} << n, 0);
  dp[0] = 1;
  for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == 0) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcount(mask));
    if (row == n) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1U << c)) continue;
      // Sign of placing column c after the already chosen columns.
      const int above = __builtin_popcount(mask >> c);
      const long long term = dp[mask] * a[row][c];
      dp[mask | (1U << c)] += (above % 2 == 0) ? term : -term;
    }
  }
  return dp.back();
}

/// Sum over permutations; only for very small matrices.
inline Integer det_leibniz(const bsbott::IntegerMatrix& a) {
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Integer total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    Integer term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p[i]));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline std::vector<OrderedPartition> sort_by_min(std::vector<OrderedPartition> parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) { return x.min() < y.min(); });
  return parts;
}

/// Reads "(1 2|3),(3)" style listings with 1-based elements in any partition
/// order; partitions are sorted by minimum.
inline Assembly listing(const std::string& text, int m, int n) {
  std::vector<OrderedPartition> parts;
  std::vector<Block> blocks;
  Block block;
  std::string number;
  bool innermost = false;
  auto flush_number = [&] {
    if (!number.empty()) block.push_back(std::stoi(number) - 1);
    number.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      number += c;
      continue;
    }
    flush_number();
    if (c == '(') {
      innermost = true;
      blocks.clear();
      block.clear();
    } else if (c == '|') {
      blocks.push_back(block);
      block.clear();
    } else if (c == ')' && innermost) {
      blocks.push_back(block);
      block.clear();
      parts.emplace_back(blocks);
      blocks.clear();
      innermost = false;
    }
  }
  return Assembly(sort_by_min(std::move(parts)), m, n);
}

/// The assembly of a word by the definition: runs of consecutive values.
inline Assembly alpha(const std::vector<int>& w, int n) {
  std::set<int> values(w.begin(), w.end());
  std::vector<OrderedPartition> parts;
  std::vector<Block> run;
  int previous = -10;
  for (int v : values) {
    if (v != previous + 1 && !run.empty()) {
      parts.emplace_back(run);
      run.clear();
    }
    Block positions;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == v) positions.push_back(static_cast<int>(i));
    }
    run.push_back(positions);
    previous = v;
  }
  parts.emplace_back(run);
  return Assembly(sort_by_min(std::move(parts)), static_cast<int>(w.size()), n);
}

inline bool neighbors(const Assembly& a, int j, int k) {
  for (const auto& p : a.partitions()) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      const bool has_j = std::count(p[b].begin(), p[b].end(), j) > 0;
      if (!has_j) continue;
      for (std::size_t c = (b == 0 ? 0 : b - 1); c <= std::min(b + 1, p.size() - 1); ++c) {
        if (std::count(p[c].begin(), p[c].end(), k) > 0) return true;
      }
    }
  }
  return false;
}

/// All assemblies obtained by reversing any subset of the partitions.
inline std::set<Assembly> reversal_variants(const Assembly& a) {
  std::set<Assembly> out;
  const std::size_t l = a.size();
  for (std::uint32_t mask = 0; mask < (1U << l); ++mask) {
    std::vector<OrderedPartition> rebuilt;
    for (std::size_t i = 0; i < l; ++i) {
      std::vector<Block> blocks = a[i].blocks();
      if (mask & (1U << i)) std::reverse(blocks.begin(), blocks.end());
      rebuilt.emplace_back(std::move(blocks));
    }
    out.insert(Assembly(rebuilt, a.ground_size(), a.bound()));
  }
  return out;
}

inline Assembly swap_values(const Assembly& a, int j) {
  std::vector<OrderedPartition> parts;
  for (const auto& p : a.partitions()) {
    std::vector<Block> blocks = p.blocks();
    for (auto& b : blocks) {
      for (auto& x : b) x = x == j ? j + 1 : (x == j + 1 ? j : x);
    }
    parts.emplace_back(blocks);
  }
  return Assembly(sort_by_min(std::move(parts)), a.ground_size(), a.bound());
}

/// The relation with reversals only at the endpoints: reverse some
/// partitions, apply a chain of admissible transpositions, reverse again.
inline std::set<Assembly> endpoint_class(const Assembly& a) {
  std::set<Assembly> chained;
  std::vector<Assembly> stack;
  for (const auto& v : reversal_variants(a)) {
    if (chained.insert(v).second) stack.push_back(v);
  }
  while (!stack.empty()) {
    const Assembly cur = stack.back();
    stack.pop_back();
    for (int j = 0; j + 1 < cur.ground_size(); ++j) {
      if (oracle::neighbors(cur, j, j + 1)) continue;
      Assembly next = swap_values(cur, j);
      if (chained.insert(next).second) stack.push_back(next);
    }
  }
  std::set<Assembly> out;
  for (const auto& c : chained) {
    for (const auto& v : reversal_variants(c)) out.insert(v);
  }
  return out;
}

inline Integer factorial(int n) {
  Integer r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Ordered partitions of [m] into k blocks: sum of multinomials over compositions.
inline Integer f_compositions(int m, int k) {
  if (k <= 0 || k > m) return m == 0 && k == 0 ? Integer(1) : Integer(0);
  Integer total(0);
  std::function<void(int, int, Integer)> rec = [&](int left, int parts, Integer denom) {
    if (parts == 0) {
      if (left == 0) total += factorial(m) / denom;
      return;
    }
    for (int i = 1; i <= left - (parts - 1); ++i) rec(left - i, parts - 1, denom * factorial(i));
  };
  rec(m, k, Integer(1));
  return total;
}

inline Integer f_tilde(int m, int k) {
  const Integer f = f_compositions(m, k);
  return k >= 2 ? Integer(f / 2) : f;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

/// Number of ~-classes of AOP(n,m) by the exponential formula.
inline Integer b_count(int n, int m) {
  // h[s][w]: labelled sets of s points split into groups, each group an
  // ordered partition up to reversal, with sum of (r+1) equal to w.
  std::vector<std::vector<Integer>> h(m + 1, std::vector<Integer>(n + 2, Integer(0)));
  h[0][0] = 1;
  for (int s = 1; s <= m; ++s) {
    for (int w = 0; w <= n + 1; ++w) {
      for (int a = 1; a <= s; ++a) {
        for (int r = 1; r <= a && r + 1 <= w; ++r) {
          h[s][w] += binomial(s - 1, a - 1) * f_tilde(a, r) * h[s - a][w - r - 1];
        }
      }
    }
  }
  Integer total(0);
  for (int w = 0; w <= n + 1; ++w) total += h[m][w];
  return total;
}

/// One-line notation of s_{i_1} ... s_{i_m} as a composition of functions
/// on {1, ..., n+1}, rightmost factor applied first.
inline std::vector<int> permutation(const std::vector<int>& w, int n) {
  std::vector<int> out;
  for (int x = 1; x <= n + 1; ++x) {
    int y = x;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      if (y == *it) y = *it + 1;
      else if (y == *it + 1) y = *it;
    }
    out.push_back(y);
  }
  return out;
}

/// Every word of [n]^m in lexicographic order.
inline std::vector<std::vector<int>> words(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(m), 1);
  while (true) {
    out.push_back(w);
    int pos = m - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) w[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++w[static_cast<std::size_t>(pos)];
  }
  return out;
}

}  // namespace oracle
