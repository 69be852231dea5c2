#pragma once

#include <bsbott/core.hpp>
#include <bsbott/report.hpp>
#include <bsbott/series.hpp>

#include <vector>

namespace bsbott {

/// Every assembly of AOP(n,m) once, sorted by canonical encoding.
std::vector<Assembly> enumerate_assemblies(int n, int m);

/// |AOP(n,m)| by the labelled-set recurrence on the block holding the minimum.
Integer assembly_count(int n, int m);

/// Every word of [n]^m in lexicographic order.
std::vector<Word> enumerate_words(int n, int m);

enum class CountStrategy { Auto, Words, Assemblies };

/// Word dedupe is picked by Auto while n^m <= 10^7.
constexpr double kWordStrategyLimit = 1e7;

/// b(n,m), the number of distinct BS-type Bott matrices of words in [n]^m.
Integer count_b(int n, int m, CountStrategy strategy = CountStrategy::Auto, int threads = 1);

/// B(n,m) by word dedupe, sorted by canonical encoding.
std::vector<BottMatrix> bs_matrices(int n, int m, int threads = 1);

/// Reversal classes of assemblies with weight exactly n.
Integer count_b_prime(int n, int m);

/// Ordered partitions of [m] into k blocks.
Integer ordered_partition_count(int m, int k);

/// Ordered partitions of [m] into k blocks up to reversal.
Integer ordered_partition_classes(int m, int k);

/// m! [x^m y^n] of the closed-form generating function, 1 <= m <= max_m,
/// 1 <= n <= max_n.
class GfTable {
 public:
  GfTable(int max_m, int max_n, std::vector<std::vector<Integer>> values)
      : max_m_(max_m), max_n_(max_n), values_(std::move(values)) {}

  int max_m() const noexcept { return max_m_; }
  int max_n() const noexcept { return max_n_; }
  const Integer& at(int n, int m) const;

 private:
  int max_m_;
  int max_n_;
  std::vector<std::vector<Integer>> values_;  // [m-1][n-1]
};

/// The generating function as a truncated series in x (<= max_m) and y (<= max_n).
Series2 generating_function(int max_m, int max_n);

GfTable gf_coefficients(int max_m, int max_n);

/// b(n,m) and B(n,m) agree with n = 2m-1 for n = 2m-1, ..., 2m+2.
Report stabilization_check(int m);

}  // namespace bsbott
