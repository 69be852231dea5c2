#include <bsbott/count.hpp>
#include <bsbott/equiv.hpp>
#include <bsbott/maps.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace bsbott {

namespace {

void require_positive(int n, int m) {
  if (n < 1 || m < 1) throw Error(ErrorCode::LetterOutOfRange, "n and m must be positive");
}

/// Calls `visit` with every set partition of `elements`, blocks ordered by
/// their first element (restricted growth strings).
void for_each_set_partition(const std::vector<int>& elements,
                            const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == elements.size()) {
      visit(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(elements[i]);
      rec(i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({elements[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

std::vector<OrderedPartition> ordered_partitions_of(const std::vector<int>& elements) {
  std::vector<OrderedPartition> out;
  for_each_set_partition(elements, [&](const std::vector<std::vector<int>>& blocks) {
    std::vector<std::size_t> order(blocks.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<Block> arranged;
      for (auto b : order) arranged.push_back(blocks[b]);
      out.emplace_back(std::move(arranged));
    } while (std::next_permutation(order.begin(), order.end()));
  });
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r(1);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Integer factorial(int n) {
  Integer r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer distinct_reversal_classes(const std::vector<Assembly>& assemblies) {
  std::unordered_set<std::string> classes;
  for (const auto& a : assemblies) classes.insert(canonical_encode(canonical_sim(a)));
  return Integer(classes.size());
}

std::unordered_set<std::string> bs_matrix_keys(int n, int m, int threads) {
  require_positive(n, m);
  threads = std::clamp(threads, 1, n);
  std::vector<std::unordered_set<std::string>> partial(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    auto& keys = partial[static_cast<std::size_t>(t)];
    std::vector<int> letters(static_cast<std::size_t>(m), 1);
    // Thread t owns the words whose first letter is congruent to t+1 mod threads.
    for (int first = t + 1; first <= n; first += threads) {
      std::fill(letters.begin(), letters.end(), 1);
      letters[0] = first;
      while (true) {
        keys.insert(canonical_encode(bott_matrix(Word(letters, n))));
        std::size_t pos = letters.size();
        while (pos > 1 && letters[pos - 1] == n) letters[--pos] = 1;
        if (pos <= 1) break;
        ++letters[pos - 1];
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  auto merged = std::move(partial[0]);
  for (std::size_t t = 1; t < partial.size(); ++t) merged.insert(partial[t].begin(), partial[t].end());
  return merged;
}

}  // namespace

std::vector<Assembly> enumerate_assemblies(int n, int m) {
  require_positive(n, m);
  std::vector<int> ground(static_cast<std::size_t>(m));
  std::iota(ground.begin(), ground.end(), 0);

  std::vector<std::pair<std::string, Assembly>> found;
  for_each_set_partition(ground, [&](const std::vector<std::vector<int>>& groups) {
    const int ell = static_cast<int>(groups.size());
    if (2 * ell - 1 > n) return;
    std::vector<std::vector<OrderedPartition>> options;
    for (const auto& g : groups) options.push_back(ordered_partitions_of(g));
    std::vector<OrderedPartition> chosen;
    std::function<void(std::size_t, int)> rec = [&](std::size_t a, int weight) {
      if (a == options.size()) {
        Assembly assembly(chosen, m, n);
        found.emplace_back(canonical_encode(assembly), std::move(assembly));
        return;
      }
      for (const auto& p : options[a]) {
        const int w = weight + static_cast<int>(p.size()) + (a ? 1 : 0);
        // Each later partition adds at least two to the weight.
        if (w + 2 * static_cast<int>(options.size() - a - 1) > n) continue;
        chosen.push_back(p);
        rec(a + 1, w);
        chosen.pop_back();
      }
    };
    rec(0, 0);
  });
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Assembly> out;
  out.reserve(found.size());
  for (auto& entry : found) out.push_back(std::move(entry.second));
  return out;
}

Integer ordered_partition_count(int m, int k) {
  if (m < 0 || k < 0) return 0;
  // f(s, j) = sum over the size i of the first block of C(s, i) f(s - i, j - 1).
  std::vector<std::vector<Integer>> f(static_cast<std::size_t>(m) + 1,
                                      std::vector<Integer>(static_cast<std::size_t>(k) + 1, Integer(0)));
  f[0][0] = 1;
  for (int s = 1; s <= m; ++s) {
    for (int j = 1; j <= k; ++j) {
      Integer total(0);
      for (int i = 1; i <= s; ++i) {
        total += binomial(s, i) * f[static_cast<std::size_t>(s - i)][static_cast<std::size_t>(j - 1)];
      }
      f[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] = total;
    }
  }
  return f[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
}

Integer ordered_partition_classes(int m, int k) {
  const Integer f = ordered_partition_count(m, k);
  return k >= 2 ? Integer(f / 2) : f;
}

Integer assembly_count(int n, int m) {
  require_positive(n, m);
  // g[s][w]: sets of ordered partitions covering s labelled points with
  // sum of (r + 1) equal to w. The partition holding the smallest point has a
  // points and r blocks.
  const int max_w = n + 1;
  std::vector<std::vector<Integer>> g(static_cast<std::size_t>(m) + 1,
                                      std::vector<Integer>(static_cast<std::size_t>(max_w) + 1, Integer(0)));
  g[0][0] = 1;
  for (int s = 1; s <= m; ++s) {
    for (int w = 2; w <= max_w; ++w) {
      Integer total(0);
      for (int a = 1; a <= s; ++a) {
        const Integer choose = binomial(s - 1, a - 1);
        for (int r = 1; r <= a && r + 1 <= w; ++r) {
          const auto& rest = g[static_cast<std::size_t>(s - a)][static_cast<std::size_t>(w - r - 1)];
          if (rest != 0) total += choose * ordered_partition_count(a, r) * rest;
        }
      }
      g[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)] = total;
    }
  }
  Integer count(0);
  for (int w = 0; w <= max_w; ++w) count += g[static_cast<std::size_t>(m)][static_cast<std::size_t>(w)];
  return count;
}

std::vector<Word> enumerate_words(int n, int m) {
  require_positive(n, m);
  std::vector<Word> out;
  std::vector<int> letters(static_cast<std::size_t>(m), 1);
  while (true) {
    out.emplace_back(letters, n);
    std::size_t pos = letters.size();
    while (pos > 0 && letters[pos - 1] == n) letters[--pos] = 1;
    if (pos == 0) break;
    ++letters[pos - 1];
  }
  return out;
}

Integer count_b(int n, int m, CountStrategy strategy, int threads) {
  require_positive(n, m);
  if (strategy == CountStrategy::Auto) {
    strategy = std::pow(static_cast<double>(n), m) <= kWordStrategyLimit ? CountStrategy::Words
                                                                         : CountStrategy::Assemblies;
  }
  if (strategy == CountStrategy::Words) return Integer(bs_matrix_keys(n, m, threads).size());
  return distinct_reversal_classes(enumerate_assemblies(n, m));
}

std::vector<BottMatrix> bs_matrices(int n, int m, int threads) {
  const auto keys = bs_matrix_keys(n, m, threads);
  std::vector<std::string> sorted(keys.begin(), keys.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<BottMatrix> out;
  out.reserve(sorted.size());
  for (const auto& key : sorted) out.push_back(decode_bott_matrix(key));
  return out;
}

Integer count_b_prime(int n, int m) {
  require_positive(n, m);
  std::vector<Assembly> exact;
  for (auto& a : enumerate_assemblies(n, m)) {
    if (a.weight() == n) exact.push_back(std::move(a));
  }
  return distinct_reversal_classes(exact);
}

// ---------------------------------------------------------------------------

const Integer& GfTable::at(int n, int m) const {
  if (n < 1 || m < 1 || n > max_n_ || m > max_m_) {
    throw Error(ErrorCode::TruncationTooSmall, "coefficient (n=" + std::to_string(n) + ", m=" +
                                                   std::to_string(m) + ") beyond truncation (" +
                                                   std::to_string(max_n_) + ", " + std::to_string(max_m_) + ")");
  }
  return values_[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)];
}

Series2 generating_function(int max_m, int max_n) {
  if (max_m < 1 || max_n < 1) throw Error(ErrorCode::TruncationTooSmall, "truncation must be positive");
  // One extra y degree is consumed by the division by y.
  const int my = max_n + 1;
  const Series2 one = Series2::constant(max_m, my, Rational(1));
  const Series2 u = Series2::exp_x_minus_one(max_m, my);
  const Series2 yu = u.shift_y(1);
  const Series2 inner = ((yu.geometric() + yu - one).shift_y(1)) * Rational(1, 2);
  const Series2 numerator = inner.exp_minus_one().divide_by_y();
  const Series2 y = Series2::monomial(max_m, max_n, 0, 1);
  return numerator * y.geometric();
}

GfTable gf_coefficients(int max_m, int max_n) {
  const Series2 series = generating_function(max_m, max_n);
  std::vector<std::vector<Integer>> values(static_cast<std::size_t>(max_m));
  for (int m = 1; m <= max_m; ++m) {
    const Rational scale(factorial(m));
    for (int n = 1; n <= max_n; ++n) {
      const Rational c = series.coeff(m, n) * scale;
      if (denominator(c) != 1 || c < 0) {
        internal_assertion("coefficient (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                           ") is not a nonnegative integer: " + c.str());
      }
      values[static_cast<std::size_t>(m - 1)].push_back(Integer(numerator(c)));
    }
  }
  return GfTable(max_m, max_n, std::move(values));
}

Report stabilization_check(int m) {
  Report report("stabilization m=" + std::to_string(m));
  require_positive(1, m);
  const int base_n = 2 * m - 1;
  const auto base = bs_matrix_keys(base_n, m, 1);
  for (int n = base_n; n <= 2 * m + 2; ++n) {
    const auto keys = bs_matrix_keys(n, m, 1);
    ++report.checked;
    if (keys != base) {
      report.fail("B(" + std::to_string(n) + "," + std::to_string(m) + ") has " + std::to_string(keys.size()) +
                  " matrices, B(" + std::to_string(base_n) + "," + std::to_string(m) + ") has " +
                  std::to_string(base.size()));
    }
    if (count_b(n, m, CountStrategy::Words) != count_b(base_n, m, CountStrategy::Words)) {
      report.fail("b(" + std::to_string(n) + "," + std::to_string(m) + ") differs from b(2m-1,m)");
    }
  }
  return report;
}

}  // namespace bsbott
