#include <bsbott/equiv.hpp>
#include <bsbott/maps.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bsbott {

Assembly assembly_of(const Word& w) {
  std::map<int, Block> positions;  // value -> positions holding it
  for (std::size_t t = 0; t < w.size(); ++t) positions[w[t]].push_back(static_cast<int>(t));

  std::vector<OrderedPartition> parts;
  std::vector<Block> run;
  int previous = 0;
  for (auto& [value, block] : positions) {
    if (!run.empty() && value != previous + 1) {
      parts.emplace_back(std::move(run));
      run.clear();
    }
    run.push_back(std::move(block));
    previous = value;
  }
  parts.emplace_back(std::move(run));
  std::sort(parts.begin(), parts.end(),
            [](const OrderedPartition& x, const OrderedPartition& y) { return x.min() < y.min(); });
  return Assembly(std::move(parts), static_cast<int>(w.size()), w.bound());
}

BottMatrix bott_matrix(const Word& w) {
  const auto m = static_cast<Eigen::Index>(w.size());
  IntegerMatrix entries = -IntegerMatrix::Identity(m, m);
  for (Eigen::Index j = 1; j < m; ++j) {
    for (Eigen::Index k = 0; k < j; ++k) {
      const int d = std::abs(w[static_cast<std::size_t>(j)] - w[static_cast<std::size_t>(k)]);
      if (d == 0) entries(j, k) = -2;
      else if (d == 1) entries(j, k) = 1;
    }
  }
  return BottMatrix(std::move(entries));
}

std::vector<Location> locate(const Assembly& a) {
  std::vector<Location> where(static_cast<std::size_t>(a.ground_size()));
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t b = 0; b < a[p].size(); ++b) {
      for (int x : a[p][b]) where[static_cast<std::size_t>(x)] = {static_cast<int>(p), static_cast<int>(b)};
    }
  }
  return where;
}

BottMatrix bott_matrix(const Assembly& a) {
  const auto where = locate(a);
  const auto m = static_cast<Eigen::Index>(a.ground_size());
  IntegerMatrix entries = -IntegerMatrix::Identity(m, m);
  for (Eigen::Index j = 1; j < m; ++j) {
    const auto& lj = where[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < j; ++k) {
      const auto& lk = where[static_cast<std::size_t>(k)];
      if (lj.partition != lk.partition) continue;
      const int d = std::abs(lj.block - lk.block);
      if (d == 0) entries(j, k) = -2;
      else if (d == 1) entries(j, k) = 1;
    }
  }
  return BottMatrix(std::move(entries));
}

bool neighbors(const Assembly& a, int j, int k) {
  const int m = a.ground_size();
  if (j < 0 || j >= m || k < 0 || k >= m || j == k) {
    throw Error(ErrorCode::IndexOutOfRange, "neighbors needs distinct indices in [" +
                                                std::to_string(m) + "]");
  }
  const auto where = locate(a);
  const auto& lj = where[static_cast<std::size_t>(j)];
  const auto& lk = where[static_cast<std::size_t>(k)];
  return lj.partition == lk.partition && std::abs(lj.block - lk.block) <= 1;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int size) : parent(static_cast<std::size_t>(size)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
};

[[noreturn]] void not_bs(const std::string& why) { throw Error(ErrorCode::NotBsType, why); }

Assembly recover_or_throw(const BottMatrix& b, int n) {
  const int m = static_cast<int>(b.size());
  UnionFind same(m);
  for (int j = 1; j < m; ++j) {
    for (int k = 0; k < j; ++k) {
      const Integer& x = b(j, k);
      if (x == -2) same.unite(j, k);
      else if (x != 0 && x != 1) {
        not_bs("entry (" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ") = " + x.str() +
               " is outside {0,1,-2}");
      }
    }
  }

  // Blocks are numbered by their minimum element.
  std::vector<int> block_of(static_cast<std::size_t>(m), -1);
  std::vector<Block> blocks;
  for (int x = 0; x < m; ++x) {
    const int root = same.find(x);
    if (root == x) {
      block_of[static_cast<std::size_t>(x)] = static_cast<int>(blocks.size());
      blocks.push_back({x});
    } else {
      const int id = block_of[static_cast<std::size_t>(root)];
      block_of[static_cast<std::size_t>(x)] = id;
      blocks[static_cast<std::size_t>(id)].push_back(x);
    }
  }

  std::vector<std::set<int>> adjacent(blocks.size());
  for (int j = 1; j < m; ++j) {
    for (int k = 0; k < j; ++k) {
      if (b(j, k) != 1) continue;
      const int bj = block_of[static_cast<std::size_t>(j)];
      const int bk = block_of[static_cast<std::size_t>(k)];
      if (bj == bk) not_bs("entry 1 inside a -2 class");
      adjacent[static_cast<std::size_t>(bj)].insert(bk);
      adjacent[static_cast<std::size_t>(bk)].insert(bj);
    }
  }
  for (const auto& adj : adjacent) {
    if (adj.size() > 2) not_bs("a block has more than two adjacent blocks");
  }

  // Chain blocks into ordered partitions; the chain holding the smallest
  // unassigned index comes next.
  std::vector<bool> used(blocks.size(), false);
  std::vector<OrderedPartition> parts;
  for (std::size_t start = 0; start < blocks.size(); ++start) {
    if (used[start]) continue;
    // Walk to one end of the chain containing `start`.
    int end = static_cast<int>(start);
    int from = -1;
    std::size_t steps = 0;
    while (true) {
      int next = -1;
      for (int y : adjacent[static_cast<std::size_t>(end)]) {
        if (y != from) {
          next = y;
          break;
        }
      }
      if (next < 0) break;
      from = end;
      end = next;
      if (++steps > blocks.size()) not_bs("1-entries form a cycle of blocks");
    }
    std::vector<Block> chain;
    from = -1;
    for (int cur = end; cur >= 0;) {
      if (used[static_cast<std::size_t>(cur)]) not_bs("1-entries form a cycle of blocks");
      used[static_cast<std::size_t>(cur)] = true;
      chain.push_back(blocks[static_cast<std::size_t>(cur)]);
      int next = -1;
      for (int y : adjacent[static_cast<std::size_t>(cur)]) {
        if (y != from) {
          next = y;
          break;
        }
      }
      from = cur;
      cur = next;
    }
    parts.emplace_back(std::move(chain));
  }

  int weight = static_cast<int>(parts.size()) - 1;
  for (const auto& p : parts) weight += static_cast<int>(p.size());
  if (weight > n) {
    not_bs("recovered assembly needs bound " + std::to_string(weight) + " > " + std::to_string(n));
  }
  Assembly candidate(std::move(parts), m, n);
  if (!(bott_matrix(candidate) == b)) not_bs("entries are not consistent with any assembly");
  return canonical_sim(candidate);
}

}  // namespace

Assembly recover_assembly(const BottMatrix& b, int n) { return recover_or_throw(b, n); }

std::optional<Assembly> try_recover_assembly(const BottMatrix& b, int n) {
  try {
    return recover_or_throw(b, n);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotBsType) return std::nullopt;
    throw;
  }
}

Word standardize(const Word& w) { return shift_down(w, w.min_letter() - 1); }

Word shift_down(const Word& w, int k) {
  if (k < 0 || k >= w.min_letter()) {
    throw Error(ErrorCode::LetterOutOfRange, "shift " + std::to_string(k) + " must lie below the minimum letter");
  }
  std::vector<int> letters = w.letters();
  for (int& x : letters) x -= k;
  return Word(std::move(letters), w.bound());
}

Word flip_letters(const Word& w) {
  std::vector<int> letters = w.letters();
  for (int& x : letters) x = w.bound() + 1 - x;
  return Word(std::move(letters), w.bound());
}

std::vector<int> word_permutation(const Word& w) {
  std::vector<int> one_line(static_cast<std::size_t>(w.bound()) + 1);
  std::iota(one_line.begin(), one_line.end(), 1);
  // Right multiplication by s_i swaps the entries at positions i and i+1.
  for (int letter : w.letters()) {
    std::swap(one_line[static_cast<std::size_t>(letter) - 1], one_line[static_cast<std::size_t>(letter)]);
  }
  return one_line;
}

}  // namespace bsbott
