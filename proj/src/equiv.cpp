#include <bsbott/count.hpp>
#include <bsbott/equiv.hpp>
#include <bsbott/maps.hpp>
#include <bsbott/serialize.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace bsbott {

namespace {

void require_same_ground(const Assembly& a, const Assembly& b) {
  if (a.ground_size() != b.ground_size() || a.bound() != b.bound()) {
    throw Error(ErrorCode::GroundMismatch, "assemblies have different (m, n)");
  }
}

void require_same_shape(const Word& a, const Word& b) {
  if (a.size() != b.size() || a.bound() != b.bound()) {
    throw Error(ErrorCode::GroundMismatch, "words have different (m, n)");
  }
}

std::vector<OrderedPartition> sorted_by_min(std::vector<OrderedPartition> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const OrderedPartition& x, const OrderedPartition& y) { return x.min() < y.min(); });
  return parts;
}

[[noreturn]] void cap_exceeded(std::size_t cap) {
  throw Error(ErrorCode::OrbitCapExceeded, "orbit exceeds cap " + std::to_string(cap));
}

}  // namespace

Assembly canonical_sim(const Assembly& a) {
  std::vector<OrderedPartition> parts;
  parts.reserve(a.size());
  for (const auto& p : a.partitions()) {
    auto r = p.reversed();
    parts.push_back(r < p ? std::move(r) : p);
  }
  return Assembly(std::move(parts), a.ground_size(), a.bound());
}

bool sim_equivalent(const Assembly& a, const Assembly& b) {
  require_same_ground(a, b);
  return canonical_sim(a) == canonical_sim(b);
}

bool admissible(const Assembly& a, int j) {
  if (j < 0 || j + 1 >= a.ground_size()) {
    throw Error(ErrorCode::IndexOutOfRange, "transposition index " + std::to_string(j + 1) +
                                                " outside [" + std::to_string(a.ground_size() - 1) + "]");
  }
  return !neighbors(a, j, j + 1);
}

Assembly apply_transposition(const Assembly& a, int j) {
  if (!admissible(a, j)) {
    throw Error(ErrorCode::NotAdmissible, std::to_string(j + 1) + " and " + std::to_string(j + 2) +
                                              " are neighbors");
  }
  std::vector<OrderedPartition> parts;
  parts.reserve(a.size());
  for (const auto& p : a.partitions()) {
    std::vector<Block> blocks = p.blocks();
    for (auto& block : blocks) {
      for (int& x : block) {
        if (x == j) x = j + 1;
        else if (x == j + 1) x = j;
      }
    }
    parts.emplace_back(std::move(blocks));
  }
  return Assembly(sorted_by_min(std::move(parts)), a.ground_size(), a.bound());
}

std::size_t default_assembly_orbit_cap(int n, int m) {
  constexpr std::size_t kFallback = 1'000'000;
  const Integer total = assembly_count(n, m);
  if (total > Integer(kFallback)) return kFallback;
  return total.convert_to<std::size_t>();
}

std::set<Assembly> approx_orbit(const Assembly& a, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(default_assembly_orbit_cap(a.bound(), a.ground_size()));
  std::set<Assembly> seen{a};
  std::deque<Assembly> frontier{a};
  auto visit = [&](Assembly next) {
    if (seen.contains(next)) return;
    if (seen.size() >= limit) cap_exceeded(limit);
    seen.insert(next);
    frontier.push_back(std::move(next));
  };
  while (!frontier.empty()) {
    const Assembly cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i].size() < 2) continue;
      auto parts = cur.partitions();
      parts[i] = parts[i].reversed();
      visit(Assembly(std::move(parts), cur.ground_size(), cur.bound()));
    }
    const auto where = locate(cur);
    for (int j = 0; j + 1 < cur.ground_size(); ++j) {
      const auto& x = where[static_cast<std::size_t>(j)];
      const auto& y = where[static_cast<std::size_t>(j + 1)];
      if (x.partition == y.partition && std::abs(x.block - y.block) <= 1) continue;
      visit(apply_transposition(cur, j));
    }
  }
  return seen;
}

bool approx_equivalent(const Assembly& a, const Assembly& b, std::optional<std::size_t> cap) {
  require_same_ground(a, b);
  return approx_orbit(a, cap).contains(canonical_sim(b));
}

bool isomorphic_words(const Word& w1, const Word& w2, std::optional<std::size_t> cap) {
  require_same_shape(w1, w2);
  return approx_equivalent(assembly_of(w1), assembly_of(w2), cap);
}

// ---------------------------------------------------------------------------

std::size_t OrbitClassifier::class_id(const Assembly& a) {
  const std::string key = canonical_encode(canonical_sim(a));
  {
    std::lock_guard lock(mutex_);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  }
  const auto orbit = approx_orbit(a, cap_);
  std::lock_guard lock(mutex_);
  if (auto it = ids_.find(key); it != ids_.end()) return it->second;
  const std::size_t id = next_++;
  for (const auto& member : orbit) ids_.emplace(canonical_encode(member), id);
  return id;
}

std::size_t OrbitClassifier::class_id(const Word& w) { return class_id(assembly_of(w)); }

std::size_t OrbitClassifier::class_count() const {
  std::lock_guard lock(mutex_);
  return next_;
}

// ---------------------------------------------------------------------------

std::vector<Factor> decompose(const Word& w) {
  const Assembly a = assembly_of(w);
  std::vector<Factor> factors;
  for (const auto& p : a.partitions()) {
    std::vector<int> positions;
    for (const auto& block : p.blocks()) positions.insert(positions.end(), block.begin(), block.end());
    std::sort(positions.begin(), positions.end());

    // Order-preserving relabelling of the positions onto 0..r-1.
    std::map<int, int> rank;
    for (std::size_t i = 0; i < positions.size(); ++i) rank[positions[i]] = static_cast<int>(i);
    std::vector<Block> blocks;
    for (const auto& block : p.blocks()) {
      Block relabelled;
      for (int x : block) relabelled.push_back(rank[x]);
      blocks.push_back(std::move(relabelled));
    }
    std::vector<int> letters;
    for (int pos : positions) letters.push_back(w[static_cast<std::size_t>(pos)]);

    const int size = static_cast<int>(positions.size());
    factors.push_back({Assembly({OrderedPartition(std::move(blocks))}, size, w.bound()),
                       standardize(Word(std::move(letters), w.bound())), std::move(positions)});
  }
  return factors;
}

bool two_move_reachable(const Word& w1, const Word& w2, std::optional<std::size_t> cap) {
  if (w1.size() != w2.size()) throw Error(ErrorCode::GroundMismatch, "words have different lengths");
  const std::size_t limit = cap.value_or(1'000'000);
  const auto& target = w2.letters();
  std::set<std::vector<int>> seen{w1.letters()};
  std::deque<std::vector<int>> frontier{w1.letters()};
  while (!frontier.empty()) {
    auto cur = std::move(frontier.front());
    frontier.pop_front();
    if (cur == target) return true;
    for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
      if (std::abs(cur[j] - cur[j + 1]) <= 1) continue;
      auto next = cur;
      std::swap(next[j], next[j + 1]);
      if (seen.contains(next)) continue;
      if (seen.size() >= limit) cap_exceeded(limit);
      seen.insert(next);
      frontier.push_back(std::move(next));
    }
  }
  return false;
}

bool indecomposable_iso(const Word& w1, const Word& w2, std::optional<std::size_t> cap) {
  require_same_shape(w1, w2);
  for (const Word* w : {&w1, &w2}) {
    if (assembly_of(*w).size() != 1) {
      throw Error(ErrorCode::NotIndecomposable, format_word(*w) + " has several factors");
    }
  }
  const Word start = standardize(w1);
  return two_move_reachable(start, standardize(w2), cap) ||
         two_move_reachable(start, standardize(flip_letters(w2)), cap);
}

std::vector<EquivalenceClass> classify_assemblies(int n, int m, Relation relation,
                                                  std::optional<std::size_t> cap) {
  const auto assemblies = enumerate_assemblies(n, m);
  std::map<std::size_t, EquivalenceClass> by_id;
  std::unordered_map<std::string, std::size_t> sim_ids;
  OrbitClassifier orbits(cap);
  for (const auto& a : assemblies) {
    std::size_t id = 0;
    if (relation == Relation::Approx) {
      id = orbits.class_id(a);
    } else {
      id = sim_ids.emplace(canonical_encode(canonical_sim(a)), sim_ids.size()).first->second;
    }
    const Assembly canonical = canonical_sim(a);
    auto [it, inserted] = by_id.try_emplace(id, EquivalenceClass{canonical, 0});
    ++it->second.members;
    if (canonical < it->second.representative) it->second.representative = canonical;
  }
  std::vector<EquivalenceClass> out;
  out.reserve(by_id.size());
  for (auto& [id, cls] : by_id) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(), [](const EquivalenceClass& x, const EquivalenceClass& y) {
    return x.representative < y.representative;
  });
  return out;
}

Report fiber_check(int n, int m) {
  Report report("fiber n=" + std::to_string(n) + " m=" + std::to_string(m));
  // Both relations are equivalences, so comparing the induced partitions of
  // AOP(n,m) is the same as comparing every pair.
  std::unordered_map<std::string, std::string> sim_of_matrix;
  std::unordered_map<std::string, std::string> matrix_of_sim;
  for (const auto& a : enumerate_assemblies(n, m)) {
    ++report.checked;
    const std::string f = canonical_encode(bott_matrix(a));
    const std::string s = canonical_encode(canonical_sim(a));
    auto [fi, f_new] = sim_of_matrix.try_emplace(f, s);
    if (!f_new && fi->second != s) {
      report.fail(format_assembly(a) + " shares F with " + format_assembly(decode_assembly(fi->second)) +
                  " but is not ~-equivalent");
    }
    auto [si, s_new] = matrix_of_sim.try_emplace(s, f);
    if (!s_new && si->second != f) {
      report.fail(format_assembly(a) + " is ~-equivalent to " + format_assembly(decode_assembly(s)) +
                  " but F differs");
    }
  }
  return report;
}

Report schubert_iso_check(int n) {
  Report report("schubert n=" + std::to_string(n));
  if (n < 1) throw Error(ErrorCode::LetterOutOfRange, "n must be positive");
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Word> words;
  do {
    words.emplace_back(letters, n);
  } while (std::next_permutation(letters.begin(), letters.end()));

  auto conjugate_by_longest = [n](const std::vector<int>& w) {
    // (w0 w w0)(x) = n+2 - w(n+2-x) on {1,...,n+1}
    std::vector<int> out(w.size());
    for (int x = 1; x <= n + 1; ++x) {
      out[static_cast<std::size_t>(x - 1)] = n + 2 - w[static_cast<std::size_t>(n + 1 - x)];
    }
    return out;
  };

  OrbitClassifier classes;
  for (const auto& w1 : words) {
    const auto p1 = word_permutation(w1);
    for (const auto& w2 : words) {
      const auto p2 = word_permutation(w2);
      const bool iso = classes.class_id(w1) == classes.class_id(w2);
      const bool perm = p1 == p2 || p1 == conjugate_by_longest(p2);
      ++report.checked;
      if (iso != perm) {
        report.fail(format_word(w1) + " vs " + format_word(w2) + ": isomorphic=" + (iso ? "true" : "false") +
                    " permutation criterion=" + (perm ? "true" : "false"));
      }
    }
  }
  return report;
}

}  // namespace bsbott
