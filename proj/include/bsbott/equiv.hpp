#pragma once

#include <bsbott/core.hpp>
#include <bsbott/report.hpp>

#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace bsbott {

inline OrderedPartition reverse_partition(const OrderedPartition& p) { return p.reversed(); }

/// Representative of the block-reversal class: each ordered partition is
/// replaced by the lexicographically smaller of itself and its reversal.
Assembly canonical_sim(const Assembly& a);

bool sim_equivalent(const Assembly& a, const Assembly& b);

/// Whether swapping the values j and j+1 (0-based) is admissible.
bool admissible(const Assembly& a, int j);

/// Swaps j and j+1 and re-sorts the ordered partitions by minimum.
Assembly apply_transposition(const Assembly& a, int j);

/// |AOP(n,m)| when it fits the default limit of 10^6, else 10^6.
std::size_t default_assembly_orbit_cap(int n, int m);

/// Closure of {a} under single-partition reversal and admissible
/// transpositions. Throws OrbitCapExceeded if the orbit grows past `cap`.
std::set<Assembly> approx_orbit(const Assembly& a, std::optional<std::size_t> cap = std::nullopt);

bool approx_equivalent(const Assembly& a, const Assembly& b,
                       std::optional<std::size_t> cap = std::nullopt);

/// Toric isomorphism of the Bott manifolds of two words with equal n and m.
bool isomorphic_words(const Word& w1, const Word& w2, std::optional<std::size_t> cap = std::nullopt);

/// Memoizes orbit labels so that repeated classification over one (n,m) is
/// linear in the number of assemblies. Safe to share between threads.
class OrbitClassifier {
 public:
  explicit OrbitClassifier(std::optional<std::size_t> cap = std::nullopt) : cap_(cap) {}

  /// Dense id of the orbit containing `a`, assigned in first-seen order.
  std::size_t class_id(const Assembly& a);
  std::size_t class_id(const Word& w);
  std::size_t class_count() const;

 private:
  std::optional<std::size_t> cap_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::size_t next_ = 0;
};

/// One ordered partition of assembly_of(w) as a standalone assembly, with the
/// word positions it came from and a generating word.
struct Factor {
  Assembly assembly;
  Word witness;
  std::vector<int> positions;
};

std::vector<Factor> decompose(const Word& w);

/// Breadth-first search over swaps of adjacent letters that differ by more than 1.
bool two_move_reachable(const Word& w1, const Word& w2, std::optional<std::size_t> cap = std::nullopt);

/// Isomorphism test restricted to indecomposable words via 2-moves and the
/// letter flip. Throws NotIndecomposable otherwise.
bool indecomposable_iso(const Word& w1, const Word& w2, std::optional<std::size_t> cap = std::nullopt);

enum class Relation { Sim, Approx };

struct EquivalenceClass {
  Assembly representative;  // smallest canonical member
  std::size_t members;      // assemblies in the class
};

/// Classes of AOP(n,m) under the relation, ordered by representative.
std::vector<EquivalenceClass> classify_assemblies(int n, int m, Relation relation,
                                                  std::optional<std::size_t> cap = std::nullopt);

/// F(a) = F(b) exactly when a ~ b, over all of AOP(n,m).
Report fiber_check(int n, int m);

/// For all orderings of [n] taken as words: isomorphic iff the permutations
/// agree or are conjugate by the longest element.
Report schubert_iso_check(int n);

}  // namespace bsbott
