#pragma once

#include <bsbott/core.hpp>
#include <bsbott/report.hpp>

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace bsbott {

/// Membership mask over {0,...,m-1}.
using IndexSet = std::vector<bool>;

inline IndexSet subset_from_mask(Eigen::Index m, std::uint64_t mask) {
  IndexSet s(static_cast<std::size_t>(m));
  for (Eigen::Index j = 0; j < m; ++j) s[static_cast<std::size_t>(j)] = (mask >> j) & 1U;
  return s;
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] && !b[j]) return false;
  }
  return true;
}

inline IndexSet complement(IndexSet s) {
  s.flip();
  return s;
}

/// Column j is e_j for j in `chosen`, otherwise column j of b.
template <typename Scalar>
Matrix<Scalar> basis_matrix(const BasicBottMatrix<Scalar>& b, const IndexSet& chosen) {
  const auto m = b.size();
  Matrix<Scalar> out = b.entries();
  for (Eigen::Index j = 0; j < m; ++j) {
    if (chosen[static_cast<std::size_t>(j)]) out.col(j) = Matrix<Scalar>::Identity(m, m).col(j);
  }
  return out;
}

/// Basis change B_I = L_I^{-1} L_{I^c}. Both factors are triangular with
/// diagonal +-1, so forward substitution stays integral.
template <typename Scalar>
BasicBottMatrix<Scalar> change_basis(const BasicBottMatrix<Scalar>& b, const IndexSet& chosen) {
  const Matrix<Scalar> lower = basis_matrix(b, chosen);
  Matrix<Scalar> result = lower.template triangularView<Eigen::Lower>().solve(basis_matrix(b, complement(chosen)));
  try {
    return BasicBottMatrix<Scalar>(std::move(result));
  } catch (const Error&) {
    internal_assertion("basis change did not produce a Bott matrix");
  }
}

/// Rows j with a nonzero entry left of the diagonal.
template <typename Scalar>
IndexSet support(const BasicBottMatrix<Scalar>& b) {
  const auto m = b.size();
  IndexSet s(static_cast<std::size_t>(m), false);
  for (Eigen::Index j = 1; j < m; ++j) {
    for (Eigen::Index k = 0; k < j; ++k) {
      if (b(j, k) != Scalar(0)) {
        s[static_cast<std::size_t>(j)] = true;
        break;
      }
    }
  }
  return s;
}

/// Conjugation by the permutation matrix of (i, i+1) keeps the matrix lower
/// triangular iff entry (i+1, i) vanishes.
template <typename Scalar>
bool can_reorder(const BasicBottMatrix<Scalar>& b, Eigen::Index i) {
  if (i < 0 || i + 1 >= b.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "reorder index " + std::to_string(i + 1) + " out of range");
  }
  return b(i + 1, i) == Scalar(0);
}

template <typename Scalar>
BasicBottMatrix<Scalar> reorder_adjacent(const BasicBottMatrix<Scalar>& b, Eigen::Index i) {
  if (!can_reorder(b, i)) {
    throw Error(ErrorCode::NotApplicable, "entry (" + std::to_string(i + 2) + "," + std::to_string(i + 1) +
                                              ") is nonzero");
  }
  Matrix<Scalar> out = b.entries();
  out.row(i).swap(out.row(i + 1));
  out.col(i).swap(out.col(i + 1));
  return BasicBottMatrix<Scalar>(std::move(out));
}

/// 2^m * m! * 4, saturating.
std::size_t default_matrix_orbit_cap(Eigen::Index m);

namespace detail {
[[noreturn]] void matrix_orbit_cap_exceeded(std::size_t cap);
}

/// Closure of {b} under all basis changes and all applicable adjacent
/// reorderings, sorted by canonical encoding.
template <typename Scalar>
std::vector<BasicBottMatrix<Scalar>> matrix_orbit(const BasicBottMatrix<Scalar>& b,
                                                  std::optional<std::size_t> cap = std::nullopt) {
  const auto m = b.size();
  if (m > 30) throw Error(ErrorCode::OrbitCapExceeded, "matrix orbits are limited to m <= 30");
  const std::size_t limit = cap.value_or(default_matrix_orbit_cap(m));
  std::map<std::string, BasicBottMatrix<Scalar>> seen;
  seen.emplace(canonical_encode(b), b);
  std::deque<BasicBottMatrix<Scalar>> frontier{b};
  auto visit = [&](BasicBottMatrix<Scalar> next) {
    auto key = canonical_encode(next);
    if (seen.contains(key)) return;
    if (seen.size() >= limit) detail::matrix_orbit_cap_exceeded(limit);
    seen.emplace(std::move(key), next);
    frontier.push_back(std::move(next));
  };
  const std::uint64_t subsets = std::uint64_t{1} << m;
  while (!frontier.empty()) {
    const auto cur = std::move(frontier.front());
    frontier.pop_front();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) visit(change_basis(cur, subset_from_mask(m, mask)));
    for (Eigen::Index i = 0; i + 1 < m; ++i) {
      if (can_reorder(cur, i)) visit(reorder_adjacent(cur, i));
    }
  }
  std::vector<BasicBottMatrix<Scalar>> out;
  out.reserve(seen.size());
  for (auto& [key, value] : seen) out.push_back(std::move(value));
  return out;
}

template <typename Scalar>
bool matrix_isomorphic(const BasicBottMatrix<Scalar>& b1, const BasicBottMatrix<Scalar>& b2,
                       std::optional<std::size_t> cap = std::nullopt) {
  if (b1.size() != b2.size()) return false;
  for (const auto& member : matrix_orbit(b1, cap)) {
    if (member == b2) return true;
  }
  return false;
}

/// Positions k in 1..m-1 where the matrix splits as blockdiag(top k x k, rest).
template <typename Scalar>
std::vector<Eigen::Index> block_split_points(const BasicBottMatrix<Scalar>& b) {
  const auto m = b.size();
  std::vector<Eigen::Index> points;
  for (Eigen::Index k = 1; k < m; ++k) {
    if (b.entries().bottomLeftCorner(m - k, k).isZero()) points.push_back(k);
  }
  return points;
}

struct BlockSplit {
  BottMatrix member;  // orbit member that is block diagonal
  std::vector<BottMatrix> blocks;
};

/// Searches the orbit of b for a block-diagonal member with at least two
/// diagonal blocks; blocks are split as finely as that member allows.
std::optional<BlockSplit> find_block_decomposition(const BottMatrix& b,
                                                   std::optional<std::size_t> cap = std::nullopt);

/// For every I: if support(b) is inside I the basis change fixes b, otherwise
/// the result is not of BS type for bound n.
Report basis_change_check(const BottMatrix& b, int n);

}  // namespace bsbott
