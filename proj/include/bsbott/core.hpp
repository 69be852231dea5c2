#pragma once

#include <bsbott/error.hpp>
#include <bsbott/scalar.hpp>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bsbott {

// Positions and assembly elements are 0-based in this API. Text and JSON forms
// are 1-based.

/// A sequence in [n]^m. Letters keep their 1-based values.
class Word {
 public:
  Word(std::vector<int> letters, int bound);

  std::size_t size() const noexcept { return letters_.size(); }
  int bound() const noexcept { return bound_; }
  int operator[](std::size_t t) const { return letters_[t]; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  int min_letter() const;
  int max_letter() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<int> letters_;
  int bound_;
};

Word validate_word(std::span<const long long> raw, long long n);

using Block = std::vector<int>;

/// Sequence of pairwise disjoint nonempty blocks; each block is kept sorted.
class OrderedPartition {
 public:
  explicit OrderedPartition(std::vector<Block> blocks);

  std::size_t size() const noexcept { return blocks_.size(); }
  const Block& operator[](std::size_t b) const { return blocks_[b]; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  int min() const noexcept { return min_; }
  std::size_t element_count() const;

  OrderedPartition reversed() const;

  auto operator<=>(const OrderedPartition& other) const { return blocks_ <=> other.blocks_; }
  bool operator==(const OrderedPartition& other) const { return blocks_ == other.blocks_; }

 private:
  std::vector<Block> blocks_;
  int min_;
};

/// Assembly of ordered partitions of {0,...,m-1} with bound n.
class Assembly {
 public:
  Assembly(std::vector<OrderedPartition> partitions, int m, int n);

  std::size_t size() const noexcept { return partitions_.size(); }
  const OrderedPartition& operator[](std::size_t a) const { return partitions_[a]; }
  const std::vector<OrderedPartition>& partitions() const noexcept { return partitions_; }
  int ground_size() const noexcept { return m_; }
  int bound() const noexcept { return n_; }

  /// r_1 + ... + r_l + (l - 1); at most the bound.
  int weight() const;

  auto operator<=>(const Assembly&) const = default;

 private:
  std::vector<OrderedPartition> partitions_;
  int m_;
  int n_;
};

using RawAssembly = std::vector<std::vector<std::vector<int>>>;

/// Validates a nested block structure given with 1-based elements.
Assembly validate_assembly(const RawAssembly& raw, int m, int n);

/// Lower-triangular m x m matrix with diagonal -1.
template <typename Scalar = Integer>
class BasicBottMatrix {
 public:
  using Index = Eigen::Index;

  explicit BasicBottMatrix(Matrix<Scalar> entries) : entries_(std::move(entries)) {
    const Index m = entries_.rows();
    if (m < 1 || entries_.cols() != m) {
      throw Error(ErrorCode::NotABottMatrix, "matrix must be square with size >= 1");
    }
    for (Index j = 0; j < m; ++j) {
      if (entries_(j, j) != Scalar(-1)) {
        throw Error(ErrorCode::NotABottMatrix,
                    "diagonal entry " + std::to_string(j + 1) + " is not -1");
      }
      for (Index k = j + 1; k < m; ++k) {
        if (entries_(j, k) != Scalar(0)) {
          throw Error(ErrorCode::NotABottMatrix, "matrix is not lower triangular");
        }
      }
    }
  }

  static BasicBottMatrix negative_identity(Index m) {
    return BasicBottMatrix(Matrix<Scalar>(-Matrix<Scalar>::Identity(m, m)));
  }

  Index size() const noexcept { return entries_.rows(); }
  const Scalar& operator()(Index j, Index k) const { return entries_(j, k); }
  const Matrix<Scalar>& entries() const noexcept { return entries_; }

  friend bool operator==(const BasicBottMatrix& a, const BasicBottMatrix& b) {
    return a.size() == b.size() && a.entries_ == b.entries_;
  }

 private:
  Matrix<Scalar> entries_;
};

using BottMatrix = BasicBottMatrix<Integer>;

/// Builds a Bott matrix from row-major integer rows.
BottMatrix bott_matrix_from_rows(const std::vector<std::vector<long long>>& rows);

/// Block-diagonal sum of Bott matrices.
template <typename Scalar>
BasicBottMatrix<Scalar> block_diagonal(const BasicBottMatrix<Scalar>& a,
                                       const BasicBottMatrix<Scalar>& b) {
  const auto ma = a.size();
  const auto mb = b.size();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(ma + mb, ma + mb);
  out.topLeftCorner(ma, ma) = a.entries();
  out.bottomRightCorner(mb, mb) = b.entries();
  return BasicBottMatrix<Scalar>(std::move(out));
}

// ---------------------------------------------------------------------------
// Canonical byte encodings. Injective per type; used as set and map keys.

namespace detail {

inline void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

std::uint64_t get_varint(std::string_view bytes, std::size_t& pos);

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 61;

template <typename Scalar>
void put_scalar(std::string& out, const Scalar& x) {
  const auto small = to_int64(x);
  if (small && *small < kSmallLimit && *small > -kSmallLimit) {
    const std::int64_t v = *small;
    const std::uint64_t zig = v >= 0 ? static_cast<std::uint64_t>(v) << 1
                                     : (static_cast<std::uint64_t>(-(v + 1)) << 1) | 1;
    put_varint(out, zig << 1);
    return;
  }
  const std::string dec = to_decimal(x);
  put_varint(out, (static_cast<std::uint64_t>(dec.size()) << 1) | 1);
  out += dec;
}

std::string get_scalar_decimal(std::string_view bytes, std::size_t& pos);

}  // namespace detail

std::string canonical_encode(const Word& w);
std::string canonical_encode(const Assembly& a);

template <typename Scalar>
std::string canonical_encode(const BasicBottMatrix<Scalar>& b) {
  std::string out;
  const auto m = b.size();
  out.reserve(2 + static_cast<std::size_t>(m * (m - 1) / 2));
  out.push_back('B');
  detail::put_varint(out, static_cast<std::uint64_t>(m));
  for (Eigen::Index j = 1; j < m; ++j) {
    for (Eigen::Index k = 0; k < j; ++k) detail::put_scalar(out, b(j, k));
  }
  return out;
}

Word decode_word(std::string_view bytes);
Assembly decode_assembly(std::string_view bytes);
BottMatrix decode_bott_matrix(std::string_view bytes);

}  // namespace bsbott
