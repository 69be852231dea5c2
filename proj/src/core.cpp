#include <bsbott/core.hpp>

#include <algorithm>

namespace bsbott {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::MinOrderViolated: return "MinOrderViolated";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::NotABottMatrix: return "NotABottMatrix";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotBsType: return "NotBsType";
    case ErrorCode::GroundMismatch: return "GroundMismatch";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotIndecomposable: return "NotIndecomposable";
    case ErrorCode::OrbitCapExceeded: return "OrbitCapExceeded";
    case ErrorCode::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------

Word::Word(std::vector<int> letters, int bound) : letters_(std::move(letters)), bound_(bound) {
  if (bound_ < 1) throw Error(ErrorCode::LetterOutOfRange, "bound must be positive");
  if (letters_.empty()) throw Error(ErrorCode::EmptyWord, "word has no letters");
  for (std::size_t t = 0; t < letters_.size(); ++t) {
    if (letters_[t] < 1 || letters_[t] > bound_) {
      throw Error(ErrorCode::LetterOutOfRange, "position " + std::to_string(t + 1) +
                                                   " has value " + std::to_string(letters_[t]));
    }
  }
}

int Word::min_letter() const { return *std::min_element(letters_.begin(), letters_.end()); }
int Word::max_letter() const { return *std::max_element(letters_.begin(), letters_.end()); }

Word validate_word(std::span<const long long> raw, long long n) {
  if (n < 1 || n > std::numeric_limits<int>::max()) {
    throw Error(ErrorCode::LetterOutOfRange, "bound " + std::to_string(n) + " is not usable");
  }
  if (raw.empty()) throw Error(ErrorCode::EmptyWord, "word has no letters");
  std::vector<int> letters;
  letters.reserve(raw.size());
  for (std::size_t t = 0; t < raw.size(); ++t) {
    if (raw[t] < 1 || raw[t] > n) {
      throw Error(ErrorCode::LetterOutOfRange,
                  "position " + std::to_string(t + 1) + " has value " + std::to_string(raw[t]));
    }
    letters.push_back(static_cast<int>(raw[t]));
  }
  return Word(std::move(letters), static_cast<int>(n));
}

// ---------------------------------------------------------------------------

OrderedPartition::OrderedPartition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorCode::NotAPartition, "ordered partition has no blocks");
  std::vector<int> all;
  for (auto& block : blocks_) {
    if (block.empty()) throw Error(ErrorCode::NotAPartition, "empty block");
    std::sort(block.begin(), block.end());
    all.insert(all.end(), block.begin(), block.end());
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(ErrorCode::NotAPartition, "blocks are not disjoint");
  }
  if (all.front() < 0) throw Error(ErrorCode::NotAPartition, "negative element");
  min_ = all.front();
}

std::size_t OrderedPartition::element_count() const {
  std::size_t count = 0;
  for (const auto& block : blocks_) count += block.size();
  return count;
}

OrderedPartition OrderedPartition::reversed() const {
  return OrderedPartition(std::vector<Block>(blocks_.rbegin(), blocks_.rend()));
}

Assembly::Assembly(std::vector<OrderedPartition> partitions, int m, int n)
    : partitions_(std::move(partitions)), m_(m), n_(n) {
  if (m_ < 1) throw Error(ErrorCode::NotAPartition, "ground size must be positive");
  if (partitions_.empty()) throw Error(ErrorCode::NotAPartition, "assembly has no partitions");
  std::vector<int> seen(static_cast<std::size_t>(m_), 0);
  for (const auto& p : partitions_) {
    for (const auto& block : p.blocks()) {
      for (int x : block) {
        if (x < 0 || x >= m_) {
          throw Error(ErrorCode::NotAPartition,
                      "element " + std::to_string(x + 1) + " outside [" + std::to_string(m_) + "]");
        }
        if (seen[static_cast<std::size_t>(x)]++) {
          throw Error(ErrorCode::NotAPartition, "element " + std::to_string(x + 1) + " repeated");
        }
      }
    }
  }
  for (int x = 0; x < m_; ++x) {
    if (!seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorCode::NotAPartition, "element " + std::to_string(x + 1) + " missing");
    }
  }
  for (std::size_t a = 1; a < partitions_.size(); ++a) {
    if (partitions_[a - 1].min() >= partitions_[a].min()) {
      throw Error(ErrorCode::MinOrderViolated,
                  "partition " + std::to_string(a + 1) + " has a smaller minimum than its predecessor");
    }
  }
  if (weight() > n_) {
    throw Error(ErrorCode::BoundExceeded, "r_1+...+r_l+(l-1) = " + std::to_string(weight()) +
                                              " exceeds " + std::to_string(n_));
  }
}

int Assembly::weight() const {
  int total = static_cast<int>(partitions_.size()) - 1;
  for (const auto& p : partitions_) total += static_cast<int>(p.size());
  return total;
}

Assembly validate_assembly(const RawAssembly& raw, int m, int n) {
  std::vector<OrderedPartition> parts;
  parts.reserve(raw.size());
  for (const auto& raw_partition : raw) {
    std::vector<Block> blocks;
    for (const auto& raw_block : raw_partition) {
      Block block;
      for (int x : raw_block) block.push_back(x - 1);
      blocks.push_back(std::move(block));
    }
    parts.emplace_back(std::move(blocks));
  }
  return Assembly(std::move(parts), m, n);
}

BottMatrix bott_matrix_from_rows(const std::vector<std::vector<long long>>& rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  IntegerMatrix entries(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(j)].size()) != m) {
      throw Error(ErrorCode::NotABottMatrix, "row " + std::to_string(j + 1) + " has wrong length");
    }
    for (Eigen::Index k = 0; k < m; ++k) {
      entries(j, k) = Integer(rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]);
    }
  }
  return BottMatrix(std::move(entries));
}

// ---------------------------------------------------------------------------

namespace detail {

std::uint64_t get_varint(std::string_view bytes, std::size_t& pos) {
  std::uint64_t v = 0;
  int shift = 0;
  while (true) {
    if (pos >= bytes.size() || shift > 63) {
      throw Error(ErrorCode::ParseError, "truncated varint");
    }
    const auto byte = static_cast<unsigned char>(bytes[pos++]);
    v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if (!(byte & 0x80)) return v;
    shift += 7;
  }
}

std::string get_scalar_decimal(std::string_view bytes, std::size_t& pos) {
  const std::uint64_t head = get_varint(bytes, pos);
  if (head & 1) {
    const std::size_t len = static_cast<std::size_t>(head >> 1);
    if (pos + len > bytes.size()) throw Error(ErrorCode::ParseError, "truncated scalar");
    std::string dec(bytes.substr(pos, len));
    pos += len;
    return dec;
  }
  const std::uint64_t zig = head >> 1;
  const std::int64_t v = (zig & 1) ? -static_cast<std::int64_t>(zig >> 1) - 1
                                   : static_cast<std::int64_t>(zig >> 1);
  return std::to_string(v);
}

}  // namespace detail

namespace {

void expect_tag(std::string_view bytes, std::size_t& pos, char tag) {
  if (pos >= bytes.size() || bytes[pos] != tag) {
    throw Error(ErrorCode::ParseError, std::string("expected encoding tag ") + tag);
  }
  ++pos;
}

int get_int(std::string_view bytes, std::size_t& pos) {
  return static_cast<int>(detail::get_varint(bytes, pos));
}

void expect_end(std::string_view bytes, std::size_t pos) {
  if (pos != bytes.size()) throw Error(ErrorCode::ParseError, "trailing bytes");
}

}  // namespace

std::string canonical_encode(const Word& w) {
  std::string out;
  out.push_back('W');
  detail::put_varint(out, static_cast<std::uint64_t>(w.bound()));
  detail::put_varint(out, w.size());
  for (int letter : w.letters()) detail::put_varint(out, static_cast<std::uint64_t>(letter));
  return out;
}

std::string canonical_encode(const Assembly& a) {
  std::string out;
  out.push_back('A');
  detail::put_varint(out, static_cast<std::uint64_t>(a.ground_size()));
  detail::put_varint(out, static_cast<std::uint64_t>(a.bound()));
  detail::put_varint(out, a.size());
  for (const auto& p : a.partitions()) {
    detail::put_varint(out, p.size());
    for (const auto& block : p.blocks()) {
      detail::put_varint(out, block.size());
      for (int x : block) detail::put_varint(out, static_cast<std::uint64_t>(x));
    }
  }
  return out;
}

Word decode_word(std::string_view bytes) {
  std::size_t pos = 0;
  expect_tag(bytes, pos, 'W');
  const int bound = get_int(bytes, pos);
  const int len = get_int(bytes, pos);
  std::vector<int> letters;
  for (int t = 0; t < len; ++t) letters.push_back(get_int(bytes, pos));
  expect_end(bytes, pos);
  return Word(std::move(letters), bound);
}

Assembly decode_assembly(std::string_view bytes) {
  std::size_t pos = 0;
  expect_tag(bytes, pos, 'A');
  const int m = get_int(bytes, pos);
  const int n = get_int(bytes, pos);
  const int ell = get_int(bytes, pos);
  std::vector<OrderedPartition> parts;
  for (int a = 0; a < ell; ++a) {
    const int r = get_int(bytes, pos);
    std::vector<Block> blocks;
    for (int b = 0; b < r; ++b) {
      const int size = get_int(bytes, pos);
      Block block;
      for (int i = 0; i < size; ++i) block.push_back(get_int(bytes, pos));
      blocks.push_back(std::move(block));
    }
    parts.emplace_back(std::move(blocks));
  }
  expect_end(bytes, pos);
  return Assembly(std::move(parts), m, n);
}

BottMatrix decode_bott_matrix(std::string_view bytes) {
  std::size_t pos = 0;
  expect_tag(bytes, pos, 'B');
  const auto m = static_cast<Eigen::Index>(detail::get_varint(bytes, pos));
  IntegerMatrix entries = -IntegerMatrix::Identity(m, m);
  for (Eigen::Index j = 1; j < m; ++j) {
    for (Eigen::Index k = 0; k < j; ++k) entries(j, k) = Integer(detail::get_scalar_decimal(bytes, pos));
  }
  expect_end(bytes, pos);
  return BottMatrix(std::move(entries));
}

}  // namespace bsbott
