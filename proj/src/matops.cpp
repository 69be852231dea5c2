#include <bsbott/maps.hpp>
#include <bsbott/matops.hpp>
#include <bsbott/serialize.hpp>

namespace bsbott {

std::size_t default_matrix_orbit_cap(Eigen::Index m) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t cap = 4;
  for (Eigen::Index j = 1; j <= m; ++j) {
    const auto factor = static_cast<std::size_t>(2 * j);
    if (cap > kMax / factor) return kMax;
    cap *= factor;
  }
  return cap;
}

namespace detail {
void matrix_orbit_cap_exceeded(std::size_t cap) {
  throw Error(ErrorCode::OrbitCapExceeded, "matrix orbit exceeds cap " + std::to_string(cap));
}
}  // namespace detail

std::optional<BlockSplit> find_block_decomposition(const BottMatrix& b, std::optional<std::size_t> cap) {
  for (const auto& member : matrix_orbit(b, cap)) {
    const auto points = block_split_points(member);
    if (points.empty()) continue;
    BlockSplit split{member, {}};
    Eigen::Index start = 0;
    auto cut = [&](Eigen::Index end) {
      const Eigen::Index len = end - start;
      split.blocks.emplace_back(IntegerMatrix(member.entries().block(start, start, len, len)));
      start = end;
    };
    for (auto k : points) cut(k);
    cut(member.size());
    return split;
  }
  return std::nullopt;
}

Report basis_change_check(const BottMatrix& b, int n) {
  Report report("basis-change n=" + std::to_string(n) + " m=" + std::to_string(b.size()));
  if (!is_bs_type(b, n)) {
    report.fail("input matrix is not of BS type for n=" + std::to_string(n));
    return report;
  }
  const auto m = b.size();
  const IndexSet j_b = support(b);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    const IndexSet chosen = subset_from_mask(m, mask);
    const BottMatrix changed = change_basis(b, chosen);
    ++report.checked;
    if (is_subset(j_b, chosen)) {
      if (!(changed == b)) report.fail("support inside I=" + std::to_string(mask) + " but B_I != B");
    } else if (is_bs_type(changed, n)) {
      report.fail("support not inside I=" + std::to_string(mask) + " but B_I is of BS type");
    }
  }
  return report;
}

}  // namespace bsbott
