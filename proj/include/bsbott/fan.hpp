#pragma once

#include <bsbott/core.hpp>

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace bsbott {

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar exact_determinant(Matrix<Scalar> a) {
  const auto n = a.rows();
  if (n != a.cols()) throw Error(ErrorCode::IndexOutOfRange, "determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == Scalar(0)) ++pivot;
      if (pivot == n) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = Scalar(0);
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Complete fan with 2*dim rays. Ray j < dim is e_{j+1}; ray dim + j is
/// v_{j+1}. Cones are sorted ray-index lists, kept in sorted order.
template <typename Scalar = Integer>
struct BasicFan {
  Eigen::Index dim = 0;
  Matrix<Scalar> rays;
  std::vector<std::vector<Eigen::Index>> maximal_cones;

  std::string label(Eigen::Index ray) const {
    return (ray < dim ? "e" : "v") + std::to_string((ray % dim) + 1);
  }

  friend bool operator==(const BasicFan& x, const BasicFan& y) {
    return x.dim == y.dim && x.rays.rows() == y.rays.rows() && x.rays.cols() == y.rays.cols() &&
           x.rays == y.rays && x.maximal_cones == y.maximal_cones;
  }
};

using Fan = BasicFan<Integer>;

/// Rays [e_1 .. e_m v_1 .. v_m] with v_j the columns of b; a set of m rays is
/// a maximal cone iff it never holds both e_i and v_i.
template <typename Scalar>
BasicFan<Scalar> fan_of(const BasicBottMatrix<Scalar>& b) {
  const auto m = b.size();
  if (m > 30) throw Error(ErrorCode::IndexOutOfRange, "fans are built for m <= 30");
  BasicFan<Scalar> fan;
  fan.dim = m;
  fan.rays.resize(m, 2 * m);
  fan.rays << Matrix<Scalar>::Identity(m, m), b.entries();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Eigen::Index> cone;
    for (Eigen::Index i = 0; i < m; ++i) cone.push_back(((mask >> i) & 1U) ? m + i : i);
    std::sort(cone.begin(), cone.end());
    fan.maximal_cones.push_back(std::move(cone));
  }
  std::sort(fan.maximal_cones.begin(), fan.maximal_cones.end());
  return fan;
}

template <typename Scalar>
Matrix<Scalar> cone_generators(const BasicFan<Scalar>& fan, const std::vector<Eigen::Index>& cone) {
  Matrix<Scalar> g(fan.rays.rows(), static_cast<Eigen::Index>(cone.size()));
  for (std::size_t c = 0; c < cone.size(); ++c) g.col(static_cast<Eigen::Index>(c)) = fan.rays.col(cone[c]);
  return g;
}

/// Every maximal cone is generated by a lattice basis.
template <typename Scalar>
bool is_smooth(const BasicFan<Scalar>& fan) {
  for (const auto& cone : fan.maximal_cones) {
    if (static_cast<Eigen::Index>(cone.size()) != fan.dim) return false;
    const Scalar d = exact_determinant(cone_generators(fan, cone));
    if (d != Scalar(1) && d != Scalar(-1)) return false;
  }
  return true;
}

/// Product fan: rays embedded block-wise, cones are unions of one maximal
/// cone from each factor.
template <typename Scalar>
BasicFan<Scalar> product_fan(const BasicFan<Scalar>& f1, const BasicFan<Scalar>& f2) {
  const auto m1 = f1.dim;
  const auto m2 = f2.dim;
  const auto m = m1 + m2;
  BasicFan<Scalar> out;
  out.dim = m;
  out.rays = Matrix<Scalar>::Zero(m, 2 * m);
  auto map1 = [&](Eigen::Index r) { return r < m1 ? r : m + (r - m1); };
  auto map2 = [&](Eigen::Index r) { return r < m2 ? m1 + r : m + m1 + (r - m2); };
  for (Eigen::Index r = 0; r < 2 * m1; ++r) out.rays.col(map1(r)).head(m1) = f1.rays.col(r);
  for (Eigen::Index r = 0; r < 2 * m2; ++r) out.rays.col(map2(r)).tail(m2) = f2.rays.col(r);
  for (const auto& c1 : f1.maximal_cones) {
    for (const auto& c2 : f2.maximal_cones) {
      std::vector<Eigen::Index> cone;
      for (auto r : c1) cone.push_back(map1(r));
      for (auto r : c2) cone.push_back(map2(r));
      std::sort(cone.begin(), cone.end());
      out.maximal_cones.push_back(std::move(cone));
    }
  }
  std::sort(out.maximal_cones.begin(), out.maximal_cones.end());
  return out;
}

nlohmann::ordered_json fan_to_json(const Fan& fan);

/// One line per ray: label followed by its coordinates.
std::string fan_to_csv(const Fan& fan);

}  // namespace bsbott
