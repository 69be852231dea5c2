#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace bsbott {

// Expression templates are disabled so the types behave as plain values inside
// Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using IntegerVector = Vector<Integer>;

/// Value of `x` as int64 when it is representable.
template <typename Scalar>
std::optional<std::int64_t> to_int64(const Scalar& x) {
  if constexpr (std::numeric_limits<Scalar>::is_bounded) {
    return static_cast<std::int64_t>(x);
  } else {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min()) {
      return std::nullopt;
    }
    return x.template convert_to<std::int64_t>();
  }
}

template <typename Scalar>
std::string to_decimal(const Scalar& x) {
  if constexpr (std::numeric_limits<Scalar>::is_bounded) {
    return std::to_string(x);
  } else {
    return x.str();
  }
}

}  // namespace bsbott
