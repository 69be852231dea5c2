#pragma once

#include <bsbott/error.hpp>
#include <bsbott/scalar.hpp>

#include <string>

namespace bsbott {

/// Truncated power series in x and y: coefficients of x^i y^j for i <= max_x,
/// j <= max_y. Every operation truncates to the same bounds.
template <typename Scalar>
class BivariateSeries {
 public:
  BivariateSeries(int max_x, int max_y) : coeffs_(Matrix<Scalar>::Zero(max_x + 1, max_y + 1)) {}

  static BivariateSeries constant(int max_x, int max_y, const Scalar& c) {
    BivariateSeries s(max_x, max_y);
    s.coeffs_(0, 0) = c;
    return s;
  }

  static BivariateSeries monomial(int max_x, int max_y, int dx, int dy, const Scalar& c = Scalar(1)) {
    BivariateSeries s(max_x, max_y);
    if (dx <= max_x && dy <= max_y) s.coeffs_(dx, dy) = c;
    return s;
  }

  /// e^x - 1.
  static BivariateSeries exp_x_minus_one(int max_x, int max_y) {
    BivariateSeries s(max_x, max_y);
    Scalar term(1);
    for (int i = 1; i <= max_x; ++i) {
      term /= Scalar(i);
      s.coeffs_(i, 0) = term;
    }
    return s;
  }

  int max_x() const noexcept { return static_cast<int>(coeffs_.rows()) - 1; }
  int max_y() const noexcept { return static_cast<int>(coeffs_.cols()) - 1; }
  const Scalar& coeff(int dx, int dy) const { return coeffs_(dx, dy); }
  const Matrix<Scalar>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const { return coeffs_.isZero(); }
  bool has_zero_constant() const { return coeffs_(0, 0) == Scalar(0); }

  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) {
    a.require_same_bounds(b);
    a.coeffs_ += b.coeffs_;
    return a;
  }

  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) {
    a.require_same_bounds(b);
    a.coeffs_ -= b.coeffs_;
    return a;
  }

  friend BivariateSeries operator*(BivariateSeries a, const Scalar& c) {
    a.coeffs_ *= c;
    return a;
  }

  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    a.require_same_bounds(b);
    const int mx = a.max_x();
    const int my = a.max_y();
    BivariateSeries out(mx, my);
    for (int i1 = 0; i1 <= mx; ++i1) {
      for (int j1 = 0; j1 <= my; ++j1) {
        const Scalar& c1 = a.coeffs_(i1, j1);
        if (c1 == Scalar(0)) continue;
        for (int i2 = 0; i1 + i2 <= mx; ++i2) {
          for (int j2 = 0; j1 + j2 <= my; ++j2) {
            const Scalar& c2 = b.coeffs_(i2, j2);
            if (c2 != Scalar(0)) out.coeffs_(i1 + i2, j1 + j2) += c1 * c2;
          }
        }
      }
    }
    return out;
  }

  /// Multiplication by y^k.
  BivariateSeries shift_y(int k) const {
    BivariateSeries out(max_x(), max_y());
    const int keep = max_y() + 1 - k;
    if (keep > 0) out.coeffs_.rightCols(keep) = coeffs_.leftCols(keep);
    return out;
  }

  /// Division by y; the y^0 coefficients must vanish. The y truncation drops
  /// by one.
  BivariateSeries divide_by_y() const {
    if (!coeffs_.col(0).isZero()) internal_assertion("series is not divisible by y");
    if (max_y() < 1) internal_assertion("series has no y terms to divide");
    BivariateSeries out(max_x(), max_y() - 1);
    out.coeffs_ = coeffs_.rightCols(max_y());
    return out;
  }

  /// 1/(1-u) for u with zero constant term.
  BivariateSeries geometric() const {
    require_zero_constant("geometric");
    BivariateSeries sum = constant(max_x(), max_y(), Scalar(1));
    BivariateSeries power = sum;
    while (true) {
      power = power * *this;
      if (power.is_zero()) return sum;
      sum = sum + power;
    }
  }

  /// exp(u) - 1 for u with zero constant term, as the sum of u^k / k!.
  BivariateSeries exp_minus_one() const {
    require_zero_constant("exp");
    BivariateSeries sum(max_x(), max_y());
    BivariateSeries term = constant(max_x(), max_y(), Scalar(1));
    for (int k = 1;; ++k) {
      term = (term * *this) * (Scalar(1) / Scalar(k));
      if (term.is_zero()) return sum;
      sum = sum + term;
    }
  }

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
    return a.max_x() == b.max_x() && a.max_y() == b.max_y() && a.coeffs_ == b.coeffs_;
  }

 private:
  void require_same_bounds(const BivariateSeries& other) const {
    if (max_x() != other.max_x() || max_y() != other.max_y()) {
      internal_assertion("series truncations differ");
    }
  }
  void require_zero_constant(const char* what) const {
    if (!has_zero_constant()) internal_assertion(std::string(what) + " needs a zero constant term");
  }

  Matrix<Scalar> coeffs_;
};

using Series2 = BivariateSeries<Rational>;

}  // namespace bsbott
