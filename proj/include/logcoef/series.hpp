#pragma once

/**
 * @file series.hpp
 * @brief Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
 *
 * Every operation keeps the truncation order N of its operands, so a chain of
 * products, reciprocals and logarithms never silently changes precision.
 * Coefficients are checked for finiteness after each operation.
 */

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logcoef {

using cplx = std::complex<double>;

enum class SeriesErrc {
  order_mismatch,
  non_finite,
  not_invertible,
  ill_conditioned,
  bad_constant_term,
  outside_disk,
};

class SeriesError : public std::domain_error {
 public:
  SeriesError(SeriesErrc code, const std::string& what)
      : std::domain_error(what), code_(code) {}
  SeriesErrc code() const noexcept { return code_; }

 private:
  SeriesErrc code_;
};

inline bool is_finite(cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, cplx{0.0, 0.0}) {}

  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncatedSeries(std::size_t order, std::span<const cplx> coeffs) : coeffs_(order + 1) {
    for (std::size_t k = 0; k <= order && k < coeffs.size(); ++k) coeffs_[k] = coeffs[k];
    check_finite("construction");
  }
  TruncatedSeries(std::size_t order, std::initializer_list<cplx> coeffs)
      : TruncatedSeries(order, std::span<const cplx>(coeffs.begin(), coeffs.size())) {}

  static TruncatedSeries constant(std::size_t order, cplx c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static TruncatedSeries one(std::size_t order) { return constant(order, 1.0); }
  /// c * z^k (zero if k exceeds the order).
  static TruncatedSeries monomial(std::size_t order, std::size_t k, cplx c = 1.0) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = c;
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const cplx& operator[](std::size_t k) const { return coeffs_[k]; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o, "addition");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    check_finite("addition");
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o, "subtraction");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    check_finite("subtraction");
    return *this;
  }
  TruncatedSeries& operator*=(cplx c) {
    for (auto& x : coeffs_) x *= c;
    check_finite("scaling");
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, cplx c) { return a *= c; }
  friend TruncatedSeries operator*(cplx c, TruncatedSeries a) { return a *= c; }
  friend TruncatedSeries operator-(TruncatedSeries a) { return a *= -1.0; }

  /// Multiplies by z; the top coefficient falls off.
  TruncatedSeries times_z() const {
    TruncatedSeries s(order());
    for (std::size_t k = 1; k <= order(); ++k) s.coeffs_[k] = coeffs_[k - 1];
    return s;
  }

  /// Divides by z; requires c_0 == 0 and leaves the top coefficient zero.
  TruncatedSeries over_z() const {
    if (coeffs_[0] != cplx{0.0, 0.0})
      throw SeriesError(SeriesErrc::bad_constant_term, "over_z: constant term must vanish");
    TruncatedSeries s(order());
    for (std::size_t k = 0; k < order(); ++k) s.coeffs_[k] = coeffs_[k + 1];
    return s;
  }

  /// Same function at a different truncation order.
  TruncatedSeries resized(std::size_t order) const { return TruncatedSeries(order, coeffs_); }

  void require_same_order(const TruncatedSeries& o, const char* op) const {
    if (o.order() != order())
      throw SeriesError(SeriesErrc::order_mismatch,
                        std::string(op) + ": order mismatch (" + std::to_string(order()) +
                            " vs " + std::to_string(o.order()) + ")");
  }

  void check_finite(const char* op) const {
    for (const auto& c : coeffs_)
      if (!is_finite(c))
        throw SeriesError(SeriesErrc::non_finite, std::string(op) + ": non-finite coefficient");
  }

 private:
  friend class SeriesBuilder;
  std::vector<cplx> coeffs_;
};

/// Mutable staging area for algorithms that fill coefficients one at a time.
class SeriesBuilder {
 public:
  explicit SeriesBuilder(std::size_t order) : s_(order) {}
  cplx& operator[](std::size_t k) { return s_.coeffs_[k]; }
  const cplx& operator[](std::size_t k) const { return s_.coeffs_[k]; }
  TruncatedSeries finish(const char* op) && {
    s_.check_finite(op);
    return std::move(s_);
  }

 private:
  TruncatedSeries s_;
};

/// Cauchy product truncated at the shared order.
inline TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_order(b, "ts_mul");
  const std::size_t n = a.order();
  SeriesBuilder r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == cplx{0.0, 0.0}) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return std::move(r).finish("ts_mul");
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return ts_mul(a, b);
}

inline constexpr double kIllConditionedThreshold = 1e-12;

/// 1/a by forward substitution. |c_0| below `threshold` is rejected as ill-conditioned.
inline TruncatedSeries ts_reciprocal(const TruncatedSeries& a,
                                     double threshold = kIllConditionedThreshold) {
  if (a[0] == cplx{0.0, 0.0})
    throw SeriesError(SeriesErrc::not_invertible, "ts_reciprocal: c0 = 0");
  if (std::abs(a[0]) < threshold)
    throw SeriesError(SeriesErrc::ill_conditioned, "ts_reciprocal: |c0| below threshold");
  const std::size_t n = a.order();
  SeriesBuilder r(n);
  const cplx inv0 = 1.0 / a[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
    r[k] = -acc * inv0;
  }
  return std::move(r).finish("ts_reciprocal");
}

inline constexpr double kUnitConstantTolerance = 1e-12;

/// Principal logarithm of a series with c_0 = 1, via k b_k = k a_k - sum_{j<k} j b_j a_{k-j}.
inline TruncatedSeries ts_log(const TruncatedSeries& a) {
  if (std::abs(a[0] - 1.0) > kUnitConstantTolerance)
    throw SeriesError(SeriesErrc::bad_constant_term, "ts_log: c0 must equal 1");
  const std::size_t n = a.order();
  SeriesBuilder b(n);
  for (std::size_t k = 1; k <= n; ++k) {
    cplx acc = static_cast<double>(k) * a[k];
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * b[j] * a[k - j];
    b[k] = acc / static_cast<double>(k);
  }
  return std::move(b).finish("ts_log");
}

/// exp of a series with c_0 = 0, via k b_k = sum_{j=1..k} j a_j b_{k-j}.
inline TruncatedSeries ts_exp(const TruncatedSeries& a) {
  if (a[0] != cplx{0.0, 0.0})
    throw SeriesError(SeriesErrc::bad_constant_term, "ts_exp: c0 must equal 0");
  const std::size_t n = a.order();
  SeriesBuilder b(n);
  b[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    cplx acc{0.0, 0.0};
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * b[k - j];
    b[k] = acc / static_cast<double>(k);
  }
  return std::move(b).finish("ts_exp");
}

/// Term-wise derivative; the order is kept and c_N is zero-filled.
inline TruncatedSeries ts_derivative(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  SeriesBuilder d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = static_cast<double>(k + 1) * a[k + 1];
  return std::move(d).finish("ts_derivative");
}

/// Antiderivative vanishing at 0; a_N falls off the top.
inline TruncatedSeries ts_integrate(const TruncatedSeries& a) {
  const std::size_t n = a.order();
  SeriesBuilder s(n);
  for (std::size_t k = 1; k <= n; ++k) s[k] = a[k - 1] / static_cast<double>(k);
  return std::move(s).finish("ts_integrate");
}

/// Horner evaluation on the closed unit disk.
inline cplx ts_eval(const TruncatedSeries& a, cplx z) {
  if (!is_finite(z)) throw SeriesError(SeriesErrc::non_finite, "ts_eval: non-finite argument");
  if (std::abs(z) > 1.0) throw SeriesError(SeriesErrc::outside_disk, "ts_eval: |z| > 1");
  cplx acc{0.0, 0.0};
  for (std::size_t k = a.order() + 1; k-- > 0;) acc = acc * z + a[k];
  return acc;
}

/// a^p for a series with c_0 = 1, as exp(p log a).
inline TruncatedSeries ts_pow(const TruncatedSeries& a, cplx p) { return ts_exp(p * ts_log(a)); }

/// (exp(eps * a) - 1) / eps for c_0(a) = 0, summed exactly in truncated arithmetic.
/// Well defined at eps = 0, where it reduces to `a`.
inline TruncatedSeries ts_expm1_over(const TruncatedSeries& a, double eps) {
  if (a[0] != cplx{0.0, 0.0})
    throw SeriesError(SeriesErrc::bad_constant_term, "ts_expm1_over: c0 must equal 0");
  const std::size_t n = a.order();
  TruncatedSeries sum = a;
  TruncatedSeries power = a;  // eps^{k-1} a^k / k!
  for (std::size_t k = 2; k <= n; ++k) {
    power = ts_mul(power, a) * (eps / static_cast<double>(k));
    sum += power;
  }
  return sum;
}

}  // namespace logcoef
