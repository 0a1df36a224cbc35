#ifndef ELLROOK_THETA_HPP_
#define ELLROOK_THETA_HPP_

#include <initializer_list>
#include <span>

#include "ellrook/types.hpp"

namespace ellrook {

/// Elliptic nome p. Construction enforces |p| <= 0.95 so that the product
/// truncation stays well under the 200-factor cap.
class Nome {
 public:
  static constexpr Real kMaxModulus = 0.95L;

  Nome() = default;
  explicit Nome(Complex p);

  Complex value() const { return p_; }
  bool is_zero() const { return p_ == Complex(0); }

 private:
  Complex p_{0};
};

/// Base q of theta shifted factorials; must be nonzero.
class Base {
 public:
  explicit Base(Complex q);

  Complex value() const { return q_; }

 private:
  Complex q_;
};

/// q^z on the principal branch. Integral z takes the exact integer-power path,
/// which agrees with exp(z log q) in exact arithmetic.
Complex qpow(Complex q, Complex z);

// Tail bound for the theta product, just under long double epsilon. A
// double-precision bound (1e-16) leaves truncation error that cancellation in
// the rook sums amplifies past 1e-9.
inline constexpr Real kThetaTailTolerance = 1e-20L;

/// Number of factor pairs used for theta(x;p): the smallest J with
/// |p|^J (1 + |x| + 1/|x|) < kThetaTailTolerance, capped at 200.
int theta_truncation(Complex x, const Nome& p);

/// Modified Jacobi theta function prod_{j>=0} (1 - p^j x)(1 - p^{j+1}/x).
Complex theta(Complex x, const Nome& p);

/// theta(x_1,...,x_m;p) = prod theta(x_k;p); the empty product is 1.
Complex theta_multi(std::span<const Complex> xs, const Nome& p);
Complex theta_multi(std::initializer_list<Complex> xs, const Nome& p);

/// Theta shifted factorial (a;q,p)_n for any integer n.
/// Negative n divides by theta(a q^{n+k}); a vanishing factor raises
/// PoleError with index k.
Complex qp_factorial(Complex a, const Base& q, const Nome& p, long n);

/// Ordinary q-shifted factorial (a;q)_n = (a;q,0)_n, q unrestricted.
Complex q_pochhammer(Complex a, Complex q, long n);

}  // namespace ellrook

#endif  // ELLROOK_THETA_HPP_
