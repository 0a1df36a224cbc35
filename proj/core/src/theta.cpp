#include "ellrook/theta.hpp"

#include <cmath>
#include <string>

namespace ellrook {

namespace {

constexpr int kMaxFactors = 200;

bool is_integral(Complex z, long* out) {
  if (z.imag() != 0) return false;
  Real r = z.real();
  if (std::fabs(r) > 1e9L || std::floor(r) != r) return false;
  *out = static_cast<long>(r);
  return true;
}

}  // namespace

Nome::Nome(Complex p) : p_(p) {
  Real m = std::abs(p);
  if (!(m < 1)) throw DomainError("nome must satisfy |p| < 1");
  if (m > kMaxModulus) throw DomainError("nome modulus exceeds 0.95");
}

Base::Base(Complex q) : q_(q) {
  if (q == Complex(0)) throw DomainError("base q must be nonzero");
}

Complex qpow(Complex q, Complex z) {
  long n = 0;
  if (is_integral(z, &n)) {
    if (n == 0) return Complex(1);
    if (q == Complex(0)) {
      if (n < 0) throw DomainError("0 raised to a negative power");
      return Complex(0);
    }
    Complex base = n < 0 ? Complex(1) / q : q;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Complex acc(1);
    while (e) {
      if (e & 1UL) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  if (q == Complex(0)) throw DomainError("0 raised to a non-integral power");
  return std::exp(z * std::log(q));
}

int theta_truncation(Complex x, const Nome& p) {
  Real mp = std::abs(p.value());
  if (mp == 0) return 1;
  Real ax = std::abs(x);
  Real bound = 1 + ax + 1 / ax;
  int J = 0;
  Real pj = 1;
  while (J < kMaxFactors && pj * bound >= kThetaTailTolerance) {
    pj *= mp;
    ++J;
  }
  return J == 0 ? 1 : J;
}

Complex theta(Complex x, const Nome& p) {
  if (x == Complex(0)) throw DomainError("theta(x;p) is singular at x = 0");
  const Complex pv = p.value();
  const int J = theta_truncation(x, p);
  const Complex inv = Complex(1) / x;
  Complex acc(1);
  Complex pj(1);
  for (int j = 0; j < J; ++j) {
    Complex next = pj * pv;
    acc *= (Complex(1) - pj * x) * (Complex(1) - next * inv);
    pj = next;
  }
  return acc;
}

Complex theta_multi(std::span<const Complex> xs, const Nome& p) {
  Complex acc(1);
  for (Complex x : xs) acc *= theta(x, p);
  return acc;
}

Complex theta_multi(std::initializer_list<Complex> xs, const Nome& p) {
  return theta_multi(std::span<const Complex>(xs.begin(), xs.size()), p);
}

Complex qp_factorial(Complex a, const Base& q, const Nome& p, long n) {
  const Complex qv = q.value();
  if (n == 0) return Complex(1);
  Complex acc(1);
  if (n > 0) {
    Complex x = a;
    for (long k = 0; k < n; ++k) {
      acc *= theta(x, p);
      x *= qv;
    }
    return acc;
  }
  Complex x = a * qpow(qv, Complex(static_cast<Real>(n)));
  for (long k = 0; k < -n; ++k) {
    Complex t = theta(x, p);
    if (std::abs(t) < kPoleThreshold) {
      throw PoleError("vanishing theta factor in (a;q,p)_n, n=" + std::to_string(n), k);
    }
    acc *= t;
    x *= qv;
  }
  return Complex(1) / acc;
}

Complex q_pochhammer(Complex a, Complex q, long n) {
  if (n == 0) return Complex(1);
  Complex acc(1);
  if (n > 0) {
    Complex x = a;
    for (long k = 0; k < n; ++k) {
      acc *= Complex(1) - x;
      x *= q;
    }
    return acc;
  }
  Complex x = a * qpow(q, Complex(static_cast<Real>(n)));
  for (long k = 0; k < -n; ++k) {
    Complex t = Complex(1) - x;
    if (std::abs(t) < kPoleThreshold) {
      throw PoleError("vanishing factor in (a;q)_n, n=" + std::to_string(n), k);
    }
    acc *= t;
    x *= q;
  }
  return Complex(1) / acc;
}

}  // namespace ellrook
