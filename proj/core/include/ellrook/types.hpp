#ifndef ELLROOK_TYPES_HPP_
#define ELLROOK_TYPES_HPP_

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>

namespace ellrook {

// All kernels work in extended precision. The two-sided identity checks sum
// products of theta ratios whose magnitudes spread over many decades when
// |q| is small, and double precision leaves too little headroom for 1e-9.
using Real = long double;
using Complex = std::complex<Real>;

// Any denominator (theta value or q-factor) below this magnitude is treated
// as a pole. Callers that sample parameters resample on PoleError.
inline constexpr Real kPoleThreshold = 1e-8L;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a denominator vanishes (or falls under kPoleThreshold).
// `index` identifies the offending factor within the evaluated product.
class PoleError : public std::runtime_error {
 public:
  PoleError(const std::string& what, long index)
      : std::runtime_error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

// Enumeration size caps exceeded.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InvalidBoard : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Relative discrepancy |lhs - rhs| / max(|lhs|, |rhs|, 1e-300).
inline Real relative_error(Complex lhs, Complex rhs) {
  Real scale = std::max({std::abs(lhs), std::abs(rhs), Real(1e-300L)});
  return std::abs(lhs - rhs) / scale;
}

/// One evaluation of both sides of an identity.
struct TwoSided {
  Complex lhs;
  Complex rhs;
  Real relerr() const { return relative_error(lhs, rhs); }
};

}  // namespace ellrook

#endif  // ELLROOK_TYPES_HPP_
