#include "ellrook/theta.hpp"

#include <gtest/gtest.h>

#include "support/oracles.hpp"

namespace ellrook {
namespace {

using testing::Sampler;
using testing::theta_long;

TEST(Nome, RejectsOutsideDisc) {
  EXPECT_THROW(Nome(Complex(1.0L, 0)), DomainError);
  EXPECT_THROW(Nome(Complex(0, -1.2L)), DomainError);
  EXPECT_THROW(Nome(Complex(0.96L, 0)), DomainError);
  EXPECT_NO_THROW(Nome(Complex(0.95L, 0)));
  EXPECT_TRUE(Nome().is_zero());
}

TEST(Base, RejectsZero) { EXPECT_THROW(Base(Complex(0)), DomainError); }

TEST(Theta, ZeroNomeIsOneMinusX) {
  EXPECT_EQ(theta(Complex(0.5L), Nome()), Complex(0.5L));
  Sampler s(1);
  for (int i = 0; i < 100; ++i) {
    Complex x = s.polar(0.1, 10);
    EXPECT_EQ(theta(x, Nome()), Complex(1) - x);
  }
}

TEST(Theta, VanishesAtOne) {
  EXPECT_EQ(theta(Complex(1), Nome(Complex(0.3L))), Complex(0));
  EXPECT_EQ(theta(Complex(1), Nome(Complex(0.2L, 0.4L))), Complex(0));
}

TEST(Theta, SingularAtZero) {
  EXPECT_THROW(theta(Complex(0), Nome(Complex(0.1L))), DomainError);
  EXPECT_THROW(theta_multi({Complex(2), Complex(0)}, Nome()), DomainError);
}

TEST(Theta, MatchesLongProduct) {
  const Complex x(2, 0.5L);
  const Nome p(Complex(0.2L));
  EXPECT_LT(relative_error(theta(x, p), theta_long(x, p.value())), 1e-13L);
  Sampler s(2);
  for (int i = 0; i < 200; ++i) {
    Complex xi = s.polar(0.05, 20);
    Complex pi = s.polar(0.0, 0.95);
    EXPECT_LT(relative_error(theta(xi, Nome(pi)), theta_long(xi, pi)), 1e-13L);
  }
}

TEST(Theta, TruncationLength) {
  EXPECT_EQ(theta_truncation(Complex(2), Nome()), 1);
  const Nome p(Complex(0.5L));
  const int j = theta_truncation(Complex(1), p);
  // 3 * 0.5^J < 1e-20 first at J = 69
  EXPECT_EQ(j, 69);
  EXPECT_LE(theta_truncation(Complex(1e-30L), Nome(Complex(0.95L))), 200);
}

TEST(ThetaMulti, Conventions) {
  const Nome p(Complex(0.3L, 0.1L));
  EXPECT_EQ(theta_multi({}, p), Complex(1));
  const Complex x(0.7L, -1.1L);
  EXPECT_EQ(theta_multi({x}, p), theta(x, p));
  const Complex t = theta(x, p);
  EXPECT_LT(relative_error(theta_multi({x, Real(1) / x}, p), -(Real(1) / x) * t * t), 1e-15L);
}

TEST(ThetaProperties, InversionAndQuasiPeriodicity) {
  Sampler s(3);
  for (int i = 0; i < 500; ++i) {
    const Complex x = s.polar(0.2, 5);
    const Nome p(s.p());
    const Complex t = theta(x, p);
    EXPECT_LT(relative_error(t, -x * theta(Real(1) / x, p)), 1e-12L);
    EXPECT_LT(relative_error(theta(p.value() * x, p), -(Real(1) / x) * t), 1e-12L);
  }
}

TEST(ThetaProperties, AdditionFormula) {
  Sampler s(4);
  for (int i = 0; i < 500; ++i) {
    const Complex x = s.polar(0.3, 3), y = s.polar(0.3, 3), u = s.polar(0.3, 3), v = s.polar(0.3, 3);
    const Nome p(s.p());
    const Complex a = theta_multi({x * y, x / y, u * v, u / v}, p);
    const Complex b = theta_multi({x * v, x / v, u * y, u / y}, p);
    const Complex c = u / y * theta_multi({y * v, y / v, x * u, x / u}, p);
    const Real scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    EXPECT_LT(std::abs(a - b - c) / scale, 1e-11L);
  }
}

TEST(QpFactorial, DefinedCases) {
  const Base q(Complex(0.6L, 0.2L));
  const Nome p(Complex(0.1L, -0.2L));
  const Complex a(1.3L, 0.4L);
  EXPECT_EQ(qp_factorial(a, q, p, 0), Complex(1));
  EXPECT_LT(relative_error(qp_factorial(a, q, p, -1), Real(1) / theta(a / q.value(), p)), 1e-15L);
  EXPECT_LT(relative_error(qp_factorial(a, q, p, 3),
                           theta(a, p) * theta(a * q.value(), p) * theta(a * q.value() * q.value(), p)),
            1e-15L);
  Complex expect(1);
  for (int k = 0; k < 5; ++k) expect *= Complex(1) - a * qpow(q.value(), Real(k));
  EXPECT_LT(relative_error(qp_factorial(a, q, Nome(), 5), expect), 1e-16L);
  EXPECT_LT(relative_error(q_pochhammer(a, q.value(), 5), expect), 1e-16L);
}

TEST(QpFactorial, NegativeIndexPoleCarriesIndex) {
  const Complex q(0.5L);
  // (a;q,p)_{-3} divides by theta(a q^{-3}), theta(a q^{-2}), theta(a q^{-1});
  // a = q^2 makes the third factor theta(q) fine and the second theta(1) = 0.
  try {
    qp_factorial(q * q, Base(q), Nome(Complex(0.1L)), -3);
    FAIL() << "expected a pole";
  } catch (const PoleError& e) {
    EXPECT_EQ(e.index(), 1);
  }
  EXPECT_THROW(q_pochhammer(q * q, q, -3), PoleError);
}

TEST(QpFactorial, SplitsOverMixedSigns) {
  Sampler s(5);
  for (int i = 0; i < 200; ++i) {
    const Complex a = s.ab();
    const Base q(s.q());
    const Nome p(s.p());
    const long m = s.integer(-5, 5), n = s.integer(-5, 5);
    Complex lhs, rhs;
    try {
      lhs = qp_factorial(a, q, p, m + n);
      rhs = qp_factorial(a, q, p, m) * qp_factorial(a * qpow(q.value(), Real(m)), q, p, n);
    } catch (const PoleError&) {
      continue;
    }
    EXPECT_LT(relative_error(lhs, rhs), 1e-11L) << m << " " << n;
  }
}

TEST(Qpow, IntegerAndPrincipalBranch) {
  const Complex q(-0.5L, 0.3L);
  EXPECT_LT(relative_error(qpow(q, Real(3)), q * q * q), 1e-18L);
  EXPECT_LT(relative_error(qpow(q, Real(-2)), Real(1) / (q * q)), 1e-18L);
  EXPECT_LT(relative_error(qpow(q, Complex(0.5L)), std::sqrt(q)), 1e-18L);
  EXPECT_THROW(qpow(Complex(0), Real(-1)), DomainError);
}

}  // namespace
}  // namespace ellrook
