#include "ellrook/weights.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace ellrook {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Ratio of products of factor(x) over numerator and denominator arguments.
// factor is theta(.;p) for the elliptic family and 1 - x for the (a,b;q)
// family, evaluated in the same order so that p = 0 reproduces the rational
// family bit for bit.
template <class Factor>
Complex factor_ratio(std::initializer_list<Complex> num, std::initializer_list<Complex> den,
                     Factor&& factor, const char* what) {
  Complex top(1);
  for (Complex x : num) top *= factor(x);
  Complex bottom(1);
  long idx = 0;
  for (Complex x : den) {
    Complex d = factor(x);
    if (std::abs(d) < kPoleThreshold) throw PoleError(std::string("pole in ") + what, idx);
    bottom *= d;
    ++idx;
  }
  return top / bottom;
}

Complex one_minus(Complex x) { return Complex(1) - x; }

template <class Factor>
Complex ab_small_weight(Complex a, Complex b, Complex q, Complex k, Factor&& fac) {
  auto Q = [&](Complex e) { return qpow(q, e); };
  return factor_ratio({a * Q(Real(2) * k + Real(1)), b * Q(k), a * Q(k - Real(2)) / b},
                      {a * Q(Real(2) * k - Real(1)), b * Q(k + Real(2)), a * Q(k) / b}, fac,
                      "small weight") *
         q;
}

template <class Factor>
Complex ab_big_weight(Complex a, Complex b, Complex q, Complex k, Factor&& fac) {
  auto Q = [&](Complex e) { return qpow(q, e); };
  return factor_ratio({a * Q(Real(1) + Real(2) * k), b * q, b * q * q, a / q / b, a / b},
                      {a * q, b * Q(k + Real(1)), b * Q(k + Real(2)), a * Q(k - Real(1)) / b,
                       a * Q(k) / b},
                      fac, "big weight") *
         Q(k);
}

template <class Factor>
Complex ab_number(Complex a, Complex b, Complex q, Complex z, Factor&& fac) {
  auto Q = [&](Complex e) { return qpow(q, e); };
  return factor_ratio({Q(z), a * Q(z), b * q * q, a / b},
                      {q, a * q, b * Q(z + Real(1)), a * Q(z - Real(1)) / b}, fac,
                      "elliptic number");
}

void require_nonzero(Complex v, const char* name) {
  if (v == Complex(0)) throw DomainError(std::string(name) + " must be nonzero");
}

Complex ab_binomial(Complex a, Complex b, Complex q, const Nome& p, long n, long k) {
  const Base base(q);
  const long m = n - k;
  Complex num = qp_factorial(qpow(q, Real(1 + k)), base, p, m) *
                qp_factorial(a * qpow(q, Real(1 + k)), base, p, m) *
                qp_factorial(b * qpow(q, Real(1 + k)), base, p, m) *
                qp_factorial(a * qpow(q, Real(1 - k)) / b, base, p, m);
  Complex den(1);
  long idx = 0;
  for (Complex x : {q, a * q, b * qpow(q, Real(1 + 2 * k)), a * q / b}) {
    Complex d = qp_factorial(x, base, p, m);
    if (std::abs(d) < kPoleThreshold) throw PoleError("pole in elliptic binomial", idx);
    den *= d;
    ++idx;
  }
  return num / den;
}

}  // namespace

WeightFamily elliptic_family(Complex a, Complex b, Complex q, Complex p) {
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  require_nonzero(q, "q");
  return EllipticParams{a, b, q, Nome(p)};
}

WeightFamily abq_family(Complex a, Complex b, Complex q) {
  require_nonzero(a, "a");
  require_nonzero(b, "b");
  require_nonzero(q, "q");
  return AbqParams{a, b, q};
}

WeightFamily aq_family(Complex a, Complex q) {
  require_nonzero(a, "a");
  require_nonzero(q, "q");
  return AqParams{a, q};
}

WeightFamily q_family(Complex q) {
  require_nonzero(q, "q");
  return QParams{q};
}

std::string family_name(const WeightFamily& f) {
  return std::visit(overloaded{[](const EllipticParams&) { return std::string("elliptic"); },
                               [](const AbqParams&) { return std::string("abq"); },
                               [](const AqParams&) { return std::string("aq"); },
                               [](const QParams&) { return std::string("q"); }},
                    f);
}

Complex family_base(const WeightFamily& f) {
  return std::visit([](const auto& s) { return s.q; }, f);
}

Complex small_weight(const WeightFamily& f, Complex k) {
  return std::visit(
      overloaded{
          [&](const EllipticParams& e) {
            return ab_small_weight(e.a, e.b, e.q, k, [&](Complex x) { return theta(x, e.p); });
          },
          [&](const AbqParams& e) { return ab_small_weight(e.a, e.b, e.q, k, one_minus); },
          [&](const AqParams& e) {
            Complex num = Complex(1) - e.a * qpow(e.q, Real(2) * k + Real(1));
            Complex den = Complex(1) - e.a * qpow(e.q, Real(2) * k - Real(1));
            if (std::abs(den) < kPoleThreshold) throw PoleError("pole in a;q small weight", 0);
            return num / den / e.q;
          },
          [&](const QParams& e) { return e.q; }},
      f);
}

Complex big_weight(const WeightFamily& f, Complex k) {
  if (k == Complex(0)) return Complex(1);
  return std::visit(
      overloaded{
          [&](const EllipticParams& e) {
            return ab_big_weight(e.a, e.b, e.q, k, [&](Complex x) { return theta(x, e.p); });
          },
          [&](const AbqParams& e) { return ab_big_weight(e.a, e.b, e.q, k, one_minus); },
          [&](const AqParams& e) {
            Complex num = Complex(1) - e.a * qpow(e.q, Real(1) + Real(2) * k);
            Complex den = Complex(1) - e.a * e.q;
            if (std::abs(den) < kPoleThreshold) throw PoleError("pole in a;q big weight", 0);
            return num / den * qpow(e.q, -k);
          },
          [&](const QParams& e) { return qpow(e.q, k); }},
      f);
}

WeightFamily shift_params(const WeightFamily& f, Complex t) {
  return std::visit(
      overloaded{[&](const EllipticParams& e) -> WeightFamily {
                   return EllipticParams{e.a * qpow(e.q, Real(2) * t), e.b * qpow(e.q, t), e.q, e.p};
                 },
                 [&](const AbqParams& e) -> WeightFamily {
                   return AbqParams{e.a * qpow(e.q, Real(2) * t), e.b * qpow(e.q, t), e.q};
                 },
                 [&](const AqParams& e) -> WeightFamily {
                   return AqParams{e.a * qpow(e.q, Real(2) * t), e.q};
                 },
                 [&](const QParams& e) -> WeightFamily { return e; }},
      f);
}

Complex q_number(Complex q, Complex z) {
  Complex den = Complex(1) - q;
  if (std::abs(den) < kPoleThreshold) throw PoleError("q-number at q = 1", 0);
  return (Complex(1) - qpow(q, z)) / den;
}

Complex ell_number(const WeightFamily& f, Complex z) {
  return std::visit(
      overloaded{
          [&](const EllipticParams& e) {
            return ab_number(e.a, e.b, e.q, z, [&](Complex x) { return theta(x, e.p); });
          },
          [&](const AbqParams& e) { return ab_number(e.a, e.b, e.q, z, one_minus); },
          [&](const AqParams& e) {
            Complex d1 = Complex(1) - e.q;
            Complex d2 = Complex(1) - e.a * e.q;
            if (std::abs(d1) < kPoleThreshold) throw PoleError("pole in a;q number", 0);
            if (std::abs(d2) < kPoleThreshold) throw PoleError("pole in a;q number", 1);
            return (Complex(1) - qpow(e.q, z)) * (Complex(1) - e.a * qpow(e.q, z)) / (d1 * d2) *
                   qpow(e.q, Real(1) - z);
          },
          [&](const QParams& e) { return q_number(e.q, z); }},
      f);
}

Complex ell_number_split(const WeightFamily& f, Complex z, Complex y) {
  return ell_number(f, y) + big_weight(f, y) * ell_number(shift_params(f, y), z - y);
}

Complex q_binomial(Complex q, long n, long k) {
  if (n < 0) throw DomainError("q_binomial requires n >= 0");
  if (k < 0 || k > n) return Complex(0);
  Complex den = q_pochhammer(q, q, n - k);
  if (std::abs(den) < kPoleThreshold) throw PoleError("pole in q-binomial", 0);
  return q_pochhammer(qpow(q, Real(1 + k)), q, n - k) / den;
}

Complex ell_binomial(const WeightFamily& f, long n, long k) {
  if (n < 0) throw DomainError("ell_binomial requires n >= 0");
  if (k < 0 || k > n) return Complex(0);
  return std::visit(
      overloaded{[&](const EllipticParams& e) { return ab_binomial(e.a, e.b, e.q, e.p, n, k); },
                 [&](const AbqParams& e) { return ab_binomial(e.a, e.b, e.q, Nome(), n, k); },
                 [&](const AqParams& e) {
                   const long m = n - k;
                   Complex d1 = q_pochhammer(e.q, e.q, m);
                   Complex d2 = q_pochhammer(e.a * e.q, e.q, m);
                   if (std::abs(d1) < kPoleThreshold) throw PoleError("pole in a;q binomial", 0);
                   if (std::abs(d2) < kPoleThreshold) throw PoleError("pole in a;q binomial", 1);
                   return q_pochhammer(qpow(e.q, Real(1 + k)), e.q, m) *
                          q_pochhammer(e.a * qpow(e.q, Real(1 + k)), e.q, m) / (d1 * d2) *
                          qpow(e.q, Real(-k * m));
                 },
                 [&](const QParams& e) { return q_binomial(e.q, n, k); }},
      f);
}

WeightFamily binomial_column_params(const WeightFamily& f, long s) {
  const Real e1 = static_cast<Real>(s - 1);
  const Real e2 = static_cast<Real>(2 * s - 2);
  return std::visit(
      overloaded{[&](const EllipticParams& e) -> WeightFamily {
                   return EllipticParams{e.a * qpow(e.q, e1), e.b * qpow(e.q, e2), e.q, e.p};
                 },
                 [&](const AbqParams& e) -> WeightFamily {
                   return AbqParams{e.a * qpow(e.q, e1), e.b * qpow(e.q, e2), e.q};
                 },
                 [&](const AqParams& e) -> WeightFamily {
                   return AqParams{e.a * qpow(e.q, e1), e.q};
                 },
                 [&](const QParams& e) -> WeightFamily { return e; }},
      f);
}

Complex ell_binomial_paths_oracle(const WeightFamily& f, long n, long k) {
  if (n > 12) throw BoundsError("lattice path enumeration is limited to n <= 12");
  if (n < 0 || k < 0 || k > n) throw DomainError("paths oracle requires 0 <= k <= n");
  const long height = n - k;
  // column_weight[s-1][h] = product of the cell weights of column s up to height h
  std::vector<std::vector<Complex>> column_weight(static_cast<size_t>(k));
  for (long s = 1; s <= k; ++s) {
    WeightFamily g = binomial_column_params(f, s);
    auto& col = column_weight[static_cast<size_t>(s - 1)];
    col.assign(static_cast<size_t>(height + 1), Complex(1));
    for (long t = 1; t <= height; ++t) {
      col[static_cast<size_t>(t)] = col[static_cast<size_t>(t - 1)] * small_weight(g, Real(t));
    }
  }
  // Enumerate nondecreasing column heights h_1 <= ... <= h_k.
  std::vector<long> h(static_cast<size_t>(k), 0);
  Complex total(0);
  while (true) {
    Complex w(1);
    for (long s = 0; s < k; ++s) w *= column_weight[static_cast<size_t>(s)][static_cast<size_t>(h[static_cast<size_t>(s)])];
    total += w;
    long pos = k - 1;
    while (pos >= 0 && h[static_cast<size_t>(pos)] == height) --pos;
    if (pos < 0) break;
    long v = h[static_cast<size_t>(pos)] + 1;
    for (long s = pos; s < k; ++s) h[static_cast<size_t>(s)] = v;
  }
  return total;
}

Complex q_falling_double(Complex q, Complex z, long k) {
  if (k < 0) throw DomainError("q_falling_double requires k >= 0");
  Complex acc(1);
  for (long i = 0; i < k; ++i) acc *= q_number(q, z - Real(2 * i));
  return acc;
}

}  // namespace ellrook
