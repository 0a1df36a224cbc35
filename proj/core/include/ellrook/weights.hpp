#ifndef ELLROOK_WEIGHTS_HPP_
#define ELLROOK_WEIGHTS_HPP_

#include <string>
#include <variant>

#include "ellrook/theta.hpp"

namespace ellrook {

/// Full elliptic weights w_{a,b;q,p}. a and b must be nonzero.
struct EllipticParams {
  Complex a;
  Complex b;
  Complex q;
  Nome p;
};

/// p -> 0 limit: rational (a,b;q) weights.
struct AbqParams {
  Complex a;
  Complex b;
  Complex q;
};

/// b -> 0 limit of the (a,b;q) weights.
struct AqParams {
  Complex a;
  Complex q;
};

/// Plain q-weights: w = q, W(k) = q^k.
struct QParams {
  Complex q;
};

using WeightFamily = std::variant<EllipticParams, AbqParams, AqParams, QParams>;

WeightFamily elliptic_family(Complex a, Complex b, Complex q, Complex p);
WeightFamily abq_family(Complex a, Complex b, Complex q);
WeightFamily aq_family(Complex a, Complex q);
WeightFamily q_family(Complex q);

/// "elliptic", "abq", "aq" or "q".
std::string family_name(const WeightFamily& f);

/// The base q carried by every family.
Complex family_base(const WeightFamily& f);

/// Small weight w(k) of the family; k may be complex.
Complex small_weight(const WeightFamily& f, Complex k);

/// Big weight W(k); W(n) = w(1)...w(n) for positive integers n.
Complex big_weight(const WeightFamily& f, Complex k);

/// (a, b) -> (a q^{2t}, b q^t). The AQ family only moves a; Q is unchanged.
WeightFamily shift_params(const WeightFamily& f, Complex t);

/// Elliptic number [z] of the family; [z]_q = (1-q^z)/(1-q) for Q.
Complex ell_number(const WeightFamily& f, Complex z);

/// [y] + W(y) [z-y] evaluated at parameters shifted by y. Equals [z].
Complex ell_number_split(const WeightFamily& f, Complex z, Complex y);

/// Elliptic binomial coefficient from the quadruple factorial ratio;
/// zero outside 0 <= k <= n.
Complex ell_binomial(const WeightFamily& f, long n, long k);

/// Parameters weighting the lattice cells of column s in the path model:
/// (a, b) -> (a q^{s-1}, b q^{2s-2}). Note the exponent pattern differs from
/// shift_params.
WeightFamily binomial_column_params(const WeightFamily& f, long s);

/// Sum over north/east lattice paths (0,0) -> (k, n-k) of the weights of the
/// cells below the path. Enumeration bound n <= 12.
Complex ell_binomial_paths_oracle(const WeightFamily& f, long n, long k);

/// Ordinary q-number (1 - q^z)/(1 - q).
Complex q_number(Complex q, Complex z);

/// [z]_q [z-2]_q ... [z-2k+2]_q.
Complex q_falling_double(Complex q, Complex z, long k);

/// Gaussian binomial coefficient [n choose k]_q for integers n >= 0.
Complex q_binomial(Complex q, long n, long k);

}  // namespace ellrook

#endif  // ELLROOK_WEIGHTS_HPP_
