#include "ellrook/alpha_model.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace ellrook {

namespace {

Real binomial_real(long n, long k) {
  if (k < 0 || k > n) return 0;
  Real r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<Real>(n - k + i) / static_cast<Real>(i);
  return r;
}

void check_columns(const SkylineBoard& board) {
  if (board.columns() > kMaxFileColumns) {
    throw BoundsError("file placement enumeration is limited to " +
                      std::to_string(kMaxFileColumns) + " columns");
  }
}

Complex checked_ratio(Complex num, Complex den, const char* what, long idx) {
  if (std::abs(den) < kPoleThreshold) throw PoleError(what, idx);
  return num / den;
}

// Lazily filled table of cell weights keyed by (column, row, v, r_c, rook).
class CellWeightCache {
 public:
  CellWeightCache(const WeightFamily& f, Complex alpha, long columns, long height)
      : f_(f), alpha_(alpha), columns_(columns), height_(height) {
    const size_t size = static_cast<size_t>(columns_ * (height_ + 1) * columns_ * columns_ * 2);
    values_.resize(size);
    filled_.assign(size, 0);
  }

  Complex get(long i, long j, long v, long rc, bool rook) {
    const size_t idx = static_cast<size_t>(
        ((((i - 1) * (height_ + 1) + j) * columns_ + v) * columns_ + rc) * 2 + (rook ? 1 : 0));
    if (!filled_[idx]) {
      const Complex am1 = alpha_ - Real(1);
      const Complex t = Real(-j) + am1 * Real(1 - i + rc);
      const Complex x = am1 * Real(v) + Real(1);
      const WeightFamily g = shift_params(f_, t);
      values_[idx] = rook ? ell_number(g, x) : big_weight(g, x);
      filled_[idx] = 1;
    }
    return values_[idx];
  }

 private:
  const WeightFamily& f_;
  Complex alpha_;
  long columns_;
  long height_;
  std::vector<Complex> values_;
  std::vector<char> filled_;
};

}  // namespace

FilePlacement::FilePlacement(const SkylineBoard& board, std::vector<long> rows)
    : rows_(std::move(rows)) {
  if (static_cast<long>(rows_.size()) != board.columns()) {
    throw DomainError("placement needs one entry per column");
  }
  for (long i = 1; i <= board.columns(); ++i) {
    const long r = rows_[static_cast<size_t>(i - 1)];
    if (r != 0 && !board.contains({i, r})) throw DomainError("rook outside the board");
  }
}

long FilePlacement::rook_count() const {
  long k = 0;
  for (long r : rows_) k += r != 0;
  return k;
}

long FilePlacement::rook_row(long column) const {
  if (column < 1 || column > static_cast<long>(rows_.size())) {
    throw BoundsError("column index out of range");
  }
  return rows_[static_cast<size_t>(column - 1)];
}

std::vector<SkylineCell> FilePlacement::rooks() const {
  std::vector<SkylineCell> out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] != 0) out.push_back({static_cast<long>(i + 1), rows_[i]});
  }
  return out;
}

long FilePlacement::rooks_left(SkylineCell c) const {
  long v = 0;
  for (long i = 1; i < c.column; ++i) v += rows_[static_cast<size_t>(i - 1)] == c.row;
  return v;
}

long FilePlacement::rooks_northwest(SkylineCell c) const {
  long n = 0;
  for (long i = 1; i < c.column; ++i) n += rows_[static_cast<size_t>(i - 1)] > c.row;
  return n;
}

std::vector<FilePlacement> enumerate_file_placements(const SkylineBoard& board, long k) {
  check_columns(board);
  const long n = board.columns();
  if (k < 0 || k > n) throw DomainError("rook count must satisfy 0 <= k <= n");
  std::vector<FilePlacement> out;
  std::vector<long> rows(static_cast<size_t>(n), 0);
  std::function<void(long, long)> rec = [&](long col, long left) {
    if (left == 0) {
      out.emplace_back(board, rows);
      return;
    }
    if (n - col + 1 < left) return;
    for (long r = 1; r <= board.height(col); ++r) {
      rows[static_cast<size_t>(col - 1)] = r;
      rec(col + 1, left - 1);
    }
    rows[static_cast<size_t>(col - 1)] = 0;
    rec(col + 1, left);
  };
  rec(1, k);
  return out;
}

Complex classical_row_weight(long u, Complex alpha) {
  if (u < 0) throw DomainError("row occupancy must be nonnegative");
  Complex w(1);
  for (long t = 2; t <= u; ++t) w *= Real(t - 1) * alpha - Real(t - 2);
  return w;
}

Complex classical_r_alpha(const SkylineBoard& board, long k, Complex alpha) {
  Complex total(0);
  std::vector<long> occupancy(static_cast<size_t>(board.max_height() + 1));
  for (const FilePlacement& p : enumerate_file_placements(board, k)) {
    std::fill(occupancy.begin(), occupancy.end(), 0);
    for (long r : p.rows()) {
      if (r) ++occupancy[static_cast<size_t>(r)];
    }
    Complex w(1);
    for (long u : occupancy) w *= classical_row_weight(u, alpha);
    total += w;
  }
  return total;
}

Complex cell_weight_alpha(const WeightFamily& f, const SkylineBoard& board,
                          const FilePlacement& p, SkylineCell cell, Complex alpha) {
  if (!board.contains(cell)) throw DomainError("cell is not on the board");
  const long above = p.rook_row(cell.column);
  if (above > cell.row) return Complex(1);
  const Complex am1 = alpha - Real(1);
  const Complex t = Real(-cell.row) + am1 * Real(1 - cell.column + p.rooks_northwest(cell));
  const Complex x = am1 * Real(p.rooks_left(cell)) + Real(1);
  const WeightFamily g = shift_params(f, t);
  return above == cell.row ? ell_number(g, x) : big_weight(g, x);
}

std::vector<Complex> r_alpha_all(const WeightFamily& f, const FerrersBoard& board,
                                 Complex alpha) {
  check_columns(board);
  const long n = board.columns();
  const long height = board.skyline().max_height();
  std::vector<Complex> result(static_cast<size_t>(n + 1), Complex(0));
  if (n == 0) {
    result[0] = 1;
    return result;
  }
  CellWeightCache cache(f, alpha, n, height);
  std::vector<long> per_row(static_cast<size_t>(height + 2), 0);

  // Depth-first over columns; each level multiplies in the finished column.
  std::function<void(long, long, Complex)> rec = [&](long col, long rooks, Complex acc) {
    if (col > n) {
      result[static_cast<size_t>(rooks)] += acc;
      return;
    }
    const long h = board.height(col);
    // northwest[j] = rooks in earlier columns strictly above row j
    std::vector<long> northwest(static_cast<size_t>(h + 2), 0);
    long above = 0;
    for (long j = height; j >= 1; --j) {
      if (j <= h) northwest[static_cast<size_t>(j)] = above;
      above += per_row[static_cast<size_t>(j)];
    }
    // tail[j] = product of empty-cell weights over rows j..h
    std::vector<Complex> tail(static_cast<size_t>(h + 2), Complex(1));
    for (long j = h; j >= 1; --j) {
      tail[static_cast<size_t>(j)] =
          tail[static_cast<size_t>(j + 1)] *
          cache.get(col, j, per_row[static_cast<size_t>(j)], northwest[static_cast<size_t>(j)], false);
    }
    rec(col + 1, rooks, acc * tail[1]);
    for (long r = 1; r <= h; ++r) {
      const Complex w = cache.get(col, r, per_row[static_cast<size_t>(r)],
                                  northwest[static_cast<size_t>(r)], true) *
                        tail[static_cast<size_t>(r + 1)];
      ++per_row[static_cast<size_t>(r)];
      rec(col + 1, rooks + 1, acc * w);
      --per_row[static_cast<size_t>(r)];
    }
  };
  rec(1, 0, Complex(1));
  return result;
}

Complex r_alpha(const WeightFamily& f, const FerrersBoard& board, long k, Complex alpha) {
  check_columns(board);
  if (k < 0 || k > board.columns()) return Complex(0);
  return r_alpha_all(f, board, alpha)[static_cast<size_t>(k)];
}

Complex r_alpha_recursive(const WeightFamily& f, const FerrersBoard& board, long k,
                          Complex alpha) {
  const long n = board.columns();
  if (k < 0 || k > n) return Complex(0);
  const Complex am1 = alpha - Real(1);
  // prev[k] = r_k of the first l-1 columns
  std::vector<Complex> prev{Complex(1)};
  for (long l = 1; l <= n; ++l) {
    const long m = board.height(l);
    const WeightFamily g = shift_params(f, -(Real(m) + am1 * Real(l - 1)));
    std::vector<Complex> cur(static_cast<size_t>(l + 1), Complex(0));
    for (long j = 0; j <= std::min(l, k); ++j) {
      Complex v(0);
      if (j >= 1) v += ell_number(g, Real(m) + am1 * Real(j - 1)) * prev[static_cast<size_t>(j - 1)];
      if (j <= l - 1) v += big_weight(g, Real(m) + am1 * Real(j)) * prev[static_cast<size_t>(j)];
      cur[static_cast<size_t>(j)] = v;
    }
    prev = std::move(cur);
  }
  return prev[static_cast<size_t>(k)];
}

TwoSided verify_alpha_factorization(const WeightFamily& f, const FerrersBoard& board,
                                    Complex alpha, Complex z) {
  const long n = board.columns();
  const Complex am1 = alpha - Real(1);
  Complex lhs(1);
  for (long j = 1; j <= n; ++j) {
    const Complex t = Real(board.height(j)) + Real(j - 1) * am1;
    lhs *= ell_number(shift_params(f, -t), z + t);
  }
  const std::vector<Complex> r = r_alpha_all(f, board, alpha);
  Complex rhs(0);
  Complex falling(1);
  for (long k = 0; k <= n; ++k) {
    if (k >= 1) {
      const Complex t = Real(k - 1) * am1;
      falling *= ell_number(shift_params(f, -t), z + t);
    }
    rhs += r[static_cast<size_t>(n - k)] * falling;
  }
  return {lhs, rhs};
}

Complex stirling1_elliptic(const WeightFamily& f, long n, long k, std::optional<long> r) {
  if (n < 0) throw DomainError("stirling numbers need n >= 0");
  long start = 0;
  if (r) {
    if (*r < 1 || *r > n) throw DomainError("restricted stirling numbers need 1 <= r <= n");
    start = *r;
  }
  if (k < 0 || k > n) return Complex(0);
  // c[j] = c(m, j) for the current m, starting from c(start, start) = 1
  std::vector<Complex> c(static_cast<size_t>(n + 1), Complex(0));
  c[static_cast<size_t>(start)] = 1;
  for (long m = start; m < n; ++m) {
    const WeightFamily g = shift_params(f, Real(-m));
    const Complex stay = ell_number(g, Real(m));
    const Complex grow = big_weight(g, Real(m));
    for (long j = m + 1; j >= 0; --j) {
      Complex v = stay * c[static_cast<size_t>(j)];
      if (j >= 1) v += grow * c[static_cast<size_t>(j - 1)];
      c[static_cast<size_t>(j)] = v;
    }
  }
  return c[static_cast<size_t>(k)];
}

Complex abel_r_closed(const WeightFamily& f, long n, long k, long acolors) {
  if (acolors < 1) throw DomainError("abel board needs acolors >= 1");
  if (k < 1 || k > n) throw DomainError("abel closed form needs 1 <= k <= n");
  const Real an = static_cast<Real>(acolors * n);
  const WeightFamily g = shift_params(f, -an);
  return binomial_real(n - 1, k - 1) * std::pow(big_weight(g, an), k - 1) *
         std::pow(ell_number(g, an), n - k);
}

Complex r2_aq_closed(Complex a, Complex q, long n, long k) {
  if (n < 1) throw DomainError("staircase needs n >= 1");
  if (k < 0 || k > n) throw DomainError("r2 closed form needs 0 <= k <= n");
  const Nome p0;
  const Real e = static_cast<Real>(-(n + k) * (n + k - 1) / 2 + k * (k + 2));
  Complex odd(1);
  for (long j = 1; j <= k; ++j) odd *= q_number(q, Real(2 * j - 1));
  const Complex num = qp_factorial(a * q, Base(Real(1) / (q * q)), p0, n - k) *
                      qp_factorial(a * qpow(q, Real(1 - 2 * n)), Base(q * q), p0, k);
  const Complex den = qp_factorial(a * q, Base(Real(1) / (q * q * q * q)), p0, n);
  return qpow(q, e) * q_binomial(q, n + k - 1, 2 * k) * odd *
         checked_ratio(num, den, "pole in r2 closed form", 0);
}

TwoSided verify_whipple(Complex a, Complex q, Complex z, long n) {
  if (n < 0) throw DomainError("whipple sum needs n >= 0");
  if (n > 20) throw BoundsError("whipple sum is limited to n <= 20");
  auto Q = [&](Complex e) { return qpow(q, e); };
  const Complex lhs_num = q_pochhammer(Q(z + Real(2)), q * q, n) *
                          q_pochhammer(a * Q(z - Real(2 * n)), q * q, n);
  const Complex lhs_den = q_pochhammer(Q(z + Real(1)), q, n) * q_pochhammer(a * Q(z - Real(n)), q, n);
  const Complex lhs = checked_ratio(lhs_num, lhs_den, "pole in whipple product side", 0);

  const Complex root = std::sqrt(a) * Q(Real(-n) - Real(0.5L));
  Complex rhs(0);
  Complex term(1);
  for (long k = 0; k <= n; ++k) {
    if (k >= 1) {
      const Real j = static_cast<Real>(k - 1);
      const Complex num = (Complex(1) - Q(Real(-n) + j)) * (Complex(1) - Q(Real(n + 1) + j)) *
                          (Complex(1) - root * Q(j)) * (Complex(1) + root * Q(j));
      const Complex den = (Complex(1) - Q(j + Real(1))) * (Complex(1) + Q(j + Real(1))) *
                          (Complex(1) - Q(-z - Real(n) + j)) * (Complex(1) - a * Q(z - Real(n) + j));
      term *= checked_ratio(num, den, "pole in whipple sum side", k) * q;
    }
    rhs += term;
  }
  return {lhs, rhs};
}

}  // namespace ellrook
