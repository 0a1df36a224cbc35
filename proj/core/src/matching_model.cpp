#include "ellrook/matching_model.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>

namespace ellrook {

namespace {

void check_vertices(const LShiftedBoard& board) {
  if (board.vertex_count() > kMaxMatchingVertices) {
    throw BoundsError("matching enumeration is limited to " +
                      std::to_string(kMaxMatchingVertices) + " vertices");
  }
}

bool is_cancelled(ShiftedCell c, const std::vector<ShiftedCell>& rooks) {
  for (const ShiftedCell& r : rooks) {
    if (c.row == r.row && c.col > r.row && c.col < r.col) return true;
    if (c.row < r.row && (c.col == r.col || c.col == r.row)) return true;
  }
  return false;
}

bool is_rook(ShiftedCell c, const std::vector<ShiftedCell>& rooks) {
  return std::find(rooks.begin(), rooks.end(), c) != rooks.end();
}

// Visits every matching on the board, rooks listed in board.cells() order.
void for_each_matching(const LShiftedBoard& board, long max_size,
                       const std::function<void(const std::vector<ShiftedCell>&)>& visit) {
  const std::vector<ShiftedCell> cells = board.cells();
  std::vector<ShiftedCell> chosen;
  std::function<void(size_t, std::uint32_t)> rec = [&](size_t from, std::uint32_t used) {
    visit(chosen);
    if (static_cast<long>(chosen.size()) == max_size) return;
    for (size_t i = from; i < cells.size(); ++i) {
      const std::uint32_t bits = (1u << cells[i].row) | (1u << cells[i].col);
      if (used & bits) continue;
      chosen.push_back(cells[i]);
      rec(i + 1, used | bits);
      chosen.pop_back();
    }
  };
  rec(0, 0);
}

// small_weight at integer arguments, memoized per evaluation.
class SmallWeightTable {
 public:
  explicit SmallWeightTable(const WeightFamily& f) : f_(f) {}
  Complex operator()(long k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    Complex v = small_weight(f_, Real(k));
    cache_.emplace(k, v);
    return v;
  }

 private:
  const WeightFamily& f_;
  std::unordered_map<long, Complex> cache_;
};

struct WeightedCell {
  WeightCell w;
  ShiftedCell cell;
};

Complex weight_of(const LShiftedBoard& board, const std::vector<WeightedCell>& cells,
                  const std::vector<long>& offsets, const std::vector<ShiftedCell>& rooks,
                  const MatchingWeightRule& rule, SmallWeightTable& w) {
  const long top = board.lvec().total() + 2;
  std::vector<WeightCell> rook_w;
  rook_w.reserve(rooks.size());
  for (const ShiftedCell& r : rooks) rook_w.push_back(board.to_weight_coords(r));
  Complex acc(1);
  for (const WeightedCell& c : cells) {
    if (is_rook(c.cell, rooks) || is_cancelled(c.cell, rooks)) continue;
    long r = 0;
    long s = 0;
    for (size_t q = 0; q < rooks.size(); ++q) {
      const WeightCell rw = rook_w[q];
      const bool below = rule.inclusive_row ? rw.row <= c.w.row : rw.row < c.w.row;
      if (!below) continue;
      auto right = [&](long col) { return rule.inclusive_col ? col <= c.w.col : col < c.w.col; };
      if (!right(rw.col)) continue;
      if (right(top - rooks[q].row)) {
        ++r;
      } else {
        ++s;
      }
    }
    acc *= w(c.w.row + c.w.col - 1 - offsets[static_cast<size_t>(c.w.row)] - 2 * r - s);
  }
  return acc;
}

std::vector<WeightedCell> weighted_cells(const LShiftedBoard& board) {
  std::vector<WeightedCell> out;
  for (const ShiftedCell& c : board.cells()) out.push_back({board.to_weight_coords(c), c});
  return out;
}

std::vector<long> offsets_of(const LShiftedBoard& board, const MatchingWeightRule& rule) {
  std::vector<long> o(static_cast<size_t>(board.rows() + 1), 0);
  for (long i = 1; i <= board.rows(); ++i) o[static_cast<size_t>(i)] = row_offset(board.lvec(), i, rule);
  return o;
}

}  // namespace

MatchingPlacement::MatchingPlacement(const LShiftedBoard& board, std::vector<ShiftedCell> rooks)
    : rooks_(std::move(rooks)) {
  for (size_t i = 0; i < rooks_.size(); ++i) {
    if (!board.contains(rooks_[i])) throw DomainError("rook outside the board");
    for (size_t j = 0; j < i; ++j) {
      if (rooks_attack(rooks_[i], rooks_[j])) throw DomainError("rooks share an endpoint");
    }
  }
}

bool rooks_attack(ShiftedCell x, ShiftedCell y) {
  return x.row == y.row || x.col == y.col || x.col == y.row || y.col == x.row;
}

std::vector<MatchingPlacement> enumerate_matchings(const LShiftedBoard& board, long k) {
  check_vertices(board);
  if (k < 0) throw DomainError("rook count must be nonnegative");
  std::vector<MatchingPlacement> out;
  for_each_matching(board, k, [&](const std::vector<ShiftedCell>& rooks) {
    if (static_cast<long>(rooks.size()) == k) out.emplace_back(board, rooks);
  });
  return out;
}

CancellationMask::CancellationMask(std::vector<ShiftedCell> cells, std::vector<CellState> states)
    : cells_(std::move(cells)), states_(std::move(states)) {
  if (cells_.size() != states_.size()) throw DomainError("one state per cell required");
}

CellState CancellationMask::state(ShiftedCell c) const {
  auto it = std::find(cells_.begin(), cells_.end(), c);
  if (it == cells_.end()) throw BoundsError("cell is not on the board");
  return states_[static_cast<size_t>(it - cells_.begin())];
}

long CancellationMask::free_count() const {
  return static_cast<long>(std::count(states_.begin(), states_.end(), CellState::Free));
}

CancellationMask cancellation_mask(const LShiftedBoard& board, const MatchingPlacement& p) {
  std::vector<ShiftedCell> cells = board.cells();
  std::vector<CellState> states;
  states.reserve(cells.size());
  for (const ShiftedCell& c : cells) {
    if (is_rook(c, p.rooks())) {
      states.push_back(CellState::Occupied);
    } else if (is_cancelled(c, p.rooks())) {
      states.push_back(CellState::Cancelled);
    } else {
      states.push_back(CellState::Free);
    }
  }
  return CancellationMask(std::move(cells), std::move(states));
}

Complex m_k_q(Complex q, const LShiftedBoard& board, long k) {
  check_vertices(board);
  if (k < 0) return Complex(0);
  Complex total(0);
  for (const MatchingPlacement& p : enumerate_matchings(board, k)) {
    total += qpow(q, Real(cancellation_mask(board, p).free_count()));
  }
  return total;
}

TwoSided verify_hr_l(Complex q, const LShiftedBoard& board, Complex z) {
  const long n = board.rows();
  Complex lhs(1);
  for (long i = 1; i <= n; ++i) {
    lhs *= q_number(q, z + Real(board.rowlen(n - i + 1) - 2 * i + 2));
  }
  Complex rhs(0);
  for (long k = 0; k <= n; ++k) rhs += m_k_q(q, board, k) * q_falling_double(q, z, n - k);
  return {lhs, rhs};
}

long row_offset(const LVector& lvec, long row, const MatchingWeightRule& rule) {
  const long n = lvec.size();
  if (row < 1 || row > n) throw BoundsError("weight row out of range");
  const long r = rule.offsets_top_down ? n + 1 - row : row;
  return rule.offset == RowOffset::Increment ? lvec.entry(r) : lvec.prefix(r) - r + 1;
}

long row_shift(const LVector& lvec, long row, const MatchingWeightRule& rule) {
  return row - 1 + lvec.prefix(row) - row_offset(lvec, row, rule);
}

Complex wt_m(const WeightFamily& f, const LShiftedBoard& board, const MatchingPlacement& p,
             const MatchingWeightRule& rule) {
  SmallWeightTable w(f);
  return weight_of(board, weighted_cells(board), offsets_of(board, rule), p.rooks(), rule, w);
}

std::vector<Complex> m_k_elliptic_all(const WeightFamily& f, const LShiftedBoard& board,
                                      const MatchingWeightRule& rule) {
  check_vertices(board);
  const long n = board.rows();
  std::vector<Complex> m(static_cast<size_t>(n + 1), Complex(0));
  SmallWeightTable w(f);
  const auto cells = weighted_cells(board);
  const auto offsets = offsets_of(board, rule);
  for_each_matching(board, n, [&](const std::vector<ShiftedCell>& rooks) {
    m[rooks.size()] += weight_of(board, cells, offsets, rooks, rule, w);
  });
  return m;
}

Complex m_k_elliptic(const WeightFamily& f, const LShiftedBoard& board, long k,
                     const MatchingWeightRule& rule) {
  check_vertices(board);
  if (k < 0) return Complex(0);
  Complex total(0);
  SmallWeightTable w(f);
  const auto cells = weighted_cells(board);
  const auto offsets = offsets_of(board, rule);
  for_each_matching(board, k, [&](const std::vector<ShiftedCell>& rooks) {
    if (static_cast<long>(rooks.size()) == k) total += weight_of(board, cells, offsets, rooks, rule, w);
  });
  return total;
}

TwoSided verify_matching_theorem(const WeightFamily& f, const LShiftedBoard& board, Complex z,
                                 const MatchingWeightRule& rule) {
  const long n = board.rows();
  const LVector& lvec = board.lvec();
  Complex lhs(1);
  for (long i = 1; i <= n; ++i) {
    const long a = board.rowlen(n - i + 1);
    lhs *= ell_number(shift_params(f, Real(row_shift(lvec, i, rule) - a)), z + Real(a - 2 * i + 2));
  }
  const std::vector<Complex> m = m_k_elliptic_all(f, board, rule);
  // falling[j] = prod_{i <= j} [z - 2i + 2] at shift row_shift(i)
  std::vector<Complex> falling(static_cast<size_t>(n + 1), Complex(1));
  for (long j = 1; j <= n; ++j) {
    falling[static_cast<size_t>(j)] =
        falling[static_cast<size_t>(j - 1)] *
        ell_number(shift_params(f, Real(row_shift(lvec, j, rule))), z - Real(2 * j - 2));
  }
  Complex rhs(0);
  for (long k = 0; k <= n; ++k) rhs += m[static_cast<size_t>(k)] * falling[static_cast<size_t>(n - k)];
  return {lhs, rhs};
}

Complex max_matching_closed(const WeightFamily& f, const LShiftedBoard& board,
                            const MatchingWeightRule& rule) {
  const long n = board.rows();
  Complex acc(1);
  for (long i = 1; i <= n; ++i) {
    const long a = board.rowlen(n - i + 1);
    acc *= ell_number(shift_params(f, Real(row_shift(board.lvec(), i, rule) - a)), Real(a - 2 * i + 2));
  }
  return acc;
}

Complex perfect_matching_closed(const WeightFamily& f, long n, bool odd) {
  if (n < 1) throw DomainError("perfect matching product needs n >= 1");
  const long top = 2 * n - 1 + (odd ? 2 : 0);
  Complex acc(1);
  for (long i = 0; i < n; ++i) {
    acc *= ell_number(shift_params(f, Real(2 * i - 1)), Real(top - 2 * i));
  }
  return acc;
}

Complex m_k_recursive(const WeightFamily& f, const LVector& lvec, long k, RowOffset offset) {
  const long n = lvec.size();
  if (k < 0 || k > n) return Complex(0);
  const MatchingWeightRule rule{offset};
  // prev[j] = m_j of the full board over (l_1, ..., l_{N'-1})
  std::vector<Complex> prev{Complex(1)};
  LVector head;
  for (long rows = 1; rows <= n; ++rows) {
    head = LVector(std::vector<long>(lvec.entries().begin(), lvec.entries().begin() + rows));
    const long total = head.total();
    const WeightFamily g = shift_params(f, Real(row_shift(head, rows, rule) - total));
    std::vector<Complex> cur(static_cast<size_t>(rows + 1), Complex(0));
    for (long j = 0; j <= std::min(rows, k); ++j) {
      Complex v(0);
      if (j >= 1) v += ell_number(g, Real(total - 2 * j + 2)) * prev[static_cast<size_t>(j - 1)];
      if (j <= rows - 1) v += big_weight(g, Real(total - 2 * j)) * prev[static_cast<size_t>(j)];
      cur[static_cast<size_t>(j)] = v;
    }
    prev = std::move(cur);
  }
  return prev[static_cast<size_t>(k)];
}

Complex mk_aq_closed(Complex a, Complex q, long n, long k) {
  if (n < 1) throw DomainError("closed form needs n >= 1");
  if (k < 0 || k > n) throw DomainError("closed form needs 0 <= k <= n");
  const Nome p0;
  const long len = 2 * n - k - 1;
  const Real e = static_cast<Real>(k * k - n * (2 * n - 1));
  Complex odd(1);
  for (long j = 1; j <= k; ++j) odd *= q_number(q, Real(2 * j - 1));
  const Complex num = qp_factorial(a * qpow(q, Real(4 * n - 2 * k - 3)), Base(q * q), p0, len);
  const Complex den = qp_factorial(a / q, Base(q * q * q * q), p0, len);
  if (std::abs(den) < kPoleThreshold) throw PoleError("pole in matching closed form", 0);
  return qpow(q, e) * q_binomial(q, 2 * n, 2 * k) * odd * num / den;
}

}  // namespace ellrook
