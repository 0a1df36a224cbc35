#ifndef ELLROOK_MATCHING_MODEL_HPP_
#define ELLROOK_MATCHING_MODEL_HPP_

#include <vector>

#include "ellrook/boards.hpp"
#include "ellrook/weights.hpp"

namespace ellrook {

/// Largest vertex count L_N + 1 accepted by the matching enumerators.
inline constexpr long kMaxMatchingVertices = 12;

/// Rooks on an l-shifted board whose endpoint labels are pairwise distinct,
/// i.e. a partial matching of the lazy graph.
class MatchingPlacement {
 public:
  MatchingPlacement() = default;
  MatchingPlacement(const LShiftedBoard& board, std::vector<ShiftedCell> rooks);

  const std::vector<ShiftedCell>& rooks() const { return rooks_; }
  long size() const { return static_cast<long>(rooks_.size()); }

 private:
  std::vector<ShiftedCell> rooks_;
};

/// Two rooks attack when they share a row, share a column, or one's column
/// is the other's row.
bool rooks_attack(ShiftedCell x, ShiftedCell y);

std::vector<MatchingPlacement> enumerate_matchings(const LShiftedBoard& board, long k);

enum class CellState { Occupied, Cancelled, Free };

/// Per-cell state in board.cells() order. A rook (i, j) cancels (i, s) for
/// i < s < j, and (t, j), (t, i) for t < i.
class CancellationMask {
 public:
  CancellationMask(std::vector<ShiftedCell> cells, std::vector<CellState> states);

  const std::vector<ShiftedCell>& cells() const { return cells_; }
  const std::vector<CellState>& states() const { return states_; }
  CellState state(ShiftedCell c) const;
  long free_count() const;  // u(P)

 private:
  std::vector<ShiftedCell> cells_;
  std::vector<CellState> states_;
};

CancellationMask cancellation_mask(const LShiftedBoard& board, const MatchingPlacement& p);

/// Sum over k-matchings of q^u(P).
Complex m_k_q(Complex q, const LShiftedBoard& board, long k);

/// prod_i [z + a_{N-i+1} - 2i + 2]_q against sum_k m_k [z]↓↓_{N-k}.
TwoSided verify_hr_l(Complex q, const LShiftedBoard& board, Complex z);

// Offset o_i subtracted in the free-cell weight argument i + j - 1 - o_i of
// w-row i. Increment uses o_i = l_i. Cumulative uses o_i = L_i - i + 1, the
// start column of w-row i shifted by its row index; the two agree when every
// l_i is 1, and only Cumulative satisfies the product formula in general.
enum class RowOffset { Increment, Cumulative };

/// How the elliptic matching weight reads the board. The defaults are the
/// rule the product formula holds for; the other settings exist for
/// comparison runs.
struct MatchingWeightRule {
  RowOffset offset = RowOffset::Cumulative;
  // Index offsets from the top w-row instead of the bottom one.
  bool offsets_top_down = false;
  // South-east comparisons with <= instead of <.
  bool inclusive_row = false;
  bool inclusive_col = false;
};

/// o_i for w-row i under the rule.
long row_offset(const LVector& lvec, long row, const MatchingWeightRule& rule = {});

/// Parameter shift carried by w-row i in the product formula: the weight
/// argument of the leftmost cell of an empty, full row i, minus one.
long row_shift(const LVector& lvec, long row, const MatchingWeightRule& rule = {});

/// Product of small weights over the free cells of P, each at argument
/// i + j - 1 - o_i - 2r - s in w-coordinates. r and s count the rooks
/// south-east of the cell whose two cancelled columns both lie right of it
/// (r) or only one does (s).
Complex wt_m(const WeightFamily& f, const LShiftedBoard& board, const MatchingPlacement& p,
             const MatchingWeightRule& rule = {});

Complex m_k_elliptic(const WeightFamily& f, const LShiftedBoard& board, long k,
                     const MatchingWeightRule& rule = {});

/// m_0, ..., m_N in one enumeration pass.
std::vector<Complex> m_k_elliptic_all(const WeightFamily& f, const LShiftedBoard& board,
                                      const MatchingWeightRule& rule = {});

TwoSided verify_matching_theorem(const WeightFamily& f, const LShiftedBoard& board, Complex z,
                                 const MatchingWeightRule& rule = {});

/// m_N as a product: prod_i [a_{N-i+1} - 2i + 2] at shift row_shift(i) - a_{N-i+1}.
Complex max_matching_closed(const WeightFamily& f, const LShiftedBoard& board,
                            const MatchingWeightRule& rule = {});

/// Perfect matchings of the full board on 2n vertices (odd = false) or
/// maximal matchings on 2n + 1 vertices (odd = true).
Complex perfect_matching_closed(const WeightFamily& f, long n, bool odd);

/// m_k of the full board over lvec from the top-row recursion.
Complex m_k_recursive(const WeightFamily& f, const LVector& lvec, long k,
                      RowOffset offset = RowOffset::Cumulative);

/// m_k of the full shifted board on 2n vertices for the (a;q) weights.
Complex mk_aq_closed(Complex a, Complex q, long n, long k);

}  // namespace ellrook

#endif  // ELLROOK_MATCHING_MODEL_HPP_
