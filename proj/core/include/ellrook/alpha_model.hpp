#ifndef ELLROOK_ALPHA_MODEL_HPP_
#define ELLROOK_ALPHA_MODEL_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "ellrook/boards.hpp"
#include "ellrook/weights.hpp"

namespace ellrook {

/// Largest number of columns accepted by the placement enumerators.
inline constexpr long kMaxFileColumns = 8;

/// At most one rook per column; several rooks may share a row.
class FilePlacement {
 public:
  FilePlacement() = default;
  /// rows[i-1] is the row of the rook in column i, or 0 for an empty column.
  FilePlacement(const SkylineBoard& board, std::vector<long> rows);

  const std::vector<long>& rows() const { return rows_; }
  long rook_count() const;
  long rook_row(long column) const;  // 0 if the column is empty
  bool has_rook(SkylineCell c) const { return rook_row(c.column) == c.row; }
  std::vector<SkylineCell> rooks() const;

  /// Rooks strictly left of c in the same row.
  long rooks_left(SkylineCell c) const;
  /// Rooks strictly left of and strictly above c.
  long rooks_northwest(SkylineCell c) const;

  bool operator==(const FilePlacement&) const = default;

 private:
  std::vector<long> rows_;
};

std::vector<FilePlacement> enumerate_file_placements(const SkylineBoard& board, long k);

/// 1 for u <= 1, otherwise alpha (2 alpha - 1) ... ((u-1) alpha - (u-2)).
Complex classical_row_weight(long u, Complex alpha);

/// Sum over k-rook file placements of the product of classical row weights.
Complex classical_r_alpha(const SkylineBoard& board, long k, Complex alpha);

/// Weight of a single cell given the placement. Cells strictly below a rook
/// weigh 1; a rook cell weighs [(alpha-1)v+1] and any other cell
/// W((alpha-1)v+1), both with parameters shifted by
/// -j + (alpha-1)(1 - i + r_c), where v counts rooks to the left in the row
/// and r_c rooks to the north-west.
Complex cell_weight_alpha(const WeightFamily& f, const SkylineBoard& board,
                          const FilePlacement& p, SkylineCell cell, Complex alpha);

/// Elliptic alpha-rook number by enumeration.
Complex r_alpha(const WeightFamily& f, const FerrersBoard& board, long k, Complex alpha);

/// r_alpha for every k = 0..n in a single pass.
std::vector<Complex> r_alpha_all(const WeightFamily& f, const FerrersBoard& board,
                                 Complex alpha);

/// r_alpha from the last-column recursion; no enumeration bound.
Complex r_alpha_recursive(const WeightFamily& f, const FerrersBoard& board, long k,
                          Complex alpha);

/// Both sides of the product formula
///   prod_j [z + b_j + (j-1)(alpha-1)] = sum_k r_{n-k} prod_{i<=k} [z + (i-1)(alpha-1)]
/// with the factor shifts carried by each bracket.
TwoSided verify_alpha_factorization(const WeightFamily& f, const FerrersBoard& board,
                                    Complex alpha, Complex z);

/// Elliptic Stirling numbers of the first kind from their recursion. With r
/// set, the r-restricted numbers (first r elements in distinct cycles);
/// r = 1 gives the plain numbers for n >= 1.
Complex stirling1_elliptic(const WeightFamily& f, long n, long k,
                           std::optional<long> r = std::nullopt);

/// Closed form of r_{n-k}(A_n) for the Abel board with `acolors` colors.
Complex abel_r_closed(const WeightFamily& f, long n, long k, long acolors);

/// Closed form of r_k^(2)(St_n) for the (a;q) weights.
Complex r2_aq_closed(Complex a, Complex q, long n, long k);

/// Terminating balanced 4phi3 summation evaluated from both ends.
TwoSided verify_whipple(Complex a, Complex q, Complex z, long n);

}  // namespace ellrook

#endif  // ELLROOK_ALPHA_MODEL_HPP_
