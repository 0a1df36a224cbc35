#ifndef ELLROOK_BOARDS_HPP_
#define ELLROOK_BOARDS_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ellrook/types.hpp"

namespace ellrook {

/// Square of a skyline board: column counted from the left, row from the
/// bottom, both 1-based.
struct SkylineCell {
  long column;
  long row;
  auto operator<=>(const SkylineCell&) const = default;
};

/// Board given by column heights b_1, ..., b_n (zero heights allowed).
class SkylineBoard {
 public:
  SkylineBoard() = default;
  explicit SkylineBoard(std::vector<long> heights);

  const std::vector<long>& heights() const { return heights_; }
  long columns() const { return static_cast<long>(heights_.size()); }
  long height(long column) const;  // 1-based
  long max_height() const;
  long cell_count() const;
  bool contains(SkylineCell c) const;

  /// Column-major, bottom to top.
  std::vector<SkylineCell> cells() const;

  std::string to_string() const;

  bool operator==(const SkylineBoard&) const = default;

 private:
  std::vector<long> heights_;
};

/// Skyline board with nondecreasing column heights.
class FerrersBoard {
 public:
  FerrersBoard() = default;
  explicit FerrersBoard(std::vector<long> heights);

  const SkylineBoard& skyline() const { return board_; }
  operator const SkylineBoard&() const { return board_; }  // NOLINT(google-explicit-constructor)

  const std::vector<long>& heights() const { return board_.heights(); }
  long columns() const { return board_.columns(); }
  long height(long column) const { return board_.height(column); }
  long cell_count() const { return board_.cell_count(); }
  std::vector<SkylineCell> cells() const { return board_.cells(); }
  std::string to_string() const { return board_.to_string(); }

  /// The board with its last column removed.
  FerrersBoard without_last_column() const;

  bool operator==(const FerrersBoard&) const = default;

 private:
  SkylineBoard board_;
};

FerrersBoard staircase(long n);
FerrersBoard truncated_staircase(long n, long r);
FerrersBoard abel_board(long n, long acolors);

/// Row increments l_1, ..., l_N of a lazy graph; L_j are the prefix sums.
class LVector {
 public:
  LVector() = default;
  explicit LVector(std::vector<long> entries);

  /// (1, ..., 1) of length n.
  static LVector ones(long n);

  const std::vector<long>& entries() const { return entries_; }
  long size() const { return static_cast<long>(entries_.size()); }
  long entry(long i) const;   // l_i, 1-based
  long prefix(long j) const;  // L_j, L_0 = 0
  long total() const { return prefix_.back(); }

  /// (l_1, ..., l_{N-1}).
  LVector truncated() const;

  std::string to_string() const;

  bool operator==(const LVector&) const = default;

 private:
  std::vector<long> entries_;
  std::vector<long> prefix_{0};
};

/// Square (i, j) of an l-shifted board in vertex labels: the edge i < j.
struct ShiftedCell {
  long row;
  long col;
  auto operator<=>(const ShiftedCell&) const = default;
};

/// The same square relabeled for weights: rows 1..N from the bottom,
/// columns 1..L_N from the right.
struct WeightCell {
  long row;
  long col;
  auto operator<=>(const WeightCell&) const = default;
};

/// Shifted board over the l-lazy graph on L_N + 1 vertices. Row t (counted
/// from the top) starts at vertex rho_t = L_N - L_{N-t+1} + 1 and holds the
/// cells (rho_t, rho_t + 1), ..., (rho_t, rho_t + a_t).
class LShiftedBoard {
 public:
  LShiftedBoard() = default;
  LShiftedBoard(LVector lvec, std::vector<long> rowlens);

  const LVector& lvec() const { return lvec_; }
  const std::vector<long>& rowlens() const { return rowlens_; }
  long rows() const { return lvec_.size(); }
  long rowlen(long t) const;    // a_t, top-indexed
  long row_label(long t) const;  // rho_t
  long vertex_count() const { return lvec_.total() + 1; }
  long cell_count() const;
  bool contains(ShiftedCell c) const;

  /// Row by row from the top, left to right.
  std::vector<ShiftedCell> cells() const;

  WeightCell to_weight_coords(ShiftedCell c) const;
  ShiftedCell from_weight_coords(WeightCell c) const;

  std::string to_string() const;

  bool operator==(const LShiftedBoard&) const = default;

 private:
  long top_index_of_label(long label) const;  // 0 if no row starts there

  LVector lvec_;
  std::vector<long> rowlens_;
};

/// The largest board over lvec: a_t = L_{N-t+1}.
LShiftedBoard full_lshifted(const LVector& lvec);

/// Unit increments with N = rowlens.size(); nonzero rows strictly decrease.
LShiftedBoard shifted_board(std::vector<long> rowlens);

using AnyBoard = std::variant<FerrersBoard, LShiftedBoard>;

/// Board literals: "0,1,2" (Ferrers heights, "" is the empty board),
/// "l=1,2;a=3,1" (l-shifted), "l=1,2" (full l-shifted) and "full-B<m>"
/// (full shifted board on m vertices).
AnyBoard parse_board(std::string_view text);
std::string format_board(const AnyBoard& b);

}  // namespace ellrook

#endif  // ELLROOK_BOARDS_HPP_
