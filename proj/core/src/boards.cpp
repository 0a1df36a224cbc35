#include "ellrook/boards.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ellrook {

namespace {

std::string join(const std::vector<long>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

std::vector<long> parse_list(std::string_view text) {
  std::vector<long> out;
  if (text.empty()) return out;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw InvalidBoard("malformed integer list: '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

SkylineBoard::SkylineBoard(std::vector<long> heights) : heights_(std::move(heights)) {
  for (long h : heights_) {
    if (h < 0) throw InvalidBoard("column heights must be nonnegative");
  }
}

long SkylineBoard::height(long column) const {
  if (column < 1 || column > columns()) throw BoundsError("column index out of range");
  return heights_[static_cast<size_t>(column - 1)];
}

long SkylineBoard::max_height() const {
  return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end());
}

long SkylineBoard::cell_count() const {
  return std::accumulate(heights_.begin(), heights_.end(), 0L);
}

bool SkylineBoard::contains(SkylineCell c) const {
  return c.column >= 1 && c.column <= columns() && c.row >= 1 && c.row <= height(c.column);
}

std::vector<SkylineCell> SkylineBoard::cells() const {
  std::vector<SkylineCell> out;
  out.reserve(static_cast<size_t>(cell_count()));
  for (long i = 1; i <= columns(); ++i) {
    for (long j = 1; j <= height(i); ++j) out.push_back({i, j});
  }
  return out;
}

std::string SkylineBoard::to_string() const { return join(heights_); }

FerrersBoard::FerrersBoard(std::vector<long> heights) : board_(std::move(heights)) {
  const auto& h = board_.heights();
  if (!std::is_sorted(h.begin(), h.end())) {
    throw InvalidBoard("Ferrers board heights must be nondecreasing: " + join(h));
  }
}

FerrersBoard FerrersBoard::without_last_column() const {
  if (columns() == 0) throw DomainError("empty board has no last column");
  std::vector<long> h = heights();
  h.pop_back();
  return FerrersBoard(std::move(h));
}

FerrersBoard staircase(long n) {
  if (n < 1) throw DomainError("staircase requires n >= 1");
  std::vector<long> h(static_cast<size_t>(n));
  std::iota(h.begin(), h.end(), 0L);
  return FerrersBoard(std::move(h));
}

FerrersBoard truncated_staircase(long n, long r) {
  if (r < 1 || r > n) throw DomainError("truncated staircase requires 1 <= r <= n");
  std::vector<long> h(static_cast<size_t>(n), 0);
  for (long i = r + 1; i <= n; ++i) h[static_cast<size_t>(i - 1)] = i - 1;
  return FerrersBoard(std::move(h));
}

FerrersBoard abel_board(long n, long acolors) {
  if (n < 1 || acolors < 1) throw DomainError("abel board requires n >= 1 and acolors >= 1");
  std::vector<long> h(static_cast<size_t>(n), acolors * n);
  h[0] = 0;
  return FerrersBoard(std::move(h));
}

LVector::LVector(std::vector<long> entries) : entries_(std::move(entries)) {
  prefix_.reserve(entries_.size() + 1);
  for (long l : entries_) {
    if (l < 1) throw InvalidBoard("increments must be positive: " + join(entries_));
    prefix_.push_back(prefix_.back() + l);
  }
}

LVector LVector::ones(long n) {
  if (n < 0) throw DomainError("negative length");
  return LVector(std::vector<long>(static_cast<size_t>(n), 1));
}

long LVector::entry(long i) const {
  if (i < 1 || i > size()) throw BoundsError("increment index out of range");
  return entries_[static_cast<size_t>(i - 1)];
}

long LVector::prefix(long j) const {
  if (j < 0 || j > size()) throw BoundsError("prefix index out of range");
  return prefix_[static_cast<size_t>(j)];
}

LVector LVector::truncated() const {
  if (entries_.empty()) throw DomainError("cannot truncate an empty increment vector");
  return LVector(std::vector<long>(entries_.begin(), entries_.end() - 1));
}

std::string LVector::to_string() const { return join(entries_); }

LShiftedBoard::LShiftedBoard(LVector lvec, std::vector<long> rowlens)
    : lvec_(std::move(lvec)), rowlens_(std::move(rowlens)) {
  const long n = lvec_.size();
  if (static_cast<long>(rowlens_.size()) != n) {
    throw InvalidBoard("need one row length per increment");
  }
  if (n == 0) return;
  if (rowlens_[0] > lvec_.total()) throw InvalidBoard("first row longer than L_N");
  for (long t = 1; t <= n; ++t) {
    const long a = rowlens_[static_cast<size_t>(t - 1)];
    if (a < 0) throw InvalidBoard("row lengths must be nonnegative");
    if (t == n) break;
    const long next = rowlens_[static_cast<size_t>(t)];
    if (next > a) throw InvalidBoard("row lengths must be nonincreasing: " + join(rowlens_));
    if (next > 0 && a - next < lvec_.entry(n + 1 - t)) {
      throw InvalidBoard("row lengths " + join(rowlens_) + " violate the gap condition for l = " +
                         lvec_.to_string());
    }
  }
}

long LShiftedBoard::rowlen(long t) const {
  if (t < 1 || t > rows()) throw BoundsError("row index out of range");
  return rowlens_[static_cast<size_t>(t - 1)];
}

long LShiftedBoard::row_label(long t) const {
  if (t < 1 || t > rows()) throw BoundsError("row index out of range");
  return lvec_.total() - lvec_.prefix(rows() - t + 1) + 1;
}

long LShiftedBoard::cell_count() const {
  return std::accumulate(rowlens_.begin(), rowlens_.end(), 0L);
}

long LShiftedBoard::top_index_of_label(long label) const {
  for (long t = 1; t <= rows(); ++t) {
    if (row_label(t) == label) return t;
  }
  return 0;
}

bool LShiftedBoard::contains(ShiftedCell c) const {
  const long t = top_index_of_label(c.row);
  return t != 0 && c.col > c.row && c.col <= c.row + rowlen(t);
}

std::vector<ShiftedCell> LShiftedBoard::cells() const {
  std::vector<ShiftedCell> out;
  out.reserve(static_cast<size_t>(cell_count()));
  for (long t = 1; t <= rows(); ++t) {
    const long rho = row_label(t);
    for (long j = 1; j <= rowlen(t); ++j) out.push_back({rho, rho + j});
  }
  return out;
}

WeightCell LShiftedBoard::to_weight_coords(ShiftedCell c) const {
  if (!contains(c)) throw BoundsError("cell is not on the board");
  return {rows() + 1 - top_index_of_label(c.row), lvec_.total() + 2 - c.col};
}

ShiftedCell LShiftedBoard::from_weight_coords(WeightCell c) const {
  if (c.row < 1 || c.row > rows()) throw BoundsError("weight row out of range");
  ShiftedCell out{row_label(rows() + 1 - c.row), lvec_.total() + 2 - c.col};
  if (!contains(out)) throw BoundsError("weight cell is not on the board");
  return out;
}

std::string LShiftedBoard::to_string() const {
  return "l=" + lvec_.to_string() + ";a=" + join(rowlens_);
}

LShiftedBoard full_lshifted(const LVector& lvec) {
  const long n = lvec.size();
  std::vector<long> a(static_cast<size_t>(n));
  for (long t = 1; t <= n; ++t) a[static_cast<size_t>(t - 1)] = lvec.prefix(n - t + 1);
  return LShiftedBoard(lvec, std::move(a));
}

LShiftedBoard shifted_board(std::vector<long> rowlens) {
  const long n = static_cast<long>(rowlens.size());
  return LShiftedBoard(LVector::ones(n), std::move(rowlens));
}

AnyBoard parse_board(std::string_view text) {
  const std::string original(text);
  if (text.starts_with("full-B")) {
    std::string_view digits = text.substr(6);
    long m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || m < 1) {
      throw InvalidBoard("malformed board literal: '" + original + "'");
    }
    return full_lshifted(LVector::ones(m - 1));
  }
  if (text.starts_with("l=")) {
    size_t semi = text.find(';');
    std::string_view lpart = text.substr(2, semi == text.npos ? text.npos : semi - 2);
    LVector lvec(parse_list(lpart));
    if (semi == text.npos) return full_lshifted(lvec);
    std::string_view rest = text.substr(semi + 1);
    if (!rest.starts_with("a=")) throw InvalidBoard("malformed board literal: '" + original + "'");
    return LShiftedBoard(std::move(lvec), parse_list(rest.substr(2)));
  }
  return FerrersBoard(parse_list(text));
}

std::string format_board(const AnyBoard& b) {
  return std::visit([](const auto& x) { return x.to_string(); }, b);
}

}  // namespace ellrook
