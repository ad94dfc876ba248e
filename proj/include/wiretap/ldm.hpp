#ifndef WIRETAP_LDM_HPP
#define WIRETAP_LDM_HPP

// GF(2) signal and matrix types plus the linear deterministic channel map.
//
// Levels are 1-based from the most significant bit: level 1 is the top of
// a signal, level q the bit that sits just above the noise floor.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wiretap/errors.hpp"

namespace wiretap {

class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : bits_(length, 0) {}

  static BitVector from_string(std::string_view s) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1')
        throw parameter_error("bit string may only contain '0' and '1'");
      v.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return v;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  bool level(std::size_t lvl) const { return bits_.at(lvl - 1) != 0; }
  void set_level(std::size_t lvl, bool value) { bits_.at(lvl - 1) = value ? 1 : 0; }

  bool is_zero() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](auto b) { return b == 0; });
  }

  // First nonzero level, or nullopt for the zero vector.
  std::optional<std::size_t> top_level() const noexcept {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) return i + 1;
    return std::nullopt;
  }

  BitVector &operator^=(const BitVector &o) {
    if (o.size() != size()) throw parameter_error("bit vector length mismatch in xor");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= o.bits_[i];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
  friend bool operator==(const BitVector &, const BitVector &) = default;

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) s[i] = '1';
    return s;
  }

private:
  std::vector<std::uint8_t> bits_;
};

// S^exponent acting on length-`dimension` vectors.
struct ShiftMatrix {
  int exponent = 0;
  int dimension = 0;

  BitVector apply(const BitVector &x) const {
    if (static_cast<int>(x.size()) != dimension)
      throw parameter_error("shift matrix dimension does not match vector length");
    if (exponent < 0) throw parameter_error("shift exponent must be nonnegative");
    BitVector y(x.size());
    for (int lvl = 1; lvl + exponent <= dimension; ++lvl)
      y.set_level(static_cast<std::size_t>(lvl + exponent), x.level(static_cast<std::size_t>(lvl)));
    return y;
  }
};

// Deterministic instance with symmetric eavesdropper gains n12 = n22 = n2.
class ChannelParams {
public:
  constexpr ChannelParams() = default;
  constexpr ChannelParams(int n11, int n21, int n2) : n11_(n11), n21_(n21), n2_(n2) {
    if (n11 < 0 || n21 < 0 || n2 < 0) throw parameter_error("channel gains must be nonnegative");
  }

  constexpr int n11() const noexcept { return n11_; }
  constexpr int n21() const noexcept { return n21_; }
  constexpr int n2() const noexcept { return n2_; }
  constexpr int n12() const noexcept { return n2_; }
  constexpr int n22() const noexcept { return n2_; }

  constexpr int q() const noexcept { return std::max({n11_, n21_, n2_}); }
  constexpr int delta() const noexcept { return n11_ > n21_ ? n11_ - n21_ : n21_ - n11_; }

  friend constexpr bool operator==(const ChannelParams &, const ChannelParams &) = default;

private:
  int n11_ = 0;
  int n21_ = 0;
  int n2_ = 0;
};

inline std::string to_string(const ChannelParams &p) {
  return "(" + std::to_string(p.n11()) + "," + std::to_string(p.n21()) + "," +
         std::to_string(p.n2()) + ")";
}

// Dense GF(2) matrix, rows packed into 64-bit words.
class Gf2Matrix {
public:
  Gf2Matrix() = default;
  Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), stride_(words_for(cols)) {
    if (rows < 0 || cols < 0) throw parameter_error("matrix dimensions must be nonnegative");
    data_.assign(static_cast<std::size_t>(rows_) * stride_, 0);
  }

  static Gf2Matrix identity(int n) {
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static Gf2Matrix shift(int exponent, int dimension) {
    Gf2Matrix m(dimension, dimension);
    for (int c = 0; c + exponent < dimension; ++c) m.set(c + exponent, c, true);
    return m;
  }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  // 0-based element access.
  bool get(int r, int c) const {
    check(r, c);
    return (row_words(r)[static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1U;
  }
  void set(int r, int c, bool v) {
    check(r, c);
    auto &w = data_[static_cast<std::size_t>(r) * stride_ + static_cast<std::size_t>(c) / 64];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    w = v ? (w | bit) : (w & ~bit);
  }

  bool column_is_zero(int c) const {
    for (int r = 0; r < rows_; ++r)
      if (get(r, c)) return false;
    return true;
  }

  // Column c as a bitmask over rows (bit r set for row r); rows must fit in a word.
  std::uint64_t column_mask(int c) const {
    if (rows_ > 64) throw parameter_error("column_mask needs at most 64 rows");
    std::uint64_t mask = 0;
    for (int r = 0; r < rows_; ++r)
      if (get(r, c)) mask |= std::uint64_t{1} << r;
    return mask;
  }

  Gf2Matrix operator*(const Gf2Matrix &o) const {
    if (cols_ != o.rows_) throw parameter_error("matrix product dimension mismatch");
    Gf2Matrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
      for (int k = 0; k < cols_; ++k)
        if (get(r, k)) {
          auto dst = out.row_words_mut(r);
          auto src = o.row_words(k);
          for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
        }
    return out;
  }

  BitVector operator*(const BitVector &x) const {
    if (static_cast<int>(x.size()) != cols_) throw parameter_error("matrix-vector dimension mismatch");
    BitVector y(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
      bool acc = false;
      for (int c = 0; c < cols_; ++c)
        if (get(r, c) && x.level(static_cast<std::size_t>(c) + 1)) acc = !acc;
      y.set_level(static_cast<std::size_t>(r) + 1, acc);
    }
    return y;
  }

  friend Gf2Matrix hconcat(const Gf2Matrix &a, const Gf2Matrix &b) {
    if (a.rows_ != b.rows_) throw parameter_error("hconcat requires equal row counts");
    Gf2Matrix out(a.rows_, a.cols_ + b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      for (int c = 0; c < a.cols_; ++c)
        if (a.get(r, c)) out.set(r, c, true);
      for (int c = 0; c < b.cols_; ++c)
        if (b.get(r, c)) out.set(r, a.cols_ + c, true);
    }
    return out;
  }

  friend bool operator==(const Gf2Matrix &, const Gf2Matrix &) = default;

  // Row-echelon elimination. Returns the rank; pivot columns are appended to
  // `pivots` when given.
  int eliminate(std::vector<int> *pivots = nullptr) {
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
      const std::size_t w = static_cast<std::size_t>(c) / 64;
      const std::uint64_t bit = std::uint64_t{1} << (c % 64);
      int pivot = -1;
      for (int r = rank; r < rows_; ++r)
        if (row_words(r)[w] & bit) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      swap_rows(pivot, rank);
      auto prow = row_words(rank);
      for (int r = 0; r < rows_; ++r) {
        if (r == rank) continue;
        auto row = row_words_mut(r);
        if (row[w] & bit)
          for (std::size_t k = 0; k < row.size(); ++k) row[k] ^= prow[k];
      }
      if (pivots) pivots->push_back(c);
      ++rank;
    }
    return rank;
  }

private:
  static std::size_t words_for(int cols) { return (static_cast<std::size_t>(cols) + 63) / 64; }

  void check(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw parameter_error("matrix index out of range");
  }

  std::span<const std::uint64_t> row_words(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * stride_, stride_};
  }
  std::span<std::uint64_t> row_words_mut(int r) {
    return {data_.data() + static_cast<std::size_t>(r) * stride_, stride_};
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    std::swap_ranges(row_words_mut(a).begin(), row_words_mut(a).end(), row_words_mut(b).begin());
  }

  int rows_ = 0;
  int cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

inline int gf2_rank(Gf2Matrix m) { return m.eliminate(); }

// Rank of a set of column vectors given as row bitmasks (at most 64 rows).
inline int gf2_rank(std::span<const std::uint64_t> columns) {
  std::uint64_t basis[64] = {};
  int rank = 0;
  for (std::uint64_t v : columns) {
    while (v) {
      const int top = std::bit_width(v) - 1;
      if (!basis[top]) {
        basis[top] = v;
        ++rank;
        break;
      }
      v ^= basis[top];
    }
  }
  return rank;
}

// One particular solution of m * x = y (free variables set to 0), or nullopt.
inline std::optional<BitVector> solve(const Gf2Matrix &m, const BitVector &y) {
  if (static_cast<int>(y.size()) != m.rows()) throw parameter_error("solve: right-hand side length mismatch");
  Gf2Matrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c)
      if (m.get(r, c)) aug.set(r, c, true);
    if (y.level(static_cast<std::size_t>(r) + 1)) aug.set(r, m.cols(), true);
  }
  std::vector<int> pivots;
  const int rank = aug.eliminate(&pivots);
  if (rank > 0 && pivots.back() == m.cols()) return std::nullopt;
  BitVector x(static_cast<std::size_t>(m.cols()));
  for (int r = 0; r < rank; ++r)
    if (aug.get(r, m.cols())) x.set_level(static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)]) + 1, true);
  return x;
}

// S^{q - gain_n} x: a link of gain_n levels out of an ambient q.
inline BitVector down_shift(const BitVector &x, int gain_n, int q) {
  if (gain_n < 0 || gain_n > q) throw parameter_error("gain must lie in [0, q]");
  if (static_cast<int>(x.size()) != q) throw parameter_error("bit vector length must equal q");
  return ShiftMatrix{q - gain_n, q}.apply(x);
}

struct ChannelOutput {
  BitVector y1;
  BitVector y2;
  friend bool operator==(const ChannelOutput &, const ChannelOutput &) = default;
};

inline ChannelOutput ldm_channel(const BitVector &x1p, const BitVector &x2p, const ChannelParams &p) {
  const int q = p.q();
  if (static_cast<int>(x1p.size()) != q || static_cast<int>(x2p.size()) != q)
    throw parameter_error("channel inputs must have length q = " + std::to_string(q));
  return {down_shift(x1p, p.n11(), q) ^ down_shift(x2p, p.n21(), q),
          down_shift(x2p, p.n2(), q) ^ down_shift(x1p, p.n2(), q)};
}

} // namespace wiretap

#endif
