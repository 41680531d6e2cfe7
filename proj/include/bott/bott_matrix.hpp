#pragma once

#include <cstddef>
#include <compare>
#include <cstdint>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace bott {

/// Z2 vector stored as a bitmask; bit (i-1) is coordinate i.
using Z2Vector = std::uint32_t;

// Thrown by parse_bott_matrix. line/column are 1-based positions in the
// input text (column 0 when the whole line is at fault).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Binary upper unitriangular matrix defining an n-step real Bott tower.
///
/// Only the n(n-1)/2 strictly-upper entries are stored; the diagonal is 1
/// and everything below it is 0 by construction. All indices in the public
/// interface are 1-based.
class BottMatrix {
 public:
  static constexpr std::size_t max_size = 32;

  /// The n x n identity matrix (product of circles).
  explicit BottMatrix(std::size_t n);

  static BottMatrix identity(std::size_t n) { return BottMatrix(n); }

  /// Build from per-row masks of strictly-upper entries; rows[i-1] bit (j-1)
  /// holds c_{i,j}. Bits on or below the diagonal are rejected.
  static BottMatrix from_row_masks(std::vector<Z2Vector> rows);

  /// Build from a dense 0/1 matrix. Throws std::invalid_argument if the
  /// diagonal is not 1, the lower part is not 0, or an entry is not a bit.
  template <typename Derived>
  static BottMatrix from_dense(Eigen::MatrixBase<Derived> const& m);

  /// Build from a row-major strictly-upper bit string of length n(n-1)/2,
  /// packed so that c_{1,2} is the most significant bit.
  static BottMatrix from_upper_bits(std::size_t n, std::uint64_t bits);

  std::size_t size() const noexcept { return n_; }

  /// Full-matrix entry c_{i,j}, 1 <= i, j <= n.
  bool operator()(std::size_t i, std::size_t j) const;

  /// Strictly-upper part of row i as a mask (bit j-1 set iff j > i and
  /// c_{i,j} = 1).
  Z2Vector upper_row(std::size_t i) const;

  /// Row i including its diagonal 1, i.e. lambda(F_{n+i}).
  Z2Vector row(std::size_t i) const { return upper_row(i) | (Z2Vector{1} << (i - 1)); }

  /// Column j of the strictly-upper part as a mask over row indices.
  Z2Vector upper_column(std::size_t j) const;

  /// Inverse of from_upper_bits. Requires n(n-1)/2 <= 64.
  std::uint64_t upper_bits() const;

  /// True when every strictly-upper entry vanishes.
  bool is_identity() const noexcept;

  /// Stable hash of (n, entries); used to tag ring elements.
  std::uint64_t fingerprint() const noexcept;

  template <typename Scalar = int>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m =
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n_, n_);
    for (std::size_t i = 1; i <= n_; ++i)
      for (std::size_t j = i + 1; j <= n_; ++j)
        m(i - 1, j - 1) = (*this)(i, j) ? Scalar(1) : Scalar(0);
    return m;
  }

  friend bool operator==(BottMatrix const&, BottMatrix const&) = default;
  /// Orders by size, then lexicographically by the row-major strictly-upper
  /// bit string (the enumeration order).
  friend std::strong_ordering operator<=>(BottMatrix const& a,
                                          BottMatrix const& b);

 private:
  BottMatrix(std::size_t n, std::vector<Z2Vector> rows);

  std::size_t n_;
  std::vector<Z2Vector> rows_;  // strictly-upper masks, rows_[i-1]
};

template <typename Derived>
BottMatrix BottMatrix::from_dense(Eigen::MatrixBase<Derived> const& m) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("Bott matrix must be square and nonempty");
  auto const n = static_cast<std::size_t>(m.rows());
  std::vector<Z2Vector> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto const v = m(i, j);
      if (v != 0 && v != 1)
        throw std::invalid_argument("Bott matrix entries must be 0 or 1");
      if (i == j && v != 1)
        throw std::invalid_argument("diagonal entry must be 1");
      if (j < i && v != 0)
        throw std::invalid_argument("below-diagonal entry must be 0");
      if (j > i && v == 1) rows[i] |= Z2Vector{1} << j;
    }
  }
  return from_row_masks(std::move(rows));
}

/// Parse the text format: first line n, then n lines of n characters in {0,1}.
/// A single trailing newline is accepted.
BottMatrix parse_bott_matrix(std::string_view text);

/// Row i as n characters, e.g. "0111".
std::string row_text(BottMatrix const& c, std::size_t i);

/// Canonical text rendering; lines are separated by '\n' with no trailing
/// newline, so parse_bott_matrix(to_text(c)) == c.
std::string to_text(BottMatrix const& c);

/// The 2n characteristic vectors lambda(F_1), ..., lambda(F_2n).
struct CharacteristicData {
  std::vector<Z2Vector> vectors;
};

CharacteristicData characteristic_data(BottMatrix const& c);

/// Parity of the strictly-upper entries in row i, 1 <= i <= n-1.
bool row_sum(BottMatrix const& c, std::size_t i);

/// Keep rows j and k of C, replace every other row by a unit row.
BottMatrix submatrix_pair(BottMatrix const& c, std::size_t j, std::size_t k);

/// Delete the first k rows and columns, 0 <= k <= n-1.
BottMatrix suffix_submatrix(BottMatrix const& c, std::size_t k);

/// Keep the leading m x m block, 1 <= m <= n (the base of the tower).
BottMatrix leading_submatrix(BottMatrix const& c, std::size_t m);

inline constexpr std::size_t default_enumeration_cap = 8;

/// Number of Bott matrices of size n, 2^{n(n-1)/2}.
std::uint64_t matrix_count(std::size_t n);

/// The index-th matrix of size n in enumeration order.
inline BottMatrix matrix_at(std::size_t n, std::uint64_t index) {
  return BottMatrix::from_upper_bits(n, index);
}

/// Lazily enumerate every Bott matrix of size n, ordered lexicographically by
/// the row-major strictly-upper bit string. Throws std::length_error when
/// n > cap.
inline auto enumerate_matrices(std::size_t n,
                               std::size_t cap = default_enumeration_cap) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > cap)
    throw std::length_error("enumeration of size " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  return std::views::iota(std::uint64_t{0}, matrix_count(n)) |
         std::views::transform(
             [n](std::uint64_t i) { return matrix_at(n, i); });
}

}  // namespace bott
