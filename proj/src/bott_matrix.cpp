#include "bott/bott_matrix.hpp"

#include <bit>
#include <charconv>
#include <sstream>

namespace bott {

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string const& what)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "line " << line;
        if (column != 0) os << ", column " << column;
        os << ": " << what;
        return os.str();
      }()),
      line_(line),
      column_(column) {}

namespace {

void check_size(std::size_t n) {
  if (n < 1 || n > BottMatrix::max_size)
    throw std::invalid_argument("Bott matrix size must be in 1.." +
                                std::to_string(BottMatrix::max_size));
}

void check_index(std::size_t n, std::size_t i, char const* what) {
  if (i < 1 || i > n)
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                            " outside 1.." + std::to_string(n));
}

std::size_t upper_entry_count(std::size_t n) { return n * (n - 1) / 2; }

}  // namespace

BottMatrix::BottMatrix(std::size_t n) : n_(n), rows_(n, 0) { check_size(n); }

BottMatrix::BottMatrix(std::size_t n, std::vector<Z2Vector> rows)
    : n_(n), rows_(std::move(rows)) {}

BottMatrix BottMatrix::from_row_masks(std::vector<Z2Vector> rows) {
  auto const n = rows.size();
  check_size(n);
  for (std::size_t i = 0; i < n; ++i) {
    // allowed bits: i+1 .. n-1 (0-based)
    Z2Vector const allowed =
        static_cast<Z2Vector>(((std::uint64_t{1} << n) - 1) &
                              ~((std::uint64_t{1} << (i + 1)) - 1));
    if ((rows[i] & ~allowed) != 0)
      throw std::invalid_argument("row " + std::to_string(i + 1) +
                                  " has entries on or below the diagonal");
  }
  return BottMatrix(n, std::move(rows));
}

BottMatrix BottMatrix::from_upper_bits(std::size_t n, std::uint64_t bits) {
  check_size(n);
  auto const m = upper_entry_count(n);
  if (m > 64) throw std::length_error("bit string longer than 64 entries");
  if (m < 64 && (bits >> m) != 0)
    throw std::invalid_argument("bit string has more than n(n-1)/2 bits");
  std::vector<Z2Vector> rows(n, 0);
  std::size_t pos = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      --pos;
      if ((bits >> pos) & 1U) rows[i] |= Z2Vector{1} << j;
    }
  return BottMatrix(n, std::move(rows));
}

bool BottMatrix::operator()(std::size_t i, std::size_t j) const {
  check_index(n_, i, "row");
  check_index(n_, j, "column");
  if (i == j) return true;
  if (j < i) return false;
  return (rows_[i - 1] >> (j - 1)) & 1U;
}

Z2Vector BottMatrix::upper_row(std::size_t i) const {
  check_index(n_, i, "row");
  return rows_[i - 1];
}

Z2Vector BottMatrix::upper_column(std::size_t j) const {
  check_index(n_, j, "column");
  Z2Vector col = 0;
  for (std::size_t i = 1; i < j; ++i)
    if ((rows_[i - 1] >> (j - 1)) & 1U) col |= Z2Vector{1} << (i - 1);
  return col;
}

std::uint64_t BottMatrix::upper_bits() const {
  if (upper_entry_count(n_) > 64)
    throw std::length_error("bit string longer than 64 entries");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      bits = (bits << 1) | ((rows_[i] >> j) & 1U);
  return bits;
}

bool BottMatrix::is_identity() const noexcept {
  for (auto r : rows_)
    if (r != 0) return false;
  return true;
}

std::uint64_t BottMatrix::fingerprint() const noexcept {
  // FNV-1a over n and the row masks.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(n_);
  for (auto r : rows_) mix(r);
  return h;
}

std::strong_ordering operator<=>(BottMatrix const& a, BottMatrix const& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = i + 1; j < a.n_; ++j) {
      bool const x = (a.rows_[i] >> j) & 1U;
      bool const y = (b.rows_[i] >> j) & 1U;
      if (x != y) return x ? std::strong_ordering::greater
                           : std::strong_ordering::less;
    }
  return std::strong_ordering::equal;
}

BottMatrix parse_bott_matrix(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (true) {
    auto const nl = text.find('\n', start);
    lines.push_back(text.substr(start, nl == std::string_view::npos
                                           ? std::string_view::npos
                                           : nl - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }

  auto const& head = lines.front();
  std::size_t n = 0;
  auto const [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (head.empty() || ec != std::errc{} || ptr != head.data() + head.size())
    throw ParseError(1, 0, "malformed dimension line");
  if (n < 1 || n > BottMatrix::max_size)
    throw ParseError(1, 0, "dimension must be in 1.." +
                               std::to_string(BottMatrix::max_size));
  if (lines.size() != n + 1)
    throw ParseError(lines.size(), 0,
                     "expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1));

  std::vector<Z2Vector> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto const& line = lines[i + 1];
    auto const lineno = i + 2;
    if (line.size() != n)
      throw ParseError(lineno, 0,
                       "row " + std::to_string(i + 1) + " has length " +
                           std::to_string(line.size()) + ", expected " +
                           std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      char const ch = line[j];
      std::string const where = "row " + std::to_string(i + 1) + ", column " +
                                std::to_string(j + 1) + ": ";
      if (ch != '0' && ch != '1')
        throw ParseError(lineno, j + 1, where + "entry must be 0 or 1");
      if (j == i && ch != '1')
        throw ParseError(lineno, j + 1, where + "diagonal entry must be 1");
      if (j < i && ch != '0')
        throw ParseError(lineno, j + 1, where + "below-diagonal entry must be 0");
      if (j > i && ch == '1') rows[i] |= Z2Vector{1} << j;
    }
  }
  return BottMatrix::from_row_masks(std::move(rows));
}

std::string row_text(BottMatrix const& c, std::size_t i) {
  std::string r;
  for (std::size_t j = 1; j <= c.size(); ++j) r += c(i, j) ? '1' : '0';
  return r;
}

std::string to_text(BottMatrix const& c) {
  std::string out = std::to_string(c.size());
  for (std::size_t i = 1; i <= c.size(); ++i) out += '\n' + row_text(c, i);
  return out;
}

CharacteristicData characteristic_data(BottMatrix const& c) {
  auto const n = c.size();
  CharacteristicData data;
  data.vectors.reserve(2 * n);
  for (std::size_t j = 1; j <= n; ++j)
    data.vectors.push_back(Z2Vector{1} << (j - 1));
  for (std::size_t j = 1; j <= n; ++j) data.vectors.push_back(c.row(j));
  return data;
}

bool row_sum(BottMatrix const& c, std::size_t i) {
  if (i < 1 || i + 1 > c.size())
    throw std::out_of_range("row_sum index " + std::to_string(i) +
                            " outside 1.." + std::to_string(c.size() - 1));
  return std::popcount(c.upper_row(i)) & 1;
}

BottMatrix submatrix_pair(BottMatrix const& c, std::size_t j, std::size_t k) {
  auto const n = c.size();
  if (j < 1 || j >= k || k > n)
    throw std::out_of_range("submatrix pair requires 1 <= j < k <= n");
  std::vector<Z2Vector> rows(n, 0);
  rows[j - 1] = c.upper_row(j);
  rows[k - 1] = c.upper_row(k);
  return BottMatrix::from_row_masks(std::move(rows));
}

BottMatrix suffix_submatrix(BottMatrix const& c, std::size_t k) {
  auto const n = c.size();
  if (k >= n)
    throw std::out_of_range("suffix submatrix requires k <= n-1");
  std::vector<Z2Vector> rows;
  rows.reserve(n - k);
  for (std::size_t i = k + 1; i <= n; ++i) rows.push_back(c.upper_row(i) >> k);
  return BottMatrix::from_row_masks(std::move(rows));
}

BottMatrix leading_submatrix(BottMatrix const& c, std::size_t m) {
  if (m < 1 || m > c.size())
    throw std::out_of_range("leading submatrix requires 1 <= m <= n");
  Z2Vector const keep = static_cast<Z2Vector>((std::uint64_t{1} << m) - 1);
  std::vector<Z2Vector> rows;
  rows.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) rows.push_back(c.upper_row(i) & keep);
  return BottMatrix::from_row_masks(std::move(rows));
}

std::uint64_t matrix_count(std::size_t n) {
  auto const m = upper_entry_count(n);
  if (m >= 64) throw std::length_error("matrix count exceeds 64 bits");
  return std::uint64_t{1} << m;
}

}  // namespace bott
