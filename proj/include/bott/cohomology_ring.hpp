#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"

namespace bott {

/// Square-free monomial in y_1..y_n; bit (i-1) set iff y_i divides it.
/// y_i is the class of the characteristic submanifold M_{n+i}.
using Monomial = std::uint32_t;

inline std::size_t degree(Monomial m) noexcept {
  return static_cast<std::size_t>(std::popcount(m));
}

/// Strict weak order used for canonical term order: by degree, then by the
/// sorted index list lexicographically (y1*y2 < y1*y3 < y2*y3).
bool canonical_less(Monomial a, Monomial b) noexcept;

/// Exponent vector over y_1..y_n; exponents[i-1] is the power of y_i.
using Exponents = std::vector<unsigned>;

/// Largest n for which ring arithmetic is supported.
inline constexpr std::size_t max_ring_stages = 24;

/// Element of H*(Y_n; Z2) in square-free normal form.
///
/// Coefficients are in Z2, so an element is a set of monomials and addition
/// is symmetric difference. Each element is tagged with the fingerprint of
/// the Bott matrix whose ring it lives in; mixing rings throws.
class RingElement {
 public:
  /// The zero element of the ring of c.
  explicit RingElement(BottMatrix const& c);

  static RingElement zero(BottMatrix const& c) { return RingElement(c); }
  static RingElement one(BottMatrix const& c);
  /// y_i, 1 <= i <= n.
  static RingElement generator(BottMatrix const& c, std::size_t i);
  static RingElement monomial(BottMatrix const& c, Monomial m);
  /// Sum of the given monomials; repeated monomials cancel in pairs.
  static RingElement from_terms(BottMatrix const& c, std::span<Monomial const> terms);

  std::size_t stages() const noexcept { return n_; }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  /// Terms in canonical order.
  std::span<Monomial const> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool contains(Monomial m) const noexcept;
  /// Largest degree of a term, or -1 for zero.
  int max_degree() const noexcept;

  /// Same element relabelled into the ring of c. Valid when the source ring
  /// is that of a leading submatrix of c (the base of the tower pulls back).
  RingElement pulled_back_to(BottMatrix const& c) const;

  RingElement& operator+=(RingElement const& other);
  friend RingElement operator+(RingElement a, RingElement const& b) {
    a += b;
    return a;
  }
  friend bool operator==(RingElement const&, RingElement const&) = default;

 private:
  RingElement(std::size_t n, std::uint64_t fingerprint, std::vector<Monomial> terms);
  friend RingElement graded_component(RingElement const&, std::size_t);

  std::size_t n_;
  std::uint64_t fingerprint_;
  std::vector<Monomial> terms_;
};

/// Product in H*(Y_n; Z2). Throws std::invalid_argument if either operand
/// belongs to a different matrix.
RingElement multiply(BottMatrix const& c, RingElement const& a, RingElement const& b);

/// a^e with a^0 = 1.
RingElement power(BottMatrix const& c, RingElement const& a, unsigned e);

/// Degree-k part of e.
RingElement graded_component(RingElement const& e, std::size_t k);

/// Renders terms in canonical order as "1 + y1 + y1*y3", or "0".
std::string to_string(RingElement const& e);
std::string to_string(Monomial m);

enum class RewriteOrder { highest_first, lowest_first };

/// One application of y_i^2 -> sum_{j<i} c_{j,i} y_j y_i.
struct ReductionStep {
  Exponents source;
  std::size_t index;  // the squared variable that was rewritten
  std::vector<Exponents> rewritten;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

/// Reduce a Z2-sum of arbitrary monomials (given by exponent vectors, each
/// with coefficient 1) to square-free normal form. Each step rewrites the
/// highest (or lowest) squared index. If trace is non-null the steps are
/// appended to it.
RingElement reduce(BottMatrix const& c, std::span<Exponents const> raw,
                   RewriteOrder order = RewriteOrder::highest_first,
                   ReductionTrace* trace = nullptr);

/// True when no rewrite rule applies to any term of the reduced monomial m,
/// i.e. reduce(c, exponents(m)) == m.
bool is_normal_form(BottMatrix const& c, Monomial m);

/// dim H^k(Y_n; Z2) = C(n, k); throws std::logic_error if some square-free
/// monomial of degree k fails to be a normal form.
std::uint64_t basis_dimension(BottMatrix const& c, std::size_t k);

/// Alternating sum of the Betti numbers over Z2.
long long euler_characteristic(BottMatrix const& c);

Exponents exponents_of(Monomial m, std::size_t n);

}  // namespace bott
