#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/cohomology_ring.hpp"

namespace bott {

/// Three-valued verdict for properties only defined under a hypothesis
/// (spin requires orientability, oriented cobordism requires an orientation).
enum class Tristate { no, yes, not_applicable };

inline Tristate to_tristate(bool b) { return b ? Tristate::yes : Tristate::no; }
std::string to_string(Tristate t);

/// Multiplicities r_1..r_n with sum_i i*r_i = n; indexes the monomial
/// w_1^{r_1} ... w_n^{r_n}.
struct Partition {
  std::vector<unsigned> multiplicities;  // multiplicities[i-1] = r_i

  std::size_t weight() const;
  friend bool operator==(Partition const&, Partition const&) = default;
};

/// "w1^2*w2" style rendering; the empty product renders as "1".
std::string to_string(Partition const& p);

/// All partitions of n, ordered lexicographically descending in
/// (r_n, ..., r_1): w_n first, w_1^n last.
std::vector<Partition> partitions(std::size_t n);

/// Total class as the ring product prod_{j=2}^n (1 + sum_{i<j} c_{i,j} y_i).
RingElement total_sw_class(BottMatrix const& c);

/// w_0..w_n computed stage by stage: w_k(Y_m) = w_k(Y_{m-1}) +
/// w_{k-1}(Y_{m-1}) * sum_{i<m} c_{i,m} y_i, with Y_{m-1} the tower of the
/// leading (m-1) x (m-1) block.
std::vector<RingElement> sw_classes_by_recursion(BottMatrix const& c);

/// w_k via the stage recursion, 0 <= k <= n.
RingElement sw_class(BottMatrix const& c, std::size_t k);

/// w_1 = sum_i (sum_{j>i} c_{i,j}) y_i.
RingElement w1_closed_form(BottMatrix const& c);

/// Row-parity criterion: every strictly-upper row sum is even.
bool is_orientable(BottMatrix const& c);

/// Result of the degree-2 formula. For orientable C (so c_{n-1,n} = 0) the
/// reduced form supported on y_j y_k, k <= n-2, is used; otherwise the
/// unreduced sum over j < k <= n-1 plus square terms is rewritten in the ring.
struct W2Evaluation {
  RingElement value;
  bool reduced_form;
};

W2Evaluation w2_closed_form(BottMatrix const& c);

/// Left-hand side of the spin identity for the pair (j, k), as a bit:
/// sum_{r>j} sum_{s>k, s!=r} c_{j,r} c_{k,s} + c_{j,k} sum_{k<r<s} c_{k,r} c_{k,s}.
bool spin_obstruction(BottMatrix const& c, std::size_t j, std::size_t k);

/// not_applicable when C is not orientable; otherwise yes iff every
/// spin_obstruction(j, k) with 1 <= j < k <= n-2 vanishes.
Tristate is_spin(BottMatrix const& c);

/// Same verdict decided on the two-row matrices C_{jk}, 1 <= j < k <= n-2.
Tristate is_spin_via_submatrices(BottMatrix const& c);

/// Lexicographically least (j, k) with C_{jk} not spin, for orientable
/// non-spin C; nullopt otherwise.
std::optional<std::pair<std::size_t, std::size_t>> spin_witness(BottMatrix const& c);

/// (prod_i c_{i,i+1}) * y_1 ... y_{n-1}; nullopt when n = 1.
std::optional<RingElement> w_top_minus_one_closed_form(BottMatrix const& c);

/// Pairing of w^r with the fundamental class: coefficient of y_1 ... y_n in
/// the degree-n part of prod w_i^{r_i}.
bool sw_number(BottMatrix const& c, std::vector<RingElement> const& graded,
               Partition const& p);

std::vector<std::pair<Partition, bool>> sw_numbers(BottMatrix const& c);

struct CobordismVerdict {
  bool null_cobordant;
  Tristate oriented_null_cobordant;
};

/// Unoriented verdict from the Stiefel-Whitney numbers. Pontrjagin numbers of
/// these towers vanish identically, so an orientable tower with vanishing
/// Stiefel-Whitney numbers also bounds orientedly.
CobordismVerdict cobordism_verdict(BottMatrix const& c);

/// Checks w(Y_n) = w(Y_{n-1}) * (1 + sum_{i<n} c_{i,n} y_i) in the ring of C.
/// Requires n >= 2.
bool recursion_check(BottMatrix const& c);

struct SWReport {
  std::size_t n;
  RingElement total;
  std::vector<RingElement> graded;  // w_0 .. w_n
  bool orientable;
  Tristate spin;
  std::optional<std::pair<std::size_t, std::size_t>> spin_witness;
  Tristate w_top_minus_one_zero;  // not_applicable when n = 1
  bool w2_reduced_form;
  std::vector<std::pair<Partition, bool>> sw_numbers;
  bool null_cobordant;
  Tristate oriented_null_cobordant;
};

SWReport sw_report(BottMatrix const& c);

}  // namespace bott
