#include "bott/cohomology_ring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bott {

namespace {

void check_ring_size(BottMatrix const& c) {
  if (c.size() > max_ring_stages)
    throw std::length_error("ring arithmetic supports at most " +
                            std::to_string(max_ring_stages) + " stages");
}

// Sorts and cancels repeated monomials in pairs.
void normalize(std::vector<Monomial>& terms) {
  std::sort(terms.begin(), terms.end());
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  terms = std::move(out);
}

void check_same_ring(std::uint64_t expected, RingElement const& e) {
  if (e.fingerprint() != expected)
    throw std::invalid_argument("ring elements belong to different Bott matrices");
}

// Appends the normal form of m * y_i to out (uncancelled).
// If y_i does not divide m this is m*y_i; otherwise m*y_i = m' * y_i^2 with
// y_i^2 = sum_{j<i} c_{j,i} y_j y_i, giving sum_j c_{j,i} m*y_j.
void multiply_by_generator(std::vector<Z2Vector> const& columns, Monomial m,
                           std::size_t i, std::vector<Monomial>& out) {
  Monomial const bit = Monomial{1} << (i - 1);
  if ((m & bit) == 0) {
    out.push_back(m | bit);
    return;
  }
  for (Z2Vector col = columns[i - 1]; col != 0; col &= col - 1) {
    auto const j = static_cast<std::size_t>(std::countr_zero(col)) + 1;
    multiply_by_generator(columns, m, j, out);
  }
}

std::vector<Z2Vector> upper_columns(BottMatrix const& c) {
  std::vector<Z2Vector> cols(c.size());
  for (std::size_t j = 1; j <= c.size(); ++j) cols[j - 1] = c.upper_column(j);
  return cols;
}

}  // namespace

bool canonical_less(Monomial a, Monomial b) noexcept {
  auto const da = degree(a), db = degree(b);
  if (da != db) return da < db;
  if (a == b) return false;
  Monomial const diff = a ^ b;
  Monomial const lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

Exponents exponents_of(Monomial m, std::size_t n) {
  Exponents e(n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i] = (m >> i) & 1U;
  return e;
}

RingElement::RingElement(BottMatrix const& c)
    : n_(c.size()), fingerprint_(c.fingerprint()) {
  check_ring_size(c);
}

RingElement::RingElement(std::size_t n, std::uint64_t fingerprint,
                         std::vector<Monomial> terms)
    : n_(n), fingerprint_(fingerprint), terms_(std::move(terms)) {}

RingElement RingElement::one(BottMatrix const& c) { return monomial(c, 0); }

RingElement RingElement::generator(BottMatrix const& c, std::size_t i) {
  if (i < 1 || i > c.size())
    throw std::out_of_range("generator index outside 1..n");
  return monomial(c, Monomial{1} << (i - 1));
}

RingElement RingElement::monomial(BottMatrix const& c, Monomial m) {
  Monomial const fits = static_cast<Monomial>((std::uint64_t{1} << c.size()) - 1);
  if ((m & ~fits) != 0)
    throw std::out_of_range("monomial uses a variable beyond y_n");
  RingElement e(c);
  e.terms_.push_back(m);
  return e;
}

RingElement RingElement::from_terms(BottMatrix const& c,
                                    std::span<Monomial const> terms) {
  Monomial const fits = static_cast<Monomial>((std::uint64_t{1} << c.size()) - 1);
  RingElement e(c);
  for (auto m : terms) {
    if ((m & ~fits) != 0)
      throw std::out_of_range("monomial uses a variable beyond y_n");
    e.terms_.push_back(m);
  }
  normalize(e.terms_);
  return e;
}

bool RingElement::contains(Monomial m) const noexcept {
  return std::binary_search(terms_.begin(), terms_.end(), m, canonical_less);
}

int RingElement::max_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree(terms_.back()));
}

RingElement RingElement::pulled_back_to(BottMatrix const& c) const {
  if (n_ > c.size() || leading_submatrix(c, n_).fingerprint() != fingerprint_)
    throw std::invalid_argument(
        "element does not live in the ring of a leading submatrix");
  return RingElement(c.size(), c.fingerprint(), terms_);
}

RingElement& RingElement::operator+=(RingElement const& other) {
  check_same_ring(fingerprint_, other);
  std::vector<Monomial> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(),
                                other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(merged), canonical_less);
  terms_ = std::move(merged);
  return *this;
}

RingElement multiply(BottMatrix const& c, RingElement const& a,
                     RingElement const& b) {
  auto const fp = c.fingerprint();
  check_same_ring(fp, a);
  check_same_ring(fp, b);
  auto const columns = upper_columns(c);

  std::vector<Monomial> acc;
  std::vector<Monomial> current, next;
  for (auto t : b.terms()) {
    for (auto s : a.terms()) {
      current.assign(1, s);
      for (Monomial rest = t; rest != 0 && !current.empty(); rest &= rest - 1) {
        auto const i = static_cast<std::size_t>(std::countr_zero(rest)) + 1;
        next.clear();
        for (auto m : current) multiply_by_generator(columns, m, i, next);
        normalize(next);
        std::swap(current, next);
      }
      acc.insert(acc.end(), current.begin(), current.end());
    }
  }
  normalize(acc);
  return RingElement::from_terms(c, acc);
}

RingElement power(BottMatrix const& c, RingElement const& a, unsigned e) {
  auto result = RingElement::one(c);
  for (unsigned k = 0; k < e; ++k) result = multiply(c, result, a);
  return result;
}

RingElement graded_component(RingElement const& e, std::size_t k) {
  std::vector<Monomial> picked;
  for (auto m : e.terms())
    if (degree(m) == k) picked.push_back(m);
  return RingElement(e.stages(), e.fingerprint(), std::move(picked));
}

std::string to_string(Monomial m) {
  if (m == 0) return "1";
  std::string s;
  for (Monomial rest = m; rest != 0; rest &= rest - 1) {
    if (!s.empty()) s += '*';
    s += 'y';
    s += std::to_string(std::countr_zero(rest) + 1);
  }
  return s;
}

std::string to_string(RingElement const& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (auto m : e.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(m);
  }
  return s;
}

RingElement reduce(BottMatrix const& c, std::span<Exponents const> raw,
                   RewriteOrder order, ReductionTrace* trace) {
  check_ring_size(c);
  auto const n = c.size();
  auto const columns = upper_columns(c);

  // Pending unreduced monomials with Z2 multiplicity.
  std::map<Exponents, bool> pending;
  for (auto const& e : raw) {
    if (e.size() != n)
      throw std::invalid_argument("exponent vector length must equal n");
    pending[e] = !pending[e];
  }

  std::vector<Monomial> result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    if (!node.mapped()) continue;
    Exponents const& e = node.key();

    std::size_t squared = 0;
    if (order == RewriteOrder::highest_first) {
      for (std::size_t i = n; i >= 1; --i)
        if (e[i - 1] >= 2) {
          squared = i;
          break;
        }
    } else {
      for (std::size_t i = 1; i <= n; ++i)
        if (e[i - 1] >= 2) {
          squared = i;
          break;
        }
    }

    if (squared == 0) {
      Monomial m = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (e[i] == 1) m |= Monomial{1} << i;
      result.push_back(m);
      continue;
    }

    ReductionStep step{e, squared, {}};
    for (Z2Vector col = columns[squared - 1]; col != 0; col &= col - 1) {
      auto const j = static_cast<std::size_t>(std::countr_zero(col));
      Exponents f = e;
      f[squared - 1] -= 1;
      f[j] += 1;
      if (trace) step.rewritten.push_back(f);
      pending[f] = !pending[f];
    }
    if (trace) trace->steps.push_back(std::move(step));
  }
  return RingElement::from_terms(c, result);
}

bool is_normal_form(BottMatrix const& c, Monomial m) {
  auto const e = exponents_of(m, c.size());
  ReductionTrace trace;
  auto const reduced = reduce(c, std::span(&e, 1), RewriteOrder::highest_first, &trace);
  return trace.steps.empty() && reduced == RingElement::monomial(c, m);
}

std::uint64_t basis_dimension(BottMatrix const& c, std::size_t k) {
  auto const n = c.size();
  if (k > n) throw std::out_of_range("degree exceeds n");
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (degree(static_cast<Monomial>(m)) != k) continue;
    if (!is_normal_form(c, static_cast<Monomial>(m)))
      throw std::logic_error("square-free monomial " +
                             to_string(static_cast<Monomial>(m)) +
                             " is not a normal form");
    ++count;
  }
  // C(n, k) by the multiplicative formula
  std::uint64_t binom = 1;
  for (std::size_t i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
  if (count != binom)
    throw std::logic_error("normal-form count disagrees with binomial");
  return count;
}

long long euler_characteristic(BottMatrix const& c) {
  long long chi = 0;
  for (std::size_t k = 0; k <= c.size(); ++k) {
    auto const d = static_cast<long long>(basis_dimension(c, k));
    chi += (k % 2 == 0) ? d : -d;
  }
  return chi;
}

}  // namespace bott
