#include "bott/sw_classes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bott {

namespace {

// sum_{i<j} c_{i,j} y_i in the ring of c: the j-th factor of the total class.
RingElement stage_class(BottMatrix const& c, std::size_t j) {
  std::vector<Monomial> terms;
  for (Z2Vector col = c.upper_column(j); col != 0; col &= col - 1)
    terms.push_back(Monomial{1} << std::countr_zero(col));
  return RingElement::from_terms(c, terms);
}

bool bit(BottMatrix const& c, std::size_t i, std::size_t j) { return c(i, j); }

void partitions_rec(std::size_t n, std::size_t part, std::size_t remaining,
                    std::vector<unsigned>& r, std::vector<Partition>& out) {
  if (part == 0) {
    if (remaining == 0) out.push_back(Partition{r});
    return;
  }
  // Largest multiplicity of the current part first gives descending order.
  for (std::size_t m = remaining / part + 1; m-- > 0;) {
    r[part - 1] = static_cast<unsigned>(m);
    partitions_rec(n, part - 1, remaining - m * part, r, out);
  }
  r[part - 1] = 0;
}

Monomial top_monomial(std::size_t n) {
  return static_cast<Monomial>((std::uint64_t{1} << n) - 1);
}

}  // namespace

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::no: return "false";
    case Tristate::yes: return "true";
    case Tristate::not_applicable: return "not-applicable";
  }
  return "?";
}

std::size_t Partition::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < multiplicities.size(); ++i)
    w += (i + 1) * multiplicities[i];
  return w;
}

std::string to_string(Partition const& p) {
  std::string s;
  for (std::size_t i = 0; i < p.multiplicities.size(); ++i) {
    auto const r = p.multiplicities[i];
    if (r == 0) continue;
    if (!s.empty()) s += '*';
    s += "w" + std::to_string(i + 1);
    if (r > 1) s += "^" + std::to_string(r);
  }
  return s.empty() ? "1" : s;
}

std::vector<Partition> partitions(std::size_t n) {
  std::vector<Partition> out;
  std::vector<unsigned> r(n, 0);
  partitions_rec(n, n, n, r, out);
  return out;
}

RingElement total_sw_class(BottMatrix const& c) {
  auto w = RingElement::one(c);
  for (std::size_t j = 2; j <= c.size(); ++j)
    w = multiply(c, w, RingElement::one(c) + stage_class(c, j));
  return w;
}

std::vector<RingElement> sw_classes_by_recursion(BottMatrix const& c) {
  auto const n = c.size();
  auto base = leading_submatrix(c, 1);
  std::vector<RingElement> w{RingElement::one(base), RingElement::zero(base)};
  for (std::size_t m = 2; m <= n; ++m) {
    auto const tower = leading_submatrix(c, m);
    for (auto& wk : w) wk = wk.pulled_back_to(tower);
    w.push_back(RingElement::zero(tower));
    auto const twist = stage_class(tower, m);
    // descending k so w[k-1] is still the previous stage's class
    for (std::size_t k = m; k >= 1; --k)
      w[k] += multiply(tower, w[k - 1], twist);
  }
  for (auto& wk : w) wk = wk.pulled_back_to(c);
  return w;
}

RingElement sw_class(BottMatrix const& c, std::size_t k) {
  if (k > c.size()) throw std::out_of_range("degree exceeds n");
  return sw_classes_by_recursion(c)[k];
}

RingElement w1_closed_form(BottMatrix const& c) {
  std::vector<Monomial> terms;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (row_sum(c, i)) terms.push_back(Monomial{1} << (i - 1));
  return RingElement::from_terms(c, terms);
}

bool is_orientable(BottMatrix const& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (row_sum(c, i)) return false;
  return true;
}

bool spin_obstruction(BottMatrix const& c, std::size_t j, std::size_t k) {
  auto const n = c.size();
  if (j < 1 || j >= k || k > n)
    throw std::out_of_range("spin obstruction requires 1 <= j < k <= n");
  bool acc = false;
  for (std::size_t r = j + 1; r <= n; ++r)
    for (std::size_t s = k + 1; s <= n; ++s)
      if (s != r) acc ^= bit(c, j, r) && bit(c, k, s);
  if (bit(c, j, k))
    for (std::size_t r = k + 1; r <= n; ++r)
      for (std::size_t s = r + 1; s <= n; ++s) acc ^= bit(c, k, r) && bit(c, k, s);
  return acc;
}

W2Evaluation w2_closed_form(BottMatrix const& c) {
  auto const n = c.size();
  if (is_orientable(c)) {
    std::vector<Monomial> terms;
    for (std::size_t k = 2; k + 2 <= n; ++k)
      for (std::size_t j = 1; j < k; ++j)
        if (spin_obstruction(c, j, k))
          terms.push_back((Monomial{1} << (j - 1)) | (Monomial{1} << (k - 1)));
    return {RingElement::from_terms(c, terms), true};
  }

  // Unreduced degree-2 part: mixed terms y_j y_k (j < k <= n-1) and square
  // terms y_k^2, then rewritten to normal form.
  std::vector<Exponents> raw;
  for (std::size_t k = 2; k + 1 <= n; ++k)
    for (std::size_t j = 1; j < k; ++j) {
      bool coeff = false;
      for (std::size_t r = j + 1; r <= n; ++r)
        for (std::size_t s = k + 1; s <= n; ++s)
          if (s != r) coeff ^= bit(c, j, r) && bit(c, k, s);
      if (coeff) {
        Exponents e(n, 0);
        e[j - 1] = e[k - 1] = 1;
        raw.push_back(std::move(e));
      }
    }
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    bool coeff = false;
    for (std::size_t r = k + 1; r <= n; ++r)
      for (std::size_t s = r + 1; s <= n; ++s) coeff ^= bit(c, k, r) && bit(c, k, s);
    if (coeff) {
      Exponents e(n, 0);
      e[k - 1] = 2;
      raw.push_back(std::move(e));
    }
  }
  return {reduce(c, raw), false};
}

Tristate is_spin(BottMatrix const& c) {
  if (!is_orientable(c)) return Tristate::not_applicable;
  auto const n = c.size();
  for (std::size_t k = 2; k + 2 <= n; ++k)
    for (std::size_t j = 1; j < k; ++j)
      if (spin_obstruction(c, j, k)) return Tristate::no;
  return Tristate::yes;
}

std::optional<std::pair<std::size_t, std::size_t>> spin_witness(BottMatrix const& c) {
  if (!is_orientable(c)) return std::nullopt;
  auto const n = c.size();
  for (std::size_t j = 1; j + 3 <= n; ++j)
    for (std::size_t k = j + 1; k + 2 <= n; ++k)
      if (is_spin(submatrix_pair(c, j, k)) == Tristate::no)
        return std::pair{j, k};
  return std::nullopt;
}

Tristate is_spin_via_submatrices(BottMatrix const& c) {
  if (!is_orientable(c)) return Tristate::not_applicable;
  return spin_witness(c) ? Tristate::no : Tristate::yes;
}

std::optional<RingElement> w_top_minus_one_closed_form(BottMatrix const& c) {
  auto const n = c.size();
  if (n < 2) return std::nullopt;
  for (std::size_t i = 1; i < n; ++i)
    if (!bit(c, i, i + 1)) return RingElement::zero(c);
  return RingElement::monomial(c, top_monomial(n - 1));
}

bool sw_number(BottMatrix const& c, std::vector<RingElement> const& graded,
               Partition const& p) {
  auto const n = c.size();
  if (p.weight() != n) throw std::invalid_argument("partition weight must equal n");
  auto product = RingElement::one(c);
  for (std::size_t i = 1; i <= p.multiplicities.size(); ++i)
    for (unsigned e = 0; e < p.multiplicities[i - 1]; ++e) {
      product = multiply(c, product, graded.at(i));
      if (product.is_zero()) return false;
    }
  return graded_component(product, n).contains(top_monomial(n));
}

std::vector<std::pair<Partition, bool>> sw_numbers(BottMatrix const& c) {
  auto const graded = sw_classes_by_recursion(c);
  std::vector<std::pair<Partition, bool>> out;
  for (auto& p : partitions(c.size())) {
    bool const v = sw_number(c, graded, p);
    out.emplace_back(std::move(p), v);
  }
  return out;
}

CobordismVerdict cobordism_verdict(BottMatrix const& c) {
  auto const numbers = sw_numbers(c);
  bool const bounds = std::none_of(numbers.begin(), numbers.end(),
                                   [](auto const& kv) { return kv.second; });
  // Pontrjagin numbers vanish for every real Bott tower.
  Tristate oriented = Tristate::not_applicable;
  if (is_orientable(c)) oriented = to_tristate(bounds);
  return {bounds, oriented};
}

bool recursion_check(BottMatrix const& c) {
  auto const n = c.size();
  if (n < 2) throw std::invalid_argument("recursion check requires n >= 2");
  auto const base = total_sw_class(leading_submatrix(c, n - 1)).pulled_back_to(c);
  auto const rhs = multiply(c, base, RingElement::one(c) + stage_class(c, n));
  return total_sw_class(c) == rhs;
}

SWReport sw_report(BottMatrix const& c) {
  auto const n = c.size();
  auto const total = total_sw_class(c);
  std::vector<RingElement> graded;
  for (std::size_t k = 0; k <= n; ++k) graded.push_back(graded_component(total, k));

  auto numbers = sw_numbers(c);
  bool const bounds = std::none_of(numbers.begin(), numbers.end(),
                                   [](auto const& kv) { return kv.second; });
  bool const orientable = is_orientable(c);

  Tristate top = Tristate::not_applicable;
  if (n >= 2) top = to_tristate(graded[n - 1].is_zero());

  return SWReport{
      .n = n,
      .total = total,
      .graded = std::move(graded),
      .orientable = orientable,
      .spin = is_spin(c),
      .spin_witness = spin_witness(c),
      .w_top_minus_one_zero = top,
      .w2_reduced_form = w2_closed_form(c).reduced_form,
      .sw_numbers = std::move(numbers),
      .null_cobordant = bounds,
      .oriented_null_cobordant =
          orientable ? to_tristate(bounds) : Tristate::not_applicable,
  };
}

}  // namespace bott
