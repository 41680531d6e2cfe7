#include "bott/verify.hpp"

#include <functional>

#include "bott/census.hpp"
#include "bott/cohomology_ring.hpp"
#include "bott/fundamental_group.hpp"
#include "bott/sw_classes.hpp"

namespace bott {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  std::uint64_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Fixed suite order; every n contributes to the same slots.
enum Suite : std::size_t {
  closed_forms,
  orientable_top_class,
  submatrix_spin,
  heredity,
  census_goldens,
  conjugacy,
  h1_smith,
  sw_numbers_vanish,
  recursion,
  confluence,
  dimensions,
  suite_count
};

constexpr char const* suite_names[suite_count] = {
    "closed forms match ring (w1, w2, w_{n-1}, stage recursion)",
    "orientable implies w_{n-1} = 0",
    "spin agrees with two-row submatrix criterion",
    "suffix submatrices inherit orientability and spin",
    "n=4 census matches the eight spin matrices",
    "seven conjugacy identities hold by free reduction",
    "H1 from Smith normal form matches closed form",
    "all Stiefel-Whitney numbers vanish",
    "total class satisfies the one-stage recursion",
    "highest-first and lowest-first rewriting agree",
    "dim H^k = C(n,k) and Euler characteristic 0",
};

using Results = std::vector<SuiteResult>;

Results empty_results() {
  Results r(suite_count);
  for (std::size_t s = 0; s < suite_count; ++s) r[s].name = suite_names[s];
  return r;
}

void record(SuiteResult& r, BottMatrix const& c, std::function<std::string()> const& check) {
  ++r.cases;
  std::string detail;
  try {
    detail = check();
  } catch (std::exception const& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (detail.empty()) return;
  if (r.failures++ == 0) r.first_failure = detail + "\n" + to_text(c);
}

std::string check_closed_forms(BottMatrix const& c) {
  auto const n = c.size();
  auto const total = total_sw_class(c);
  auto const stages = sw_classes_by_recursion(c);
  for (std::size_t k = 0; k <= n; ++k)
    if (stages[k] != graded_component(total, k))
      return "stage recursion differs from total class in degree " + std::to_string(k);
  auto const w1 = graded_component(total, 1);
  if (w1_closed_form(c) != w1) return "w1 closed form";
  if (is_orientable(c) != w1.is_zero()) return "row parity criterion";
  if (is_orientable(c) && w2_closed_form(c).value != graded_component(total, 2))
    return "w2 closed form";
  if (n >= 2 && *w_top_minus_one_closed_form(c) != graded_component(total, n - 1))
    return "w_{n-1} closed form";
  return {};
}

std::string check_heredity(BottMatrix const& c) {
  bool const orientable = is_orientable(c);
  bool const spin = is_spin(c) == Tristate::yes;
  for (std::size_t k = 1; k < c.size(); ++k) {
    auto const s = suffix_submatrix(c, k);
    if (orientable && !is_orientable(s))
      return "suffix at " + std::to_string(k) + " not orientable";
    if (spin && is_spin(s) != Tristate::yes)
      return "suffix at " + std::to_string(k) + " not spin";
  }
  return {};
}

std::string check_sw_numbers(BottMatrix const& c) {
  for (auto const& [p, v] : sw_numbers(c))
    if (v) return "nonzero number " + to_string(p);
  return {};
}

std::string check_dimensions(BottMatrix const& c) {
  auto const n = c.size();
  for (std::size_t k = 0; k <= n; ++k)
    if (basis_dimension(c, k) != binomial(n, k))
      return "dim H^" + std::to_string(k);
  if (euler_characteristic(c) != 0) return "Euler characteristic";
  return {};
}

void visit_matrix(Results& acc, BottMatrix const& c) {
  auto const n = c.size();
  record(acc[closed_forms], c, [&] { return check_closed_forms(c); });
  if (n >= 2 && is_orientable(c))
    record(acc[orientable_top_class], c, [&]() -> std::string {
      return sw_class(c, n - 1).is_zero() ? "" : "w_{n-1} nonzero";
    });
  record(acc[submatrix_spin], c, [&]() -> std::string {
    return is_spin(c) == is_spin_via_submatrices(c) ? "" : "verdicts differ";
  });
  record(acc[heredity], c, [&] { return check_heredity(c); });
  record(acc[conjugacy], c, [&]() -> std::string {
    for (auto const& chk : appendix_conjugacy_suite(c))
      if (!chk.passed())
        return "case " + std::to_string(chk.case_number) + " at (" +
               std::to_string(chk.p) + "," + std::to_string(chk.q) + ")";
    return {};
  });
  record(acc[h1_smith], c, [&]() -> std::string {
    return h1_from_smith(c) == h1_closed_form(c) ? "" : "H1 differs";
  });
  record(acc[sw_numbers_vanish], c, [&] { return check_sw_numbers(c); });
  if (n >= 2)
    record(acc[recursion], c, [&]() -> std::string {
      return recursion_check(c) ? "" : "recursion fails";
    });
  if (n <= confluence_max_n)
    record(acc[confluence], c, [&] {
      std::string detail;
      rewriting_is_confluent(c, &detail);
      return detail;
    });
  record(acc[dimensions], c, [&] { return check_dimensions(c); });
}

void merge_results(Results& into, Results&& part) {
  for (std::size_t s = 0; s < suite_count; ++s) {
    if (into[s].failures == 0 && part[s].failures != 0)
      into[s].first_failure = std::move(part[s].first_failure);
    into[s].cases += part[s].cases;
    into[s].failures += part[s].failures;
  }
}

void check_census(SuiteResult& r, unsigned jobs) {
  ++r.cases;
  std::string detail;
  try {
    auto const spin = census(4, CensusFilter::spin, true, jobs);
    auto const orientable = census(4, CensusFilter::orientable, true, jobs);
    auto const& expected = four_stage_spin_matrices();
    if (spin.total != 64) detail = "total is not 64";
    else if (*spin.listed != expected) detail = "spin set differs";
    else if (*orientable.listed != expected) detail = "orientable set differs";
  } catch (std::exception const& e) {
    detail = std::string("exception: ") + e.what();
  }
  if (!detail.empty()) {
    ++r.failures;
    r.first_failure = detail;
  }
}

}  // namespace

bool rewriting_is_confluent(BottMatrix const& c, std::string* detail) {
  auto const n = c.size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= 3;
  Exponents e(n, 0);
  for (std::uint64_t code = 0; code < count; ++code) {
    auto v = code;
    for (std::size_t i = 0; i < n; ++i, v /= 3) e[i] = static_cast<unsigned>(v % 3);
    std::span<Exponents const> one(&e, 1);
    auto const high = reduce(c, one, RewriteOrder::highest_first);
    auto const low = reduce(c, one, RewriteOrder::lowest_first);
    if (high != low) {
      if (detail) {
        std::string ex;
        for (auto x : e) ex += std::to_string(x);
        *detail = "exponents " + ex + ": " + to_string(high) + " vs " + to_string(low);
      }
      return false;
    }
  }
  return true;
}

std::vector<SuiteResult> verify_range(std::size_t n_min, std::size_t n_max,
                                      unsigned jobs, std::size_t cap) {
  if (n_min > n_max) return {};
  if (n_min < 1) throw std::invalid_argument("range must start at 1 or above");
  if (n_max > cap)
    throw std::length_error("n = " + std::to_string(n_max) + " exceeds cap " +
                            std::to_string(cap) + " (raise with --max-n)");

  auto results = empty_results();
  for (std::size_t n = n_min; n <= n_max; ++n) {
    merge_results(results, fold_matrices(n, jobs, empty_results(), visit_matrix,
                                         merge_results));
    if (n == 4) check_census(results[census_goldens], jobs);
  }
  return results;
}

}  // namespace bott
