#include <doctest.h>

#include <random>

#include "bott/cohomology_ring.hpp"
#include "oracles.hpp"

using namespace bott;

namespace {

BottMatrix m(char const* text) { return parse_bott_matrix(text); }

RingElement random_element(std::mt19937_64& rng, BottMatrix const& c) {
  std::vector<Monomial> terms;
  auto const count = rng() % 6;
  Monomial const all = static_cast<Monomial>((std::uint64_t{1} << c.size()) - 1);
  for (std::uint64_t t = 0; t < count; ++t) terms.push_back(static_cast<Monomial>(rng()) & all);
  return RingElement::from_terms(c, terms);
}

// Free product then naive reduction.
std::set<Monomial> oracle_product(BottMatrix const& c, RingElement const& a,
                                  RingElement const& b) {
  auto const n = c.size();
  oracle::Poly pa, pb;
  for (auto t : a.terms()) pa.insert(exponents_of(t, n));
  for (auto t : b.terms()) pb.insert(exponents_of(t, n));
  return oracle::as_monomials(oracle::reduce(c, oracle::mul(pa, pb)));
}

}  // namespace

TEST_CASE("rendering and canonical order") {
  auto const c = BottMatrix::identity(3);
  CHECK(to_string(RingElement::zero(c)) == "0");
  CHECK(to_string(RingElement::one(c)) == "1");
  std::vector<Monomial> terms{0b110, 0b101, 0b011, 0b001, 0b000, 0b111};
  CHECK(to_string(RingElement::from_terms(c, terms)) ==
        "1 + y1 + y1*y2 + y1*y3 + y2*y3 + y1*y2*y3");
  std::vector<Monomial> twice{0b01, 0b01, 0b10};
  CHECK(to_string(RingElement::from_terms(c, twice)) == "y2");
  CHECK(canonical_less(0b100, 0b011));
  CHECK(canonical_less(0b011, 0b101));
  CHECK_FALSE(canonical_less(0b101, 0b101));
}

TEST_CASE("reduce") {
  auto const c3 = m("3\n110\n011\n001");
  Exponents y1sq{2, 0, 0};
  CHECK(reduce(c3, std::span(&y1sq, 1)).is_zero());

  auto const id = BottMatrix::identity(4);
  for (std::size_t i = 0; i < 4; ++i) {
    Exponents e(4, 0);
    e[i] = 2;
    CHECK(reduce(id, std::span(&e, 1)).is_zero());
  }

  Exponents y3sq{0, 0, 2};
  ReductionTrace trace;
  auto const r = reduce(c3, std::span(&y3sq, 1), RewriteOrder::highest_first, &trace);
  CHECK(to_string(r) == "y2*y3");
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].index == 3);
  CHECK(trace.steps[0].rewritten == std::vector<Exponents>{{0, 1, 1}});

  std::vector<Exponents> cancel{{1, 1, 0}, {1, 1, 0}};
  CHECK(reduce(c3, cancel).is_zero());
  std::vector<Exponents> wrong_length{{1, 1}};
  CHECK_THROWS_AS(reduce(c3, wrong_length), std::invalid_argument);
}

TEST_CASE("multiply") {
  auto const klein = m("2\n11\n01");
  auto const one = RingElement::one(klein);
  auto const y1 = RingElement::generator(klein, 1);
  auto const y2 = RingElement::generator(klein, 2);
  CHECK(multiply(klein, one + y1, one + y1) == one);
  CHECK(multiply(klein, y1 + y2, one) == y1 + y2);
  CHECK(to_string(multiply(klein, y2, y2)) == "y1*y2");
  CHECK(power(klein, y2, 3).is_zero());
  CHECK(power(klein, y2, 0) == one);
  CHECK_THROWS_AS(RingElement::generator(klein, 3), std::out_of_range);

  auto const other = BottMatrix::identity(2);
  CHECK_THROWS_AS(multiply(klein, y1, RingElement::generator(other, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(y1 + RingElement::one(other), std::invalid_argument);
}

TEST_CASE("graded components") {
  auto const c = BottMatrix::identity(2);
  std::vector<Monomial> terms{0, 0b01, 0b11};
  auto const e = RingElement::from_terms(c, terms);
  CHECK(to_string(graded_component(e, 1)) == "y1");
  CHECK(graded_component(e, 5).is_zero());
  CHECK(e.max_degree() == 2);
  CHECK(RingElement::zero(c).max_degree() == -1);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    auto const n = 1 + rng() % 6;
    auto const cm = oracle::random_matrix(rng, n);
    auto const x = random_element(rng, cm);
    auto sum = RingElement::zero(cm);
    for (std::size_t k = 0; k <= n; ++k) sum += graded_component(x, k);
    CHECK(sum == x);
  }
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 10000; ++t) {
    auto const n = 1 + rng() % 6;
    auto const c = oracle::random_matrix(rng, n);
    auto const a = random_element(rng, c);
    auto const b = random_element(rng, c);
    auto const d = random_element(rng, c);
    auto const ab = multiply(c, a, b);
    REQUIRE(ab == multiply(c, b, a));
    REQUIRE(multiply(c, ab, d) == multiply(c, a, multiply(c, b, d)));
    REQUIRE(multiply(c, a, b + d) == ab + multiply(c, a, d));
    REQUIRE(multiply(c, a, RingElement::one(c)) == a);
    REQUIRE(a + a == RingElement::zero(c));
  }
}

TEST_CASE("multiplication agrees with naive expansion") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 3000; ++t) {
    auto const n = 1 + rng() % 6;
    auto const c = oracle::random_matrix(rng, n);
    auto const a = random_element(rng, c);
    auto const b = random_element(rng, c);
    REQUIRE(oracle::as_monomials(multiply(c, a, b)) == oracle_product(c, a, b));
  }
}

TEST_CASE("rewriting order does not matter") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    auto const n = 1 + rng() % 6;
    auto const c = oracle::random_matrix(rng, n);
    std::vector<Exponents> raw;
    for (int k = 0; k < 3; ++k) {
      Exponents e(n);
      for (auto& x : e) x = static_cast<unsigned>(rng() % 4);
      raw.push_back(e);
    }
    auto const high = reduce(c, raw, RewriteOrder::highest_first);
    REQUIRE(high == reduce(c, raw, RewriteOrder::lowest_first));
    oracle::Poly p;
    for (auto const& e : raw) oracle::toggle(p, e);
    REQUIRE(oracle::as_monomials(high) == oracle::as_monomials(oracle::reduce(c, p)));
  }
}

TEST_CASE("dimensions and Euler characteristic") {
  CHECK(basis_dimension(BottMatrix::identity(4), 2) == 6);
  auto const c = m("5\n10110\n01110\n00111\n00010\n00001");
  CHECK(basis_dimension(c, 0) == 1);
  CHECK(basis_dimension(c, 5) == 1);
  CHECK_THROWS_AS(basis_dimension(c, 6), std::out_of_range);
  CHECK(euler_characteristic(BottMatrix::identity(1)) == 0);
  CHECK(euler_characteristic(c) == 0);
  CHECK(euler_characteristic(BottMatrix::identity(7)) == 0);
  for (Monomial mono = 0; mono < 32; ++mono) CHECK(is_normal_form(c, mono));
}

TEST_CASE("pull back from a leading submatrix") {
  auto const c = m("4\n1011\n0111\n0011\n0001");
  auto const base = leading_submatrix(c, 3);
  auto const y3 = RingElement::generator(base, 3);
  auto const pulled = y3.pulled_back_to(c);
  CHECK(pulled == RingElement::generator(c, 3));
  CHECK_THROWS_AS(y3.pulled_back_to(BottMatrix::identity(4)), std::invalid_argument);
}
