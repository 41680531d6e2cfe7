#include <doctest.h>

#include <random>

#include <Eigen/LU>

#include "bott/fundamental_group.hpp"
#include "bott/smith.hpp"
#include "oracles.hpp"

using namespace bott;

namespace {

BottMatrix m(char const* text) { return parse_bott_matrix(text); }

BottMatrix const klein = m("2\n11\n01");
BottMatrix const six = m("6\n100000\n010011\n001011\n000111\n000010\n000001");

GroupWord random_word(std::mt19937_64& rng, std::size_t max_length) {
  std::vector<Letter> letters;
  auto const len = rng() % (max_length + 1);
  for (std::uint64_t i = 0; i < len; ++i)
    letters.push_back({3 + rng() % 3, (rng() & 1U) ? 1 : -1});
  return GroupWord(letters);
}

// Reference free reduction by repeated scanning.
GroupWord rescan_reduce(GroupWord const& w) {
  auto letters = w.letters();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i)
      if (letters[i].generator == letters[i + 1].generator &&
          letters[i].exponent == -letters[i + 1].exponent) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                      letters.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
  }
  return GroupWord(letters);
}

using Mat = IntMatrix<long long>;

Mat random_unimodular(std::mt19937_64& rng, Eigen::Index k) {
  Mat u = Mat::Identity(k, k);
  for (int step = 0; step < 6; ++step) {
    auto const i = static_cast<Eigen::Index>(rng() % k);
    auto const j = static_cast<Eigen::Index>(rng() % k);
    switch (rng() % 3) {
      case 0:
        if (i != j) u.row(i) += (static_cast<long long>(rng() % 5) - 2) * u.row(j);
        break;
      case 1: u.row(i).swap(u.row(j)); break;
      default: u.row(i) *= -1; break;
    }
  }
  return u;
}

void check_decomposition(Mat const& a) {
  auto const s = smith_normal_form(a);
  REQUIRE(s.left * a * s.right == s.diagonal);
  REQUIRE(std::abs(std::llround(s.left.cast<double>().determinant())) == 1);
  REQUIRE(std::abs(std::llround(s.right.cast<double>().determinant())) == 1);
  for (Eigen::Index i = 0; i < s.diagonal.rows(); ++i)
    for (Eigen::Index j = 0; j < s.diagonal.cols(); ++j)
      if (i != j) REQUIRE(s.diagonal(i, j) == 0);
  auto const d = s.invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    REQUIRE(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) REQUIRE(d[i + 1] % d[i] == 0);
    if (i + 1 < d.size() && d[i] == 0) REQUIRE(d[i + 1] == 0);
  }
}

}  // namespace

TEST_CASE("words") {
  CHECK(free_reduce(GroupWord{{3, 1}, {3, -1}}).empty());
  CHECK(free_reduce(GroupWord{{3, 1}, {4, 1}, {4, -1}, {3, 1}}) == GroupWord{{3, 1}, {3, 1}});
  GroupWord const reduced{{3, 1}, {4, -1}, {3, 1}};
  CHECK(free_reduce(reduced) == reduced);
  CHECK(is_freely_reduced(reduced));
  CHECK(to_string(GroupWord{}) == "1");
  CHECK(to_string(GroupWord{{3, 1}, {4, -1}}) == "a3 a4^-1");
  CHECK_THROWS_AS((GroupWord{{3, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(GroupWord(std::vector<Letter>{{3, 0}}), std::invalid_argument);
}

TEST_CASE("free reduction properties") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 10000; ++t) {
    auto const w = random_word(rng, 16);
    auto const r = free_reduce(w);
    REQUIRE(is_freely_reduced(r));
    REQUIRE(free_reduce(r) == r);
    REQUIRE(r == rescan_reduce(w));
    REQUIRE(free_reduce(w * w.inverse()).empty());
    auto const v = random_word(rng, 8);
    REQUIRE(free_reduce(w * v) == free_reduce(free_reduce(w) * free_reduce(v)));
  }
}

TEST_CASE("presentations") {
  auto const torus = presentation(BottMatrix::identity(2));
  CHECK(torus.generator_count == 2);
  REQUIRE(torus.relators.size() == 1);
  CHECK(to_string(torus.relators[0]) == "a3 a4 a3^-1 a4^-1");

  auto const k = presentation(klein);
  CHECK(to_string(k.relators[0]) == "a3 a4^-1 a3^-1 a4^-1");
  CHECK(to_string(k) == "gen: a3 a4 ; rel: a3 a4^-1 a3^-1 a4^-1");

  auto const p3 = presentation(m("3\n100\n011\n001"));
  REQUIRE(p3.relators.size() == 3);
  CHECK(to_string(p3.relators[0]) == "a4 a5 a4^-1 a5^-1");
  CHECK(to_string(p3.relators[1]) == "a4 a6 a4^-1 a6^-1");
  CHECK(to_string(p3.relators[2]) == "a5 a6^-1 a5^-1 a6^-1");

  CHECK(to_string(presentation(BottMatrix::identity(1))) == "gen: a2 ; rel:");
  CHECK(presentation(six).relators.size() == 15);
}

TEST_CASE("conjugacy identities") {
  auto const checks = appendix_conjugacy_suite(klein);
  REQUIRE(checks.size() == 7);
  for (auto const& c : checks) {
    CHECK(c.passed());
    CHECK(c.realized == (c.twisted == klein(1, 2)));
  }
  CHECK(checks[0].case_number == 1);
  CHECK_FALSE(checks[0].twisted);
  CHECK(checks[6].case_number == 7);
  CHECK(checks[6].twisted);
  CHECK(checks[6].eps_p);
  CHECK(checks[6].eps_q);
  for (auto const& c : checks) CHECK_FALSE((c.twisted && !c.eps_p && c.eps_q));

  for (std::size_t n = 2; n <= 4; ++n)
    for (auto const& c : enumerate_matrices(n)) {
      auto const all = appendix_conjugacy_suite(c);
      REQUIRE(all.size() == 7 * n * (n - 1) / 2);
      for (auto const& chk : all) REQUIRE(chk.passed());
    }
}

TEST_CASE("abelianized relations") {
  CHECK(abelianized_relation_matrix(BottMatrix::identity(3)).isZero());
  auto const k = abelianized_relation_matrix(klein);
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) == 0);
  CHECK(k(0, 1) == 2);

  auto const a = abelianized_relation_matrix(m("3\n111\n010\n001"));
  std::vector<std::vector<long long>> nonzero;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (!a.row(i).isZero()) nonzero.push_back({a(i, 0), a(i, 1), a(i, 2)});
  CHECK(nonzero == std::vector<std::vector<long long>>{{0, 2, 0}, {0, 0, 2}});
}

TEST_CASE("Smith normal form") {
  Mat z = Mat::Zero(3, 2);
  auto const sz = smith_normal_form(z);
  CHECK(sz.invariant_factors() == std::vector<long long>{0, 0});

  Mat row(1, 2);
  row << 0, 2;
  CHECK(smith_normal_form(row).invariant_factors() == std::vector<long long>{2});

  Mat e(2, 2);
  e << 2, 4, 6, 8;
  CHECK(smith_normal_form(e).invariant_factors() == std::vector<long long>{2, 4});

  Mat g(2, 2);
  g << 2, 0, 0, 3;
  CHECK(smith_normal_form(g).invariant_factors() == std::vector<long long>{1, 6});

  std::mt19937_64 rng(8);
  for (int t = 0; t < 2000; ++t) {
    Mat d = Mat::Zero(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 2;
    Mat const a = random_unimodular(rng, 2) * d * random_unimodular(rng, 2);
    REQUIRE(smith_normal_form(a).invariant_factors() == std::vector<long long>{2, 2});
    check_decomposition(a);
  }
  for (int t = 0; t < 2000; ++t) {
    auto const rows = 1 + static_cast<Eigen::Index>(rng() % 5);
    auto const cols = 1 + static_cast<Eigen::Index>(rng() % 5);
    Mat a(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = static_cast<long long>(rng() % 9) - 4;
    check_decomposition(a);
  }
}

TEST_CASE("first homology") {
  CHECK(h1(BottMatrix::identity(4)) == H1Structure{4, 0});
  CHECK(to_string(h1(BottMatrix::identity(4))) == "Z^4");
  CHECK(h1(klein) == H1Structure{1, 1});
  CHECK(to_string(h1(klein)) == "Z + Z/2");
  CHECK(to_string(h1(m("3\n111\n010\n001"))) == "Z + (Z/2)^2");
  CHECK(to_string(H1Structure{3, 2}) == "Z^3 + (Z/2)^2");

  // Ranks mod 2 and mod 3 determine Z^f + (Z/2)^r when only 2-torsion occurs.
  auto check = [](BottMatrix const& c) {
    auto const a = abelianized_relation_matrix(c);
    auto const n = c.size();
    auto const h = h1(c);
    REQUIRE(h.free_rank + h.torsion2_rank == n);
    REQUIRE(h.free_rank == n - oracle::rank_mod(a, 3));
    REQUIRE(h.free_rank + h.torsion2_rank == n - oracle::rank_mod(a, 2));
    REQUIRE(h == h1_from_smith(c));
  };
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto const& c : enumerate_matrices(n)) check(c);
  std::mt19937_64 rng(10);
  for (int t = 0; t < 200; ++t) check(oracle::random_matrix(rng, 10));
}

TEST_CASE("group predicates") {
  auto const id = predicates(BottMatrix::identity(3));
  CHECK(id.abelian);
  CHECK(id.nilpotent);
  CHECK(id.commutator_generator_indices.empty());

  auto const k = predicates(klein);
  CHECK_FALSE(k.abelian);
  CHECK_FALSE(k.nilpotent);
  CHECK(k.solvable);
  CHECK(k.torsion_free);

  CHECK(predicates(six).commutator_generator_indices == std::vector<std::size_t>{5, 6});
  for (auto const& c : enumerate_matrices(4))
    CHECK(predicates(c).abelian == c.is_identity());
}
