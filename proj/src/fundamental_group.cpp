#include "bott/fundamental_group.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bott {

GroupWord::GroupWord(std::initializer_list<Letter> letters) : letters_(letters) {
  for (auto const& l : letters_)
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("letter exponent must be +1 or -1");
}

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (auto const& l : letters_)
    if (l.exponent != 1 && l.exponent != -1)
      throw std::invalid_argument("letter exponent must be +1 or -1");
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return GroupWord(std::move(out));
}

GroupWord operator*(GroupWord const& a, GroupWord const& b) {
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return GroupWord(std::move(out));
}

GroupWord free_reduce(GroupWord const& w) {
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (auto const& l : w.letters()) {
    if (!stack.empty() && stack.back().generator == l.generator &&
        stack.back().exponent == -l.exponent)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return GroupWord(std::move(stack));
}

bool is_freely_reduced(GroupWord const& w) {
  auto const& ls = w.letters();
  for (std::size_t i = 1; i < ls.size(); ++i)
    if (ls[i].generator == ls[i - 1].generator &&
        ls[i].exponent == -ls[i - 1].exponent)
      return false;
  return true;
}

std::string to_string(GroupWord const& w) {
  if (w.empty()) return "1";
  std::string s;
  for (auto const& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += 'a' + std::to_string(l.generator);
    if (l.exponent < 0) s += "^-1";
  }
  return s;
}

GroupWord relator(std::size_t p, std::size_t q, bool twisted) {
  return GroupWord{{p, 1}, {q, twisted ? -1 : 1}, {p, -1}, {q, -1}};
}

Presentation presentation(BottMatrix const& c) {
  auto const n = c.size();
  Presentation pres{n, {}};
  pres.relators.reserve(n * (n - 1) / 2);
  for (std::size_t p = n + 1; p <= 2 * n; ++p)
    for (std::size_t q = p + 1; q <= 2 * n; ++q)
      pres.relators.push_back(relator(p, q, c(p - n, q - n)));
  return pres;
}

std::string to_string(Presentation const& p) {
  std::string s = "gen:";
  for (std::size_t g = p.generator_count + 1; g <= 2 * p.generator_count; ++g)
    s += " a" + std::to_string(g);
  s += " ; rel:";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    s += i == 0 ? " " : " ; ";
    s += to_string(p.relators[i]);
  }
  return s;
}

namespace {

// One row of the conjugacy table, written over two letters P = alpha_p and
// Q = alpha_q with exponent signs.
struct TableCase {
  int number;
  bool twisted;
  bool eps_p;
  bool eps_q;
  // x^eps as displayed: four letters, each (is_q, exponent)
  std::array<std::pair<bool, int>, 4> lhs;
  // conjugator w in  x^eps = w^-1 x^{sign} w
  std::vector<std::pair<bool, int>> conjugator;
  int sign;
};

std::vector<TableCase> const& table() {
  static std::vector<TableCase> const cases = {
      {1, false, false, false, {{{false, 1}, {true, 1}, {false, -1}, {true, -1}}}, {}, 1},
      {2, false, false, true, {{{false, 1}, {true, -1}, {false, -1}, {true, 1}}}, {{true, 1}}, -1},
      {3, false, true, false, {{{false, -1}, {true, 1}, {false, 1}, {true, -1}}}, {{false, 1}}, -1},
      {4, false, true, true, {{{false, -1}, {true, -1}, {false, 1}, {true, 1}}},
       {{false, 1}, {true, 1}}, 1},
      {5, true, false, false, {{{false, 1}, {true, -1}, {false, -1}, {true, -1}}}, {}, 1},
      {6, true, true, false, {{{false, -1}, {true, -1}, {false, 1}, {true, -1}}},
       {{false, 1}, {true, -1}}, 1},
      {7, true, true, true, {{{false, -1}, {true, 1}, {false, 1}, {true, 1}}}, {{false, 1}}, -1},
  };
  return cases;
}

GroupWord instantiate(std::vector<std::pair<bool, int>> const& pattern,
                      std::size_t p, std::size_t q) {
  std::vector<Letter> out;
  for (auto [is_q, e] : pattern) out.push_back({is_q ? q : p, e});
  return GroupWord(std::move(out));
}

// t_eps alpha_j t_eps = alpha_j^{-1} exactly when eps_{j-n} = 1.
GroupWord conjugate_by_t(GroupWord const& w, std::size_t p, std::size_t q,
                         bool eps_p, bool eps_q) {
  std::vector<Letter> out = w.letters();
  for (auto& l : out)
    if ((l.generator == p && eps_p) || (l.generator == q && eps_q))
      l.exponent = -l.exponent;
  return GroupWord(std::move(out));
}

}  // namespace

std::vector<ConjugacyCheck> appendix_conjugacy_suite(BottMatrix const& c) {
  auto const n = c.size();
  std::vector<ConjugacyCheck> out;
  for (std::size_t p = n + 1; p <= 2 * n; ++p)
    for (std::size_t q = p + 1; q <= 2 * n; ++q)
      for (auto const& tc : table()) {
        auto const x = relator(p, q, tc.twisted);
        auto const lhs = conjugate_by_t(x, p, q, tc.eps_p, tc.eps_q);
        auto const shown = instantiate(
            std::vector<std::pair<bool, int>>(tc.lhs.begin(), tc.lhs.end()), p, q);
        auto const w = instantiate(tc.conjugator, p, q);
        auto const rhs = w.inverse() * (tc.sign > 0 ? x : x.inverse()) * w;
        out.push_back({tc.number, p, q, tc.twisted, tc.eps_p, tc.eps_q,
                       c(p - n, q - n) == tc.twisted, lhs == shown,
                       free_reduce(lhs) == free_reduce(rhs)});
      }
  return out;
}

IntMatrix<long long> abelianized_relation_matrix(BottMatrix const& c) {
  auto const pres = presentation(c);
  auto const n = c.size();
  IntMatrix<long long> m =
      IntMatrix<long long>::Zero(static_cast<Eigen::Index>(pres.relators.size()),
                                 static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    for (auto const& l : pres.relators[r].letters())
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(l.generator - n - 1)) +=
          l.exponent;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      auto const v = m(static_cast<Eigen::Index>(r), j);
      if (v == 0) continue;
      if (v < 0) m.row(static_cast<Eigen::Index>(r)) *= -1;
      break;
    }
  }
  return m;
}

H1Structure h1_closed_form(BottMatrix const& c) {
  std::size_t r = 0;
  for (std::size_t q = 1; q <= c.size(); ++q)
    if (c.upper_column(q) != 0) ++r;
  return {c.size() - r, r};
}

H1Structure h1_from_smith(BottMatrix const& c) {
  auto const n = c.size();
  auto const m = abelianized_relation_matrix(c);
  if (m.rows() == 0) return {n, 0};
  auto const snf = smith_normal_form(m);
  std::size_t torsion = 0, trivial = 0;
  for (auto d : snf.invariant_factors()) {
    if (d == 0) continue;
    if (d == 1) {
      ++trivial;
      continue;
    }
    if (d != 2)
      throw std::logic_error("unexpected torsion coefficient " + std::to_string(d));
    ++torsion;
  }
  auto const rank = torsion + trivial;
  return {n - rank, torsion};
}

H1Structure h1(BottMatrix const& c) {
  auto const closed = h1_closed_form(c);
  auto const smith = h1_from_smith(c);
  if (closed != smith)
    throw std::logic_error("H1 closed form disagrees with Smith normal form");
  return closed;
}

std::string to_string(H1Structure const& h) {
  std::string s;
  if (h.free_rank > 0) {
    s += "Z";
    if (h.free_rank > 1) s += "^" + std::to_string(h.free_rank);
  }
  if (h.torsion2_rank > 0) {
    if (!s.empty()) s += " + ";
    s += h.torsion2_rank > 1 ? "(Z/2)^" + std::to_string(h.torsion2_rank) : "Z/2";
  }
  return s.empty() ? "0" : s;
}

GroupPredicates predicates(BottMatrix const& c) {
  GroupPredicates out{};
  out.abelian = c.is_identity();
  out.nilpotent = out.abelian;
  out.solvable = true;
  out.torsion_free = true;
  out.aspherical = true;
  for (std::size_t q = 1; q <= c.size(); ++q)
    if (c.upper_column(q) != 0) out.commutator_generator_indices.push_back(q);
  return out;
}

}  // namespace bott
