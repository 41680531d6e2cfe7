#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/smith.hpp"

namespace bott {

/// Generator alpha_g (n+1 <= g <= 2n) raised to +1 or -1.
struct Letter {
  std::size_t generator;
  int exponent;
  friend bool operator==(Letter const&, Letter const&) = default;
};

/// Word in the free group on alpha_{n+1}..alpha_{2n}.
class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(std::initializer_list<Letter> letters);
  explicit GroupWord(std::vector<Letter> letters);

  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  GroupWord inverse() const;
  friend GroupWord operator*(GroupWord const& a, GroupWord const& b);
  friend bool operator==(GroupWord const&, GroupWord const&) = default;

 private:
  std::vector<Letter> letters_;
};

GroupWord free_reduce(GroupWord const& w);
bool is_freely_reduced(GroupWord const& w);

/// "a3 a4 a3^-1 a4^-1"; the empty word renders as "1".
std::string to_string(GroupWord const& w);

/// Generators alpha_{n+1}..alpha_{2n}; one relator for each pair p < q,
/// ordered p-major.
struct Presentation {
  std::size_t generator_count;
  std::vector<GroupWord> relators;
};

/// alpha_p alpha_q alpha_p^-1 alpha_q^-1 if c_{p-n,q-n} = 0,
/// alpha_p alpha_q^-1 alpha_p^-1 alpha_q^-1 otherwise.
GroupWord relator(std::size_t p, std::size_t q, bool twisted);

Presentation presentation(BottMatrix const& c);

/// "gen: a3 a4 ; rel: a3 a4 a3^-1 a4^-1 ; ..."
std::string to_string(Presentation const& p);

/// One conjugacy identity x^eps_{p,q} = w x_{p,q}^{+-1} w^-1 for a single
/// pair and one of the seven tabulated (c, eps_p, eps_q) cases.
struct ConjugacyCheck {
  int case_number;  // 1..7
  std::size_t p;
  std::size_t q;
  bool twisted;     // c_{p-n,q-n} of the case
  bool eps_p;
  bool eps_q;
  bool realized;    // the case's c agrees with the actual matrix entry
  bool lhs_matches_table;  // substituted word equals the tabulated word
  bool identity_holds;     // free reductions of both sides agree
  bool passed() const noexcept { return lhs_matches_table && identity_holds; }
};

/// Every tabulated case for every pair n+1 <= p < q <= 2n. The left side is
/// obtained by inverting the letters alpha_p (resp. alpha_q) when eps_p
/// (resp. eps_q) is set and checked against the tabulated word; the right
/// side is the tabulated conjugate.
std::vector<ConjugacyCheck> appendix_conjugacy_suite(BottMatrix const& c);

/// Exponent sums of the relators, one row per relator, sign-normalised so
/// that the first nonzero entry of each row is positive.
IntMatrix<long long> abelianized_relation_matrix(BottMatrix const& c);

/// H_1(Y_n; Z) = Z^free_rank + (Z/2)^torsion2_rank.
struct H1Structure {
  std::size_t free_rank;
  std::size_t torsion2_rank;
  friend bool operator==(H1Structure const&, H1Structure const&) = default;
};

/// Number of columns of C carrying a strictly-upper 1.
H1Structure h1_closed_form(BottMatrix const& c);

/// From the Smith normal form of the abelianized relations. Throws
/// std::logic_error if a torsion coefficient other than 2 appears.
H1Structure h1_from_smith(BottMatrix const& c);

/// Both routes; throws std::logic_error on disagreement.
H1Structure h1(BottMatrix const& c);

/// "Z^3 + (Z/2)^2", "Z + Z/2", "Z^4".
std::string to_string(H1Structure const& h);

struct GroupPredicates {
  bool abelian;
  bool nilpotent;
  bool solvable;
  bool torsion_free;
  bool aspherical;
  /// Columns q with some c_{p,q} = 1; the commutator subgroup is free abelian
  /// on alpha_{n+q}^2 for these q.
  std::vector<std::size_t> commutator_generator_indices;
};

GroupPredicates predicates(BottMatrix const& c);

}  // namespace bott
