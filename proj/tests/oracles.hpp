#pragma once

// Reference implementations used only by the tests. They share nothing with
// the library beyond BottMatrix element access.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/cohomology_ring.hpp"
#include "bott/smith.hpp"

namespace oracle {

using Exps = std::vector<unsigned>;
// Z2 polynomial as the set of exponent vectors carrying coefficient 1.
using Poly = std::set<Exps>;

inline void toggle(Poly& p, Exps const& e) {
  if (!p.erase(e)) p.insert(e);
}

inline Poly add(Poly a, Poly const& b) {
  for (auto const& e : b) toggle(a, e);
  return a;
}

inline Poly mul(Poly const& a, Poly const& b) {
  Poly out;
  for (auto const& x : a)
    for (auto const& y : b) {
      Exps e(x.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = x[i] + y[i];
      toggle(out, e);
    }
  return out;
}

inline Poly one(std::size_t n) { return Poly{Exps(n, 0)}; }

inline Poly variable(std::size_t n, std::size_t i) {
  Exps e(n, 0);
  e[i - 1] = 1;
  return Poly{e};
}

// sum_{i<j} c_{i,j} y_i
inline Poly column_form(bott::BottMatrix const& c, std::size_t j) {
  Poly p;
  for (std::size_t i = 1; i < j; ++i)
    if (c(i, j)) toggle(p, *variable(c.size(), i).begin());
  return p;
}

// Rewrites y_i^2 -> y_i * sum_{j<i} c_{j,i} y_j on the first squared index
// found, until every term is square-free.
inline Poly reduce(bott::BottMatrix const& c, Poly p) {
  while (true) {
    auto it = std::find_if(p.begin(), p.end(), [](Exps const& e) {
      return std::any_of(e.begin(), e.end(), [](unsigned x) { return x >= 2; });
    });
    if (it == p.end()) return p;
    Exps e = *it;
    p.erase(it);
    std::size_t i = 0;
    while (e[i] < 2) ++i;
    e[i] -= 1;
    for (std::size_t j = 0; j < i; ++j)
      if (c(j + 1, i + 1)) {
        Exps f = e;
        f[j] += 1;
        toggle(p, f);
      }
  }
}

inline Poly degree_part(Poly const& p, unsigned k) {
  Poly out;
  for (auto const& e : p) {
    unsigned d = 0;
    for (auto x : e) d += x;
    if (d == k) out.insert(e);
  }
  return out;
}

// prod_j (1 + L_j), expanded freely and then reduced.
inline Poly total_class(bott::BottMatrix const& c) {
  auto const n = c.size();
  Poly w = one(n);
  for (std::size_t j = 2; j <= n; ++j) w = reduce(c, mul(w, add(one(n), column_form(c, j))));
  return w;
}

inline std::set<bott::Monomial> as_monomials(Poly const& p) {
  std::set<bott::Monomial> out;
  for (auto const& e : p) {
    bott::Monomial m = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 1) throw std::logic_error("polynomial is not square-free");
      if (e[i]) m |= bott::Monomial{1} << i;
    }
    out.insert(m);
  }
  return out;
}

inline std::set<bott::Monomial> as_monomials(bott::RingElement const& r) {
  return {r.terms().begin(), r.terms().end()};
}

// Rank of an integer matrix over Z/p.
inline std::size_t rank_mod(bott::IntMatrix<long long> m, long long p) {
  auto mod = [p](long long v) { return ((v % p) + p) % p; };
  auto inv = [&](long long a) {
    for (long long x = 1; x < p; ++x)
      if (mod(a * x) == 1) return x;
    return 0LL;
  };
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = mod(m(i, j));
  std::size_t rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && static_cast<Eigen::Index>(rank) < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r)
      if (m(r, col) != 0) pivot = r;
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    auto const s = inv(m(rank, col));
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(rank, j) = mod(m(rank, j) * s);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (r != static_cast<Eigen::Index>(rank) && m(r, col) != 0) {
        auto const f = m(r, col);
        for (Eigen::Index j = 0; j < m.cols(); ++j) m(r, j) = mod(m(r, j) - f * m(rank, j));
      }
    ++rank;
  }
  return rank;
}

inline bott::BottMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::vector<bott::Z2Vector> rows(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() & 1U) rows[i] |= bott::Z2Vector{1} << j;
  return bott::BottMatrix::from_row_masks(rows);
}

}  // namespace oracle
