#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"

namespace bott {

/// Outcome of one property suite over a range of sizes.
struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // matrix text and detail of the first failure
  bool passed() const noexcept { return failures == 0; }
};

/// Largest size at which the rewriting-confluence suite runs; it visits all
/// 3^n exponent vectors with entries <= 2 for every matrix.
inline constexpr std::size_t confluence_max_n = 5;

/// Runs every property suite exhaustively for each n in [n_min, n_max].
/// An empty range returns no results.
std::vector<SuiteResult> verify_range(std::size_t n_min, std::size_t n_max,
                                      unsigned jobs,
                                      std::size_t cap = default_enumeration_cap);

/// Both rewriting orders agree on every monomial with exponents <= 2.
bool rewriting_is_confluent(BottMatrix const& c, std::string* detail = nullptr);

}  // namespace bott
