#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "bott/bott_matrix.hpp"

namespace bott {

/// A closed form disagreed with its oracle. Maps to exit status 2.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Folds visit(acc, matrix) over every Bott matrix of size n, splitting the
/// index range into `jobs` contiguous chunks. Chunk results are merged in
/// index order, so the result does not depend on scheduling.
template <typename Acc, typename Visit, typename Merge>
Acc fold_matrices(std::size_t n, unsigned jobs, Acc init, Visit visit, Merge merge) {
  auto const count = matrix_count(n);
  if (jobs == 0) jobs = 1;
  if (jobs > count) jobs = static_cast<unsigned>(count);

  std::vector<Acc> partial(jobs, init);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned t) {
    try {
      auto const begin = count * t / jobs;
      auto const end = count * (t + 1) / jobs;
      for (auto i = begin; i < end; ++i) visit(partial[t], matrix_at(n, i));
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work, t);
  }
  for (auto const& e : errors)
    if (e) std::rethrow_exception(e);

  Acc result = std::move(init);
  for (auto& p : partial) merge(result, std::move(p));
  return result;
}

enum class CensusFilter { none, orientable, spin, abelian };

CensusFilter parse_filter(std::string const& name);
std::string to_string(CensusFilter f);

struct CensusDocument {
  std::size_t n = 0;
  CensusFilter filter = CensusFilter::none;
  std::uint64_t total = 0;
  std::uint64_t orientable = 0;
  std::uint64_t spin = 0;
  std::uint64_t abelian = 0;
  std::uint64_t selected = 0;  // matrices passing the filter
  std::optional<std::vector<BottMatrix>> listed;
  // closed form vs ring oracle agreements
  std::uint64_t w1_agreements = 0;
  std::uint64_t w2_agreements = 0;
  std::uint64_t spin_agreements = 0;
  std::uint64_t submatrix_spin_agreements = 0;
};

/// Classify every matrix of size n, checking each closed form against the
/// ring computation. Throws VerificationFailure on the first disagreement
/// and std::length_error when n exceeds cap.
CensusDocument census(std::size_t n, CensusFilter filter, bool list, unsigned jobs,
                      std::size_t cap = default_enumeration_cap);

nlohmann::json to_json(CensusDocument const& doc);
std::string render_text(CensusDocument const& doc);

/// The eight 4-stage matrices admitting a spin structure, which are also
/// exactly the orientable ones.
std::vector<BottMatrix> const& four_stage_spin_matrices();

}  // namespace bott
