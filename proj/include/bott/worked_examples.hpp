#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bott/bott_matrix.hpp"
#include "bott/report.hpp"
#include "bott/sw_classes.hpp"

namespace bott {

/// A named matrix with facts known independently of this library.
struct WorkedExample {
  std::string name;
  std::string description;
  BottMatrix matrix;
  bool orientable;
  Tristate spin;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  bool parallelizable;  // total class is 1
  std::string h1;
};

std::vector<WorkedExample> const& worked_examples();

/// Name of the golden holding the n = 4 spin census.
inline constexpr char const* census_example_name = "four-stage-census";

/// "not orientable", "spin", "not spin; witness pair (1,3)", with
/// "; total SW class = 1" appended when the total class is 1.
std::string summary_line(SWReport const& sw);

struct ExampleOutcome {
  std::string name;
  std::string summary;
  std::string fact_failure;  // empty when every stored fact holds
  bool golden_present = false;
  bool golden_matches = false;
  std::string golden_diff;   // first differing JSON pointer
  bool passed() const noexcept {
    return fact_failure.empty() && golden_present && golden_matches;
  }
};

/// Golden document for one example name, as stored on disk.
nlohmann::json example_document(std::string const& name);

/// Re-derives every example, checks its stored facts and compares the machine
/// rendering with golden_dir/<name>.json. With write_goldens the goldens are
/// rewritten first.
std::vector<ExampleOutcome> run_examples(std::filesystem::path const& golden_dir,
                                         bool write_goldens);

}  // namespace bott
