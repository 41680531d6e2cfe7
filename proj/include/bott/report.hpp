#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "bott/bott_matrix.hpp"
#include "bott/fundamental_group.hpp"
#include "bott/sw_classes.hpp"

namespace bott {

/// Version of the machine rendering; bump on any field change.
inline constexpr int schema_version = 1;

/// Everything computed for one Bott matrix.
struct AnalysisDocument {
  BottMatrix matrix;
  SWReport sw;
  Presentation presentation;
  H1Structure h1;
  GroupPredicates predicates;
  CharacteristicData characteristic;
  long long euler_characteristic;
};

AnalysisDocument analyze(BottMatrix const& c);

nlohmann::json to_json(SWReport const& r);
nlohmann::json to_json(AnalysisDocument const& doc);

/// Human-readable rendering, one "key: value" per line.
std::string render_text(AnalysisDocument const& doc);

/// Machine rendering: pretty-printed JSON with sorted keys and a trailing
/// newline. Byte-identical for identical input.
std::string render_machine(AnalysisDocument const& doc);

std::string render_vector(Z2Vector v, std::size_t n);

}  // namespace bott
