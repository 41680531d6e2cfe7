#include "bott/worked_examples.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bott/census.hpp"
#include "bott/fundamental_group.hpp"

namespace bott {

namespace {

WorkedExample make(std::string name, std::string description, char const* text,
                   bool orientable, Tristate spin,
                   std::optional<std::pair<std::size_t, std::size_t>> witness,
                   bool parallelizable, std::string h1) {
  return WorkedExample{std::move(name), std::move(description),
                       parse_bott_matrix(text), orientable, spin, witness,
                       parallelizable, std::move(h1)};
}

std::string first_difference(nlohmann::json const& expected,
                             nlohmann::json const& actual) {
  auto const patch = nlohmann::json::diff(expected, actual);
  if (patch.empty()) return {};
  auto const& op = patch.front();
  return op.at("op").get<std::string>() + " " + op.at("path").get<std::string>();
}

std::string census_facts(CensusDocument const& doc) {
  auto const& expected = four_stage_spin_matrices();
  if (doc.total != 64) return "total is not 64";
  if (doc.spin != expected.size()) return "spin count is not 8";
  if (doc.orientable != expected.size()) return "orientable count is not 8";
  if (!doc.listed || *doc.listed != expected) return "spin matrices differ";
  return {};
}

std::string example_facts(WorkedExample const& ex, AnalysisDocument const& doc) {
  auto const& sw = doc.sw;
  if (sw.orientable != ex.orientable) return "orientability";
  if (sw.spin != ex.spin) return "spin verdict";
  if (sw.spin_witness != ex.witness) return "spin witness";
  if ((sw.total == RingElement::one(ex.matrix)) != ex.parallelizable)
    return "total class";
  if (to_string(doc.h1) != ex.h1) return "H1";
  return {};
}

}  // namespace

std::vector<WorkedExample> const& worked_examples() {
  using T = Tristate;
  static std::vector<WorkedExample> const list = {
      make("klein-bottle", "two-stage tower with c12 = 1", "2\n11\n01", false,
           T::not_applicable, std::nullopt, false, "Z + Z/2"),
      make("parallelizable-nonproduct",
           "three-stage tower with trivial total class but nonabelian group",
           "3\n111\n010\n001", true, T::yes, std::nullopt, true, "Z + (Z/2)^2"),
      make("six-stage-spin", "spin six-stage tower",
           "6\n100000\n010011\n001011\n000111\n000010\n000001", true, T::yes,
           std::nullopt, true, "Z^4 + (Z/2)^2"),
      make("five-stage-rows-13", "five-stage tower whose rows 1 and 3 pass the spin identity",
           "5\n10110\n01110\n00111\n00010\n00001", true, T::yes, std::nullopt, true,
           "Z^2 + (Z/2)^3"),
      make("seven-stage-nonspin", "orientable seven-stage tower failing on rows 2 and 3",
           "7\n1000000\n0111110\n0011111\n0001011\n0000100\n0000010\n0000001", true,
           T::no, std::pair<std::size_t, std::size_t>{2, 3}, false, "Z^2 + (Z/2)^5"),
      make("five-stage-family-nonspin",
           "n = 5 member of the family c12 = c1,n-2 = cn-2,n-1 = cn-2,n = 1",
           "5\n11100\n01000\n00111\n00010\n00001", true, T::no,
           std::pair<std::size_t, std::size_t>{1, 3}, false, "Z + (Z/2)^4"),
  };
  return list;
}

std::string summary_line(SWReport const& sw) {
  std::string s;
  if (!sw.orientable) {
    s = "not orientable";
  } else if (sw.spin == Tristate::yes) {
    s = "spin";
  } else {
    s = "not spin";
    if (sw.spin_witness)
      s += "; witness pair (" + std::to_string(sw.spin_witness->first) + "," +
           std::to_string(sw.spin_witness->second) + ")";
  }
  auto const& terms = sw.total.terms();
  if (terms.size() == 1 && terms.front() == 0) s += "; total SW class = 1";
  return s;
}

nlohmann::json example_document(std::string const& name) {
  if (name == census_example_name)
    return to_json(census(4, CensusFilter::spin, true, 1));
  for (auto const& ex : worked_examples())
    if (ex.name == name) return to_json(analyze(ex.matrix));
  throw std::invalid_argument("unknown example '" + name + "'");
}

std::vector<ExampleOutcome> run_examples(std::filesystem::path const& golden_dir,
                                         bool write_goldens) {
  std::vector<std::pair<std::string, nlohmann::json>> documents;
  std::vector<ExampleOutcome> outcomes;

  {
    auto const doc = census(4, CensusFilter::spin, true, 1);
    ExampleOutcome o;
    o.name = census_example_name;
    o.summary = std::to_string(doc.spin) + " spin, " + std::to_string(doc.orientable) +
                " orientable of " + std::to_string(doc.total);
    o.fact_failure = census_facts(doc);
    outcomes.push_back(std::move(o));
    documents.emplace_back(census_example_name, to_json(doc));
  }
  for (auto const& ex : worked_examples()) {
    auto const doc = analyze(ex.matrix);
    ExampleOutcome o;
    o.name = ex.name;
    o.summary = summary_line(doc.sw);
    o.fact_failure = example_facts(ex, doc);
    outcomes.push_back(std::move(o));
    documents.emplace_back(ex.name, to_json(doc));
  }

  if (write_goldens) std::filesystem::create_directories(golden_dir);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    auto const& [name, actual] = documents[i];
    auto const path = golden_dir / (name + ".json");
    if (write_goldens) {
      std::ofstream out(path, std::ios::binary);
      out << actual.dump(2) << '\n';
      if (!out) throw std::runtime_error("cannot write " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    auto& o = outcomes[i];
    if (!in) continue;
    o.golden_present = true;
    auto const expected = nlohmann::json::parse(in, nullptr, false);
    if (expected.is_discarded()) {
      o.golden_diff = "golden is not valid JSON";
      continue;
    }
    o.golden_diff = first_difference(expected, actual);
    o.golden_matches = o.golden_diff.empty();
  }
  return outcomes;
}

}  // namespace bott
