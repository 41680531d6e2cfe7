#include "bott/report.hpp"

#include <sstream>

namespace bott {

namespace {

nlohmann::json tristate_json(Tristate t) {
  switch (t) {
    case Tristate::yes: return true;
    case Tristate::no: return false;
    case Tristate::not_applicable: return "not-applicable";
  }
  return nullptr;
}

std::vector<std::string> matrix_rows(BottMatrix const& c) {
  std::vector<std::string> rows;
  for (std::size_t i = 1; i <= c.size(); ++i) {
    rows.push_back(row_text(c, i));
  }
  return rows;
}

std::string witness_text(SWReport const& r) {
  if (!r.spin_witness) return "none";
  return "(" + std::to_string(r.spin_witness->first) + "," +
         std::to_string(r.spin_witness->second) + ")";
}

}  // namespace

std::string render_vector(Z2Vector v, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += ((v >> i) & 1U) ? '1' : '0';
  return s;
}

AnalysisDocument analyze(BottMatrix const& c) {
  return AnalysisDocument{
      .matrix = c,
      .sw = sw_report(c),
      .presentation = presentation(c),
      .h1 = h1(c),
      .predicates = predicates(c),
      .characteristic = characteristic_data(c),
      .euler_characteristic = euler_characteristic(c),
  };
}

nlohmann::json to_json(SWReport const& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["total"] = to_string(r.total);
  nlohmann::json graded = nlohmann::json::array();
  for (auto const& w : r.graded) graded.push_back(to_string(w));
  j["graded"] = graded;
  j["orientable"] = r.orientable;
  j["spin"] = tristate_json(r.spin);
  j["spin_witness"] = r.spin_witness
                          ? nlohmann::json::array({r.spin_witness->first,
                                                   r.spin_witness->second})
                          : nlohmann::json(nullptr);
  j["w_top_minus_one_zero"] = tristate_json(r.w_top_minus_one_zero);
  j["w2_reduced_form"] = r.w2_reduced_form;
  nlohmann::json numbers = nlohmann::json::array();
  for (auto const& [p, v] : r.sw_numbers)
    numbers.push_back({{"monomial", to_string(p)},
                       {"multiplicities", p.multiplicities},
                       {"value", v ? 1 : 0}});
  j["sw_numbers"] = numbers;
  j["null_cobordant"] = r.null_cobordant;
  j["oriented_null_cobordant"] = tristate_json(r.oriented_null_cobordant);
  return j;
}

nlohmann::json to_json(AnalysisDocument const& doc) {
  auto const n = doc.matrix.size();
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["matrix"] = {{"n", n}, {"rows", matrix_rows(doc.matrix)}};
  j["stiefel_whitney"] = to_json(doc.sw);

  nlohmann::json relators = nlohmann::json::array();
  for (auto const& r : doc.presentation.relators) relators.push_back(to_string(r));
  j["presentation"] = {{"generators", doc.presentation.generator_count},
                       {"relators", relators},
                       {"text", to_string(doc.presentation)}};
  j["h1"] = {{"free_rank", doc.h1.free_rank},
             {"torsion2_rank", doc.h1.torsion2_rank},
             {"text", to_string(doc.h1)}};
  j["predicates"] = {{"abelian", doc.predicates.abelian},
                     {"nilpotent", doc.predicates.nilpotent},
                     {"solvable", doc.predicates.solvable},
                     {"torsion_free", doc.predicates.torsion_free},
                     {"aspherical", doc.predicates.aspherical},
                     {"commutator_generator_indices",
                      doc.predicates.commutator_generator_indices}};
  nlohmann::json vectors = nlohmann::json::array();
  for (auto v : doc.characteristic.vectors) vectors.push_back(render_vector(v, n));
  j["characteristic_vectors"] = vectors;
  j["euler_characteristic"] = doc.euler_characteristic;
  return j;
}

std::string render_machine(AnalysisDocument const& doc) {
  return to_json(doc).dump(2) + "\n";
}

std::string render_text(AnalysisDocument const& doc) {
  auto const& sw = doc.sw;
  auto const n = doc.matrix.size();
  std::ostringstream os;
  os << "matrix:\n";
  for (auto const& row : matrix_rows(doc.matrix)) os << "  " << row << '\n';
  os << "n: " << n << '\n';
  os << "characteristic vectors:";
  for (auto v : doc.characteristic.vectors) os << ' ' << render_vector(v, n);
  os << '\n';
  os << "euler characteristic: " << doc.euler_characteristic << '\n';
  os << "total SW class: " << to_string(sw.total) << '\n';
  for (std::size_t k = 0; k < sw.graded.size(); ++k)
    os << "w" << k << ": " << to_string(sw.graded[k]) << '\n';
  os << "orientable: " << (sw.orientable ? "true" : "false") << '\n';
  os << "spin: " << to_string(sw.spin) << '\n';
  os << "spin witness: " << witness_text(sw) << '\n';
  os << "w_{n-1} = 0: " << to_string(sw.w_top_minus_one_zero) << '\n';
  os << "SW numbers:";
  for (auto const& [p, v] : sw.sw_numbers) os << ' ' << to_string(p) << '=' << v;
  os << '\n';
  os << "null-cobordant: " << (sw.null_cobordant ? "true" : "false") << '\n';
  os << "oriented null-cobordant: " << to_string(sw.oriented_null_cobordant) << '\n';
  os << "pi1: " << to_string(doc.presentation) << '\n';
  os << "H1: " << to_string(doc.h1) << '\n';
  auto const& pr = doc.predicates;
  os << "abelian: " << (pr.abelian ? "true" : "false") << '\n';
  os << "nilpotent: " << (pr.nilpotent ? "true" : "false") << '\n';
  os << "solvable: true\n";
  os << "torsion-free: true\n";
  os << "aspherical: true\n";
  os << "commutator subgroup generators:";
  if (pr.commutator_generator_indices.empty()) os << " none";
  for (auto q : pr.commutator_generator_indices) os << " a" << n + q << "^2";
  os << '\n';
  return os.str();
}

}  // namespace bott
