#include "bott/census.hpp"

#include <algorithm>
#include <sstream>

#include "bott/report.hpp"
#include "bott/sw_classes.hpp"

namespace bott {

CensusFilter parse_filter(std::string const& name) {
  if (name.empty() || name == "none") return CensusFilter::none;
  if (name == "orientable") return CensusFilter::orientable;
  if (name == "spin") return CensusFilter::spin;
  if (name == "abelian") return CensusFilter::abelian;
  throw std::invalid_argument("unknown filter '" + name + "'");
}

std::string to_string(CensusFilter f) {
  switch (f) {
    case CensusFilter::none: return "none";
    case CensusFilter::orientable: return "orientable";
    case CensusFilter::spin: return "spin";
    case CensusFilter::abelian: return "abelian";
  }
  return "?";
}

namespace {

[[noreturn]] void mismatch(BottMatrix const& c, std::string const& what) {
  throw VerificationFailure(what + " disagrees with the ring computation for\n" +
                            to_text(c));
}

}  // namespace

CensusDocument census(std::size_t n, CensusFilter filter, bool list, unsigned jobs,
                      std::size_t cap) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > cap)
    throw std::length_error("n = " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap) + " (raise with --max-n)");

  CensusDocument init;
  init.n = n;
  init.filter = filter;
  if (list) init.listed.emplace();

  auto visit = [filter](CensusDocument& acc, BottMatrix const& c) {
    ++acc.total;
    auto const total = total_sw_class(c);
    auto const w1 = graded_component(total, 1);
    auto const w2 = graded_component(total, 2);

    bool const orientable = is_orientable(c);
    if (w1_closed_form(c) != w1 || orientable != w1.is_zero())
      mismatch(c, "w1 closed form");
    ++acc.w1_agreements;

    auto const spin = is_spin(c);
    if (orientable) {
      if (w2_closed_form(c).value != w2) mismatch(c, "w2 closed form");
      ++acc.w2_agreements;
      if ((spin == Tristate::yes) != w2.is_zero()) mismatch(c, "spin criterion");
      ++acc.spin_agreements;
    }
    if (is_spin_via_submatrices(c) != spin) mismatch(c, "submatrix spin criterion");
    ++acc.submatrix_spin_agreements;

    bool const abelian = c.is_identity();
    acc.orientable += orientable;
    acc.spin += spin == Tristate::yes;
    acc.abelian += abelian;

    bool keep = true;
    switch (filter) {
      case CensusFilter::none: break;
      case CensusFilter::orientable: keep = orientable; break;
      case CensusFilter::spin: keep = spin == Tristate::yes; break;
      case CensusFilter::abelian: keep = abelian; break;
    }
    if (keep) {
      ++acc.selected;
      if (acc.listed) acc.listed->push_back(c);
    }
  };

  auto merge = [](CensusDocument& into, CensusDocument&& part) {
    into.total += part.total;
    into.orientable += part.orientable;
    into.spin += part.spin;
    into.abelian += part.abelian;
    into.selected += part.selected;
    into.w1_agreements += part.w1_agreements;
    into.w2_agreements += part.w2_agreements;
    into.spin_agreements += part.spin_agreements;
    into.submatrix_spin_agreements += part.submatrix_spin_agreements;
    if (into.listed && part.listed)
      into.listed->insert(into.listed->end(), part.listed->begin(), part.listed->end());
  };

  auto doc = fold_matrices(n, jobs, init, visit, merge);
  if (doc.listed) std::sort(doc.listed->begin(), doc.listed->end());
  return doc;
}

nlohmann::json to_json(CensusDocument const& doc) {
  nlohmann::json j;
  j["schema_version"] = schema_version;
  j["n"] = doc.n;
  j["filter"] = to_string(doc.filter);
  j["total"] = doc.total;
  j["orientable"] = doc.orientable;
  j["spin"] = doc.spin;
  j["abelian"] = doc.abelian;
  j["selected"] = doc.selected;
  j["cross_checks"] = {{"w1", doc.w1_agreements},
                       {"w2", doc.w2_agreements},
                       {"spin", doc.spin_agreements},
                       {"submatrix_spin", doc.submatrix_spin_agreements},
                       {"mismatches", 0}};
  if (doc.listed) {
    nlohmann::json matrices = nlohmann::json::array();
    for (auto const& c : *doc.listed) {
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t i = 1; i <= c.size(); ++i) rows.push_back(row_text(c, i));
      matrices.push_back(rows);
    }
    j["matrices"] = matrices;
  }
  return j;
}

std::string render_text(CensusDocument const& doc) {
  std::ostringstream os;
  os << "n: " << doc.n << '\n';
  os << "total: " << doc.total << '\n';
  os << "orientable: " << doc.orientable << '\n';
  os << "spin: " << doc.spin << '\n';
  os << "abelian: " << doc.abelian << '\n';
  os << "filter: " << to_string(doc.filter) << '\n';
  os << "selected: " << doc.selected << '\n';
  os << "cross-checks: w1 " << doc.w1_agreements << ", w2 " << doc.w2_agreements
     << ", spin " << doc.spin_agreements << ", submatrix spin "
     << doc.submatrix_spin_agreements << ", mismatches 0\n";
  if (doc.listed) {
    for (auto const& c : *doc.listed) {
      os << '\n';
      for (std::size_t i = 1; i <= c.size(); ++i) os << row_text(c, i) << '\n';
    }
  }
  return os.str();
}

std::vector<BottMatrix> const& four_stage_spin_matrices() {
  static std::vector<BottMatrix> const list = [] {
    std::vector<BottMatrix> out;
    for (auto const* text :
         {"4\n1000\n0100\n0010\n0001", "4\n1000\n0111\n0010\n0001",
          "4\n1011\n0100\n0010\n0001", "4\n1011\n0111\n0010\n0001",
          "4\n1110\n0100\n0010\n0001", "4\n1110\n0111\n0010\n0001",
          "4\n1101\n0100\n0010\n0001", "4\n1101\n0111\n0010\n0001"})
      out.push_back(parse_bott_matrix(text));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return list;
}

}  // namespace bott
