#include "bott/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bott/census.hpp"
#include "bott/report.hpp"
#include "bott/verify.hpp"
#include "bott/worked_examples.hpp"

#ifndef BOTTKIT_GOLDEN_DIR
#define BOTTKIT_GOLDEN_DIR "tests/golden"
#endif

namespace bott {

namespace {

enum class Format { text, machine };

struct Options {
  Format format = Format::text;
  // analyze
  std::string matrix_path;
  std::string inline_matrix;
  // enumerate
  std::size_t n = 0;
  std::string filter = "none";
  bool list = false;
  std::size_t max_n = default_enumeration_cap;
  unsigned jobs = 1;
  // verify
  std::string range;
  // examples
  std::string golden_dir = BOTTKIT_GOLDEN_DIR;
  bool write_goldens = false;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output rendering")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text},
                                        {"machine", Format::machine}},
          CLI::ignore_case));
}

std::string read_matrix_text(Options const& o, std::istream& in) {
  if (!o.inline_matrix.empty()) {
    auto text = o.inline_matrix;
    std::replace(text.begin(), text.end(), '/', '\n');
    return text;
  }
  if (o.matrix_path.empty())
    throw std::invalid_argument("no matrix given (pass a path, \"-\" or --inline)");
  std::ostringstream buf;
  if (o.matrix_path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(o.matrix_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open '" + o.matrix_path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

std::pair<std::size_t, std::size_t> parse_range(std::string const& text) {
  auto bad = [&] { return std::invalid_argument("malformed range '" + text + "'"); };
  auto number = [&](std::string const& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) throw bad();
    return static_cast<std::size_t>(std::stoul(s));
  };
  auto const dots = text.find("..");
  if (dots == std::string::npos) {
    auto const n = number(text);
    return {n, n};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

int cmd_analyze(Options const& o, std::istream& in, std::ostream& out) {
  auto const c = parse_bott_matrix(read_matrix_text(o, in));
  auto const doc = analyze(c);
  out << (o.format == Format::machine ? render_machine(doc) : render_text(doc));
  return exit_ok;
}

int cmd_enumerate(Options const& o, std::ostream& out) {
  auto const doc = census(o.n, parse_filter(o.filter), o.list, o.jobs, o.max_n);
  if (o.format == Format::machine)
    out << to_json(doc).dump(2) << '\n';
  else
    out << render_text(doc);
  return exit_ok;
}

int cmd_verify(Options const& o, std::ostream& out, std::ostream& err) {
  auto const [lo, hi] = parse_range(o.range);
  if (lo > hi) {
    err << "warning: empty range " << o.range << ", nothing verified\n";
    if (o.format == Format::machine)
      out << nlohmann::json{{"schema_version", schema_version},
                            {"range", {lo, hi}},
                            {"suites", nlohmann::json::array()},
                            {"passed", true}}
                 .dump(2)
          << '\n';
    return exit_ok;
  }
  auto const results = verify_range(lo, hi, o.jobs, o.max_n);
  bool const passed = std::all_of(results.begin(), results.end(),
                                  [](auto const& r) { return r.passed(); });
  if (o.format == Format::machine) {
    nlohmann::json suites = nlohmann::json::array();
    for (auto const& r : results)
      suites.push_back({{"name", r.name},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"first_failure", r.first_failure}});
    out << nlohmann::json{{"schema_version", schema_version},
                          {"range", {lo, hi}},
                          {"suites", suites},
                          {"passed", passed}}
               .dump(2)
        << '\n';
  } else {
    for (auto const& r : results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases
          << " cases";
      if (r.failures) out << ", " << r.failures << " failures";
      out << ")\n";
      if (!r.passed()) out << "  first failure: " << r.first_failure << '\n';
    }
  }
  return passed ? exit_ok : exit_verification_failure;
}

int cmd_examples(Options const& o, std::ostream& out) {
  auto const outcomes = run_examples(o.golden_dir, o.write_goldens);
  bool passed = true;
  nlohmann::json report = nlohmann::json::array();
  for (auto const& e : outcomes) {
    passed = passed && e.passed();
    std::string golden = !e.golden_present ? "missing"
                         : e.golden_matches ? "match"
                                            : "differs at " + e.golden_diff;
    if (o.format == Format::machine) {
      report.push_back({{"name", e.name},
                        {"summary", e.summary},
                        {"facts", e.fact_failure.empty() ? "ok" : e.fact_failure},
                        {"golden", golden}});
    } else {
      out << (e.passed() ? "PASS " : "FAIL ") << e.name << ": " << e.summary;
      if (!e.fact_failure.empty()) out << " [fact mismatch: " << e.fact_failure << "]";
      out << " [golden " << golden << "]\n";
    }
  }
  if (o.format == Format::machine)
    out << nlohmann::json{{"schema_version", schema_version},
                          {"examples", report},
                          {"passed", passed}}
               .dump(2)
        << '\n';
  return passed ? exit_ok : exit_verification_failure;
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Invariants of real Bott towers", "bottkit"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one Bott matrix");
  analyze_cmd->add_option("matrix", o.matrix_path, "Matrix file, or - for stdin");
  analyze_cmd->add_option("--inline", o.inline_matrix,
                          "Matrix text with rows separated by '/', e.g. 2/11/01");
  add_format(analyze_cmd, o);

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "Classify every Bott matrix of size n");
  enumerate_cmd->add_option("n", o.n, "Matrix size")->required();
  enumerate_cmd->add_option("--filter", o.filter, "Selection for --list")
      ->check(CLI::IsMember({"none", "orientable", "spin", "abelian"}));
  enumerate_cmd->add_flag("--list", o.list, "List the selected matrices");
  enumerate_cmd->add_option("--max-n", o.max_n, "Override the size cap");
  enumerate_cmd->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  add_format(enumerate_cmd, o);

  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites");
  verify_cmd->add_option("range", o.range, "Sizes as a..b or a single n")->required();
  verify_cmd->add_option("--max-n", o.max_n, "Override the size cap");
  verify_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify_cmd, o);

  auto* examples_cmd =
      app.add_subcommand("examples", "Re-derive the worked examples and diff goldens");
  examples_cmd->add_option("--golden-dir", o.golden_dir, "Directory of golden files");
  examples_cmd->add_flag("--write-goldens", o.write_goldens,
                         "Regenerate the golden files before comparing");
  add_format(examples_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_domain_error;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o, in, out);
    if (*enumerate_cmd) return cmd_enumerate(o, out);
    if (*verify_cmd) return cmd_verify(o, out, err);
    return cmd_examples(o, out);
  } catch (VerificationFailure const& e) {
    err << "verification failure: " << e.what() << '\n';
    return exit_verification_failure;
  } catch (std::logic_error const& e) {
    if (dynamic_cast<std::invalid_argument const*>(&e) ||
        dynamic_cast<std::out_of_range const*>(&e) ||
        dynamic_cast<std::length_error const*>(&e) ||
        dynamic_cast<std::domain_error const*>(&e)) {
      err << "error: " << e.what() << '\n';
      return exit_domain_error;
    }
    err << "internal inconsistency: " << e.what() << '\n';
    return exit_verification_failure;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return exit_domain_error;
  }
}

}  // namespace bott
