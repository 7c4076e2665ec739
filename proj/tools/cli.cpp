#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fwps/bounds.hpp"
#include "fwps/classify.hpp"
#include "fwps/error.hpp"
#include "fwps/io.hpp"
#include "fwps/simplex.hpp"
#include "fwps/wps.hpp"

namespace fwps::cli {

namespace {

struct Options {
  std::string file;
  std::vector<std::string> weights;
  std::string cls;
  std::optional<std::string> mult_cap;
  std::optional<std::string> h_max;
  std::string out_path;
  std::string catalog;
  std::size_t dim = 0;
  unsigned threads = 1;
  bool json = false;
  bool analyze = false;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
      return kParseError;
    case ErrorKind::kWeightsNotCoprime:
    case ErrorKind::kWeightsNotWellFormed:
      return kBadWeights;
    case ErrorKind::kMissingBound:
      return kMissingBound;
    default:
      return kValidationError;
  }
}

// Positive integers; anything else is a bad weight system.
WeightSystem parse_weights(const std::vector<std::string>& tokens) {
  std::vector<Integer> lambdas;
  for (const auto& t : tokens) {
    Integer v;
    if (t.empty() || v.set_str(t, 10) != 0) {
      throw Error(ErrorKind::kWeightsNotCoprime, "weight '" + t + "' is not an integer");
    }
    lambdas.push_back(v);
  }
  try {
    return WeightSystem(std::move(lambdas));
  } catch (const Error& e) {
    // Non-positive or too few weights are reported like any other bad weights.
    throw Error(ErrorKind::kWeightsNotCoprime, e.what());
  }
}

Integer parse_positive(const std::string& text, const char* what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0 || v < 1) {
    throw Error(ErrorKind::kParse, std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  return v;
}

void print_analysis(const FanoSimplex& p, bool json, bool as_comment, std::ostream& out) {
  const auto a = analyze(p);
  if (json) {
    out << analysis_json(a) << "\n";
    return;
  }
  const auto text = analysis_text(a);
  if (!as_comment) {
    out << text;
    return;
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << "\n";
}

int cmd_analyze(const Options& o, std::ostream& out) {
  auto vertices = read_simplex_file(o.file);
  const FanoSimplex p(std::move(vertices));
  print_analysis(p, o.json, false, out);
  return kOk;
}

int cmd_wps(const Options& o, std::ostream& out) {
  const auto w = parse_weights(o.weights);
  const auto p = wps_simplex(w);
  if (o.json && o.analyze) {
    print_analysis(p, true, false, out);
    return kOk;
  }
  out << format_simplex(p.vertices());
  if (o.analyze) print_analysis(p, false, true, out);
  return kOk;
}

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const auto cls = parse_enumeration_class(o.cls);
  if (!cls) throw Error(ErrorKind::kParse, "unknown class '" + o.cls + "'");
  const auto w = parse_weights(o.weights);
  EnumerationOptions options;
  options.threads = o.threads;
  if (o.mult_cap) options.mult_cap = parse_positive(*o.mult_cap, "--mult-cap");
  if (*cls == EnumerationClass::kAll && !options.mult_cap) {
    throw Error(ErrorKind::kMissingBound, "--class all requires --mult-cap");
  }
  const auto result = enumerate_fake_wps(w, *cls, options);

  std::string catalog;
  for (const auto& r : result.records) catalog += catalog_line(r) + "\n";

  std::map<Integer, std::size_t> per_mult;
  for (const auto& r : result.records) ++per_mult[r.multiplicity];
  std::ostringstream summary;
  summary << result.records.size() << " records for weights " << w.to_string() << " (class " << o.cls
          << ", mult cap " << result.mult_cap.get_str() << ")";
  for (const auto& [mult, count] : per_mult) summary << "; mult " << mult.get_str() << ": " << count;
  summary << "\n";
  for (const auto& line : result.log) summary << "note: " << line << "\n";
  if (result.max_conjecture_ratio) {
    summary << "max mult*lambda_0...lambda_n/h^(n-1): " << to_pair_string(*result.max_conjecture_ratio) << "\n";
  }

  if (o.out_path.empty()) {
    out << catalog;
    err << summary.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw Error(ErrorKind::kParse, "cannot write " + o.out_path);
    file << catalog;
    out << summary.str();
  }
  return kOk;
}

int cmd_weights(const Options& o, std::ostream& out) {
  std::vector<WeightSystem> found;
  if (o.dim == 0) throw Error(ErrorKind::kParse, "--dim must be positive");
  if (o.cls == "gorenstein") {
    found = enumerate_gorenstein_weights(o.dim);
    if (o.h_max) {
      const Integer h_max = parse_positive(*o.h_max, "--h-max");
      std::erase_if(found, [&](const WeightSystem& w) { return w.h() > h_max; });
    }
  } else {
    if (!o.h_max) throw Error(ErrorKind::kMissingBound, "--class " + o.cls + " requires --h-max");
    const Integer h_max = parse_positive(*o.h_max, "--h-max");
    SearchOptions options;
    options.threads = o.threads;
    const auto cls = o.cls == "terminal" ? SingularityClass::kTerminal : SingularityClass::kCanonical;
    found = search_weights(o.dim, h_max, cls, options);
  }
  for (const auto& w : found) out << w.to_string() << "\n";
  return kOk;
}

// Stored fields that disagree with the values recomputed from the vertices.
std::vector<std::string> consistency_problems(const CatalogEntry& e, const FanoSimplex& p) {
  std::vector<std::string> problems;
  if (!WeightSystem(e.weights).same_multiset(p.weights())) problems.push_back("weights");
  if (e.mult != p.multiplicity()) problems.push_back("mult");
  const bool canonical = p.is_canonical();
  if (e.canonical != canonical) problems.push_back("canonical");
  if (e.terminal != (canonical && p.is_terminal())) problems.push_back("terminal");
  if (e.reflexive != p.is_reflexive()) problems.push_back("reflexive");
  if (e.degree != p.degree()) problems.push_back("degree");
  if (e.quotient != p.quotient_group()) problems.push_back("quotient");
  return problems;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::ifstream in(o.catalog);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + o.catalog);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto entries = parse_catalog(buffer.str());

  std::vector<CorpusInstance> corpus;
  std::vector<std::string> inconsistent;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string label = "record " + std::to_string(i + 1);
    FanoSimplex p(entries[i].vertices);
    for (const auto& field : consistency_problems(entries[i], p)) {
      inconsistent.push_back(label + ": stored " + field + " disagrees with the vertices");
    }
    corpus.push_back(CorpusInstance{std::move(p), label, entries[i].mult});
  }
  const auto summary = verify_corpus(corpus, o.threads);
  out << (o.json ? summary_json(summary) + "\n" : summary_text(summary));
  for (const auto& line : inconsistent) out << "INCONSISTENT " << line << "\n";
  return summary.ok() && inconsistent.empty() ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fake weighted projective spaces: analysis, construction, enumeration and bound checks", "fwps"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a simplex file");
  analyze_cmd->add_option("file", o.file, "Simplex file (text or JSON)")->required();
  analyze_cmd->add_flag("--json", o.json, "JSON output");

  auto* wps_cmd = app.add_subcommand("wps", "Print the simplex of P(weights)");
  wps_cmd->add_option("weights", o.weights, "Weights lambda_0 ... lambda_n")->required()->expected(2, -1);
  wps_cmd->add_flag("--analyze", o.analyze, "Append the analysis report");
  wps_cmd->add_flag("--json", o.json, "JSON analysis (with --analyze)");

  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate fake weighted projective spaces with given weights");
  enum_cmd->add_option("weights", o.weights, "Weights lambda_0 ... lambda_n")->required()->expected(2, -1);
  enum_cmd->add_option("--class", o.cls, "terminal | canonical | gorenstein | all")
      ->required()
      ->check(CLI::IsMember({"terminal", "canonical", "gorenstein", "all"}));
  enum_cmd->add_option("--mult-cap", o.mult_cap, "Largest multiplicity to consider");
  enum_cmd->add_option("--out", o.out_path, "Catalog file (JSON lines); stdout if omitted");
  enum_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* weights_cmd = app.add_subcommand("weights", "List weight systems of a singularity class");
  weights_cmd->add_option("--dim", o.dim, "Dimension n")->required();
  weights_cmd->add_option("--class", o.cls, "gorenstein | canonical | terminal")
      ->required()
      ->check(CLI::IsMember({"gorenstein", "canonical", "terminal"}));
  weights_cmd->add_option("--h-max", o.h_max, "Largest h = sum of weights");
  weights_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Check every bound on a catalog");
  verify_cmd->add_option("--catalog", o.catalog, "Catalog file (JSON lines)")->required();
  verify_cmd->add_flag("--json", o.json, "JSON summary");
  verify_cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*wps_cmd) return cmd_wps(o, out);
    if (*enum_cmd) return cmd_enumerate(o, out, err);
    if (*weights_cmd) return cmd_weights(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kParseError;
}

}  // namespace fwps::cli
