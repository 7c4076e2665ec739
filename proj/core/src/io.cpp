#include "fwps/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fwps/error.hpp"
#include "fwps/wps.hpp"
#include "json.hpp"

namespace fwps {

namespace {

using Json = nlohmann::ordered_json;

Error parse_error(std::size_t line, const std::string& what) {
  return Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + what);
}

bool is_integer_token(std::string_view token) {
  std::size_t i = (!token.empty() && (token[0] == '-' || token[0] == '+')) ? 1 : 0;
  if (i == token.size()) return false;
  for (; i < token.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  return true;
}

Integer integer_from_token(std::string_view token) {
  if (!token.empty() && token[0] == '+') token.remove_prefix(1);
  return Integer(std::string(token));
}

Json to_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string() && is_integer_token(j.get<std::string>())) return integer_from_token(j.get<std::string>());
  throw Error(ErrorKind::kParse, "expected an integer, got " + j.dump());
}

template <typename Range>
Json integer_array(const Range& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_json(v));
  return a;
}

Json vertices_json(std::span<const LatticePoint> vertices) {
  Json a = Json::array();
  for (const auto& v : vertices) a.push_back(integer_array(v));
  return a;
}

std::vector<LatticePoint> vertices_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::kParse, "\"vertices\" must be an array");
  std::vector<LatticePoint> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw Error(ErrorKind::kParse, "each vertex must be an array of integers");
    std::vector<Integer> coords;
    for (const auto& c : row) coords.push_back(integer_from_json(c));
    out.emplace_back(std::move(coords));
  }
  return out;
}

void check_shape(const std::vector<LatticePoint>& rows, std::size_t last_line) {
  if (rows.empty()) throw parse_error(last_line, "no vertices");
  const std::size_t n = rows.front().dim();
  if (n == 0) throw parse_error(last_line, "empty vertex");
  if (rows.size() != n + 1) {
    throw parse_error(last_line, "expected " + std::to_string(n + 1) + " vertices of dimension " + std::to_string(n) +
                                     ", found " + std::to_string(rows.size()));
  }
}

std::vector<LatticePoint> parse_json_simplex(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices")) throw Error(ErrorKind::kParse, "JSON simplex needs \"vertices\"");
  auto vertices = vertices_from_json(doc["vertices"]);
  if (vertices.empty()) throw Error(ErrorKind::kParse, "no vertices");
  const std::size_t n = vertices.front().dim();
  for (const auto& v : vertices)
    if (v.dim() != n) throw Error(ErrorKind::kParse, "vertices of differing dimension");
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<std::int64_t>() != static_cast<std::int64_t>(n)) {
      throw Error(ErrorKind::kParse, "\"dim\" does not match the vertex dimension");
    }
  }
  check_shape(vertices, 1);
  return vertices;
}

Json cone_json(const ConeSingularity& c) {
  Json j;
  j["facet"] = c.facet_index;
  j["order"] = to_json(c.group_order);
  j["invariant_factors"] = integer_array(c.invariant_factors);
  j["type"] = c.type_string();
  j["smooth"] = c.is_smooth;
  return j;
}

Json bound_json(const BoundReport& r) {
  Json j;
  j["bound"] = r.bound_name;
  j["lhs"] = to_pair_string(r.lhs);
  j["rhs"] = to_pair_string(r.rhs);
  j["strict"] = r.strict;
  j["holds"] = r.holds;
  j["slack"] = to_pair_string(r.slack);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string join(std::span<const Integer> values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

std::string group_string(std::span<const Integer> factors) {
  if (factors.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + factors[i].get_str();
  }
  return out;
}

}  // namespace

std::vector<LatticePoint> parse_simplex(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_simplex(text);

  std::vector<LatticePoint> rows;
  std::size_t line_no = 0;
  std::size_t width = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<Integer> coords;
    std::string token;
    while (fields >> token) {
      if (!is_integer_token(token)) throw parse_error(line_no, "'" + token + "' is not an integer");
      coords.push_back(integer_from_token(token));
    }
    if (coords.empty()) continue;
    if (rows.empty()) width = coords.size();
    if (coords.size() != width) {
      throw parse_error(line_no, "expected " + std::to_string(width) + " coordinates, found " +
                                     std::to_string(coords.size()));
    }
    rows.emplace_back(std::move(coords));
  }
  check_shape(rows, line_no);
  return rows;
}

std::vector<LatticePoint> read_simplex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_simplex(buffer.str());
}

std::string format_simplex(std::span<const LatticePoint> vertices) {
  std::string out;
  for (const auto& v : vertices) out += join(v.coords(), " ") + "\n";
  return out;
}

std::string catalog_line(const ClassificationRecord& record) {
  Json j;
  j["vertices"] = vertices_json(record.normal_form_vertices.row_points());
  j["weights"] = integer_array(record.weights.lambdas());
  j["mult"] = to_json(record.multiplicity);
  j["terminal"] = record.terminal;
  j["canonical"] = record.canonical;
  j["reflexive"] = record.reflexive;
  j["degree"] = to_pair_string(record.degree);
  j["quotient"] = integer_array(record.quotient);
  Json cones = Json::array();
  for (const auto& c : record.cone_singularities) cones.push_back(cone_json(c));
  j["cone_singularities"] = std::move(cones);
  return j.dump();
}

CatalogEntry parse_catalog_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid JSON: ") + e.what());
  }
  for (const char* key : {"vertices", "weights", "mult"}) {
    if (!j.contains(key)) throw Error(ErrorKind::kParse, std::string("catalog record lacks \"") + key + "\"");
  }
  CatalogEntry e;
  e.vertices = vertices_from_json(j["vertices"]);
  for (const auto& w : j["weights"]) e.weights.push_back(integer_from_json(w));
  e.mult = integer_from_json(j["mult"]);
  e.terminal = j.value("terminal", false);
  e.canonical = j.value("canonical", false);
  e.reflexive = j.value("reflexive", false);
  if (j.contains("degree")) e.degree = parse_rational(j["degree"].get<std::string>());
  if (j.contains("quotient"))
    for (const auto& q : j["quotient"]) e.quotient.push_back(integer_from_json(q));
  return e;
}

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
  std::vector<CatalogEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_catalog_line(line));
    } catch (const Error& e) {
      throw parse_error(line_no, e.what());
    }
  }
  return out;
}

Analysis analyze(const FanoSimplex& p) {
  Analysis a{.vertices = p.vertices(), .weights = p.weights(), .mult = p.multiplicity()};
  a.quotient = p.quotient_group();
  a.volume = p.normalized_volume();
  a.facet_volumes = p.facet_lattice_volumes();
  a.degree = p.degree();
  a.canonical = p.is_canonical();
  a.terminal = p.is_terminal();
  a.reflexive = p.is_reflexive();
  a.well_formed = is_well_formed(p.weights());
  a.interior_points = p.interior_point_count();
  a.cones = p.cone_singularities();
  a.bounds = applicable_bounds(CorpusInstance{p, "input", std::nullopt});
  return a;
}

std::string analysis_text(const Analysis& a) {
  std::ostringstream out;
  out << "vertices: " << IntegerMatrix::from_rows(a.vertices).to_string() << "\n";
  out << "dimension: " << a.weights.dim() << "\n";
  out << "weights: " << a.weights.to_string() << "\n";
  out << "h: " << a.weights.h().get_str() << "\n";
  out << "well_formed: " << std::boolalpha << a.well_formed << "\n";
  out << "mult: " << a.mult.get_str() << "\n";
  out << "quotient: " << group_string(a.quotient) << "\n";
  out << "volume: " << to_pair_string(a.volume) << "\n";
  out << "facet_volumes: (" << join(a.facet_volumes, ",") << ")\n";
  out << "degree: " << to_pair_string(a.degree) << "\n";
  out << "interior_points: " << a.interior_points << "\n";
  out << "terminal: " << a.terminal << "\n";
  out << "canonical: " << a.canonical << "\n";
  out << "reflexive: " << a.reflexive << "\n";
  out << "cones:\n";
  for (const auto& c : a.cones) {
    out << "  facet " << c.facet_index << ": order " << c.group_order.get_str() << ", " << c.type_string() << "\n";
  }
  out << "bounds:\n";
  for (const auto& r : a.bounds) {
    out << "  " << (r.holds ? "ok   " : "FAIL ") << r.bound_name << ": " << to_pair_string(r.lhs)
        << (r.strict ? " < " : " <= ") << to_pair_string(r.rhs) << " (slack " << to_pair_string(r.slack) << ")\n";
  }
  return out.str();
}

std::string analysis_json(const Analysis& a) {
  Json j;
  j["vertices"] = vertices_json(a.vertices);
  j["dimension"] = a.weights.dim();
  j["weights"] = integer_array(a.weights.lambdas());
  j["h"] = to_json(a.weights.h());
  j["well_formed"] = a.well_formed;
  j["mult"] = to_json(a.mult);
  j["quotient"] = integer_array(a.quotient);
  j["volume"] = to_pair_string(a.volume);
  j["facet_volumes"] = integer_array(a.facet_volumes);
  j["degree"] = to_pair_string(a.degree);
  j["interior_points"] = a.interior_points;
  j["terminal"] = a.terminal;
  j["canonical"] = a.canonical;
  j["reflexive"] = a.reflexive;
  Json cones = Json::array();
  for (const auto& c : a.cones) cones.push_back(cone_json(c));
  j["cones"] = std::move(cones);
  Json bounds = Json::array();
  for (const auto& r : a.bounds) bounds.push_back(bound_json(r));
  j["bounds"] = std::move(bounds);
  return j.dump(2);
}

std::string summary_text(const CorpusSummary& s) {
  std::ostringstream out;
  out << s.instances << " instances, " << s.failures.size() << " failures\n";
  for (const auto& b : s.per_bound) {
    out << "  " << b.bound_name << ": checked " << b.checked << ", failed " << b.failures;
    if (b.min_slack) out << ", min slack " << to_pair_string(*b.min_slack) << " at " << b.tightest_instance;
    out << "\n";
  }
  for (const auto& f : s.failures) {
    out << "FAILED " << f.bound_name << ": " << to_pair_string(f.lhs) << (f.strict ? " < " : " <= ")
        << to_pair_string(f.rhs) << " violated by " << f.instance << "\n";
  }
  return out.str();
}

std::string summary_json(const CorpusSummary& s) {
  Json j;
  j["instances"] = s.instances;
  j["failures"] = s.failures.size();
  Json per = Json::array();
  for (const auto& b : s.per_bound) {
    Json e;
    e["bound"] = b.bound_name;
    e["checked"] = b.checked;
    e["failed"] = b.failures;
    e["min_slack"] = b.min_slack ? Json(to_pair_string(*b.min_slack)) : Json(nullptr);
    e["tightest_instance"] = b.tightest_instance;
    per.push_back(std::move(e));
  }
  j["bounds"] = std::move(per);
  Json fails = Json::array();
  for (const auto& f : s.failures) {
    Json e = bound_json(f);
    e["instance"] = f.instance;
    fails.push_back(std::move(e));
  }
  j["failed_reports"] = std::move(fails);
  return j.dump(2);
}

}  // namespace fwps
