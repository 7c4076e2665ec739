#pragma once

// Text formats: simplex files, JSON-lines catalogs and analysis reports.
// Exact rationals are always written as "p/q" strings.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fwps/bounds.hpp"
#include "fwps/classify.hpp"
#include "fwps/lattice.hpp"
#include "fwps/simplex.hpp"

namespace fwps {

// Either one vertex per line (whitespace-separated integers, '#' starts a
// comment) or {"dim": n, "vertices": [[...], ...]}. Checks the n+1 rows of
// n integers shape; throws Error(kParse) with a line number otherwise.
std::vector<LatticePoint> parse_simplex(std::string_view text);
std::vector<LatticePoint> read_simplex_file(const std::string& path);

std::string format_simplex(std::span<const LatticePoint> vertices);

// One catalog line: vertices, weights, mult, terminal, canonical,
// reflexive, degree, quotient, cone_singularities (in that order).
std::string catalog_line(const ClassificationRecord& record);

// A catalog line as stored; claimed values are not re-derived.
struct CatalogEntry {
  std::vector<LatticePoint> vertices;
  std::vector<Integer> weights;
  Integer mult;
  bool terminal = false;
  bool canonical = false;
  bool reflexive = false;
  Rational degree;
  std::vector<Integer> quotient;
};

CatalogEntry parse_catalog_line(std::string_view line);
// Skips blank lines; errors carry the line number.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

// Everything the analyze command reports about one simplex.
struct Analysis {
  std::vector<LatticePoint> vertices{};
  WeightSystem weights;
  Integer mult;
  std::vector<Integer> quotient{};
  Rational volume{};
  std::vector<Integer> facet_volumes{};
  Rational degree{};
  bool terminal = false;
  bool canonical = false;
  bool reflexive = false;
  bool well_formed = false;
  std::size_t interior_points = 0;
  std::vector<ConeSingularity> cones{};
  std::vector<BoundReport> bounds{};
};

Analysis analyze(const FanoSimplex& p);
std::string analysis_text(const Analysis& a);
std::string analysis_json(const Analysis& a);

std::string summary_text(const CorpusSummary& s);
std::string summary_json(const CorpusSummary& s);

}  // namespace fwps
