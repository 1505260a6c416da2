#pragma once

// Analysis reports behind the CLI subcommands. A report is computed once
// and rendered either as JSON (docs/report-schema.md) or as text derived
// from the same data.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "singkit/germ.hpp"
#include "singkit/index.hpp"
#include "singkit/local_algebra.hpp"
#include "singkit/milnor.hpp"
#include "singkit/obstruction.hpp"

namespace singkit {

struct AnalysisOptions {
  Budget budget;
  std::optional<std::int64_t> declared_mu;   // overrides the germ file
  std::optional<std::int64_t> declared_gsv;
  bool radial = false;
};

struct CrossCheck {
  MilnorMethod method;
  std::int64_t mu;
};

struct FieldAnalysis {
  std::string source;  // "radial", "germ" or "declared"
  std::optional<IndexValue> ph;
  std::optional<Tangency> tangency;
  bool hamiltonian = false;
  std::optional<IndexValue> gsv;
  std::optional<TrivialityVerdict> orthogonal;
  std::optional<TrivialityVerdict> foliation;
};

struct AnalysisReport {
  std::string command;
  std::string label;
  std::size_t ambient_dimension = 0;
  std::size_t codimension = 0;
  std::size_t n = 0;
  std::optional<MilnorResult> milnor;
  std::vector<CrossCheck> cross_checks;
  std::optional<IndexValue> radial_gsv;
  std::optional<TrivialityVerdict> contact;
  std::vector<FieldAnalysis> fields;
  std::vector<std::string> notices;
  Budget budget;
  EngineStats stats;
  double elapsed_ms = 0;  // not part of the JSON payload
};

// Milnor number plus any closed-form oracle that applies to the germ.
AnalysisReport analyze_milnor(const GermDefinition& germ, const AnalysisOptions& options = {});

/// Milnor number, radial GSV index and every triviality verdict that the
/// germ and options determine. Throws the engine's errors unchanged
/// (non-isolated, unsupported, tangency, budget).
AnalysisReport analyze_decide(const GermDefinition& germ, const AnalysisOptions& options = {});

// Poincare-Hopf and GSV indices of the germ's field, the radial field
// (options.radial) or a declared value.
AnalysisReport analyze_index(const GermDefinition& germ, const AnalysisOptions& options = {});

nlohmann::json to_json(const TrivialityVerdict& v);
nlohmann::json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

}  // namespace singkit
