#pragma once

// Shipped catalog of classical germs with precomputed invariants, used as
// a regression suite (`singkit catalog run`).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singkit/germ.hpp"
#include "singkit/local_algebra.hpp"

namespace singkit {

struct CatalogExpectations {
  std::int64_t mu = 0;
  std::optional<bool> contact_trivial;
  std::optional<std::int64_t> radial_gsv;
  // For entries carrying a vector field.
  std::optional<std::int64_t> field_gsv;
  std::optional<bool> field_trivial;
  std::optional<bool> foliation_trivial;
};

struct CatalogEntry {
  std::string label;
  GermDefinition germ;
  CatalogExpectations expected;
  std::string provenance;  // which oracle fixed the expected values
};

// Catalog documents are JSON arrays of {label, germ, expected, provenance}.
std::vector<CatalogEntry> parse_catalog(std::string_view text);

const std::vector<CatalogEntry>& shipped_catalog();

struct EntryCheck {
  std::string label;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

EntryCheck verify_entry(const CatalogEntry& entry, const Budget& budget = {});

// Results ordered by label.
std::vector<EntryCheck> verify_catalog(const std::vector<CatalogEntry>& entries, const Budget& budget = {});

}  // namespace singkit
