#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singkit/poly.hpp"

namespace singkit {

/// A germ (X,0) cut out by `equations` in the ambient space of `ring`,
/// with optional tangent vector field, weights and a user-declared
/// Milnor number. Instances returned by parse_germ_file are validated.
struct GermDefinition {
  Ring ring;
  std::vector<Polynomial> equations;
  std::optional<std::vector<Polynomial>> vector_field;
  std::optional<std::vector<std::int64_t>> weights;
  std::optional<std::int64_t> declared_milnor;
  std::optional<std::string> label;

  std::size_t ambient_dimension() const { return ring.dimension(); }
  std::size_t codimension() const { return equations.size(); }
  // Complex dimension n of X.
  std::size_t dimension() const { return ring.dimension() - equations.size(); }
};

// Checks every invariant of GermDefinition; throws Error(invalid_argument)
// naming the offending item.
void validate_germ(const GermDefinition& germ);

/// Parses a JSON germ document (schema in docs/germ-format.md).
/// Every problem raises ParseError positioned at the offending member or
/// array element: malformed JSON, unknown keys, bad expressions (mapped to
/// their place in the file) and broken germ invariants alike.
GermDefinition parse_germ_file(std::string_view bytes);

GermDefinition load_germ_file(const std::string& path);

// Canonical JSON text; parse_germ_file(germ_to_json(g)) reproduces g.
std::string germ_to_json(const GermDefinition& germ);

}  // namespace singkit
