#include "singkit/germ.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

#include "singkit/errors.hpp"
#include "singkit/parser.hpp"

namespace singkit {
namespace {

using nlohmann::json;

const std::set<std::string> kKeys = {"variables", "equations", "vector_field",
                                     "weights",   "declared_milnor", "label"};

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::size_t skip_ws(std::string_view text, std::size_t i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return i;
}

// Past the end of the JSON value starting at i (the document is known to
// be valid JSON by the time this runs).
std::size_t skip_value(std::string_view text, std::size_t i) {
  if (i >= text.size()) return i;
  if (text[i] == '"') {
    for (++i; i < text.size() && text[i] != '"'; ++i)
      if (text[i] == '\\') ++i;
    return i + 1;
  }
  if (text[i] == '[' || text[i] == '{') {
    int depth = 0;
    for (; i < text.size(); ++i) {
      if (text[i] == '"') {
        i = skip_value(text, i) - 1;
      } else if (text[i] == '[' || text[i] == '{') {
        ++depth;
      } else if ((text[i] == ']' || text[i] == '}') && --depth == 0) {
        return i + 1;
      }
    }
    return i;
  }
  while (i < text.size() && text[i] != ',' && text[i] != ']' && text[i] != '}' &&
         !std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  return i;
}

// Byte offset of "key" used as a member name of the top-level object.
std::optional<std::size_t> find_key(std::string_view text, const std::string& key) {
  std::size_t i = skip_ws(text, 0);
  if (i >= text.size() || text[i] != '{') return std::nullopt;
  i = skip_ws(text, i + 1);
  while (i < text.size() && text[i] == '"') {
    std::size_t start = i;
    std::size_t end = skip_value(text, i);
    bool match = text.substr(start + 1, end - start - 2) == key;
    i = skip_ws(text, end);
    if (i >= text.size() || text[i] != ':') return std::nullopt;
    if (match) return start;
    i = skip_value(text, skip_ws(text, i + 1));
    i = skip_ws(text, i);
    if (i < text.size() && text[i] == ',') i = skip_ws(text, i + 1);
  }
  return std::nullopt;
}

// Byte offset of element `index` of the array stored under `key`.
std::optional<std::size_t> find_element(std::string_view text, const std::string& key, std::size_t index) {
  auto at = find_key(text, key);
  if (!at) return std::nullopt;
  std::size_t i = skip_ws(text, skip_value(text, *at));
  i = skip_ws(text, i + 1);  // past ':'
  if (i >= text.size() || text[i] != '[') return std::nullopt;
  i = skip_ws(text, i + 1);
  for (std::size_t k = 0; i < text.size() && text[i] != ']'; ++k) {
    if (k == index) return i;
    i = skip_ws(text, skip_value(text, i));
    if (i < text.size() && text[i] == ',') i = skip_ws(text, i + 1);
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> position_of(std::string_view text, const std::string& key,
                                                std::optional<std::size_t> index) {
  std::optional<std::size_t> at = index ? find_element(text, key, *index) : std::nullopt;
  if (!at && !key.empty()) at = find_key(text, key);
  return at ? line_col(text, *at) : std::pair<std::size_t, std::size_t>{1, 1};
}

std::string item_name(const std::string& key, std::optional<std::size_t> index) {
  return index ? key + "[" + std::to_string(*index) + "]" : key;
}

// Container errors point at the offending array element or member name,
// or at 1:1 when there is nothing to point at.
[[noreturn]] void container_error(std::string_view text, const std::string& msg, const std::string& key = {},
                                  std::optional<std::size_t> index = std::nullopt) {
  auto [line, col] = position_of(text, key, index);
  throw ParseError(msg, line, col, item_name(key, index));
}

// Maps a line/column inside the decoded string literal at `at` back to the
// file, following escapes.
std::pair<std::size_t, std::size_t> position_in_literal(std::string_view text, std::size_t at, std::size_t line,
                                                        std::size_t col) {
  std::size_t l = 1, c = 1;
  std::size_t i = at + 1;
  while (i < text.size() && text[i] != '"' && (l < line || (l == line && c < col))) {
    bool newline = false;
    if (text[i] == '\\') {
      newline = i + 1 < text.size() && text[i + 1] == 'n';
      i += (i + 1 < text.size() && text[i + 1] == 'u') ? 6 : 2;
    } else {
      newline = false;
      ++i;
    }
    if (newline) {
      ++l;
      c = 1;
    } else {
      ++c;
    }
  }
  return line_col(text, i);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<Polynomial> parse_expression_list(std::string_view text, const json& arr, const Ring& ring,
                                              const std::string& key) {
  if (!arr.is_array()) container_error(text, "expected an array of strings", key);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_string()) container_error(text, "expected a string", key, i);
    try {
      out.push_back(parse_expression(arr[i].get<std::string>(), ring));
    } catch (const ParseError& e) {
      std::size_t line = e.line(), col = e.column();
      if (auto at = find_element(text, key, i)) std::tie(line, col) = position_in_literal(text, *at, line, col);
      throw ParseError(e.message(), line, col, item_name(key, i));
    }
  }
  return out;
}

}  // namespace

namespace {

struct Violation {
  ErrorKind kind;
  std::string key;
  std::optional<std::size_t> index;
  std::string message;
};

std::optional<Violation> find_violation(const GermDefinition& germ) {
  const std::size_t dim = germ.ring.dimension();
  auto bad = [](std::string key, std::optional<std::size_t> index, std::string message,
                ErrorKind kind = ErrorKind::invalid_argument) {
    return Violation{kind, std::move(key), index, std::move(message)};
  };
  if (germ.equations.empty()) return bad("equations", std::nullopt, "germ needs at least one equation");
  if (germ.equations.size() >= dim)
    return bad("equations", std::nullopt,
               "number of equations (" + std::to_string(germ.equations.size()) +
                   ") must be less than the ambient dimension (" + std::to_string(dim) + ")");
  for (std::size_t i = 0; i < germ.equations.size(); ++i) {
    const auto& f = germ.equations[i];
    if (!(f.ring() == germ.ring)) return bad("equations", i, "ring mismatch", ErrorKind::ring_mismatch);
    if (f.is_zero()) return bad("equations", i, "equation is zero");
    if (sgn(f.constant_term()) != 0) return bad("equations", i, "equation does not vanish at the origin");
  }
  if (germ.vector_field) {
    if (germ.vector_field->size() != dim)
      return bad("vector_field", std::nullopt, "vector field must have one component per variable");
    bool all_zero = true;
    for (std::size_t i = 0; i < dim; ++i) {
      const auto& c = (*germ.vector_field)[i];
      if (!(c.ring() == germ.ring)) return bad("vector_field", i, "ring mismatch", ErrorKind::ring_mismatch);
      all_zero = all_zero && c.is_zero();
    }
    if (all_zero) return bad("vector_field", std::nullopt, "vector field is identically zero");
  }
  if (germ.weights) {
    if (germ.weights->size() != dim) return bad("weights", std::nullopt, "weights must have one entry per variable");
    for (std::size_t i = 0; i < dim; ++i)
      if ((*germ.weights)[i] <= 0) return bad("weights", i, "weights must be positive integers");
  }
  if (germ.declared_milnor && *germ.declared_milnor < 0)
    return bad("declared_milnor", std::nullopt, "declared Milnor number must be nonnegative");
  return std::nullopt;
}

}  // namespace

void validate_germ(const GermDefinition& germ) {
  if (auto v = find_violation(germ)) throw Error(v->kind, item_name(v->key, v->index) + ": " + v->message);
}

GermDefinition parse_germ_file(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(bytes, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    auto pos = what.find(": ");
    throw ParseError(pos == std::string::npos ? what : what.substr(pos + 2), line, col);
  }
  if (!doc.is_object()) container_error(bytes, "germ document must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!kKeys.count(key)) container_error(bytes, "unknown key '" + key + "'", key);

  if (!doc.contains("variables")) container_error(bytes, "missing key 'variables'");
  if (!doc.contains("equations")) container_error(bytes, "missing key 'equations'");

  const json& vars = doc["variables"];
  if (!vars.is_array() || vars.empty()) container_error(bytes, "expected a nonempty array of names", "variables");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) container_error(bytes, "expected a string", "variables", i);
    auto name = vars[i].get<std::string>();
    if (!is_identifier(name)) container_error(bytes, "'" + name + "' is not a valid identifier", "variables", i);
    names.push_back(std::move(name));
  }
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) container_error(bytes, "duplicate variable name", "variables");

  GermDefinition germ{Ring(std::move(names)), {}, {}, {}, {}, {}};
  germ.equations = parse_expression_list(bytes, doc["equations"], germ.ring, "equations");

  if (doc.contains("vector_field"))
    germ.vector_field = parse_expression_list(bytes, doc["vector_field"], germ.ring, "vector_field");
  if (doc.contains("weights")) {
    const json& w = doc["weights"];
    if (!w.is_array()) container_error(bytes, "expected an array of positive integers", "weights");
    std::vector<std::int64_t> weights;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_number_integer())
        container_error(bytes, "expected an integer", "weights", i);
      weights.push_back(w[i].get<std::int64_t>());
    }
    germ.weights = std::move(weights);
  }
  if (doc.contains("declared_milnor")) {
    const json& m = doc["declared_milnor"];
    if (!m.is_number_integer()) container_error(bytes, "expected a nonnegative integer", "declared_milnor");
    germ.declared_milnor = m.get<std::int64_t>();
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) container_error(bytes, "expected a string", "label");
    germ.label = doc["label"].get<std::string>();
  }

  if (auto v = find_violation(germ)) container_error(bytes, v->message, v->key, v->index);
  return germ;
}

GermDefinition load_germ_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 1, 1);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_germ_file(buf.str());
}

std::string germ_to_json(const GermDefinition& germ) {
  json doc = json::object();
  doc["variables"] = germ.ring.variables();
  json eqs = json::array();
  for (const auto& f : germ.equations) eqs.push_back(format_polynomial(f));
  doc["equations"] = eqs;
  if (germ.vector_field) {
    json comps = json::array();
    for (const auto& c : *germ.vector_field) comps.push_back(format_polynomial(c));
    doc["vector_field"] = comps;
  }
  if (germ.weights) doc["weights"] = *germ.weights;
  if (germ.declared_milnor) doc["declared_milnor"] = *germ.declared_milnor;
  if (germ.label) doc["label"] = *germ.label;
  return doc.dump(2);
}

}  // namespace singkit
