#pragma once

#include "shaclds/dataset.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shaclds {

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;

  std::string to_string() const;
};

/// Result of parsing a document. On success the dataset is present and
/// diagnostics are empty; on failure the dataset is absent.
struct ParseOutcome {
  std::optional<Dataset> dataset;
  std::map<std::string, std::string> prefixes;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return dataset.has_value(); }
};

/// N-Quads (N-Triples lines are valid N-Quads without a graph term).
ParseOutcome parse_nquads(std::string_view text);

/// Turtle subset: prefixes, prefixed names, 'a', object/predicate lists,
/// blank node property lists, collections, typed/language literals,
/// integer/decimal/boolean shorthand, long strings. Graph only.
ParseOutcome parse_turtle(std::string_view text, const std::string& base = {});

/// TriG: the Turtle subset plus GRAPH blocks and default-graph statements.
ParseOutcome parse_trig(std::string_view text, const std::string& base = {});

std::string serialize_nquads(const Dataset& d);
std::string serialize_turtle(const Graph& g,
                             const std::map<std::string, std::string>& prefixes = {});
std::string serialize_trig(const Dataset& d,
                           const std::map<std::string, std::string>& prefixes = {});

/// Format chosen by file extension: .nq/.nt → N-Quads, .ttl → Turtle,
/// .trig → TriG. Unknown extensions default to TriG.
ParseOutcome parse_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace shaclds
