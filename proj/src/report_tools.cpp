#include "shaclds/report_tools.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace shaclds {

namespace {

void append_field(std::string& key, const std::optional<Term>& t) {
  key += t ? t->to_ntriples() : "~absent~";
  key += '\x1f';
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::string dedup_key(const ValidationResult& r) {
  std::string key;
  key.reserve(128);
  key += r.focus.to_ntriples();
  key += '\x1f';
  append_field(key, r.path);
  append_field(key, r.value);
  key += r.source_shape.to_ntriples();
  key += '\x1f';
  key += r.component.to_ntriples();
  key += '\x1f';
  key += r.severity.to_ntriples();
  key += '\x1f';
  key += r.message ? r.message->value() : "~absent~";
  return key;
}

DedupOutcome dedup(const ValidationReport& report) {
  DedupOutcome out;
  out.report = report;
  normalize_report(out.report);
  std::set<std::string> seen;
  std::vector<ValidationResult> kept;
  kept.reserve(out.report.results.size());
  for (auto& r : out.report.results) {
    if (seen.insert(dedup_key(r)).second) kept.push_back(std::move(r));
  }
  out.removed = out.report.results.size() - kept.size();
  out.report.results = std::move(kept);
  out.report.conforms = compute_conforms(out.report);
  return out;
}

ShapeCountTable group_counts(const ValidationReport& report) {
  ShapeCountTable table;
  std::set<std::string> keys;
  for (const auto& r : report.results) {
    ++table.by_shape[r.source_shape.to_ntriples()];
    if (r.focus_graph) ++table.by_focus_graph[r.focus_graph->to_ntriples()];
    keys.insert(dedup_key(r));
    ++table.total;
  }
  table.deduped_total = keys.size();
  return table;
}

std::vector<CountDiff> diff_counts(const ShapeCountTable& a, const ShapeCountTable& b) {
  std::set<std::string> shapes;
  for (const auto& [shape, n] : a.by_shape) shapes.insert(shape);
  for (const auto& [shape, n] : b.by_shape) shapes.insert(shape);
  std::vector<CountDiff> out;
  for (const auto& shape : shapes) {
    auto ita = a.by_shape.find(shape);
    auto itb = b.by_shape.find(shape);
    std::size_t ca = ita == a.by_shape.end() ? 0 : ita->second;
    std::size_t cb = itb == b.by_shape.end() ? 0 : itb->second;
    if (ca != cb) out.push_back({shape, ca, cb});
  }
  auto delta = [](const CountDiff& d) {
    return static_cast<long long>(d.count_b) - static_cast<long long>(d.count_a);
  };
  std::sort(out.begin(), out.end(), [&](const CountDiff& x, const CountDiff& y) {
    long long dx = delta(x), dy = delta(y);
    if (std::llabs(dx) != std::llabs(dy)) return std::llabs(dx) > std::llabs(dy);
    if (dx != dy) return dx > dy;
    return x.shape < y.shape;
  });
  return out;
}

std::string render_counts_text(const ShapeCountTable& table) {
  std::size_t width = 5;
  for (const auto& [shape, n] : table.by_shape) width = std::max(width, shape.size());
  std::ostringstream os;
  os << std::left;
  for (const auto& [shape, n] : table.by_shape) {
    os << shape;
    os << std::string(width - shape.size() + 2, ' ') << n << "\n";
  }
  os << std::string(width + 2, '-') << "\n";
  os << "total" << std::string(width - 5 + 2, ' ') << table.total
     << "  (distinct keys " << table.deduped_total << ")\n";
  return os.str();
}

std::string render_counts_csv(const ShapeCountTable& table) {
  std::ostringstream os;
  os << "shape,count\n";
  for (const auto& [shape, n] : table.by_shape) {
    std::string name = shape;
    // strip <...> from IRIs for spreadsheet friendliness
    if (name.size() > 1 && name.front() == '<' && name.back() == '>')
      name = name.substr(1, name.size() - 2);
    os << csv_quote(name) << "," << n << "\n";
  }
  return os.str();
}

}  // namespace shaclds
