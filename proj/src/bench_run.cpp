#include "shaclds/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace shaclds {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool is_ds_config(BenchConfigId id) {
  return id == BenchConfigId::DsTarget || id == BenchConfigId::DsTargetExtra ||
         id == BenchConfigId::DsCombo || id == BenchConfigId::DsComboExtra;
}

bool is_combo_config(BenchConfigId id) {
  return id == BenchConfigId::DsCombo || id == BenchConfigId::DsComboExtra;
}

bool node_has_graph_clause(const AlgebraNode& n) {
  if (n.kind == AlgebraNode::Kind::Graph) return true;
  for (const auto& c : n.children) {
    if (node_has_graph_clause(c)) return true;
  }
  return false;
}

}  // namespace

std::string to_string(BenchConfigId id) {
  switch (id) {
    case BenchConfigId::ShaclBaseline: return "shacl-baseline";
    case BenchConfigId::ShaclFull: return "shacl-full";
    case BenchConfigId::DsTarget: return "ds-target";
    case BenchConfigId::DsTargetExtra: return "ds-target-extra";
    case BenchConfigId::DsCombo: return "ds-combo";
    case BenchConfigId::DsComboExtra: return "ds-combo-extra";
  }
  return "?";
}

BenchConfigId bench_config_from_string(const std::string& name) {
  if (name == "shacl-baseline") return BenchConfigId::ShaclBaseline;
  if (name == "shacl-full") return BenchConfigId::ShaclFull;
  if (name == "ds-target") return BenchConfigId::DsTarget;
  if (name == "ds-target-extra") return BenchConfigId::DsTargetExtra;
  if (name == "ds-combo") return BenchConfigId::DsCombo;
  if (name == "ds-combo-extra") return BenchConfigId::DsComboExtra;
  throw BenchConfigError("unknown benchmark configuration: " + name);
}

bool shapes_dataset_has_graph_rewrites(const ShapesDataset& sd) {
  for (const auto& [iri, load] : sd.shapes_graphs) {
    for (const auto& shape : load.shapes) {
      for (const auto& c : shape.constraints) {
        if (c.kind == Constraint::Kind::Sparql &&
            node_has_graph_clause(c.sparql->parsed.pattern))
          return true;
      }
    }
  }
  return false;
}

std::vector<RunRecord> run_config(BenchConfigId id, const Dataset& data,
                                  const ShapesDataset& sd, const RunOptions& opts) {
  if (!is_ds_config(id))
    throw std::invalid_argument("configuration " + to_string(id) +
                                " takes a flat shapes graph, not a shapes dataset");
  if (opts.repeats < 1) throw std::invalid_argument("repeats must be >= 1");

  std::vector<RunRecord> records;
  int total = opts.repeats + (opts.warmup ? 1 : 0);
  for (int run = 0; run < total; ++run) {
    RunRecord rec;
    rec.config = id;
    ValidationReport report;
    if (is_combo_config(id)) {
      // Creation phase: materialize the combined focus graphs.
      auto t0 = Clock::now();
      std::vector<ResolvedTarget> pairs = resolve_declarations(sd, data);
      rec.creation_s = seconds_since(t0);
      auto t1 = Clock::now();
      report = validate_resolved(sd, data, pairs, opts.parallel);
      rec.validation_s = seconds_since(t1);
    } else {
      // Target strategy needs no intermediate graph; resolution happens as
      // part of validation.
      rec.creation_s = 0.0;
      auto t1 = Clock::now();
      report = validate_dataset(sd, data, opts.parallel);
      rec.validation_s = seconds_since(t1);
    }
    rec.errors = report.results.size();
    if (!(opts.warmup && run == 0)) records.push_back(rec);
  }
  return records;
}

std::vector<RunRecord> run_config(BenchConfigId id, const Dataset& data,
                                  const ShapesLoad& flat_shapes,
                                  const std::vector<Term>& merge_names,
                                  const RunOptions& opts) {
  if (is_ds_config(id))
    throw std::invalid_argument("configuration " + to_string(id) +
                                " takes a shapes dataset, not a flat shapes graph");
  if (opts.repeats < 1) throw std::invalid_argument("repeats must be >= 1");

  std::vector<RunRecord> records;
  int total = opts.repeats + (opts.warmup ? 1 : 0);
  for (int run = 0; run < total; ++run) {
    RunRecord rec;
    rec.config = id;
    auto t0 = Clock::now();
    GraphPtr merged = id == BenchConfigId::ShaclFull ? flatten_all(data)
                                                     : flatten(data, merge_names);
    rec.creation_s = seconds_since(t0);
    auto t1 = Clock::now();
    ValidationReport report = validate_graph(flat_shapes, EvaluationDataset::single(merged));
    rec.validation_s = seconds_since(t1);
    rec.errors = report.results.size();
    if (!(opts.warmup && run == 0)) records.push_back(rec);
  }
  return records;
}

SummaryRow summarize(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("summarize requires at least one value");
  std::sort(values.begin(), values.end());
  auto quantile = [&values](double p) {
    double h = (static_cast<double>(values.size()) - 1.0) * p;
    std::size_t lo = static_cast<std::size_t>(std::floor(h));
    std::size_t hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - std::floor(h)) * (values[hi] - values[lo]);
  };
  SummaryRow row;
  row.min = values.front();
  row.q1 = quantile(0.25);
  row.median = quantile(0.5);
  row.q3 = quantile(0.75);
  row.max = values.back();
  double sum = 0;
  for (double v : values) sum += v;
  row.mean = sum / static_cast<double>(values.size());
  return row;
}

std::map<BenchConfigId, SummaryRow> summarize_runs(const std::vector<RunRecord>& runs) {
  std::map<BenchConfigId, std::vector<double>> per_config;
  for (const auto& r : runs) per_config[r.config].push_back(r.validation_s);
  std::map<BenchConfigId, SummaryRow> out;
  for (const auto& [id, values] : per_config) out.emplace(id, summarize(values));
  return out;
}

}  // namespace shaclds
