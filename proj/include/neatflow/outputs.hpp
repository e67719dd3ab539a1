#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "neatflow/experiment.hpp"

namespace neatflow {

// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double v);

// Batch directory layout: summary.csv, trace_run<k>.csv,
// best_run<k>.genome.json, config.json. CSV: header row, ',' separator,
// '.' decimal, LF line ends. Re-running with identical inputs overwrites
// byte-identically. Throws IoError.
void write_outputs(const BatchResult& batch, const std::string& dir);

// Sweep directory: one batch directory per pressure value (p_<value>/) plus
// a combined summary.csv and a config.json carrying the swept values.
void write_sweep_outputs(const std::vector<BatchResult>& batches,
                         const std::string& dir);

std::string config_to_json(const ExperimentConfig& cfg, bool pretty = true);
ExperimentConfig config_from_json(const std::string& text);

// Re-aggregates a batch (or sweep) directory: re-evaluates each
// best_run<k>.genome.json under the echoed config and rewrites summary.csv.
void reaggregate(const std::string& dir);

// Concatenates trace_run<k>.csv files with a leading run column (plus a
// pressure column for sweep directories).
void concat_traces(const std::string& dir, std::ostream& out);

std::vector<SummaryRow> read_summary_csv(const std::string& path);
std::vector<TraceRow> read_trace_csv(const std::string& path);

} // namespace neatflow
