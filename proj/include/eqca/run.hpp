#pragma once

#include <optional>
#include <string>

#include "eqca/io.hpp"

namespace eqca::run {

using io::json;

/// Aggregated settings of one batch run. Deterministic: the same manifest
/// always produces byte-identical output.
struct RunManifest {
    std::string mode;  // classical | quantum | verify
    std::string rule_path;
    std::string state_path;
    Nat steps = 0;
    std::uint64_t seed = 0;
    std::string output_path;  // optional; output is also returned as a string
    std::string field_path;   // optional; defaults to Q(zeta_8)
    std::size_t index_digit_cap = 1000000;
    std::optional<CellCoord> measure_at;  // quantum mode: sample a cell after the run
    unsigned long samples = 10000;
};

struct GalleryParams {
    std::string demo;
    std::string oracle_kind = "primality";  // primality | parity | bits:<01...>
    std::uint64_t max_index = 31;           // space demo: indices 0..max_index
    std::uint64_t index = 0;                // velocity / correlation demos
    std::uint64_t width = 32;               // nonquiescent-input
    std::uint64_t steps = 32;               // time demo
    int head_bit = 0;                       // velocity demo x
    std::string amplitude = "3/5";          // scalar-extraction u
    unsigned long samples = 10000;
    std::uint64_t seed = 1;
    bool restored = false;
    std::string output_path;
    std::string field_path;
};

/// Runs one manifest; returns the serialized trace/report and writes it to
/// output_path when set. Throws std::invalid_argument with a message naming
/// the violated hypothesis on contract violations.
std::string run_classical(const RunManifest& m);
std::string run_quantum(const RunManifest& m);
std::string run_verify(const RunManifest& m);
std::string run_gallery(const GalleryParams& p);

/// Exact step-by-step trace comparison; the report carries the first
/// divergence and any length mismatch (which is reported, not fatal).
json trace_diff(const json& a, const json& b);
std::string run_trace_diff(const std::string& path_a, const std::string& path_b,
                           const std::string& output_path);

/// Gödel-index JSON for traces: the decimal string when it fits the digit
/// cap, a digest plus exact digit count when it is computable but over the
/// cap, and an omission record (with the digest of the structured state,
/// from which the index is recomputable) when even computing it would exceed
/// the size budget.
json config_index_json(const Config& cfg, std::size_t digit_cap);
json vector_index_json(const StateVector& v, std::size_t digit_cap);

}  // namespace eqca::run
