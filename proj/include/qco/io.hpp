#pragma once

#include <string>

#include "qco/ensembles.hpp"

namespace qco {

// full 17-significant-digit decimal form, for byte-reproducible outputs
std::string fmt17(double v);

// Gate-set file format: {"label": str, "gates": [[[ [re,im], [re,im] ],
// [ [re,im], [re,im] ]], ...], "provenance": {...}}. Matrices may be
// unnormalized; normalization is applied on load.
std::string gateset_to_json(const GateSet& set);
GateSet gateset_from_json(const std::string& text);
void save_gateset(const GateSet& set, const std::string& path);
GateSet load_gateset(const std::string& path);

// Generator files reuse the gate-set format; only "gates" is required.
std::vector<ProjectiveGate> load_generators(const std::string& path);

std::string profile_to_csv(const DeltaProfile& profile);
std::string profile_to_json(const DeltaProfile& profile);

std::string report_csv_header();
std::string report_to_csv_row(const OverheadReport& rep);
std::string report_to_json(const OverheadReport& rep);

std::string histogram_to_csv(const Histogram& h);
std::string spectrum_to_csv(const SpectrumSample& s);
std::string km_to_csv(const KMDensity& km, int points = 512);

std::string sweep_csv_header();
std::string sweep_to_csv(const std::vector<RunResult>& results);
std::string sweep_manifest_json(const EnsembleSpec& spec, Variant variant,
                                int shard_index, int shard_total,
                                const std::vector<RunResult>& results);

std::string search_to_json(const SearchResult& res, bool include_trace = true);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace qco
