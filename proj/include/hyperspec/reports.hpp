#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hyperspec/bounds.hpp"
#include "hyperspec/coloring.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

// Reported reals are rounded to 12 decimals so that output is stable across runs and
// free of eigensolver noise in the last bits.
double rounded(double x);

// {"which", "dimension", "eigenvalues", "clusters": [[value, multiplicity], ...], "trace_check",
//  "consistency": {...}} -- trace_check only for the vertex spectrum.
nlohmann::json spectrum_json(const OrientedHypergraph& h, const SpectralResult& spec, bool edge);

nlohmann::json consistency_json(const ConsistencyReport& r);

// {"mode", "k", "classes": [[names...], ...]}; edge classes list edge indices.
nlohmann::json coloring_json(const OrientedHypergraph& h, const Coloring& coloring, const ColoringMode& mode);

// {"mode", "status": "solved"|"inconclusive", "number", "lower_bound", "upper_bound", "nodes", "witness"}.
nlohmann::json chromatic_json(const OrientedHypergraph& h, const ChromaticResult& r, const ColoringMode& mode);

nlohmann::json bound_json(const OrientedHypergraph& h, const BoundReport& r);
nlohmann::json sharpness_json(const SharpnessReport& r);

// Fixed CSV schema for batch summaries.
inline constexpr const char* kCsvHeader = "id,mode,lambda1,lambdaN_or_mu1,bound,chi,gap,sharp,status";
std::string csv_row(const std::string& id, const BoundReport& r);

std::string status_name(SolveStatus s);

} // namespace hyperspec
