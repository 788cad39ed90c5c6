#pragma once

// File formats for graphs, signals, explicit bases, filters and sampling
// plans. Every write goes to a temporary file that is renamed into place.
//
//   graph JSON   {"n": N, "edges": [[src, dst, re, im], ...]}
//   graph CSV    N rows of N tokens "re", "re+imj" or "re-imj"
//   signal JSON  {"domain": "vertex"|"spectral", "values": [[re, im], ...]}
//   basis JSON   {"lambda": [[re, im], ...], "gft": [[[re, im], ...], ...]}
//   filter JSON  {"shift_domain": "A"|"M", "coeffs": [[re, im], ...]}
//   plan JSON    {"domain", "delta", "band", "S" | "pmkk", "selected_rows", ...}

#include <filesystem>
#include <string>
#include <string_view>

#include "gsp/filters.hpp"
#include "gsp/sampling.hpp"

namespace gsp {

std::string read_text(const std::filesystem::path& path);
void write_text_atomic(const std::filesystem::path& path, std::string_view text);

/// Parses "re", "re+imj", "re-imj" or "imj". Throws ParseError.
Complex parse_complex_token(std::string_view token);
/// Shortest text that reads back to exactly the same double pair.
std::string format_complex_token(Complex z);

Graph parse_graph_json(std::string_view text);
Graph parse_graph_csv(std::string_view text);
std::string graph_to_json(const Graph& g);
std::string graph_to_csv(const Graph& g);
/// Format chosen by extension: ".csv" is dense CSV, anything else JSON.
Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);

GraphSignal parse_signal_json(std::string_view text);
std::string signal_to_json(const GraphSignal& s);
GraphSignal read_signal(const std::filesystem::path& path);
void write_signal(const GraphSignal& s, const std::filesystem::path& path);

struct BasisData {
  CVector lambda;
  CMatrix gft;
};

BasisData parse_basis_json(std::string_view text);
std::string basis_to_json(const SpectralBasis& b);
BasisData read_basis(const std::filesystem::path& path);
void write_basis(const SpectralBasis& b, const std::filesystem::path& path);

PolynomialFilter parse_filter_json(std::string_view text);
std::string filter_to_json(const PolynomialFilter& f);
PolynomialFilter read_filter(const std::filesystem::path& path);
void write_filter(const PolynomialFilter& f, const std::filesystem::path& path);

/// Spectral plans carry gft and igft so recovery needs no other input.
SamplingPlan parse_plan_json(std::string_view text);
std::string plan_to_json(const SamplingPlan& p);
SamplingPlan read_plan(const std::filesystem::path& path);
void write_plan(const SamplingPlan& p, const std::filesystem::path& path);

/// Plot data: header "index,re,im,abs", one row per entry.
std::string signal_plot_csv(const CVector& v);

}  // namespace gsp
