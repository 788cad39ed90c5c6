#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gsp/gsp.hpp"

namespace gsp::cli {

using json = nlohmann::json;

struct GlobalOptions {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
};

json to_json(Complex z);
json to_json(const CVector& v);
json to_json(const CMatrix& m);

/// "0,1,3" -> {0,1,3}; "all" -> 0..n-1 (needs n).
IndexList parse_index_list(const std::string& text, std::optional<std::size_t> n = std::nullopt);

/// "computed" (default ordering), "dft", or a basis JSON path.
SpectralBasis load_basis(const std::string& choice, const Graph& g);

/// Collects named assertions; the first failure is what the CLI reports.
class Report {
 public:
  explicit Report(std::string name);

  bool check(const std::string& what, double error, double tol);
  bool check_true(const std::string& what, bool ok);
  void set(const std::string& key, json value);

  bool passed() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  json to_json() const;

 private:
  std::string name_;
  json checks_ = json::array();
  json data_ = json::object();
  std::vector<std::string> failures_;
};

double max_dev(const CVector& a, const CVector& b);
double max_dev(const CMatrix& a, const CMatrix& b);

}  // namespace gsp::cli

namespace gsp::cli {

/// Rows of comma-separated complex tokens, readable by parse_graph_csv when square.
std::string matrix_csv(const CMatrix& m);

}  // namespace gsp::cli
