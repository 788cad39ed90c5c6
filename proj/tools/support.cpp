#include "support.hpp"

#include <limits>
#include <sstream>

namespace gsp::cli {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

json to_json(const CMatrix& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(to_json(CVector(m.row(r).transpose())));
  return a;
}

IndexList parse_index_list(const std::string& text, std::optional<std::size_t> n) {
  if (text == "all") {
    if (!n) throw Error(ErrorCode::ParseError, "'all' needs a known size");
    return BandSpec::all(*n).support;
  }
  IndexList out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad index '" + tok + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty index list");
  return out;
}

SpectralBasis load_basis(const std::string& choice, const Graph& g) {
  if (choice.empty() || choice == "computed") return basis_from_graph(g);
  if (choice == "dft") {
    const SpectralBasis b = dft_basis(g.n());
    if (reconstruction_error(b, g.adjacency()) > 1e-8)
      throw Error(ErrorCode::ReconstructionMismatch, "the DFT does not diagonalize this graph");
    return b;
  }
  const BasisData d = read_basis(choice);
  return basis_explicit(d.gft, d.lambda, g);
}

Report::Report(std::string name) : name_(std::move(name)) {}

bool Report::check(const std::string& what, double error, double tol) {
  const bool ok = error <= tol;
  checks_.push_back({{"name", what}, {"error", error}, {"tol", tol}, {"pass", ok}});
  if (!ok) failures_.push_back(what);
  return ok;
}

bool Report::check_true(const std::string& what, bool ok) {
  checks_.push_back({{"name", what}, {"pass", ok}});
  if (!ok) failures_.push_back(what);
  return ok;
}

void Report::set(const std::string& key, json value) { data_[key] = std::move(value); }

json Report::to_json() const {
  return {{"demo", name_}, {"pass", passed()}, {"checks", checks_}, {"data", data_}};
}

double max_dev(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  return norm_inf(CVector(a - b));
}

double max_dev(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(CMatrix(a - b));
}

}  // namespace gsp::cli

namespace gsp::cli {

std::string matrix_csv(const CMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_complex_token(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace gsp::cli
