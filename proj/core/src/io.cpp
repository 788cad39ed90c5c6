#include "gsp/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>
#include <utility>

#include <unistd.h>

#include "json.hpp"

#include "gsp/error.hpp"

namespace gsp {

using Eigen::Index;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + msg);
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

json parse_doc(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "empty input");
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_of(text, e.byte)) + ": " +
                                           e.what());
  }
}

const json& member(const json& j, const std::string& key) {
  if (!j.is_object()) fail(key, "document is not a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(key, "missing");
  return *it;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

std::size_t index_value(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    fail(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

Complex complex_value(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) fail(field, "expected [re, im]");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

CVector vector_value(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array");
  CVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Index>(i)) = complex_value(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

CMatrix matrix_value(const json& j, const std::string& field, Index empty_cols = 0) {
  if (!j.is_array()) fail(field, "expected an array of rows");
  if (j.empty()) return CMatrix(0, empty_cols);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  CMatrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rf = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols)
      fail(rf, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Index>(r), static_cast<Index>(c)) =
          complex_value(j[r][c], rf + "[" + std::to_string(c) + "]");
  }
  return m;
}

IndexList index_list(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of indices");
  IndexList out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(index_value(j[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CVector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_json(v(i)));
  return a;
}

json to_json(const CMatrix& m) {
  json a = json::array();
  for (Index r = 0; r < m.rows(); ++r) a.push_back(to_json(CVector(m.row(r).transpose())));
  return a;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

double parse_real(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::ParseError, "malformed number '" + std::string(whole) + "'");
  return v;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Domain domain_value(const json& j, const std::string& field) {
  if (j == "vertex") return Domain::Vertex;
  if (j == "spectral") return Domain::Spectral;
  fail(field, "expected \"vertex\" or \"spectral\"");
}

}  // namespace

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_atomic(const fs::path& path, std::string_view text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.flush()) throw Error(ErrorCode::ParseError, "write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

Complex parse_complex_token(std::string_view token) {
  const std::string_view t = trim(token);
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty token");
  if (t.back() != 'j' && t.back() != 'i') return {parse_real(t, t), 0.0};
  const std::string_view body = t.substr(0, t.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_real(body, t)};
  }
  std::string_view im = body.substr(split);
  const double re = parse_real(body.substr(0, split), t);
  if (im == "+") return {re, 1.0};
  if (im == "-") return {re, -1.0};
  return {re, parse_real(im, t)};
}

std::string format_complex_token(Complex z) {
  std::string s = format_double(z.real());
  if (z.imag() != 0.0) {
    const std::string im = format_double(z.imag());
    s += (im.front() == '-' ? "" : "+") + im + "j";
  }
  return s;
}

Graph parse_graph_json(std::string_view text) {
  const json doc = parse_doc(text);
  const std::size_t n = index_value(member(doc, "n"), "n");
  if (n == 0) fail("n", "must be positive");
  const json& edges = member(doc, "edges");
  if (!edges.is_array()) fail("edges", "expected an array");
  CMatrix a = CMatrix::Zero(static_cast<Index>(n), static_cast<Index>(n));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string f = "edges[" + std::to_string(e) + "]";
    const json& edge = edges[e];
    if (!edge.is_array() || edge.size() < 3 || edge.size() > 4)
      fail(f, "expected [src, dst, re] or [src, dst, re, im]");
    const std::size_t src = index_value(edge[0], f + "[0]");
    const std::size_t dst = index_value(edge[1], f + "[1]");
    if (src >= n) fail(f + "[0]", "node " + std::to_string(src) + " out of range for n = " + std::to_string(n));
    if (dst >= n) fail(f + "[1]", "node " + std::to_string(dst) + " out of range for n = " + std::to_string(n));
    if (!seen.emplace(src, dst).second) fail(f, "duplicate edge");
    const double re = number(edge[2], f + "[2]");
    const double im = edge.size() == 4 ? number(edge[3], f + "[3]") : 0.0;
    a(static_cast<Index>(dst), static_cast<Index>(src)) = Complex(re, im);
  }
  return Graph(std::move(a));
}

Graph parse_graph_csv(std::string_view text) {
  std::vector<std::vector<Complex>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty()) continue;
    std::vector<Complex> row;
    std::size_t start = 0, col = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      const std::string_view tok =
          line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      ++col;
      try {
        row.push_back(parse_complex_token(tok));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " +
                                               std::to_string(col) + ": " + e.what());
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                             std::to_string(rows.front().size()) + " columns, got " +
                                             std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::ParseError, "empty input");
  if (rows.size() != rows.front().size())
    throw Error(ErrorCode::ParseError, "adjacency is " + std::to_string(rows.size()) + "x" +
                                           std::to_string(rows.front().size()) + ", not square");
  const auto n = static_cast<Index>(rows.size());
  CMatrix a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      a(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return Graph(std::move(a));
}

std::string graph_to_json(const Graph& g) {
  const CMatrix& a = g.adjacency();
  json edges = json::array();
  for (Index src = 0; src < a.cols(); ++src)
    for (Index dst = 0; dst < a.rows(); ++dst)
      if (a(dst, src) != Complex(0.0))
        edges.push_back({src, dst, a(dst, src).real(), a(dst, src).imag()});
  return dump({{"n", g.n()}, {"edges", edges}});
}

std::string graph_to_csv(const Graph& g) {
  const CMatrix& a = g.adjacency();
  std::string out;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (j) out += ',';
      out += format_complex_token(a(i, j));
    }
    out += '\n';
  }
  return out;
}

Graph read_graph(const fs::path& path) {
  const std::string text = read_text(path);
  try {
    return path.extension() == ".csv" ? parse_graph_csv(text) : parse_graph_json(text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_graph(const Graph& g, const fs::path& path) {
  write_text_atomic(path, path.extension() == ".csv" ? graph_to_csv(g) : graph_to_json(g));
}

GraphSignal parse_signal_json(std::string_view text) {
  const json doc = parse_doc(text);
  GraphSignal s;
  s.domain = domain_value(member(doc, "domain"), "domain");
  s.values = vector_value(member(doc, "values"), "values");
  if (s.values.size() == 0) fail("values", "must not be empty");
  return s;
}

std::string signal_to_json(const GraphSignal& s) {
  return dump({{"domain", to_string(s.domain)}, {"values", to_json(s.values)}});
}

GraphSignal read_signal(const fs::path& path) {
  const std::string text = read_text(path);
  try {
    return parse_signal_json(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_signal(const GraphSignal& s, const fs::path& path) {
  write_text_atomic(path, signal_to_json(s));
}

BasisData parse_basis_json(std::string_view text) {
  const json doc = parse_doc(text);
  BasisData b;
  b.lambda = vector_value(member(doc, "lambda"), "lambda");
  b.gft = matrix_value(member(doc, "gft"), "gft");
  if (b.gft.rows() != b.gft.cols() || b.gft.rows() != b.lambda.size())
    fail("gft", "must be square with as many rows as lambda has entries");
  return b;
}

std::string basis_to_json(const SpectralBasis& b) {
  return dump({{"lambda", to_json(b.lambda)}, {"gft", to_json(b.gft)}});
}

BasisData read_basis(const fs::path& path) {
  const std::string text = read_text(path);
  try {
    return parse_basis_json(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_basis(const SpectralBasis& b, const fs::path& path) {
  write_text_atomic(path, basis_to_json(b));
}

PolynomialFilter parse_filter_json(std::string_view text) {
  const json doc = parse_doc(text);
  PolynomialFilter f;
  const json& d = member(doc, "shift_domain");
  if (d == "A") f.shift_domain = ShiftDomain::VertexA;
  else if (d == "M") f.shift_domain = ShiftDomain::SpectralM;
  else fail("shift_domain", "expected \"A\" or \"M\"");
  f.coeffs = vector_value(member(doc, "coeffs"), "coeffs");
  if (f.coeffs.size() == 0) fail("coeffs", "must not be empty");
  return f;
}

std::string filter_to_json(const PolynomialFilter& f) {
  return dump({{"shift_domain", to_string(f.shift_domain)}, {"coeffs", to_json(f.coeffs)}});
}

PolynomialFilter read_filter(const fs::path& path) {
  const std::string text = read_text(path);
  try {
    return parse_filter_json(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_filter(const PolynomialFilter& f, const fs::path& path) {
  write_text_atomic(path, filter_to_json(f));
}

SamplingPlan parse_plan_json(std::string_view text) {
  const json doc = parse_doc(text);
  SamplingPlan p;
  p.domain = domain_value(member(doc, "domain"), "domain");
  const json& delta = member(doc, "delta");
  if (!delta.is_array() || delta.empty()) fail("delta", "expected a non-empty 0/1 array");
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const std::size_t v = index_value(delta[i], "delta[" + std::to_string(i) + "]");
    if (v > 1) fail("delta[" + std::to_string(i) + "]", "expected 0 or 1");
    p.delta.push_back(static_cast<int>(v));
  }
  const std::size_t n = p.delta.size();
  p.band.support = index_list(member(doc, "band"), "band");
  try {
    validate_band(p.band, n);
  } catch (const Error& e) {
    fail("band", e.what());
  }
  const std::size_t k = p.band.k();
  if (support_of(p.delta).size() != k) fail("delta", "number of samples differs from band size");
  if (doc.contains("condition")) p.condition = number(doc["condition"], "condition");

  if (p.domain == Domain::Vertex) {
    p.free_idx = index_list(member(doc, "free_idx"), "free_idx");
    p.pivot_idx = index_list(member(doc, "pivot_idx"), "pivot_idx");
    p.S = matrix_value(member(doc, "S"), "S", static_cast<Index>(k));
    if (p.free_idx != support_of(p.delta)) fail("free_idx", "must list the ones of delta");
    if (p.pivot_idx.size() != n - k) fail("pivot_idx", "expected " + std::to_string(n - k) + " entries");
    if (static_cast<std::size_t>(p.S.rows()) != n - k || static_cast<std::size_t>(p.S.cols()) != k)
      fail("S", "expected a " + std::to_string(n - k) + "x" + std::to_string(k) + " matrix");
  } else {
    p.selected_rows = index_list(member(doc, "selected_rows"), "selected_rows");
    p.pmkk = matrix_value(member(doc, "pmkk"), "pmkk");
    p.gft = matrix_value(member(doc, "gft"), "gft");
    p.igft = matrix_value(member(doc, "igft"), "igft");
    if (p.selected_rows.size() != k) fail("selected_rows", "expected " + std::to_string(k) + " rows");
    if (static_cast<std::size_t>(p.pmkk.rows()) != k || static_cast<std::size_t>(p.pmkk.cols()) != k)
      fail("pmkk", "expected a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
    for (const char* f : {"gft", "igft"}) {
      const CMatrix& m = std::string(f) == "gft" ? p.gft : p.igft;
      if (static_cast<std::size_t>(m.rows()) != n || static_cast<std::size_t>(m.cols()) != n)
        fail(f, "expected an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
  }
  return p;
}

std::string plan_to_json(const SamplingPlan& p) {
  json j = {{"domain", to_string(p.domain)},
            {"delta", p.delta},
            {"band", p.band.support},
            {"condition", p.condition}};
  if (p.domain == Domain::Vertex) {
    j["free_idx"] = p.free_idx;
    j["pivot_idx"] = p.pivot_idx;
    j["S"] = to_json(p.S);
  } else {
    j["selected_rows"] = p.selected_rows;
    j["pmkk"] = to_json(p.pmkk);
    j["gft"] = to_json(p.gft);
    j["igft"] = to_json(p.igft);
  }
  return dump(j);
}

SamplingPlan read_plan(const fs::path& path) {
  const std::string text = read_text(path);
  try {
    return parse_plan_json(text);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_plan(const SamplingPlan& p, const fs::path& path) {
  write_text_atomic(path, plan_to_json(p));
}

std::string signal_plot_csv(const CVector& v) {
  std::string out = "index,re,im,abs\n";
  for (Index i = 0; i < v.size(); ++i)
    out += std::to_string(i) + "," + format_double(v(i).real()) + "," +
           format_double(v(i).imag()) + "," + format_double(std::abs(v(i))) + "\n";
  return out;
}

}  // namespace gsp
