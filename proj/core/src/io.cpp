#include <llg/io.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace llg {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON input");
  return j;
}

int get_dim(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("missing chart dimension 'n'");
  int n = j["n"].get<int>();
  if (n < 2 || n > 8) throw ParseError("chart dimension out of supported range");
  return n;
}

PolyMat parse_poly_matrix(int n, const json& rows, const char* what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError(std::string(what) + " must be an n-by-n array");
  PolyMat m(n, PolyVec(n, Poly(n)));
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
      throw ParseError(std::string(what) + " must be an n-by-n array");
    for (int j = 0; j < n; ++j) {
      if (!rows[i][j].is_string()) throw ParseError("polynomial entries must be strings");
      m[i][j] = Poly::parse(n, rows[i][j].get<std::string>());
    }
  }
  return m;
}

json poly_matrix_to_json(const PolyMat& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& p : row) r.push_back(p.str());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

Frame parse_frame_json(const std::string& text) {
  json j = parse_or_throw(text);
  int n = get_dim(j);
  if (!j.contains("frame")) throw ParseError("frame file needs a 'frame' matrix");
  PolyMat e = parse_poly_matrix(n, j["frame"], "'frame'");
  if (j.contains("inverse")) {
    PolyMat w = parse_poly_matrix(n, j["inverse"], "'inverse'");
    return Frame(std::move(e), std::move(w));
  }
  return Frame::from_columns(std::move(e));
}

std::string frame_to_json(const Frame& f) {
  json j;
  j["n"] = f.dim();
  j["frame"] = poly_matrix_to_json(f.e());
  j["inverse"] = poly_matrix_to_json(f.w());
  return j.dump(2);
}

Connection parse_connection_json(const std::string& text) {
  json j = parse_or_throw(text);
  int n = get_dim(j);
  if (!j.contains("gamma") || !j["gamma"].is_array())
    throw ParseError("connection file needs a 'gamma' entry list");
  Tensor g(n, 1, 2);
  for (const auto& entry : j["gamma"]) {
    for (const char* key : {"i", "k", "j", "val"})
      if (!entry.contains(key)) throw ParseError("gamma entry missing field");
    int i = entry["i"].get<int>(), k = entry["k"].get<int>(), jj = entry["j"].get<int>();
    if (i < 1 || i > n || k < 1 || k > n || jj < 1 || jj > n)
      throw ParseError("gamma entry index out of range");
    g.add({i - 1, k - 1, jj - 1}, Poly::parse(n, entry["val"].get<std::string>()));
  }
  return Connection::raw(std::move(g));
}

std::string connection_to_json(const Connection& c) {
  json j;
  j["n"] = c.dim();
  json list = json::array();
  for (const auto& [idx, p] : c.gamma().components()) {
    json e;
    e["i"] = idx[0] + 1;
    e["k"] = idx[1] + 1;
    e["j"] = idx[2] + 1;
    e["val"] = p.str();
    list.push_back(e);
  }
  j["gamma"] = list;
  return j.dump(2);
}

StructureConstants parse_constants_json(const std::string& text) {
  json j = parse_or_throw(text);
  int n = get_dim(j);
  if (!j.contains("c") || !j["c"].is_array())
    throw ParseError("constants file needs a 'c' entry list");
  std::vector<std::tuple<int, int, int, Rational>> entries;
  for (const auto& entry : j["c"]) {
    for (const char* key : {"i", "j", "k", "val"})
      if (!entry.contains(key)) throw ParseError("constants entry missing field");
    int i = entry["i"].get<int>(), jj = entry["j"].get<int>(), k = entry["k"].get<int>();
    if (i < 1 || i > n || jj < 1 || jj > n || k < 1 || k > n)
      throw ParseError("constants entry index out of range");
    if (jj >= k) throw ParseError("constants entries must have j < k");
    entries.emplace_back(i - 1, jj - 1, k - 1,
                         parse_rational(entry["val"].get<std::string>()));
  }
  return StructureConstants::from_sparse(n, entries);
}

std::string constants_to_json(const StructureConstants& g) {
  json j;
  j["n"] = g.dim();
  json list = json::array();
  for (const auto& [i, jj, k, v] : g.sparse()) {
    json e;
    e["i"] = i + 1;
    e["j"] = jj + 1;
    e["k"] = k + 1;
    e["val"] = to_string(v);
    list.push_back(e);
  }
  j["c"] = list;
  return j.dump(2);
}

GaugeJet parse_jet_json(const std::string& text) {
  json j = parse_or_throw(text);
  int n = get_dim(j);
  if (!j.contains("order") || !j["order"].is_number_integer())
    throw ParseError("gauge jet file needs an 'order'");
  int order = j["order"].get<int>();
  if (order < 1 || order > 16) throw ParseError("jet order out of supported range");
  std::vector<PolyMat> coeffs(order + 1, poly_mat_zero(n));
  coeffs[0] = poly_mat_identity(n);
  if (j.contains("coeffs")) {
    const auto& cs = j["coeffs"];
    if (!cs.is_array() || static_cast<int>(cs.size()) > order)
      throw ParseError("'coeffs' must list at most 'order' matrices");
    for (size_t m = 0; m < cs.size(); ++m)
      coeffs[m + 1] = parse_poly_matrix(n, cs[m], "'coeffs' entry");
  }
  return GaugeJet(MatJet(std::move(coeffs)));
}

std::string jet_to_json(const GaugeJet& jt) {
  json j;
  j["n"] = jt.dim();
  j["order"] = jt.order();
  json cs = json::array();
  for (int m = 1; m <= jt.order(); ++m) cs.push_back(poly_matrix_to_json(jt.coeff(m)));
  j["coeffs"] = cs;
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace llg
