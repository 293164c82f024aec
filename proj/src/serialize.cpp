#include "triuncert/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "triuncert/error.hpp"

namespace triuncert {

namespace {

template <typename Fn>
auto structural(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what(), 0);
  }
}

std::vector<double> number_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("'") + what + "' must be an array", 0);
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(std::string("'") + what + "' must contain only numbers", 0);
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json to_json(const DensityMatrix& rho) {
  Json re = Json::array(), im = Json::array();
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ri = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return Json{{"dims", rho.dims()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

DensityMatrix density_matrix_from_json(const Json& j) {
  const auto [dims, matrix] = structural([&] {
    if (!j.is_object()) throw ParseError("density matrix must be a JSON object", 0);
    for (const char* key : {"dims", "re", "im"})
      if (!j.contains(key)) throw ParseError(std::string("density matrix is missing '") + key + "'", 0);
    Dims dims;
    for (const auto& d : j.at("dims")) {
      if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
        throw ParseError("'dims' must hold positive integers", 0);
      }
      dims.push_back(d.get<std::size_t>());
    }
    const Json& re = j.at("re");
    const Json& im = j.at("im");
    if (!re.is_array() || !im.is_array() || re.size() != im.size() || re.empty()) {
      throw ParseError("'re' and 'im' must be non-empty arrays of equal length", 0);
    }
    const std::size_t n = re.size();
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const auto rr = number_array(re[r], "re");
      const auto ri = number_array(im[r], "im");
      if (rr.size() != n || ri.size() != n) throw ParseError("matrix rows must be square", 0);
      for (std::size_t c = 0; c < n; ++c) m(r, c) = cplx(rr[c], ri[c]);
    }
    return std::pair{dims, m};
  });
  return DensityMatrix(dims, matrix);
}

Json to_json(const MeasurementBasis& basis) {
  Json vectors = Json::array();
  for (const auto& v : basis.vectors()) {
    Json re = Json::array(), im = Json::array();
    for (auto a : v) {
      re.push_back(a.real());
      im.push_back(a.imag());
    }
    vectors.push_back(Json{{"re", std::move(re)}, {"im", std::move(im)}});
  }
  return Json{{"label", basis.label()}, {"vectors", std::move(vectors)}};
}

MeasurementBasis basis_from_json(const Json& j) {
  auto [label, vectors] = structural([&] {
    if (!j.is_object() || !j.contains("vectors")) throw ParseError("basis must be an object with 'vectors'", 0);
    std::string label = j.value("label", std::string("custom"));
    std::vector<std::vector<cplx>> vectors;
    for (const auto& v : j.at("vectors")) {
      const auto re = number_array(v.at("re"), "re");
      const auto im = number_array(v.at("im"), "im");
      if (re.size() != im.size()) throw ParseError("basis vector 're' and 'im' differ in length", 0);
      std::vector<cplx> vec;
      for (std::size_t i = 0; i < re.size(); ++i) vec.emplace_back(re[i], im[i]);
      vectors.push_back(std::move(vec));
    }
    return std::pair{label, vectors};
  });
  return MeasurementBasis(std::move(label), std::move(vectors));
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

DensityMatrix parse_density_matrix(std::string_view text) { return density_matrix_from_json(parse_json(text)); }

MeasurementBasis parse_basis(std::string_view text) { return basis_from_json(parse_json(text)); }

const std::vector<std::string>& bound_report_columns() {
  static const std::vector<std::string> cols{"seed", "purity", "u_left", "u_right", "delta", "q_mu",
                                             "renes", "s_xb",   "s_zc",   "s_zb",    "s_xc",  "i_ab",
                                             "i_ac", "i_zb",   "i_xc",   "h_x",     "h_z",   "s_a"};
  return cols;
}

std::vector<double> bound_report_row(double seed, const BoundReport& r) {
  return {seed,   r.purity, r.u_left, r.u_right, r.delta, r.q_mu, r.renes, r.s_xb, r.s_zc,
          r.s_zb, r.s_xc,   r.i_ab,   r.i_ac,    r.i_zb,  r.i_xc, r.h_x,   r.h_z,  r.s_a};
}

Json to_json(const BoundReport& r) {
  Json j;
  const auto& cols = bound_report_columns();
  const auto row = bound_report_row(0, r);
  for (std::size_t i = 1; i < cols.size(); ++i) j[cols[i]] = row[i];
  return j;
}

const std::vector<std::string>& key_report_columns() {
  static const std::vector<std::string> cols{"k_berta", "k_improved", "k_measured", "s_xb",     "s_zb",
                                             "s_xx",    "s_zz",       "delta",      "symmetric"};
  return cols;
}

std::vector<double> key_report_row(const KeyRateReport& k) {
  return {k.k_berta, k.k_improved, k.k_measured, k.s_xb, k.s_zb, k.s_xx, k.s_zz, k.delta, k.symmetric ? 1.0 : 0.0};
}

Json to_json(const KeyRateReport& k) {
  Json j;
  const auto& cols = key_report_columns();
  const auto row = key_report_row(k);
  for (std::size_t i = 0; i + 1 < cols.size(); ++i) j[cols[i]] = row[i];
  j["symmetric"] = k.symmetric;
  j["certifiable_key"] = std::max(0.0, k.k_improved);
  return j;
}

}  // namespace triuncert
