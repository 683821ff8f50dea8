#pragma once

// JSON exchange format. Matrices travel as
//   {"rows": n, "cols": m, "data": [[re, im], ...]}   (row-major)
// with an optional "kind" field in {"linear", "antilinear", "conjugation"}.
// Reports serialize with stable key order so identical runs produce
// byte-identical output.

#include <fstream>
#include <string>

#include <json.hpp>

#include "cnops/antilinear.hpp"
#include "cnops/cnormal.hpp"
#include "cnops/inequalities.hpp"
#include "cnops/types.hpp"

namespace cnops {

using Json = nlohmann::ordered_json;

inline Json matrix_to_json(const ComplexMatrix& m, const char* kind = nullptr) {
  Json j;
  if (kind) j["kind"] = kind;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      data.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
  j["data"] = std::move(data);
  return j;
}

inline Json antilinear_to_json(const AntiLinearMap& x) {
  return matrix_to_json(x.mat, "antilinear");
}

inline Json conjugation_to_json(const Conjugation& c) {
  return matrix_to_json(c.mat, "conjugation");
}

inline ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data"))
    throw DomainError("matrix_from_json: expected {rows, cols, data}");
  const Index rows = j.at("rows").get<Index>();
  const Index cols = j.at("cols").get<Index>();
  if (rows < 1 || cols < 1)
    throw DomainError("matrix_from_json: dimensions must be positive");
  const Json& data = j.at("data");
  if (!data.is_array() || static_cast<Index>(data.size()) != rows * cols)
    throw DomainError("matrix_from_json: data length must be rows*cols");
  ComplexMatrix m(rows, cols);
  Index at = 0;
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c, ++at) {
      const Json& e = data.at(at);
      if (!e.is_array() || e.size() != 2)
        throw DomainError("matrix_from_json: entries must be [re, im] pairs");
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  if (!is_finite(m))
    throw DomainError("matrix_from_json: non-finite entry");
  return m;
}

inline std::string json_kind(const Json& j) {
  return j.contains("kind") ? j.at("kind").get<std::string>()
                            : std::string("linear");
}

inline AntiLinearMap antilinear_from_json(const Json& j) {
  const ComplexMatrix m = matrix_from_json(j);
  if (m.rows() != m.cols())
    throw DomainError("antilinear_from_json: matrix must be square");
  return {m};
}

inline Conjugation conjugation_from_json(const Json& j,
                                         const Tolerance& tol = {}) {
  return make_conjugation(matrix_from_json(j), tol);
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

inline void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

inline Json battery_report_to_json(const CNormalReport& rep) {
  Json j;
  Json conditions = Json::array();
  Json residuals = Json::array();
  Json names = Json::array();
  for (int i = 0; i < 10; ++i) {
    conditions.push_back(rep.conditions[i]);
    residuals.push_back(rep.residuals[i]);
    names.push_back(kBatteryConditionNames[i]);
  }
  j["conditions"] = std::move(conditions);
  j["residuals"] = std::move(residuals);
  j["condition_names"] = std::move(names);
  j["verdict"] = rep.verdict;
  j["coherent"] = rep.coherent;
  j["probe_residual_forward"] = rep.probe_residual_forward;
  j["probe_residual_adjoint"] = rep.probe_residual_adjoint;
  return j;
}

inline Json inequality_report_to_json(const InequalityReport& rep) {
  Json j;
  j["name"] = rep.name;
  Json lhs = Json::array(), rhs = Json::array(), slack = Json::array();
  for (Index i = 0; i < rep.lhs.size(); ++i) {
    lhs.push_back(rep.lhs(i));
    rhs.push_back(rep.rhs(i));
    slack.push_back(rep.slack(i));
  }
  j["lhs"] = std::move(lhs);
  j["rhs"] = std::move(rhs);
  j["slack"] = std::move(slack);
  j["passed"] = rep.passed;
  return j;
}

}  // namespace cnops
