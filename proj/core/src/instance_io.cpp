#include "cfopt/instance_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cfopt {

namespace {

using nlohmann::json;

json matrix_to_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r > 0 ? static_cast<Eigen::Index>(rows[0].size()) : 0;
  Eigen::MatrixXd M(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) {
      M(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get<double>();
    }
  }
  return M;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Eigen::VectorXd vector_from_json(const json& a) {
  Eigen::VectorXd v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = a[i].get<double>();
  }
  return v;
}

json read_json_file(const std::string& path, const char* what) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error(std::string(what) + ": cannot open '" + path + "'");
  json j;
  is >> j;
  return j;
}

void write_json_file(const json& j, const std::string& path, const char* what) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error(std::string(what) + ": cannot open '" + path + "'");
  os << j.dump(1) << '\n';
}

}  // namespace

void save_qsdp_instance(const QsdpInstance& inst, const std::string& path) {
  json j{{"format", "cfopt-qsdp-v1"},
         {"n", inst.n},
         {"l", inst.l},
         {"m", inst.m_target},
         {"M", inst.M_target},
         {"seed", inst.seed},
         {"eta1", inst.eta1},
         {"eta2", inst.eta2},
         {"A", matrix_to_json(inst.A_flat)},
         {"B", matrix_to_json(inst.B_flat)},
         {"b", vector_to_json(inst.b)},
         {"D", vector_to_json(inst.D)}};
  write_json_file(j, path, "save_qsdp_instance");
}

QsdpInstance load_qsdp_instance(const std::string& path) {
  const json j = read_json_file(path, "load_qsdp_instance");
  if (j.at("format").get<std::string>() != "cfopt-qsdp-v1") {
    throw std::runtime_error("load_qsdp_instance: unsupported format tag");
  }
  QsdpInstance inst;
  inst.n = j.at("n").get<Index>();
  inst.l = j.at("l").get<Index>();
  inst.m_target = j.at("m").get<double>();
  inst.M_target = j.at("M").get<double>();
  inst.seed = j.at("seed").get<std::uint64_t>();
  inst.eta1 = j.at("eta1").get<double>();
  inst.eta2 = j.at("eta2").get<double>();
  inst.A_flat = matrix_from_json(j.at("A"));
  inst.B_flat = matrix_from_json(j.at("B"));
  inst.b = vector_from_json(j.at("b"));
  inst.D = vector_from_json(j.at("D"));
  return inst;
}

void save_quadratic_instance(const QuadraticInstance& inst, const std::string& path) {
  json j{{"format", "cfopt-quadratic-v1"},
         {"n", inst.n},
         {"m", inst.m},
         {"M", inst.M},
         {"convex", inst.convex},
         {"h", to_string(inst.h_kind)},
         {"seed", inst.seed},
         {"H", matrix_to_json(inst.H)},
         {"c", vector_to_json(inst.c)}};
  if (inst.meta.m_star) j["m_star"] = *inst.meta.m_star;
  if (inst.meta.M_star) j["M_star"] = *inst.meta.M_star;
  if (inst.meta.phi_star) j["phi_star"] = *inst.meta.phi_star;
  write_json_file(j, path, "save_quadratic_instance");
}

QuadraticInstance load_quadratic_instance(const std::string& path) {
  const json j = read_json_file(path, "load_quadratic_instance");
  if (j.at("format").get<std::string>() != "cfopt-quadratic-v1") {
    throw std::runtime_error("load_quadratic_instance: unsupported format tag");
  }
  QuadraticInstance inst;
  inst.n = j.at("n").get<Index>();
  inst.m = j.at("m").get<double>();
  inst.M = j.at("M").get<double>();
  inst.convex = j.at("convex").get<bool>();
  inst.h_kind = j.at("h").get<std::string>() == "box" ? HKind::Box : HKind::Zero;
  inst.seed = j.at("seed").get<std::uint64_t>();
  inst.H = matrix_from_json(j.at("H"));
  inst.c = vector_from_json(j.at("c"));
  if (j.contains("m_star")) inst.meta.m_star = j.at("m_star").get<double>();
  if (j.contains("M_star")) inst.meta.M_star = j.at("M_star").get<double>();
  if (j.contains("phi_star")) inst.meta.phi_star = j.at("phi_star").get<double>();
  return inst;
}

CompositeProblem load_problem(const std::string& path) {
  const json j = read_json_file(path, "load_problem");
  const auto format = j.at("format").get<std::string>();
  if (format == "cfopt-qsdp-v1") return make_qsdp_problem(load_qsdp_instance(path));
  if (format == "cfopt-quadratic-v1") {
    return make_quadratic_problem(load_quadratic_instance(path));
  }
  throw std::runtime_error("load_problem: unsupported format tag '" + format + "'");
}

}  // namespace cfopt
