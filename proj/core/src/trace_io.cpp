#include "cfopt/trace_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cfopt {

namespace {

using nlohmann::json;

json vec_to_json(const Point& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Point vec_from_json(const json& a) {
  Point v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Index>(i)) = a[i].get<double>();
  return v;
}

json spec_to_json(const ProblemSpec& spec) {
  json j{{"family", spec.family}, {"n", spec.n},       {"m", spec.m},
         {"M", spec.M},           {"seed", spec.seed}};
  if (spec.family == "qsdp") j["l"] = spec.l;
  if (spec.family == "quadratic") {
    j["convex"] = spec.convex;
    j["h"] = to_string(spec.h_kind);
  }
  return j;
}

ProblemSpec spec_from_json(const json& j) {
  ProblemSpec spec;
  spec.family = j.at("family").get<std::string>();
  spec.n = j.at("n").get<Index>();
  spec.m = j.at("m").get<double>();
  spec.M = j.at("M").get<double>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("l")) spec.l = j.at("l").get<Index>();
  if (j.contains("convex")) spec.convex = j.at("convex").get<bool>();
  if (j.contains("h")) {
    spec.h_kind = j.at("h").get<std::string>() == "box" ? HKind::Box : HKind::Zero;
  }
  return spec;
}

}  // namespace

void write_trace(std::ostream& os, const OuterTrace& trace,
                 const std::optional<ProblemSpec>& problem) {
  json header{{"format", "cfopt-trace-v1"}, {"solver", trace.solver},
              {"rho", trace.rho},           {"theta", trace.theta},
              {"dim", trace.z0.size()},     {"z0", vec_to_json(trace.z0)},
              {"phi0", trace.phi0}};
  if (problem) header["problem"] = spec_to_json(*problem);
  os << header.dump() << '\n';
  for (const OuterTraceEntry& e : trace.entries) {
    json rec{{"k", e.k},
             {"m", e.m_next},
             {"M", e.M_next},
             {"inner", e.inner_iters},
             {"vnorm", e.v_next.norm()},
             {"phi", e.phi_next},
             {"z", vec_to_json(e.z_next)},
             {"u", vec_to_json(e.u_next)},
             {"v", vec_to_json(e.v_next)}};
    os << rec.dump() << '\n';
  }
}

void save_trace(const std::string& path, const OuterTrace& trace,
                const std::optional<ProblemSpec>& problem) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_trace: cannot open '" + path + "'");
  write_trace(os, trace, problem);
}

TraceFile read_trace(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_trace: empty log");
  const json header = json::parse(line);
  if (header.at("format").get<std::string>() != "cfopt-trace-v1") {
    throw std::runtime_error("read_trace: unsupported format tag");
  }

  TraceFile file;
  file.trace.solver = header.at("solver").get<std::string>();
  file.trace.rho = header.at("rho").get<double>();
  file.trace.theta = header.at("theta").get<double>();
  file.trace.z0 = vec_from_json(header.at("z0"));
  file.trace.phi0 = header.at("phi0").get<double>();
  if (header.contains("problem")) file.problem = spec_from_json(header.at("problem"));

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const json rec = json::parse(line);
    OuterTraceEntry e;
    e.k = rec.at("k").get<long long>();
    e.m_next = rec.at("m").get<double>();
    e.M_next = rec.at("M").get<double>();
    e.inner_iters = rec.at("inner").get<long long>();
    e.phi_next = rec.at("phi").get<double>();
    e.z_next = vec_from_json(rec.at("z"));
    e.u_next = vec_from_json(rec.at("u"));
    e.v_next = vec_from_json(rec.at("v"));
    file.trace.entries.push_back(std::move(e));
  }
  return file;
}

TraceFile load_trace(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_trace: cannot open '" + path + "'");
  return read_trace(is);
}

}  // namespace cfopt
