#include "semgraph/cost_model.hpp"

#include <cmath>
#include <string>

#include "semgraph/error.hpp"

namespace semgraph::cost {

void validate(const CostInputs& in) {
  auto positive = [](double x, const char* name) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidArgument, std::string(name) + " must be positive");
    }
  };
  positive(in.vertex_bytes, "C");
  positive(in.edge_bytes, "D");
  positive(in.vertices, "V");
  positive(in.edges, "E");
  positive(in.partitions, "P");
  positive(in.workers, "N");
  if (!(in.theta >= 0.0 && in.theta <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "theta must lie in [0, 1]");
  }
}

double vsp_delta(double average_degree, double partitions) {
  return (1.0 - std::exp(-average_degree / partitions)) * partitions;
}

CostReport evaluate(Model model, const CostInputs& in) {
  validate(in);
  const double C = in.vertex_bytes;
  const double D = in.edge_bytes;
  const double V = in.vertices;
  const double E = in.edges;
  const double P = in.partitions;
  const double N = in.workers;

  CostReport r;
  r.model = model;
  switch (model) {
    case Model::kPsw:
      r.read_bytes = C * V + 2 * (C + D) * E;
      r.write_bytes = C * V + 2 * (C + D) * E;
      r.memory_bytes = (C * V + 2 * (C + D) * E) / P;
      break;
    case Model::kEsg:
      r.read_bytes = C * V + (C + D) * E;
      r.write_bytes = C * V + C * E;
      r.memory_bytes = C * V / P;
      break;
    case Model::kVsp: {
      const double delta = vsp_delta(in.average_degree(), P);
      r.read_bytes = C * (1 + delta) * V + D * E;
      r.write_bytes = C * V;
      r.memory_bytes = C * (2 + delta) * V / P;
      break;
    }
    case Model::kDsw:
      r.read_bytes = C * std::sqrt(P) * V + D * E;
      r.write_bytes = C * std::sqrt(P) * V;
      r.memory_bytes = 2 * C * V / std::sqrt(P);
      break;
    case Model::kVsw:
      r.read_bytes = in.theta * D * E;
      r.write_bytes = 0;
      r.memory_bytes = 2 * C * V + N * D * E / P;
      break;
  }
  return r;
}

std::vector<CostReport> compare_all(const CostInputs& in) {
  std::vector<CostReport> out;
  for (auto m : kAllModels) out.push_back(evaluate(m, in));
  return out;
}

Deviation predict_vs_measured(const CostInputs& in, std::span<const IterationReport> reports,
                              double overhead_bytes) {
  validate(in);
  if (reports.empty()) throw Error(ErrorCode::kInvalidArgument, "no iteration reports");
  auto steady = reports.size() > 1 ? reports.subspan(1) : reports;
  double total = 0;
  for (const auto& r : steady) total += static_cast<double>(r.bytes_read);

  Deviation d;
  d.iterations_used = steady.size();
  d.measured_bytes = total / static_cast<double>(steady.size());
  d.predicted_edge_bytes = evaluate(Model::kVsw, in).read_bytes;
  d.overhead_bytes = overhead_bytes;
  d.deviation_bytes = d.measured_bytes - d.predicted_edge_bytes;
  d.relative_deviation = d.measured_bytes > 0 ? d.deviation_bytes / d.measured_bytes : 0.0;
  return d;
}

Model parse_model(std::string_view name) {
  if (name == "psw") return Model::kPsw;
  if (name == "esg") return Model::kEsg;
  if (name == "vsp") return Model::kVsp;
  if (name == "dsw") return Model::kDsw;
  if (name == "vsw") return Model::kVsw;
  throw Error(ErrorCode::kInvalidArgument, "unknown model '" + std::string(name) + "'");
}

std::string_view to_string(Model model) {
  switch (model) {
    case Model::kPsw: return "psw";
    case Model::kEsg: return "esg";
    case Model::kVsp: return "vsp";
    case Model::kDsw: return "dsw";
    case Model::kVsw: return "vsw";
  }
  return "unknown";
}

}  // namespace semgraph::cost
