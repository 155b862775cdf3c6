#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "semgraph/engine.hpp"

namespace semgraph::cost {

// Per-iteration I/O and memory of five graph computation models.
enum class Model { kPsw, kEsg, kVsp, kDsw, kVsw };

inline constexpr Model kAllModels[] = {Model::kPsw, Model::kEsg, Model::kVsp, Model::kDsw, Model::kVsw};

struct CostInputs {
  double vertex_bytes = 8;  // C
  double edge_bytes = 8;    // D
  double vertices = 0;      // |V|
  double edges = 0;         // |E|
  double partitions = 1;    // P
  double workers = 1;       // N
  double theta = 1;         // cache miss ratio

  double average_degree() const { return edges / vertices; }
};

struct CostReport {
  Model model = Model::kVsw;
  double read_bytes = 0;
  double write_bytes = 0;
  double memory_bytes = 0;
};

// Throws Error(kInvalidArgument) unless every count is positive and
// theta lies in [0, 1].
void validate(const CostInputs& in);

// delta ~= (1 - e^{-d_avg / P}) * P
double vsp_delta(double average_degree, double partitions);

CostReport evaluate(Model model, const CostInputs& in);

// All five models in the order PSW, ESG, VSP, DSW, VSW.
std::vector<CostReport> compare_all(const CostInputs& in);

struct Deviation {
  double measured_bytes = 0;        // mean bytes_read over steady-state iterations
  double predicted_edge_bytes = 0;  // theta * D * |E|
  double overhead_bytes = 0;        // header + row arrays of all shards
  double deviation_bytes = 0;       // measured - predicted_edge
  double relative_deviation = 0;    // deviation / measured (0 when measured is 0)
  std::size_t iterations_used = 0;
};

// Steady state means iterations >= 1 (iteration 0 alone when it is the
// only report). Reports should come from a scheduling-off run.
Deviation predict_vs_measured(const CostInputs& in, std::span<const IterationReport> reports,
                              double overhead_bytes);

Model parse_model(std::string_view name);
std::string_view to_string(Model model);

}  // namespace semgraph::cost
