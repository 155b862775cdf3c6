#include <gtest/gtest.h>

#include <cmath>

#include "digits.hpp"
#include "semgraph/cost_model.hpp"
#include "semgraph/error.hpp"

namespace semgraph::cost {
namespace {

using testing::same_15_digits;

// C = D = 8, |V| = 100, |E| = 1000, P = 10, N = 4.
CostInputs desk_inputs(double theta = 1.0) { return {8, 8, 100, 1000, 10, 4, theta}; }

struct Expected {
  Model model;
  double read, write, memory;
};

// Frozen from a 30-digit evaluation of each row.
const Expected kDeskTable[] = {
    {Model::kPsw, 32800.0, 32800.0, 3280.0},
    {Model::kEsg, 16800.0, 8800.0, 80.0},
    {Model::kVsp, 13856.9644706284614272, 800.0, 665.696447062846142724},
    {Model::kDsw, 10529.8221281347034656, 2529.82212813470346560, 505.964425626940693120},
    {Model::kVsw, 8000.0, 0.0, 4800.0},
};

TEST(CostModel, DeskTableToFifteenDigits) {
  for (const auto& e : kDeskTable) {
    const auto r = evaluate(e.model, desk_inputs());
    EXPECT_TRUE(same_15_digits(r.read_bytes, e.read)) << to_string(e.model) << " read " << r.read_bytes;
    EXPECT_TRUE(same_15_digits(r.write_bytes, e.write)) << to_string(e.model);
    EXPECT_TRUE(same_15_digits(r.memory_bytes, e.memory)) << to_string(e.model);
  }
}

TEST(CostModel, LargerInputSet) {
  const CostInputs in{4, 8, 1e6, 2.5e7, 64, 16, 0.3};
  EXPECT_TRUE(same_15_digits(vsp_delta(in.average_degree(), in.partitions), 20.6954338456493480522));
  const auto vsp = evaluate(Model::kVsp, in);
  EXPECT_TRUE(same_15_digits(vsp.read_bytes, 286781735.382597392209));
  EXPECT_TRUE(same_15_digits(vsp.memory_bytes, 1418464.61535308425326));
  const auto dsw = evaluate(Model::kDsw, in);
  EXPECT_TRUE(same_15_digits(dsw.read_bytes, 232000000.0));
  EXPECT_TRUE(same_15_digits(dsw.memory_bytes, 1000000.0));
  const auto vsw = evaluate(Model::kVsw, in);
  EXPECT_TRUE(same_15_digits(vsw.read_bytes, 60000000.0));
  EXPECT_TRUE(same_15_digits(vsw.memory_bytes, 58000000.0));
}

TEST(CostModel, VswFullyCached) {
  const auto r = evaluate(Model::kVsw, desk_inputs(0.0));
  EXPECT_EQ(r.read_bytes, 0.0);
  EXPECT_EQ(r.write_bytes, 0.0);
}

TEST(CostModel, VspDelta) {
  EXPECT_NEAR(vsp_delta(10, 10), 6.3212, 1e-4);
  EXPECT_TRUE(same_15_digits(vsp_delta(10, 10), 6.32120558828557678404));
}

TEST(CostModel, DeltaLimits) {
  // P -> inf: delta -> d_avg.
  EXPECT_NEAR(vsp_delta(10, 1e9), 10.0, 1e-6);
  // d_avg / P -> inf: delta -> P.
  EXPECT_NEAR(vsp_delta(1e6, 8), 8.0, 1e-12);
  for (double p : {1.0, 4.0, 64.0, 1024.0}) {
    const double d = vsp_delta(12, p);
    EXPECT_LE(d, 12.0);
    EXPECT_LE(d, p);
  }
}

TEST(CostModel, CompareAllOrdering) {
  for (double theta : {0.0, 0.3, 0.99}) {
    const auto all = compare_all(desk_inputs(theta));
    ASSERT_EQ(all.size(), 5u);
    EXPECT_EQ(all[0].model, Model::kPsw);
    EXPECT_EQ(all[1].model, Model::kEsg);
    EXPECT_EQ(all[2].model, Model::kVsp);
    EXPECT_EQ(all[3].model, Model::kDsw);
    EXPECT_EQ(all[4].model, Model::kVsw);
    EXPECT_LT(all[4].read_bytes, all[1].read_bytes);
    for (const auto& r : all) EXPECT_LE(all[4].write_bytes, r.write_bytes);
    EXPECT_EQ(all[0].read_bytes, all[0].write_bytes);
  }
}

TEST(CostModel, VswMemoryMonotone) {
  auto in = desk_inputs();
  double prev = 0;
  for (double n : {1.0, 2.0, 4.0, 8.0}) {
    in.workers = n;
    const auto m = evaluate(Model::kVsw, in).memory_bytes;
    EXPECT_GT(m, prev);
    prev = m;
  }
  in.workers = 4;
  prev = INFINITY;
  for (double p : {1.0, 2.0, 10.0, 100.0}) {
    in.partitions = p;
    const auto m = evaluate(Model::kVsw, in).memory_bytes;
    EXPECT_LT(m, prev);
    prev = m;
  }
}

TEST(CostModel, Pure) {
  const auto a = compare_all(desk_inputs(0.4));
  const auto b = compare_all(desk_inputs(0.4));
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].read_bytes, b[i].read_bytes);
    EXPECT_EQ(a[i].memory_bytes, b[i].memory_bytes);
  }
}

TEST(CostModel, InvalidInputs) {
  auto in = desk_inputs();
  in.theta = 1.5;
  EXPECT_THROW(evaluate(Model::kVsw, in), Error);
  in = desk_inputs();
  in.vertices = 0;
  EXPECT_THROW(evaluate(Model::kPsw, in), Error);
  EXPECT_THROW(parse_model("gas"), Error);
  EXPECT_EQ(parse_model("dsw"), Model::kDsw);
}

TEST(PredictVsMeasured, FullyWarmCache) {
  std::vector<IterationReport> reports(4);
  reports[0].bytes_read = 5000;
  const auto d = predict_vs_measured(desk_inputs(0.0), reports, 123);
  EXPECT_EQ(d.measured_bytes, 0.0);
  EXPECT_EQ(d.predicted_edge_bytes, 0.0);
  EXPECT_EQ(d.deviation_bytes, 0.0);
  EXPECT_EQ(d.iterations_used, 3u);
}

TEST(PredictVsMeasured, EmptyReportsRejected) {
  EXPECT_THROW(predict_vs_measured(desk_inputs(), {}, 0), Error);
}

}  // namespace
}  // namespace semgraph::cost
