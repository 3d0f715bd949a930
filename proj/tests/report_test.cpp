// Copyright 2026 The lapbc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lapbc/report.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "lapbc/transpiler.hpp"

namespace lapbc {
namespace {

RunConfig small_rcs() {
  RunConfig c;
  c.bench = {BenchmarkKind::Rcs, 2, 2, 10, 1};
  c.trials = 4;
  return c;
}

TEST(Benchmark, Ids) {
  EXPECT_EQ((BenchmarkSpec{BenchmarkKind::Rcs, 6, 6, 500, 1}.id()), "rcs-6x6-L500");
  EXPECT_EQ((BenchmarkSpec{BenchmarkKind::Ising, 4, 3, 0, 2}.id()), "ising-4x3-S2");
  EXPECT_EQ((BenchmarkSpec{BenchmarkKind::Ising, 4, 3, 0, 2}.qubits()), 12);
}

TEST(Config, DefaultsAndSeeds) {
  RunConfig c;
  EXPECT_EQ(c.schedule.d, 15);
  EXPECT_EQ(c.schedule.m, 27);
  EXPECT_EQ(c.schedule.distill_patches, 4);
  EXPECT_DOUBLE_EQ(c.p_success, 0.25);
  EXPECT_DOUBLE_EQ(c.rho, 1e-7);
  EXPECT_EQ(c.grid(), std::make_pair(6, 6));
  EXPECT_NE(c.synthesis().seed, c.runtime().seed);
  EXPECT_NO_THROW(c.validate());
}

TEST(Config, ApplySettings) {
  RunConfig c;
  apply_config_text(c,
                    "# comment\n"
                    "d = 11\n"
                    "m=20\n"
                    "D = 2   # trailing\n"
                    "hold-distill = true\n"
                    "p-success = 0.5\n"
                    "benchmark = ising\n"
                    "size = 4x3\n"
                    "steps = 2\n"
                    "layout = sparse\n"
                    "data-grid = 5x5\n"
                    "seed = 9\n"
                    "trials = 3\n");
  EXPECT_EQ(c.schedule.d, 11);
  EXPECT_EQ(c.schedule.m, 20);
  EXPECT_EQ(c.schedule.distill_patches, 2);
  EXPECT_TRUE(c.schedule.hold_distill);
  EXPECT_DOUBLE_EQ(c.p_success, 0.5);
  EXPECT_EQ(c.bench.kind, BenchmarkKind::Ising);
  EXPECT_EQ(c.bench.width, 4);
  EXPECT_EQ(c.bench.height, 3);
  EXPECT_EQ(c.bench.steps, 2);
  EXPECT_EQ(c.layout, LayoutKind::Sparse);
  EXPECT_EQ(c.grid(), std::make_pair(5, 5));
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.trials, 3);
}

TEST(Config, Errors) {
  RunConfig c;
  try {
    apply_config_text(c, "d = 11\n\nbogus = 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(apply_config_text(c, "d 11\n"), ParseError);
  EXPECT_THROW(apply_config_text(c, "d = eleven\n"), ParseError);
  EXPECT_THROW(apply_setting(c, "layout", "dense"), std::invalid_argument);
  EXPECT_THROW(apply_setting(c, "benchmark", "qft"), std::invalid_argument);
  EXPECT_THROW(apply_setting(c, "hold-distill", "maybe"), std::invalid_argument);
  RunConfig bad;
  bad.data_grid = std::make_pair(2, 2);
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = RunConfig{};
  bad.schedule.d = 14;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(ParseDims, Examples) {
  EXPECT_EQ(parse_dims("6x8"), std::make_pair(6, 8));
  EXPECT_THROW(parse_dims("6"), std::invalid_argument);
  EXPECT_THROW(parse_dims("6x"), std::invalid_argument);
  EXPECT_THROW(parse_dims("ax3"), std::invalid_argument);
  EXPECT_THROW(parse_dims("3x3x"), std::invalid_argument);
  EXPECT_EQ(parse_layout_kind("standard"), LayoutKind::Standard);
}

TEST(Pipeline, StageLabels) {
  RunConfig c = small_rcs();
  c.schedule.d = 4;
  try {
    build_pipeline(c);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "config");
    EXPECT_EQ(std::string(e.what()).rfind("config: ", 0), 0u);
  }
  RunConfig m = small_rcs();
  m.mapping_path = "/nonexistent/mapping.txt";
  try {
    build_pipeline(m);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "layout");
  }
}

TEST(Pipeline, SmallRcsRow) {
  RunConfig c = small_rcs();
  ComparisonRow r = run_compare(c);
  EXPECT_EQ(r.benchmark, "rcs-2x2-L10");
  EXPECT_EQ(r.qubits, 4);
  EXPECT_GT(r.spc_cycles, 0);
  EXPECT_GT(r.lapbc_mean_cycles, 0);
  EXPECT_NEAR(r.parallelism, r.spc_cycles / r.lapbc_mean_cycles, 1e-12);
  EXPECT_NEAR(r.reduction_percent, 100.0 * (1.0 - r.lapbc_mean_cycles / r.spc_cycles), 1e-9);
  EXPECT_EQ(r.patches_spc, spc_patch_count(4));
  EXPECT_EQ(r.patches_lapbc, 9);
}

TEST(Pipeline, CertainSuccessEqualsMakespan) {
  RunConfig c = small_rcs();
  c.p_success = 1.0;
  Pipeline p = build_pipeline(c);
  ComparisonRow r = compare_row(c, p, 1.0);
  EXPECT_DOUBLE_EQ(r.lapbc_mean_cycles, static_cast<double>(p.schedule.makespan()));
  EXPECT_DOUBLE_EQ(r.lapbc_stddev, 0.0);
  EXPECT_EQ(p.spc_cycles, spc_cost(spc_transpile(p.synthesized), c.schedule.d));
}

TEST(Pipeline, Deterministic) {
  RunConfig c = small_rcs();
  std::string a = report_csv({run_compare(c)});
  std::string b = report_csv({run_compare(c)});
  EXPECT_EQ(a, b);
  c.seed = 2;
  EXPECT_NE(report_csv({run_compare(c)}), a);
}

TEST(Pipeline, SweepReusesSchedule) {
  RunConfig c = small_rcs();
  std::vector<double> ps{1.0, 0.5, 0.1};
  auto rows = sweep_p_success(c, ps);
  ASSERT_EQ(rows.size(), 3u);
  Pipeline p = build_pipeline(c);
  EXPECT_DOUBLE_EQ(rows[0].lapbc_mean_cycles, static_cast<double>(p.schedule.makespan()));
  for (const auto& r : rows) EXPECT_EQ(r.spc_cycles, rows[0].spc_cycles);
  EXPECT_DOUBLE_EQ(rows[1].p_success, 0.5);
  EXPECT_LE(rows[1].lapbc_mean_cycles, rows[2].lapbc_mean_cycles);
}

TEST(ReportCsv, FormatAndOrder) {
  ComparisonRow big{"rcs-3x3-L1", 9, 0.25, 1000, 500.456, 3.14159, 2.0, 49.9544, 25, 36};
  ComparisonRow small{"rcs-2x2-L1", 4, 0.25, 800, 400, 0, 2, 50, 9, 9};
  std::string one = report_csv({big});
  EXPECT_EQ(one,
            "benchmark,N,p_success,spc_cycles,lapbc_mean_cycles,lapbc_stddev,parallelism,reduction_percent,"
            "patches_spc,patches_lapbc\n"
            "rcs-3x3-L1,9,0.25,1000,500.46,3.14,2.0000,49.95,25,36\n");
  std::string two = report_csv({big, small});
  auto first = two.find("rcs-2x2"), second = two.find("rcs-3x3");
  EXPECT_LT(first, second);
  EXPECT_THROW(emit_report({}, "/tmp/never_written.csv"), std::invalid_argument);
}

TEST(ReportCsv, EmitWritesFile) {
  auto path = (std::filesystem::temp_directory_path() / "lapbc_report_test.csv").string();
  ComparisonRow r{"x", 1, 0.5, 1, 1, 0, 1, 0, 9, 9};
  emit_report({r}, path);
  EXPECT_EQ(read_file(path), report_csv({r}));
  std::remove(path.c_str());
  EXPECT_THROW(read_file(path), std::runtime_error);
}

TEST(Pipeline, IsingSmall) {
  RunConfig c;
  c.bench = {BenchmarkKind::Ising, 2, 2, 0, 1};
  c.trials = 2;
  c.layout = LayoutKind::Sparse;
  ComparisonRow r = run_compare(c);
  EXPECT_EQ(r.benchmark, "ising-2x2-S1");
  EXPECT_EQ(r.patches_lapbc, 16);
  EXPECT_GT(r.lapbc_mean_cycles, 0);
}

}  // namespace
}  // namespace lapbc
