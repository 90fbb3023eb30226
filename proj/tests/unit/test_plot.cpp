// Copyright 2026 The cpcorr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "cpcorr/error.hpp"
#include "cpcorr/plot.hpp"

using namespace cpcorr;

namespace {

std::vector<SweepRecord> vertical_rows() {
  std::vector<SweepRecord> rows;
  for (double x : {0.1, 1.0, 10.0}) {
    SweepRecord r;
    r.profile = "sine";
    r.omega_a = 1.0;
    r.phi = -1.5707963267948966;
    r.h_over_a = x;
    r.ratio = 1.0 + 1.0 / x;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_CASE("vertical sweep gives a log-log script") {
  const auto rows = vertical_rows();
  CHECK(infer_figure_kind(rows) == FigureKind::kVertical);
  const auto g = plot_script(rows, FigureKind::kVertical, PlotTool::kGnuplot);
  CHECK(g.find("set logscale xy") != std::string::npos);
  CHECK(g.find("H/A") != std::string::npos);
  const auto m = plot_script(rows, FigureKind::kVertical, PlotTool::kMatplotlib);
  CHECK(m.find("set_xscale('log')") != std::string::npos);
  CHECK(m.find("set_yscale('log')") != std::string::npos);
  // Deterministic output.
  CHECK(plot_script(rows, FigureKind::kVertical, PlotTool::kGnuplot) == g);
}

TEST_CASE("lateral sweep gives linear axes over one period") {
  auto rows = vertical_rows();
  rows[0].phi = -3.14159;
  rows[2].phi = 3.14159;
  CHECK(infer_figure_kind(rows) == FigureKind::kLateral);
  const auto g = plot_script(rows, FigureKind::kLateral, PlotTool::kGnuplot);
  CHECK(g.find("logscale") == std::string::npos);
  CHECK(g.find("set xrange [-pi:pi]") != std::string::npos);
  const auto m = plot_script(rows, FigureKind::kLateral, PlotTool::kMatplotlib);
  CHECK(m.find("set_xlim(-math.pi, math.pi)") != std::string::npos);
}

TEST_CASE("error rows are skipped with a warning") {
  auto rows = vertical_rows();
  rows[1].error = "singular";
  const auto g = plot_script(rows, FigureKind::kVertical, PlotTool::kGnuplot);
  CHECK(g.find("# warning: skipped error row 2") != std::string::npos);
  CHECK(g.find("\n1 ") == std::string::npos);
}

TEST_CASE("missing CSV is an I/O error") {
  CHECK_THROWS_AS(emit_plot_script("/nonexistent/sweep.csv", FigureKind::kVertical,
                                   PlotTool::kGnuplot),
                  IoError);
}
