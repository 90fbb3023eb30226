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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cpcorr/sweep.hpp"

namespace cpcorr {

enum class FigureKind { kVertical, kLateral };
enum class PlotTool { kGnuplot, kMatplotlib };

// Lateral if the rows differ in phi, vertical otherwise.
FigureKind infer_figure_kind(const std::vector<SweepRecord>& records);

// Self-contained script with the data inlined: ratio against H/A on log-log
// axes, or against phi on linear axes over [-pi, pi]. Error rows are left out
// and listed in a comment. The output is a pure function of the inputs.
std::string plot_script(const std::vector<SweepRecord>& records, FigureKind kind, PlotTool tool,
                        const std::string& image = "figure.png");

// Reads the CSV first; throws IoError if it is missing or malformed.
std::string emit_plot_script(const std::filesystem::path& csv, FigureKind kind, PlotTool tool,
                             const std::string& image = "figure.png");

}  // namespace cpcorr
