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

#include "cpcorr/plot.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

#include "cpcorr/error.hpp"

namespace cpcorr {

FigureKind infer_figure_kind(const std::vector<SweepRecord>& records) {
  for (const auto& r : records) {
    if (r.phi != records.front().phi) return FigureKind::kLateral;
  }
  return FigureKind::kVertical;
}

namespace {

struct Series {
  std::vector<std::pair<double, double>> xy;
  std::vector<std::string> skipped;
};

Series collect(const std::vector<SweepRecord>& records, FigureKind kind) {
  Series s;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const double x = kind == FigureKind::kVertical ? r.h_over_a : r.phi;
    if (!r.error.empty()) {
      std::ostringstream msg;
      msg << "row " << i + 1 << " (x = " << x << "): " << r.error;
      s.skipped.push_back(msg.str());
      continue;
    }
    s.xy.emplace_back(x, r.ratio);
  }
  return s;
}

std::string title(const std::vector<SweepRecord>& records) {
  if (records.empty()) return "no data";
  std::ostringstream t;
  t << records.front().profile << ", omega A = " << records.front().omega_a;
  return t.str();
}

std::string gnuplot(const Series& s, FigureKind kind, const std::string& head,
                    const std::string& image) {
  std::ostringstream o;
  o << std::setprecision(std::numeric_limits<double>::max_digits10);
  o << "# gnuplot script\n";
  for (const auto& w : s.skipped) o << "# warning: skipped error " << w << '\n';
  o << "set terminal pngcairo size 800,600\n";
  o << "set output '" << image << "'\n";
  o << "set title '" << head << "'\n";
  if (kind == FigureKind::kVertical) {
    o << "set logscale xy\n";
    o << "set xlabel 'H/A'\n";
  } else {
    o << "set xrange [-pi:pi]\n";
    o << "set xtics ('-{/Symbol p}' -pi, '-{/Symbol p}/2' -pi/2, '0' 0, "
         "'{/Symbol p}/2' pi/2, '{/Symbol p}' pi)\n";
    o << "set xlabel 'phi'\n";
  }
  o << "set ylabel 'E/E_{planar}'\n";
  o << "set grid\n";
  o << "$data << EOD\n";
  for (const auto& [x, y] : s.xy) o << x << ' ' << y << '\n';
  o << "EOD\n";
  if (kind == FigureKind::kLateral) o << "set arrow from -pi,1 to pi,1 nohead dt 2\n";
  o << "plot $data using 1:2 with linespoints pt 7 notitle\n";
  return o.str();
}

std::string matplotlib(const Series& s, FigureKind kind, const std::string& head,
                       const std::string& image) {
  std::ostringstream o;
  o << std::setprecision(std::numeric_limits<double>::max_digits10);
  o << "# matplotlib script\n";
  for (const auto& w : s.skipped) o << "# warning: skipped error " << w << '\n';
  o << "import math\n";
  o << "import matplotlib\n";
  o << "matplotlib.use('Agg')\n";
  o << "import matplotlib.pyplot as plt\n\n";
  o << "x = [";
  for (std::size_t i = 0; i < s.xy.size(); ++i) o << (i ? ", " : "") << s.xy[i].first;
  o << "]\ny = [";
  for (std::size_t i = 0; i < s.xy.size(); ++i) o << (i ? ", " : "") << s.xy[i].second;
  o << "]\n\n";
  o << "fig, ax = plt.subplots(figsize=(8, 6))\n";
  o << "ax.plot(x, y, 'o-')\n";
  if (kind == FigureKind::kVertical) {
    o << "ax.set_xscale('log')\n";
    o << "ax.set_yscale('log')\n";
    o << "ax.set_xlabel('H/A')\n";
  } else {
    o << "ax.set_xlim(-math.pi, math.pi)\n";
    o << "ax.set_xticks([-math.pi, -math.pi / 2, 0, math.pi / 2, math.pi])\n";
    o << "ax.set_xticklabels([r'$-\\pi$', r'$-\\pi/2$', '0', r'$\\pi/2$', r'$\\pi$'])\n";
    o << "ax.axhline(1.0, linestyle='--', color='gray')\n";
    o << "ax.set_xlabel(r'$\\varphi$')\n";
  }
  o << "ax.set_ylabel(r'$E/E_{\\mathrm{planar}}$')\n";
  o << "ax.set_title('" << head << "')\n";
  o << "ax.grid(True, which='both', alpha=0.3)\n";
  o << "fig.savefig('" << image << "', dpi=150)\n";
  return o.str();
}

}  // namespace

std::string plot_script(const std::vector<SweepRecord>& records, FigureKind kind, PlotTool tool,
                        const std::string& image) {
  const Series s = collect(records, kind);
  const std::string head = title(records);
  return tool == PlotTool::kGnuplot ? gnuplot(s, kind, head, image)
                                    : matplotlib(s, kind, head, image);
}

std::string emit_plot_script(const std::filesystem::path& csv, FigureKind kind, PlotTool tool,
                             const std::string& image) {
  return plot_script(read_sweep_csv(csv), kind, tool, image);
}

}  // namespace cpcorr
