#include "ptower/cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "ptower/format.hpp"
#include "ptower/tower.hpp"

namespace ptower::cli {

namespace {

constexpr int k_curve_samples = 512;

// Plot geometry shared by every SVG: 800x600 viewport with a 40 px margin,
// linear mapping, vertical axis growing upwards.
constexpr double k_width = 800.0;
constexpr double k_height = 600.0;
constexpr double k_margin = 40.0;

struct AxisMap {
  double u0, u1, v0, v1;

  double px(double u) const {
    return k_margin + (u - u0) / (u1 - u0) * (k_width - 2.0 * k_margin);
  }
  double py(double v) const {
    return k_height - k_margin -
           (v - v0) / (v1 - v0) * (k_height - 2.0 * k_margin);
  }
};

std::string fmt(double value, const OutputSpec& spec) {
  return format_double(value, spec.precision);
}

void svg_open(std::ostream& os, const AxisMap& axes, const OutputSpec& spec) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
        "viewBox=\"0 0 800 600\">\n";
  os << "<!-- axes: x [" << fmt(axes.u0, spec) << ", " << fmt(axes.u1, spec)
     << "] -> [40, 760] px; y [" << fmt(axes.v0, spec) << ", "
     << fmt(axes.v1, spec) << "] -> [560, 40] px; linear -->\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n";
  os << "<rect x=\"40\" y=\"40\" width=\"720\" height=\"520\" fill=\"none\" "
        "stroke=\"#000000\" stroke-width=\"1\"/>\n";
}

void svg_close(std::ostream& os) { os << "</svg>\n"; }

template <typename Points>
void svg_polyline(std::ostream& os, const AxisMap& axes, const Points& pts,
                  const char* color, const char* width,
                  const OutputSpec& spec) {
  os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
     << width << "\" points=\"";
  bool first = true;
  for (const auto& [u, v] : pts) {
    const double px = axes.px(u);
    const double py = axes.py(v);
    if (!std::isfinite(px) || !std::isfinite(py)) continue;  // overflowed sample
    if (!first) os << ' ';
    first = false;
    os << fmt(px, spec) << ',' << fmt(py, spec);
  }
  os << "\"/>\n";
}

void svg_dot(std::ostream& os, const AxisMap& axes, double u, double v,
             const char* color, const char* radius, const OutputSpec& spec) {
  os << "<circle cx=\"" << fmt(axes.px(u), spec) << "\" cy=\""
     << fmt(axes.py(v), spec) << "\" r=\"" << radius << "\" fill=\"" << color
     << "\"/>\n";
}

double cobweb_extent(const std::vector<CobwebPoint>& trace) {
  double m = 0.0;
  for (const auto& p : trace) m = std::max({m, p.y, p.z});
  return 1.05 * std::max(m, 1e-12);
}

}  // namespace

void write_iterate_csv(std::ostream& os, const IterationTrace& trace,
                       const OutputSpec& spec) {
  os << "section,key,value\n";
  using Kind = IterationOutcome::Kind;
  switch (trace.outcome.kind) {
    case Kind::Converged:
      os << "summary,outcome,Converged\n";
      os << "summary,limit," << fmt(trace.outcome.limit, spec) << "\n";
      break;
    case Kind::TwoCycle:
      os << "summary,outcome,TwoCycle\n";
      os << "summary,y_low," << fmt(trace.outcome.y_low, spec) << "\n";
      os << "summary,y_high," << fmt(trace.outcome.y_high, spec) << "\n";
      break;
    case Kind::Diverged:
      os << "summary,outcome,Diverged\n";
      break;
    case Kind::Undecided:
      os << "summary,outcome,Undecided\n";
      break;
  }
  os << "summary,iterations," << trace.iterations() << "\n";
  for (std::size_t n = 0; n < trace.values.size(); ++n)
    os << "orbit," << n << ',' << fmt(trace.values[n], spec) << "\n";
}

void write_cobweb_csv(std::ostream& os, double x,
                      const std::vector<CobwebPoint>& trace,
                      const OutputSpec& spec) {
  const double hi = cobweb_extent(trace);
  os << "section,i,y,z\n";
  for (std::size_t i = 0; i < trace.size(); ++i)
    os << "cobweb," << i << ',' << fmt(trace[i].y, spec) << ','
       << fmt(trace[i].z, spec) << "\n";
  for (int k = 0; k < k_curve_samples; ++k) {
    const double y = hi * k / (k_curve_samples - 1);
    os << "curve," << k << ',' << fmt(y, spec) << ','
       << fmt(tower_step(x, y), spec) << "\n";
  }
  os << "identity,0,0,0\n";
  os << "identity,1," << fmt(hi, spec) << ',' << fmt(hi, spec) << "\n";
}

void write_bifurcation_csv(std::ostream& os, const std::vector<ScanRow>& rows,
                           const OutputSpec& spec) {
  os << "x,class,value1,value2\n";
  for (const auto& row : rows) {
    os << fmt(row.x, spec) << ',' << to_string(row.classification.regime);
    os << ',' << (row.values.size() > 0 ? fmt(row.values[0], spec) : "");
    os << ',' << (row.values.size() > 1 ? fmt(row.values[1], spec) : "");
    os << "\n";
  }
}

void write_region_csv(std::ostream& os, const RegionGrid& grid,
                      const OutputSpec& spec) {
  os << "y\\x";
  for (const double x : grid.xs) os << ',' << fmt(x, spec);
  os << "\n";
  for (std::size_t j = 0; j < grid.ys.size(); ++j) {
    os << fmt(grid.ys[j], spec);
    for (std::size_t i = 0; i < grid.xs.size(); ++i)
      os << ',' << (grid.at(i, j) ? '1' : '0');
    os << "\n";
  }
}

void write_inverse_curve_csv(std::ostream& os,
                             const std::vector<CurvePoint>& points,
                             const OutputSpec& spec) {
  os << "y,x,dxdy\n";
  for (const auto& p : points)
    os << fmt(p.y, spec) << ',' << fmt(p.x, spec) << ','
       << fmt(tower_inverse_derivative(p.y), spec) << "\n";
}

void write_cycle_csv(std::ostream& os, const TwoCycle& cycle,
                     const OutputSpec& spec) {
  os << "y_low,y_high,ratio,x\n";
  os << fmt(cycle.y_low, spec) << ',' << fmt(cycle.y_high, spec) << ','
     << fmt(cycle.ratio, spec) << ',' << fmt(cycle.x, spec) << "\n";
}

void write_revert_csv(std::ostream& os, const PowerSeries& series,
                      const OutputSpec& spec) {
  os << "k,coefficient\n";
  for (int k = 1; k <= series.order(); ++k)
    os << k << ',' << fmt(series.coefficient(k), spec) << "\n";
}

void write_cobweb_svg(std::ostream& os, double x,
                      const std::vector<CobwebPoint>& trace,
                      const OutputSpec& spec) {
  const double hi = cobweb_extent(trace);
  const AxisMap axes{0.0, hi, 0.0, hi};
  svg_open(os, axes, spec);

  std::vector<std::pair<double, double>> identity{{0.0, 0.0}, {hi, hi}};
  svg_polyline(os, axes, identity, "#888888", "1", spec);

  std::vector<std::pair<double, double>> curve;
  curve.reserve(k_curve_samples);
  for (int k = 0; k < k_curve_samples; ++k) {
    const double y = hi * k / (k_curve_samples - 1);
    curve.emplace_back(y, tower_step(x, y));
  }
  svg_polyline(os, axes, curve, "#1f77b4", "1.5", spec);

  std::vector<std::pair<double, double>> web;
  web.reserve(trace.size());
  for (const auto& p : trace) web.emplace_back(p.y, p.z);
  svg_polyline(os, axes, web, "#d62728", "1", spec);

  svg_close(os);
}

void write_bifurcation_svg(std::ostream& os, const std::vector<ScanRow>& rows,
                           const OutputSpec& spec) {
  double v_max = 1.0;
  for (const auto& row : rows)
    for (const double v : row.values) v_max = std::max(v_max, v);
  const AxisMap axes{rows.front().x, rows.back().x, 0.0, 1.05 * v_max};
  svg_open(os, axes, spec);
  for (const auto& row : rows)
    for (const double v : row.values)
      svg_dot(os, axes, row.x, v, "#1f77b4", "1.5", spec);
  svg_close(os);
}

void write_region_svg(std::ostream& os, const RegionGrid& grid,
                      const OutputSpec& spec) {
  const AxisMap axes{grid.xs.front(), grid.xs.back(), grid.ys.front(),
                     grid.ys.back()};
  svg_open(os, axes, spec);
  const double cw = (k_width - 2.0 * k_margin) / grid.xs.size();
  const double ch = (k_height - 2.0 * k_margin) / grid.ys.size();
  for (std::size_t i = 0; i < grid.xs.size(); ++i) {
    for (std::size_t j = 0; j < grid.ys.size(); ++j) {
      if (!grid.at(i, j)) continue;  // white background encodes "outside"
      const double px = k_margin + cw * i;
      const double py = k_height - k_margin - ch * (j + 1);
      os << "<rect x=\"" << fmt(px, spec) << "\" y=\"" << fmt(py, spec)
         << "\" width=\"" << fmt(cw, spec) << "\" height=\"" << fmt(ch, spec)
         << "\" fill=\"#808080\"/>\n";
    }
  }
  svg_close(os);
}

void write_inverse_curve_svg(std::ostream& os,
                             const std::vector<CurvePoint>& points,
                             const OutputSpec& spec) {
  double v_max = 0.0;
  for (const auto& p : points) v_max = std::max(v_max, p.x);
  const AxisMap axes{points.front().y, points.back().y, 0.0,
                     1.05 * std::max(v_max, 1e-12)};
  svg_open(os, axes, spec);
  std::vector<std::pair<double, double>> curve;
  curve.reserve(points.size());
  for (const auto& p : points) curve.emplace_back(p.y, p.x);
  svg_polyline(os, axes, curve, "#1f77b4", "1.5", spec);
  const auto [f1, f2] = tower_inverse_inflections();
  for (const auto& p : {f1, f2})
    if (p.y >= axes.u0 && p.y <= axes.u1)
      svg_dot(os, axes, p.y, p.x, "#d62728", "3", spec);
  svg_close(os);
}

}  // namespace ptower::cli
