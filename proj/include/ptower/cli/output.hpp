#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ptower/analysis.hpp"
#include "ptower/dynamics.hpp"
#include "ptower/series.hpp"
#include "ptower/tower.hpp"

namespace ptower::cli {

enum class OutputFormat { Csv, Svg };

/// Destination and rendering options shared by the emitting subcommands.
/// An empty path means standard output.
struct OutputSpec {
  OutputFormat format = OutputFormat::Csv;
  std::string path;
  int precision = 17;
};

// CSV writers. Every table starts with a header row; numbers use
// format_double, so identical inputs produce byte-identical files.
void write_iterate_csv(std::ostream& os, const IterationTrace& trace,
                       const OutputSpec& spec);
void write_cobweb_csv(std::ostream& os, double x,
                      const std::vector<CobwebPoint>& trace,
                      const OutputSpec& spec);
void write_bifurcation_csv(std::ostream& os, const std::vector<ScanRow>& rows,
                           const OutputSpec& spec);
void write_region_csv(std::ostream& os, const RegionGrid& grid,
                      const OutputSpec& spec);
void write_inverse_curve_csv(std::ostream& os,
                             const std::vector<CurvePoint>& points,
                             const OutputSpec& spec);
void write_cycle_csv(std::ostream& os, const TwoCycle& cycle,
                     const OutputSpec& spec);
void write_revert_csv(std::ostream& os, const PowerSeries& series,
                      const OutputSpec& spec);

// SVG writers: fixed 800x600 viewport, linear axis mapping declared in a
// comment element, no external resources.
void write_cobweb_svg(std::ostream& os, double x,
                      const std::vector<CobwebPoint>& trace,
                      const OutputSpec& spec);
void write_bifurcation_svg(std::ostream& os, const std::vector<ScanRow>& rows,
                           const OutputSpec& spec);
void write_region_svg(std::ostream& os, const RegionGrid& grid,
                      const OutputSpec& spec);
void write_inverse_curve_svg(std::ostream& os,
                             const std::vector<CurvePoint>& points,
                             const OutputSpec& spec);

}  // namespace ptower::cli
