#pragma once

#include "cosint/pi_expr.hpp"

#include <iosfwd>
#include <vector>

namespace cosint {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Circular sector of one tooth: center A_i, radius |A_i B_i|, swept from
/// B_i (start_angle) to A_{i+1} (end_angle). All fields are measured from
/// the constructed coordinates, not from the closed formula.
struct ToothArc {
  int index = 0;
  Point center;
  double radius = 0.0;
  double start_angle = 0.0;
  double end_angle = 0.0;
  double area = 0.0; // (1/2) * sweep * radius^2 with the measured sweep
};

/// Modified sawtooth wave built inside the right triangle A0 B0 C with unit
/// hypotenuse A0 C on the x-axis (A0 at the origin, C = (1,0), B0 below).
struct WaveGeometry {
  double angle_x = 0.0; // radians, in (0, pi/2)
  std::vector<ToothArc> teeth;
  Point hypotenuse_end;  // C
  Point baseline_start;  // B0
  Point baseline_end;    // C
};

/// Area of the i-th circular sector: (1/2) x cos^2 x (1 - cos x)^{2i}.
/// Requires 0 < x < pi/2; throws std::invalid_argument otherwise.
double sector_area(int i, double x);

/// Builds the wave by the literal recursion: B_i is the foot of the
/// perpendicular from A_i onto the line B0 C, and A_{i+1} sits on A0 C at
/// distance |A_i B_i| from A_i. Tooth areas come from the constructed
/// coordinates, so comparing them against sector_area() is a genuine
/// geometric check of the closed formula.
WaveGeometry build_wave(double x, int n_teeth);

/// Exact average of the i-th sector area over x in (0, pi/2):
/// (1/pi) sum_{m=0}^{2i} (-1)^m C(2i,m) I_{m+2}. The result always has the
/// form alpha + beta*pi + gamma/pi (zero pi^2 coefficient).
PiExpr average_area_exact(int i);

enum class WaveFormat { Csv, Svg };

/// Csv: header "tooth,t,x,y", one row per sampled arc point, 17 significant
/// digits, LF line endings. Svg: standalone document with one path element
/// per arc plus two line elements (baseline and hypotenuse), viewBox
/// normalized to the unit hypotenuse.
void emit_wave(const WaveGeometry& geom, WaveFormat format, std::ostream& os);

} // namespace cosint
