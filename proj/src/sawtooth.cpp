#include "cosint/sawtooth.hpp"

#include "cosint/combinatorics.hpp"
#include "cosint/families.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace cosint {

namespace {

constexpr double kHalfPi = 1.5707963267948966192313216916398;
constexpr int kArcSamples = 33; // points per emitted arc, t = 0..1

void require_angle(double x, const char* who) {
  if (!(x > 0.0) || !(x < kHalfPi))
    throw std::invalid_argument(std::string(who) + ": x must lie strictly inside (0, pi/2)");
}

} // namespace

double sector_area(int i, double x) {
  require_angle(x, "sector_area");
  if (i < 0) throw std::invalid_argument("sector_area: i must be >= 0");
  const double c = std::cos(x);
  return 0.5 * x * c * c * std::pow(1.0 - c, 2 * i);
}

WaveGeometry build_wave(double x, int n_teeth) {
  require_angle(x, "build_wave");
  if (n_teeth < 1) throw std::invalid_argument("build_wave: n_teeth must be >= 1");

  const double c = std::cos(x);
  const double s = std::sin(x);

  WaveGeometry g;
  g.angle_x = x;
  g.hypotenuse_end = {1.0, 0.0};
  g.baseline_start = {c * c, -c * s}; // B0
  g.baseline_end = g.hypotenuse_end;  // the baseline meets the hypotenuse at C

  // Unit direction of the baseline B0 -> C.
  const Point u{s, c};

  Point a{0.0, 0.0}; // A_i, walks along the hypotenuse
  g.teeth.reserve(static_cast<std::size_t>(n_teeth));
  for (int i = 0; i < n_teeth; ++i) {
    // B_i: foot of the perpendicular from A_i onto the baseline.
    const double along = (a.x - 1.0) * u.x + (a.y - 0.0) * u.y;
    const Point b{1.0 + along * u.x, along * u.y};
    const double radius = std::hypot(b.x - a.x, b.y - a.y);
    const Point a_next{a.x + radius, a.y};

    ToothArc t;
    t.index = i;
    t.center = a;
    t.radius = radius;
    t.start_angle = std::atan2(b.y - a.y, b.x - a.x);
    t.end_angle = std::atan2(a_next.y - a.y, a_next.x - a.x);
    t.area = 0.5 * (t.end_angle - t.start_angle) * radius * radius;
    g.teeth.push_back(t);

    a = a_next;
  }
  return g;
}

PiExpr average_area_exact(int i) {
  if (i < 0) throw std::invalid_argument("average_area_exact: i must be >= 0");
  PiExpr sum;
  for (int m = 0; m <= 2 * i; ++m) {
    const Rational w = Rational(m % 2 == 0 ? 1 : -1) * Rational(binomial(2 * i, m));
    sum += w * i_recurrence(m + 2).value;
  }
  return sum.shifted(-1);
}

namespace {

void emit_csv(const WaveGeometry& g, std::ostream& os) {
  os << "tooth,t,x,y\n";
  os << std::setprecision(17);
  for (const auto& arc : g.teeth) {
    for (int j = 0; j < kArcSamples; ++j) {
      const double t = static_cast<double>(j) / (kArcSamples - 1);
      const double ang = arc.start_angle + t * (arc.end_angle - arc.start_angle);
      const double px = arc.center.x + arc.radius * std::cos(ang);
      const double py = arc.center.y + arc.radius * std::sin(ang);
      os << arc.index << ',' << t << ',' << px << ',' << py << '\n';
    }
  }
}

void emit_svg(const WaveGeometry& g, std::ostream& os) {
  // Geometry y points up; svg y points down, so emitted y is negated.
  const double depth = -g.baseline_start.y;
  os << std::setprecision(17);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 " << depth
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.003\">\n";
  os << "  <line x1=\"0\" y1=\"0\" x2=\"" << g.hypotenuse_end.x << "\" y2=\""
     << -g.hypotenuse_end.y << "\"/>\n";
  os << "  <line x1=\"" << g.baseline_start.x << "\" y1=\"" << -g.baseline_start.y << "\" x2=\""
     << g.baseline_end.x << "\" y2=\"" << -g.baseline_end.y << "\"/>\n";
  for (const auto& arc : g.teeth) {
    const double sx = arc.center.x + arc.radius * std::cos(arc.start_angle);
    const double sy = -(arc.center.y + arc.radius * std::sin(arc.start_angle));
    const double ex = arc.center.x + arc.radius * std::cos(arc.end_angle);
    const double ey = -(arc.center.y + arc.radius * std::sin(arc.end_angle));
    // sweep flag 0: the sector angle runs clockwise in svg coordinates
    os << "  <path d=\"M " << sx << ' ' << sy << " A " << arc.radius << ' ' << arc.radius
       << " 0 0 0 " << ex << ' ' << ey << "\"/>\n";
  }
  os << "</svg>\n";
}

} // namespace

void emit_wave(const WaveGeometry& geom, WaveFormat format, std::ostream& os) {
  if (format == WaveFormat::Csv)
    emit_csv(geom, os);
  else
    emit_svg(geom, os);
}

} // namespace cosint
