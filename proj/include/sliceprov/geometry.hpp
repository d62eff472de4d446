#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sliceprov {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

// Axis-aligned rectangle, origin at lower-left corner, sizes in meters.
struct Rect {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
  Point center() const { return {x + w / 2.0, y + h / 2.0}; }
  bool contains(const Point& p) const;
};

// Intersection area of two rectangles (0 if disjoint).
double overlap_area(const Rect& a, const Rect& b);

// Corner of `r` farthest from `p`.
Point farthest_corner(const Rect& r, const Point& p);

struct Subarea {
  Rect rect;
  Point center;
};

// Row-major grid of cell_w x cell_h cells covering `area`; boundary cells are
// clipped so the cells tile the area exactly.
std::vector<Subarea> partition_area(const Rect& area, double cell_w, double cell_h);

// Piecewise-constant user density (users per square meter): a disjoint set of
// rectangular patches, zero outside all patches.
struct Density {
  struct Patch {
    Rect rect;
    double value = 0.0;  // users / m^2
  };
  std::vector<Patch> patches;

  static Density uniform(const Rect& area, double total_users);

  // Exact integral of the density over `r`.
  double mass(const Rect& r) const;
  // Integral over the whole plane (all patches).
  double total_mass() const;
};

}  // namespace sliceprov
