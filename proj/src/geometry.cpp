#include "sliceprov/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace sliceprov {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool Rect::contains(const Point& p) const {
  return p.x >= x && p.x <= x + w && p.y >= y && p.y <= y + h;
}

double overlap_area(const Rect& a, const Rect& b) {
  double ox = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
  double oy = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
  if (ox <= 0.0 || oy <= 0.0) return 0.0;
  return ox * oy;
}

Point farthest_corner(const Rect& r, const Point& p) {
  Point best{r.x, r.y};
  double best_d = -1.0;
  for (double cx : {r.x, r.x + r.w}) {
    for (double cy : {r.y, r.y + r.h}) {
      double d = std::hypot(cx - p.x, cy - p.y);
      if (d > best_d) {
        best_d = d;
        best = {cx, cy};
      }
    }
  }
  return best;
}

std::vector<Subarea> partition_area(const Rect& area, double cell_w, double cell_h) {
  if (cell_w <= 0.0 || cell_h <= 0.0)
    throw std::invalid_argument("partition_area: cell sizes must be positive");
  if (area.w <= 0.0 || area.h <= 0.0)
    throw std::invalid_argument("partition_area: degenerate area");

  const int nx = static_cast<int>(std::ceil(area.w / cell_w - 1e-12));
  const int ny = static_cast<int>(std::ceil(area.h / cell_h - 1e-12));
  std::vector<Subarea> cells;
  cells.reserve(static_cast<size_t>(nx) * ny);
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      Rect c;
      c.x = area.x + ix * cell_w;
      c.y = area.y + iy * cell_h;
      c.w = std::min(cell_w, area.x + area.w - c.x);
      c.h = std::min(cell_h, area.y + area.h - c.y);
      cells.push_back({c, c.center()});
    }
  }
  return cells;
}

Density Density::uniform(const Rect& area, double total_users) {
  if (area.area() <= 0.0)
    throw std::invalid_argument("Density::uniform: degenerate area");
  Density d;
  d.patches.push_back({area, total_users / area.area()});
  return d;
}

double Density::mass(const Rect& r) const {
  double m = 0.0;
  for (const auto& p : patches) m += p.value * overlap_area(p.rect, r);
  return m;
}

double Density::total_mass() const {
  double m = 0.0;
  for (const auto& p : patches) m += p.value * p.rect.area();
  return m;
}

}  // namespace sliceprov
