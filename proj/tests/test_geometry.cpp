#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sliceprov/geometry.hpp"

using namespace sliceprov;

TEST_CASE("rect basics") {
  Rect r{10, 20, 4, 6};
  CHECK(r.area() == doctest::Approx(24.0));
  CHECK(r.center().x == doctest::Approx(12.0));
  CHECK(r.center().y == doctest::Approx(23.0));
  CHECK(r.contains({11, 21}));
  CHECK_FALSE(r.contains({15, 21}));
}

TEST_CASE("overlap area") {
  Rect a{0, 0, 10, 10};
  CHECK(overlap_area(a, Rect{5, 5, 10, 10}) == doctest::Approx(25.0));
  CHECK(overlap_area(a, Rect{20, 20, 5, 5}) == doctest::Approx(0.0));
  CHECK(overlap_area(a, a) == doctest::Approx(100.0));
}

TEST_CASE("farthest corner") {
  Rect r{0, 0, 10, 10};
  Point c = farthest_corner(r, {1, 1});
  CHECK(c.x == doctest::Approx(10.0));
  CHECK(c.y == doctest::Approx(10.0));
}

TEST_CASE("partition exact tiling 180x206 into 90x103") {
  auto cells = partition_area(Rect{0, 0, 180, 206}, 90, 103);
  CHECK(cells.size() == 4);
  double total = 0;
  for (const auto& c : cells) total += c.rect.area();
  CHECK(total == doctest::Approx(180.0 * 206.0));
}

TEST_CASE("partition 1430x4950 into 90x103 gives 16x49 cells with clipping") {
  auto cells = partition_area(Rect{0, 0, 1430, 4950}, 90, 103);
  CHECK(cells.size() == 16 * 49);
  double total = 0;
  for (const auto& c : cells) {
    total += c.rect.area();
    CHECK(c.rect.contains(c.center));
  }
  CHECK(total == doctest::Approx(1430.0 * 4950.0).epsilon(1e-9));
}

TEST_CASE("partition of area smaller than one cell") {
  auto cells = partition_area(Rect{5, 5, 30, 40}, 90, 103);
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].rect.area() == doctest::Approx(1200.0));
}

TEST_CASE("partition rejects degenerate area") {
  CHECK_THROWS_AS(partition_area(Rect{0, 0, 0, 10}, 90, 103), std::invalid_argument);
  CHECK_THROWS_AS(partition_area(Rect{0, 0, 10, 10}, 0, 103), std::invalid_argument);
}

TEST_CASE("partition cells are pairwise disjoint") {
  auto cells = partition_area(Rect{0, 0, 250, 250}, 90, 103);
  for (size_t i = 0; i < cells.size(); ++i)
    for (size_t j = i + 1; j < cells.size(); ++j)
      CHECK(overlap_area(cells[i].rect, cells[j].rect) == doctest::Approx(0.0));
}

TEST_CASE("uniform density mass") {
  Rect area{0, 0, 100, 200};
  Density d = Density::uniform(area, 200.0);
  CHECK(d.total_mass() == doctest::Approx(200.0));
  CHECK(d.mass(Rect{0, 0, 50, 200}) == doctest::Approx(100.0));
  CHECK(d.mass(Rect{200, 0, 10, 10}) == doctest::Approx(0.0));
}

TEST_CASE("piecewise density matches Monte-Carlo integration within 0.5%") {
  Density d;
  d.patches.push_back({Rect{0, 0, 60, 100}, 0.02});
  d.patches.push_back({Rect{60, 0, 40, 100}, 0.005});
  Rect query{30, 10, 50, 70};
  double exact = d.mass(query);

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> ux(query.x, query.x + query.w);
  std::uniform_real_distribution<double> uy(query.y, query.y + query.h);
  const int n = 2'000'000;
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    Point p{ux(rng), uy(rng)};
    for (const auto& patch : d.patches)
      if (patch.rect.contains(p)) acc += patch.value;
  }
  double mc = acc / n * query.area();
  CHECK(std::abs(mc - exact) < 0.005 * exact);
}
