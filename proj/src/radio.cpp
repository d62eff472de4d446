#include "sliceprov/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace sliceprov {

double path_loss(double d, double f_ghz, const RadioParams& p) {
  if (d <= 0.0) throw std::invalid_argument("path_loss: distance must be positive");
  if (f_ghz <= 0.0) throw std::invalid_argument("path_loss: frequency must be positive");
  return 10.0 * p.alpha * std::log10(d) + p.beta + 10.0 * p.gamma * std::log10(f_ghz);
}

double noise_power_dbm(const RadioParams& p) {
  return p.noise_density_dbm_hz + 10.0 * std::log10(p.rb_bandwidth_hz);
}

namespace {

double bits_per_rb(const Point& rrh_pos, const Subarea& cell, const RadioParams& p,
                   double tx_power_dbm, double tx_gain_dbi, double rx_gain_dbi) {
  Point ref = p.conservatism == CellPoint::center ? cell.center
                                                  : farthest_corner(cell.rect, rrh_pos);
  double d = distance(rrh_pos, ref);
  if (d < 1.0) d = 1.0;  // clamp the d -> 0 singularity
  const double prx = tx_power_dbm + tx_gain_dbi + rx_gain_dbi - path_loss(d, p.carrier_freq_ghz, p);
  const double snr_db = prx - noise_power_dbm(p);
  const double snr = std::pow(10.0, snr_db / 10.0);
  return p.rb_bandwidth_hz * std::log2(1.0 + snr);
}

}  // namespace

double bits_per_rb_down(const Point& rrh_pos, const Subarea& cell, const RadioParams& p) {
  return bits_per_rb(rrh_pos, cell, p, p.tx_power_down_dbm, p.tx_gain_down_dbi, p.rx_gain_down_dbi);
}

double bits_per_rb_up(const Point& rrh_pos, const Subarea& cell, const RadioParams& p) {
  return bits_per_rb(rrh_pos, cell, p, p.tx_power_up_dbm, p.tx_gain_up_dbi, p.rx_gain_up_dbi);
}

std::vector<SliceRateTable> precompute_rate_tables(const InfrastructureGraph& infra,
                                                   const std::vector<SliceSpec>& slices,
                                                   const RadioParams& params) {
  const auto rrhs = infra.rrh_indices();
  std::vector<SliceRateTable> tables;
  tables.reserve(slices.size());
  for (const auto& slice : slices) {
    SliceRateTable t;
    t.n_rrh = static_cast<int>(rrhs.size());
    t.n_cells = static_cast<int>(slice.coverage.subareas.size());
    t.up.resize(static_cast<size_t>(t.n_rrh) * t.n_cells);
    t.down.resize(static_cast<size_t>(t.n_rrh) * t.n_cells);
    for (int r = 0; r < t.n_rrh; ++r) {
      const Point pos = *infra.nodes()[rrhs[r]].position;
      for (int q = 0; q < t.n_cells; ++q) {
        t.up[r * t.n_cells + q] = bits_per_rb_up(pos, slice.coverage.subareas[q], params);
        t.down[r * t.n_cells + q] = bits_per_rb_down(pos, slice.coverage.subareas[q], params);
      }
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

}  // namespace sliceprov
