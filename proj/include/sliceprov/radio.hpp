#pragma once

#include <vector>

#include "sliceprov/geometry.hpp"
#include "sliceprov/infrastructure.hpp"
#include "sliceprov/slice.hpp"

namespace sliceprov {

// Which point of a subarea the link budget is evaluated at.
enum class CellPoint { center, worst_corner };

struct RadioParams {
  double rb_bandwidth_hz = 0.2e6;     // W_i
  double carrier_freq_ghz = 2.6;      // f_i
  double tx_power_down_dbm = 43.0;    // RRH transmit
  double tx_gain_down_dbi = 15.0;     // RRH antenna
  double tx_power_up_dbm = 23.0;      // UE transmit
  double tx_gain_up_dbi = 3.0;        // UE antenna
  double rx_gain_down_dbi = 3.0;      // UE receive (= UE antenna gain)
  double rx_gain_up_dbi = 15.0;       // RRH receive (= RRH antenna gain)
  double noise_density_dbm_hz = -174.0;
  double alpha = 3.6;
  double beta = 7.6;
  double gamma = 2.0;
  CellPoint conservatism = CellPoint::center;
};

// alpha-beta-gamma path loss, d in meters, f in GHz, result in dB.
double path_loss(double d, double f_ghz, const RadioParams& p);

// Noise power over one RB, dBm.
double noise_power_dbm(const RadioParams& p);

// Data rate carried by one RB (bits/s) for a user at the cell's representative
// point. Distances below 1 m are clamped to 1 m.
double bits_per_rb_down(const Point& rrh_pos, const Subarea& cell, const RadioParams& p);
double bits_per_rb_up(const Point& rrh_pos, const Subarea& cell, const RadioParams& p);

// Per-slice b_u/b_d lookup, indexed by (rrh position order, subarea order).
struct SliceRateTable {
  int n_rrh = 0;
  int n_cells = 0;
  std::vector<double> up;    // row-major [rrh][cell]
  std::vector<double> down;

  double b_up(int rrh, int cell) const { return up[rrh * n_cells + cell]; }
  double b_down(int rrh, int cell) const { return down[rrh * n_cells + cell]; }
};

// Rate tables for all slices; rrh index follows infra.rrh_indices() order.
std::vector<SliceRateTable> precompute_rate_tables(const InfrastructureGraph& infra,
                                                   const std::vector<SliceSpec>& slices,
                                                   const RadioParams& params);

}  // namespace sliceprov
