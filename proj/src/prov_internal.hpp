#pragma once

#include <string>
#include <vector>

#include "sliceprov/provisioning.hpp"

namespace sliceprov::detail {

inline std::string eta_name(int s, int r, int q) {
  return "eta_" + std::to_string(s) + "_" + std::to_string(r) + "_" + std::to_string(q);
}
inline std::string etat_name(int s, int r) {
  return "etat_" + std::to_string(s) + "_" + std::to_string(r);
}
inline std::string phn_name(char n, int s, int i, int v) {
  return std::string("ph") + n + "_" + std::to_string(s) + "_" + std::to_string(i) + "_" +
         std::to_string(v);
}
inline std::string pht_name(int s, int i) {
  return "pht_" + std::to_string(s) + "_" + std::to_string(i);
}
inline std::string phb_name(int s, int l, int e) {
  return "phb_" + std::to_string(s) + "_" + std::to_string(l) + "_" + std::to_string(e);
}
inline std::string kappa_name(char n, int s, int i, int v) {
  return std::string("k") + n + "_" + std::to_string(s) + "_" + std::to_string(i) + "_" +
         std::to_string(v);
}

// Per-slice radio geometry digested for the builders. With the up/down
// proportionality relation, eta_u and eta_d are fixed multiples of the
// combined share eta = eta_u + eta_d:
//   eta_u = eta * r_u b_d / D,  eta_d = eta * r_d b_u / D,  D = r_u b_d + r_d b_u,
// and every radio-proportion expression (total, uplink-only, downlink-only)
// collapses to sum_q h(r,q) eta(r,q) with h = a_r b_u b_d / D.
struct SliceRadioCoeffs {
  bool has_radio = false;  // r_u + r_d > 0
  double r_up = 0.0;
  double r_down = 0.0;
  int n_cells = 0;
  std::vector<double> h;        // [rrh][cell], 0 when !has_radio
  std::vector<double> split_up; // eta_u = split_up * eta
};

SliceRadioCoeffs slice_radio_coeffs(const InfrastructureGraph& infra, const SliceSpec& slice,
                                    const SliceRateTable& rates);

// Radio proportion per rrh: p(r) = sum_q h(r,q) * eta(r,q), evaluated from
// extracted shares. Used as the constant right-hand side of the radio-wired
// coupling constraints in the two-step variants.
std::vector<double> radio_proportions(const InfrastructureGraph& infra, const SliceSpec& slice,
                                      const SliceRateTable& rates,
                                      const SliceRadioShares& shares);

// Node share s(i,v) = a_n(i) phi_n(i,v) / r_n(v) for the first resource with
// positive demand (compute preferred); the flow-conservation source/sink term.
double node_share(const InfraNode& node, const SrdNode& srd, double phi_c, double phi_s);

// Resource carrying the integer instance counter for an SRD node: compute
// when it has a compute demand and floor, else storage, else none ('\0').
// The other resource follows through the compute/storage balance equality;
// counting both independently is over-constrained because catalog floors are
// rounded and not exactly proportional to the demands.
char counter_resource(const SrdNode& srd);

// Out/in bandwidth-demand ratios of an SRD link within its endpoints' stars.
double out_ratio(const SrdGraph& g, int link_idx);
double in_ratio(const SrdGraph& g, int link_idx);

}  // namespace sliceprov::detail
