#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace qnet {

// Physical-layer parameters shared by every node and link of a network.
// Durations are seconds, probabilities are per-attempt success chances.
struct PhysicalParams {
  double gen_latency_gt = 100e-6;      // one link-EP generation attempt
  double gen_success_gp = 0.5;         // atom-photon generator success
  double half_link_transmit_ep = 1.0;  // photon survives one half-link
  double optical_bsm_php = 0.5;        // optical BSM success
  double atomic_bsm_latency_bt = 10e-6;
  double atomic_bsm_bp = 0.5;          // swap success
  double decoherence_tau = 1.5;        // qubit age threshold

  // Optional distance model for the half-link transmission probability:
  // e_p(len) = exp(-len / (2 * attenuation_length_km)). Off by default, in
  // which case half_link_transmit_ep is used as a constant.
  bool distance_dependent_ep = false;
  double attenuation_length_km = 22.0;

  void validate() const {
    auto check_prob = [](double p, const char* name) {
      if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument(std::string(name) + " must be in (0, 1], got " + std::to_string(p));
    };
    auto check_duration = [](double d, const char* name) {
      if (!(d > 0.0) || !std::isfinite(d))
        throw std::invalid_argument(std::string(name) + " must be a positive duration, got " + std::to_string(d));
    };
    check_prob(gen_success_gp, "gen_success_gp");
    check_prob(half_link_transmit_ep, "half_link_transmit_ep");
    check_prob(optical_bsm_php, "optical_bsm_php");
    check_prob(atomic_bsm_bp, "atomic_bsm_bp");
    check_duration(gen_latency_gt, "gen_latency_gt");
    check_duration(atomic_bsm_latency_bt, "atomic_bsm_latency_bt");
    check_duration(decoherence_tau, "decoherence_tau");
    if (distance_dependent_ep && !(attenuation_length_km > 0.0))
      throw std::invalid_argument("attenuation_length_km must be positive");
  }

  // Re-decision of a trigger happens after half of one attempt duration.
  double sufficient_time() const { return gen_latency_gt / 2.0; }
};

}  // namespace qnet
