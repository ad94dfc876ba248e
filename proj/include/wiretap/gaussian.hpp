#ifndef WIRETAP_GAUSSIAN_HPP
#define WIRETAP_GAUSSIAN_HPP

// Closed-form achievable secrecy rate of the Gaussian wiretap channel with a
// helper under layered (power-level) alignment. All SNR quantities are kept
// as log2 values; linear powers appear only inside guarded log-sum terms.
//
//   SNR2 = SNR1^beta1  (helper -> legitimate receiver)
//   SNR3 = SNR1^beta2  (both transmitters -> eavesdropper)

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "wiretap/bounds.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/ldm.hpp"
#include "wiretap/scheme.hpp"

namespace wiretap {

struct GaussianParams {
  double log_snr1 = 0; // log2 SNR1, bits
  double beta1 = 0;
  double beta2 = 0;

  void validate() const {
    if (!std::isfinite(log_snr1) || !(log_snr1 > 0)) throw parameter_error("log_snr1 must be positive and finite");
    if (!std::isfinite(beta1) || beta1 < 0) throw parameter_error("beta1 must be nonnegative and finite");
    if (!std::isfinite(beta2) || beta2 < 0) throw parameter_error("beta2 must be nonnegative and finite");
  }
};

// Number of power levels, 1 / |1 - beta1|; infinite at beta1 = 1.
inline double l_max(const GaussianParams &g) {
  const double width = std::abs(1.0 - g.beta1);
  return width > 0 ? 1.0 / width : std::numeric_limits<double>::infinity();
}

// floor(l_max), the per-level decoding loss subtracted in the aligned case.
inline int level_count(const GaussianParams &g) {
  const double lm = l_max(g);
  if (!std::isfinite(lm)) throw domain_error("level count undefined at beta1 = 1");
  return static_cast<int>(detail::snapped_floor(lm));
}

namespace detail {

// log2(2^a + 2^b) without forming either power.
inline double log2_sum_exp2(double a, double b) {
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

inline void check_level(const GaussianParams &g, int l) {
  g.validate();
  if (g.beta1 >= 1) throw domain_error("power-level structure requires beta1 < 1");
  if (l < 1 || l > static_cast<int>(detail::snapped_ceil(l_max(g))))
    throw parameter_error("level index " + std::to_string(l) + " outside 1..ceil(l_max)");
}

// log2 of SNR1 raised to the upper/lower boundary exponent of level l.
inline double level_top_log(const GaussianParams &g, int l) {
  return g.log_snr1 * (1.0 - (l - 1) * (1.0 - g.beta1));
}
inline double level_bottom_log(const GaussianParams &g, int l) {
  return g.log_snr1 * (1.0 - l * (1.0 - g.beta1));
}

} // namespace detail

// log2 theta_l, the power of level l at Y1.
inline double log2_theta(const GaussianParams &g, int l) {
  detail::check_level(g, l);
  const double top = detail::level_top_log(g, l), bottom = detail::level_bottom_log(g, l);
  return top + std::log2(-std::expm1((bottom - top) * std::log(2.0)));
}

// theta_l = SNR1^{1-(l-1)(1-beta1)} - SNR1^{1-l(1-beta1)}. May be +inf for
// very large log_snr1; use log2_theta there.
inline double theta(const GaussianParams &g, int l) { return std::exp2(log2_theta(g, l)); }

// Rate level l supports when decoded treating all lower levels of both
// signals as noise: log2(theta_l / (1 + 2 SNR1^{1-l(1-beta1)})), floored at 0.
inline double level_rate(const GaussianParams &g, int l) {
  const double noise = detail::log2_sum_exp2(0.0, 1.0 + detail::level_bottom_log(g, l));
  return std::max(0.0, log2_theta(g, l) - noise);
}

// Sum of level_rate over odd levels 1..floor(l_max).
inline double odd_level_rate_sum(const GaussianParams &g) {
  const int d = level_count(g);
  double sum = 0;
  for (int l = 1; l <= d; l += 2) sum += level_rate(g, l);
  return sum;
}

// Rate of the leftover power between the last full level and the noise floor:
// log2(SNR1^{1 - floor(l_max)(1-beta1)} - 1), floored at 0.
inline double remainder_rate(const GaussianParams &g) {
  g.validate();
  if (g.beta1 >= 1) throw domain_error("power-level structure requires beta1 < 1");
  const double top = detail::level_bottom_log(g, level_count(g));
  if (top <= 1.0) return 0.0; // SNR - 1 <= 1
  return top + std::log2(-std::expm1(-top * std::log(2.0)));
}

struct GaussianRateBreakdown {
  double r_private = 0;
  double r_common = 0; // phi value before the level-count deduction
  double r_ach = 0;
  double normalized = 0;
  CaseTag case_tag = CaseTag::Singular;
  int d = 0;                          // level count deducted (Aligned only)
  bool uses_phi1 = false;
  std::optional<double> r_common_sum; // odd-level sum, when beta1 < 1 in the Aligned case
};

inline GaussianRateBreakdown gaussian_rate(const GaussianParams &g) {
  g.validate();
  const double L = g.log_snr1;
  GaussianRateBreakdown out;
  out.r_private = L * std::max(0.0, 1.0 - g.beta2);

  if (g.beta1 < 2.0 / 3.0) {
    out.case_tag = CaseTag::WeakHelper;
    out.r_ach = std::max({L * (1.0 - g.beta1), L * g.beta1, out.r_private});
    out.r_common = out.r_ach - out.r_private;
  } else if (g.beta1 >= 2.0) {
    out.case_tag = CaseTag::StrongHelper;
    out.r_ach = L;
    out.r_common = out.r_ach - out.r_private;
  } else if (g.beta1 == 1.0) {
    out.case_tag = CaseTag::Singular;
    out.r_ach = out.r_private;
  } else {
    out.case_tag = CaseTag::Aligned;
    out.uses_phi1 = g.beta1 < 1.0 && g.beta2 < 1.0;
    const double p = L * std::min(1.0, g.beta2);
    const double q = L * std::abs(1.0 - g.beta1);
    out.r_common = out.uses_phi1 ? phi1(p, q) : phi2(p, q);
    out.d = level_count(g);
    out.r_ach = std::max(0.0, out.r_private + out.r_common - out.d);
    if (g.beta1 < 1.0) out.r_common_sum = odd_level_rate_sum(g);
  }
  out.normalized = out.r_ach / L;
  return out;
}

// n <-> ceil(log SNR)^+ for each link.
inline ChannelParams correspondence(const GaussianParams &g) {
  g.validate();
  const auto bits = [](double x) {
    const long long n = detail::snapped_ceil(x);
    if (n > 1'000'000) throw parameter_error("log SNR too large for a deterministic instance");
    return static_cast<int>(std::max(0LL, n));
  };
  return {bits(g.log_snr1), bits(g.beta1 * g.log_snr1), bits(g.beta2 * g.log_snr1)};
}

inline UpperBounds gaussian_upper_bounds(const GaussianParams &g, const Rational &c) {
  return gaussian_upper_bounds(correspondence(g), c);
}

} // namespace wiretap

#endif
