#ifndef WIRETAP_AUDIT_HPP
#define WIRETAP_AUDIT_HPP

// Exhaustive consistency audit over all deterministic instances with q <= max_q.

#include <cstdint>
#include <string>
#include <vector>

#include "wiretap/bounds.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/scheme.hpp"
#include "wiretap/verify.hpp"

namespace wiretap {

inline constexpr int kAuditSchemeCap = 24;
inline constexpr int kAuditOracleCap = 10;

struct AuditOptions {
  int max_q = 10;
  bool oracle = false;
  std::uint64_t seed = 1;
  int roundtrip_trials = 8;
};

struct AuditReport {
  long instances = 0;
  long schemes_checked = 0;
  long singular = 0;
  long oracle_runs = 0;
  long oracle_gaps = 0;
  std::vector<std::string> failures;
  std::vector<std::string> findings;

  bool ok() const { return failures.empty(); }
};

inline void check_audit_caps(const AuditOptions &o) {
  if (o.max_q < 0) throw parameter_error("max_q must be nonnegative");
  if (o.max_q > kAuditSchemeCap)
    throw capacity_error("max_q " + std::to_string(o.max_q) + " exceeds the scheme-check cap of " +
                         std::to_string(kAuditSchemeCap));
  if (o.oracle && o.max_q > kAuditOracleCap)
    throw capacity_error("max_q " + std::to_string(o.max_q) + " exceeds the oracle cap of " +
                         std::to_string(kAuditOracleCap));
}

inline AuditReport audit_grid(const AuditOptions &o) {
  check_audit_caps(o);
  AuditReport rep;
  const auto fail = [&](const ChannelParams &p, const std::string &what) {
    rep.failures.push_back(to_string(p) + ": " + what);
  };

  for (int n11 = 0; n11 <= o.max_q; ++n11)
    for (int n21 = 0; n21 <= o.max_q; ++n21)
      for (int n2 = 0; n2 <= o.max_q; ++n2) {
        const ChannelParams p(n11, n21, n2);
        ++rep.instances;
        const auto rb = r_achievable(p);
        const auto ub = upper_bounds(p);
        if (Rational(rb.r_ach) > ub.min_ub)
          fail(p, "r_ach " + std::to_string(rb.r_ach) + " exceeds min_ub " + to_exact_string(ub.min_ub));

        if (rb.case_tag == CaseTag::Singular) {
          ++rep.singular;
          rep.findings.push_back(to_string(p) + ": Singular (delta = 0), private rate " + std::to_string(rb.r_ach) +
                                 " only");
        } else {
          ++rep.schemes_checked;
          const auto alloc = construct_allocation(p);
          const auto scheme = build_linear_scheme(alloc, p);
          if (scheme.k != rb.r_ach)
            fail(p, "construction carries " + std::to_string(scheme.k) + " bits, formula gives " +
                        std::to_string(rb.r_ach));
          if (const int leak = leakage(scheme); leak != 0) fail(p, "leakage " + std::to_string(leak) + " bits");
          if (!decodable(scheme)) {
            fail(p, "constructed scheme not decodable");
          } else if (!simulate_roundtrip(scheme, o.roundtrip_trials,
                                         o.seed ^ (std::uint64_t(n11) << 40 | std::uint64_t(n21) << 20 | n2))) {
            fail(p, "roundtrip simulation failed");
          }
        }

        if (o.oracle) {
          ++rep.oracle_runs;
          const auto best = oracle_best_rate(p, kAuditOracleCap);
          if (best.rate < rb.r_ach)
            fail(p, "oracle " + std::to_string(best.rate) + " below formula " + std::to_string(rb.r_ach));
          if (Rational(best.rate) > ub.min_ub)
            fail(p, "oracle " + std::to_string(best.rate) + " exceeds min_ub " + to_exact_string(ub.min_ub));
          if (best.rate > rb.r_ach) {
            ++rep.oracle_gaps;
            rep.findings.push_back(to_string(p) + ": oracle " + std::to_string(best.rate) + " > formula " +
                                   std::to_string(rb.r_ach) + " [" + std::string(to_string(rb.case_tag)) + "]");
          }
        }
      }
  return rep;
}

} // namespace wiretap

#endif
