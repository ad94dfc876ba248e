#ifndef WIRETAP_SWEEP_HPP
#define WIRETAP_SWEEP_HPP

// Parameter sweeps of the normalized achievable rate and converse bound,
// with CSV and standalone SVG writers.

#include <algorithm>
#include <cstdio>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "wiretap/bounds.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/gaussian.hpp"
#include "wiretap/scheme.hpp"

namespace wiretap {

enum class SweepAxis { beta1, beta2, n11, n21, n2 };

inline std::string_view to_string(SweepAxis a) {
  switch (a) {
  case SweepAxis::beta1: return "beta1";
  case SweepAxis::beta2: return "beta2";
  case SweepAxis::n11: return "n11";
  case SweepAxis::n21: return "n21";
  case SweepAxis::n2: return "n2";
  }
  return "?";
}

inline SweepAxis parse_axis(std::string_view s) {
  for (auto a : {SweepAxis::beta1, SweepAxis::beta2, SweepAxis::n11, SweepAxis::n21, SweepAxis::n2})
    if (to_string(a) == s) return a;
  throw parameter_error("unknown sweep axis '" + std::string(s) + "'");
}

inline bool is_gaussian_axis(SweepAxis a) { return a == SweepAxis::beta1 || a == SweepAxis::beta2; }

// Parameters held constant along the sweep.
struct FixedParams {
  std::optional<int> n11, n21, n2;
  std::optional<Rational> beta1, beta2;
};

struct SweepSpec {
  SweepAxis axis = SweepAxis::beta1;
  Rational start{0}, stop{0}, step{1};
  FixedParams fixed;
  double log_snr1 = 40;
  Rational const_c{0};
  bool asymptotic = false; // Gaussian axes: report the deterministic rate under the correspondence

  void validate() const {
    if (step <= 0) throw parameter_error("sweep step must be positive");
    if (start > stop) throw parameter_error("sweep start must not exceed stop");
    if (const_c < 0) throw parameter_error("gap constant c must be nonnegative");
    const auto need = [](bool present, const char *name) {
      if (!present) throw parameter_error(std::string("sweep needs a fixed value for ") + name);
    };
    switch (axis) {
    case SweepAxis::beta1: need(fixed.beta2.has_value(), "beta2"); break;
    case SweepAxis::beta2: need(fixed.beta1.has_value(), "beta1"); break;
    case SweepAxis::n11: need(fixed.n21 && fixed.n2, "n21 and n2"); break;
    case SweepAxis::n21: need(fixed.n11 && fixed.n2, "n11 and n2"); break;
    case SweepAxis::n2: need(fixed.n11 && fixed.n21, "n11 and n21"); break;
    }
    if (is_gaussian_axis(axis)) {
      GaussianParams{log_snr1, 0, 0}.validate();
      if (start < 0) throw parameter_error("beta values must be nonnegative");
    } else if (start < 0) {
      throw parameter_error("gains must be nonnegative");
    }
  }

  std::vector<Rational> grid() const {
    validate();
    std::vector<Rational> pts;
    for (Rational v = start; v <= stop; v += step) {
      if (!is_gaussian_axis(axis) && v.denominator() != 1)
        throw parameter_error("integer axis " + std::string(to_string(axis)) + " hit non-integer value " +
                              to_exact_string(v));
      pts.push_back(v);
      if (pts.size() > 10'000'000) throw parameter_error("sweep grid too large");
    }
    if (pts.empty()) throw parameter_error("empty sweep grid");
    return pts;
  }
};

struct SweepRow {
  Rational axis_value;
  double r_ach = 0, r_private = 0, r_common = 0;
  Rational ub1, ub2, ub3, min_ub;
  double normalized_ach = 0, normalized_ub = 0;
  CaseTag case_tag = CaseTag::Singular;
};

namespace detail {

inline SweepRow deterministic_row(const ChannelParams &p, const Rational &axis_value, const Rational &c) {
  const auto rb = r_achievable(p);
  const auto ub = gaussian_upper_bounds(p, c);
  SweepRow row{axis_value, double(rb.r_ach), double(rb.r_private), double(rb.r_common),
               ub.ub1, ub.ub2, ub.ub3, ub.min_ub, 0, 0, rb.case_tag};
  if (p.n11() > 0) {
    row.normalized_ach = rb.r_ach / double(p.n11());
    row.normalized_ub = to_double(ub.min_ub) / p.n11();
  }
  return row;
}

inline SweepRow evaluate_point(const SweepSpec &spec, const Rational &v) {
  if (!is_gaussian_axis(spec.axis)) {
    const int x = static_cast<int>(v.numerator());
    const auto &f = spec.fixed;
    const ChannelParams p = spec.axis == SweepAxis::n11   ? ChannelParams(x, *f.n21, *f.n2)
                            : spec.axis == SweepAxis::n21 ? ChannelParams(*f.n11, x, *f.n2)
                                                          : ChannelParams(*f.n11, *f.n21, x);
    return deterministic_row(p, v, spec.const_c);
  }

  GaussianParams g{spec.log_snr1, 0, 0};
  g.beta1 = to_double(spec.axis == SweepAxis::beta1 ? v : *spec.fixed.beta1);
  g.beta2 = to_double(spec.axis == SweepAxis::beta2 ? v : *spec.fixed.beta2);
  const ChannelParams p = correspondence(g);
  if (spec.asymptotic) return deterministic_row(p, v, Rational(0));

  const auto gr = gaussian_rate(g);
  const auto ub = gaussian_upper_bounds(p, spec.const_c);
  return {v, gr.r_ach, gr.r_private, gr.r_common, ub.ub1, ub.ub2, ub.ub3, ub.min_ub,
          gr.normalized, to_double(ub.min_ub) / g.log_snr1, gr.case_tag};
}

} // namespace detail

// Rows in axis order; points are evaluated concurrently in contiguous chunks.
inline std::vector<SweepRow> run_sweep(const SweepSpec &spec, unsigned threads = std::thread::hardware_concurrency()) {
  const auto pts = spec.grid();
  std::vector<SweepRow> rows(pts.size());
  const std::size_t chunks = std::clamp<std::size_t>(threads, 1, std::min<std::size_t>(pts.size(), 64));
  const auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) rows[i] = detail::evaluate_point(spec, pts[i]);
  };
  if (chunks == 1) {
    work(0, pts.size());
  } else {
    std::vector<std::future<void>> tasks;
    for (std::size_t c = 0; c < chunks; ++c)
      tasks.push_back(std::async(std::launch::async, work, pts.size() * c / chunks, pts.size() * (c + 1) / chunks));
    for (auto &t : tasks) t.get();
  }
  return rows;
}

inline constexpr std::string_view kCsvHeader =
    "axis_value,r_ach,r_private,r_common,ub1,ub2,ub3,min_ub,normalized_ach,normalized_ub,case_tag";

inline std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x == 0.0 ? 0.0 : x); // no "-0.000000"
  return buf;
}

inline void write_csv(std::ostream &os, const std::vector<SweepRow> &rows) {
  os << kCsvHeader << '\n';
  for (const auto &r : rows) {
    os << to_fixed_string(r.axis_value) << ',' << format_real(r.r_ach) << ',' << format_real(r.r_private) << ','
       << format_real(r.r_common) << ',' << to_fixed_string(r.ub1) << ',' << to_fixed_string(r.ub2) << ','
       << to_fixed_string(r.ub3) << ',' << to_fixed_string(r.min_ub) << ',' << format_real(r.normalized_ach) << ','
       << format_real(r.normalized_ub) << ',' << to_string(r.case_tag) << '\n';
  }
}

// Normalized achievable rate and normalized minimum bound versus the axis.
// Singular points break the curves.
inline void write_svg(std::ostream &os, const SweepSpec &spec, const std::vector<SweepRow> &rows) {
  constexpr double W = 800, H = 500, left = 70, right = 30, top = 40, bottom = 60;
  const double x0 = to_double(spec.start), x1 = to_double(spec.stop);
  const double xspan = x1 > x0 ? x1 - x0 : 1.0;
  double ymax = 1.0;
  for (const auto &r : rows) ymax = std::max({ymax, r.normalized_ach, r.normalized_ub});
  ymax = std::ceil(ymax * 4.0 + 0.2) / 4.0;

  const auto px = [&](double x) { return left + (x - x0) / xspan * (W - left - right); };
  const auto py = [&](double y) { return H - bottom - y / ymax * (H - top - bottom); };
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << ' ' << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes, ticks, grid
  os << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << left << "\" y1=\"" << H - bottom << "\" x2=\"" << W - right << "\" y2=\"" << H - bottom
     << "\"/>\n"
     << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << H - bottom << "\"/>\n"
     << "</g>\n";
  for (int i = 0; i <= 10; ++i) {
    const double x = x0 + xspan * i / 10.0;
    os << "<line x1=\"" << num(px(x)) << "\" y1=\"" << H - bottom << "\" x2=\"" << num(px(x)) << "\" y2=\""
       << H - bottom + 5 << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << num(px(x)) << "\" y=\"" << H - bottom + 20 << "\" text-anchor=\"middle\">" << num(x)
       << "</text>\n";
  }
  for (double y = 0; y <= ymax + 1e-9; y += 0.25) {
    os << "<line x1=\"" << left << "\" y1=\"" << num(py(y)) << "\" x2=\"" << W - right << "\" y2=\"" << num(py(y))
       << "\" stroke=\"#dddddd\"/>\n"
       << "<text x=\"" << left - 8 << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">" << num(y)
       << "</text>\n";
  }
  os << "<text x=\"" << (left + W - right) / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\">"
     << to_string(spec.axis) << "</text>\n"
     << "<text x=\"18\" y=\"" << (top + H - bottom) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << (top + H - bottom) / 2 << ")\">normalized secrecy rate" << (spec.asymptotic ? " (asymptotic)" : "")
     << "</text>\n";

  const auto curve = [&](auto value, const char *colour, const char *dash) {
    std::string pts;
    const auto flush = [&] {
      if (!pts.empty())
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\"" << dash << " points=\"" << pts
           << "\"/>\n";
      pts.clear();
    };
    for (const auto &r : rows) {
      if (r.case_tag == CaseTag::Singular) {
        flush();
        continue;
      }
      pts += num(px(to_double(r.axis_value))) + "," + num(py(value(r))) + " ";
    }
    flush();
  };
  curve([](const SweepRow &r) { return r.normalized_ub; }, "#d62728", " stroke-dasharray=\"6 4\"");
  curve([](const SweepRow &r) { return r.normalized_ach; }, "#1f77b4", "");

  const double lx = W - right - 210, ly = top + 10;
  os << "<rect x=\"" << lx << "\" y=\"" << ly << "\" width=\"200\" height=\"48\" fill=\"white\" stroke=\"#999999\"/>\n"
     << "<line x1=\"" << lx + 10 << "\" y1=\"" << ly + 16 << "\" x2=\"" << lx + 40 << "\" y2=\"" << ly + 16
     << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n"
     << "<text x=\"" << lx + 48 << "\" y=\"" << ly + 20 << "\">achievable</text>\n"
     << "<line x1=\"" << lx + 10 << "\" y1=\"" << ly + 36 << "\" x2=\"" << lx + 40 << "\" y2=\"" << ly + 36
     << "\" stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n"
     << "<text x=\"" << lx + 48 << "\" y=\"" << ly + 40 << "\">upper bound (min)</text>\n"
     << "</svg>\n";
}

} // namespace wiretap

#endif
