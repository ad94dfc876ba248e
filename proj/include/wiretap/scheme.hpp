#ifndef WIRETAP_SCHEME_HPP
#define WIRETAP_SCHEME_HPP

// Achievable secrecy rate of the deterministic wiretap channel with a
// helper, and the Delta-partition alignment/jamming construction realizing it.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <string>
#include <string_view>
#include <vector>

#include "wiretap/errors.hpp"
#include "wiretap/ldm.hpp"

namespace wiretap {

namespace detail {
// Floor tolerant of representation error in decimal inputs (e.g. 0.35 * 20).
inline long long snapped_floor(double x) { return static_cast<long long>(std::floor(x + 1e-9)); }
inline long long snapped_ceil(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }
inline int positive_part(int x) { return x > 0 ? x : 0; }
} // namespace detail

// l(p, q) = floor(p / q), with l(p, 0) = 0.
template <std::integral T> long long l_func(T p, T q) { return q > 0 ? static_cast<long long>(p / q) : 0; }
template <std::floating_point T> long long l_func(T p, T q) { return q > 0 ? detail::snapped_floor(p / q) : 0; }

// phi1 forfeits the remainder partition relative to phi2; both are exact for
// integer arguments because the product l*q (l even) or (l+1)*q (l odd) is even.
template <typename T>
  requires std::integral<T> || std::floating_point<T>
T phi1(T p, T q) {
  const auto l = l_func(p, q);
  if (l % 2 == 0) return static_cast<T>(l) * q / 2;
  return p - static_cast<T>(l + 1) * q / 2;
}

template <typename T>
  requires std::integral<T> || std::floating_point<T>
T phi2(T p, T q) {
  const auto l = l_func(p, q);
  if (l % 2 == 1) return static_cast<T>(l + 1) * q / 2;
  return p - static_cast<T>(l) * q / 2;
}

enum class CaseTag { WeakHelper, Aligned, StrongHelper, Singular };

inline std::string_view to_string(CaseTag c) {
  switch (c) {
  case CaseTag::WeakHelper: return "WeakHelper";
  case CaseTag::Aligned: return "Aligned";
  case CaseTag::StrongHelper: return "StrongHelper";
  case CaseTag::Singular: return "Singular";
  }
  return "?";
}

// Which argument of max{n11 - n21, n21, r_p} the weak-helper construction realizes.
enum class WeakWinner { HelperFreeTop, AlignedJamming, PrivateOnly };

struct RateBreakdown {
  int r_private = 0;
  int r_common = 0;
  int r_ach = 0;
  CaseTag case_tag = CaseTag::Singular;
  bool degenerate = false; // n11 == 0
  bool uses_phi1 = false;  // Aligned only
};

inline int r_private(const ChannelParams &p) { return detail::positive_part(p.n11() - p.n2()); }

// Case regions on n21/n11, compared in integer arithmetic.
inline CaseTag classify(const ChannelParams &p) {
  if (p.n11() == 0) return p.n21() > 0 ? CaseTag::StrongHelper : CaseTag::Singular;
  if (3 * p.n21() < 2 * p.n11()) return CaseTag::WeakHelper;
  if (p.n21() >= 2 * p.n11()) return CaseTag::StrongHelper;
  if (p.delta() == 0) return CaseTag::Singular;
  return CaseTag::Aligned;
}

inline bool uses_phi1(const ChannelParams &p) { return p.n11() > p.n2() && p.n11() > p.n21(); }

// Common part of the user's signal: levels visible at the eavesdropper.
inline int common_levels(const ChannelParams &p) { return p.n11() - r_private(p); }

inline WeakWinner weak_winner(const ChannelParams &p) {
  const int top = p.n11() - p.n21();
  const int rp = r_private(p);
  if (top >= p.n21() && top >= rp) return WeakWinner::HelperFreeTop;
  if (p.n21() >= rp) return WeakWinner::AlignedJamming;
  return WeakWinner::PrivateOnly;
}

inline RateBreakdown r_achievable(const ChannelParams &p) {
  RateBreakdown out;
  out.r_private = r_private(p);
  out.case_tag = classify(p);
  if (p.n11() == 0) {
    out.degenerate = true;
    return out;
  }
  switch (out.case_tag) {
  case CaseTag::WeakHelper:
    out.r_ach = std::max({p.n11() - p.n21(), p.n21(), out.r_private});
    break;
  case CaseTag::StrongHelper:
    out.r_ach = p.n11();
    break;
  case CaseTag::Singular:
    out.r_ach = out.r_private;
    break;
  case CaseTag::Aligned: {
    out.uses_phi1 = uses_phi1(p);
    const int nc = common_levels(p);
    const int rc = out.uses_phi1 ? phi1(nc, p.delta()) : phi2(nc, p.delta());
    out.r_ach = out.r_private + rc;
    break;
  }
  }
  out.r_common = out.r_ach - out.r_private;
  return out;
}

// Message levels are indices into X'_1 (1..n11, i.e. positions within the
// user's signal as received at Y1). Jam levels are indices into X-bar_2, the
// helper signal as seen at Y2 (1..n2); X-bar_2 level j carries X'_2 level j.
struct Allocation {
  std::vector<int> message_levels;
  std::vector<int> jam_levels;
  int delta = 0;

  friend bool operator==(const Allocation &, const Allocation &) = default;
};

namespace detail {

inline void append_range(std::vector<int> &out, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) out.push_back(i);
}

// Odd Delta-partitions of levels 1..n counted from the top.
inline void odd_partitions_from_top(std::vector<int> &out, int n, int delta) {
  for (int start = 1, idx = 1; start <= n; start += delta, ++idx)
    if (idx % 2 == 1) append_range(out, start, std::min(start + delta - 1, n));
}

// Partitions of levels 1..n counted upward from level n; even ones are used.
// The partition just above the private part stays free so the jam shadow of
// the partition above it does not land on private levels.
inline void even_partitions_from_bottom(std::vector<int> &out, int n, int delta) {
  for (int hi = n, idx = 1; hi >= 1; hi -= delta, ++idx)
    if (idx % 2 == 0) append_range(out, std::max(1, hi - delta + 1), hi);
}

} // namespace detail

inline Allocation construct_allocation(const ChannelParams &p) {
  const CaseTag tag = classify(p);
  if (tag == CaseTag::Singular)
    throw construction_unavailable("no alignment scheme at n11 == n21 (delta = 0) for " + to_string(p));

  Allocation a;
  a.delta = p.delta();
  const int nc = common_levels(p);
  auto &msg = a.message_levels;

  switch (tag) {
  case CaseTag::StrongHelper:
    detail::append_range(msg, 1, p.n11());
    break;
  case CaseTag::WeakHelper:
    switch (weak_winner(p)) {
    case WeakWinner::HelperFreeTop:
      detail::append_range(msg, 1, p.n11() - p.n21());
      break;
    case WeakWinner::AlignedJamming:
      detail::odd_partitions_from_top(msg, p.n11(), a.delta);
      break;
    case WeakWinner::PrivateOnly:
      detail::append_range(msg, nc + 1, p.n11());
      break;
    }
    break;
  case CaseTag::Aligned:
    if (uses_phi1(p))
      detail::even_partitions_from_bottom(msg, nc, a.delta);
    else
      detail::odd_partitions_from_top(msg, nc, a.delta);
    detail::append_range(msg, nc + 1, p.n11());
    break;
  case CaseTag::Singular:
    break;
  }

  std::sort(msg.begin(), msg.end());
  // Every message level the eavesdropper can see gets the aligned jam level.
  for (int lvl : msg)
    if (lvl <= p.n2()) a.jam_levels.push_back(lvl);
  return a;
}

// Private levels only; the fallback when construct_allocation is unavailable.
inline Allocation private_only_allocation(const ChannelParams &p) {
  Allocation a;
  a.delta = p.delta();
  detail::append_range(a.message_levels, common_levels(p) + 1, p.n11());
  return a;
}

// Message/jam bits mapped to both receivers:
//   Y2 = A w + B u,  Y1 = C w + D u.
// message_select/jam_select place the bits on X'_1/X'_2 levels; they are empty
// for schemes built directly from matrices.
struct LinearScheme {
  int k = 0;
  int m = 0;
  Gf2Matrix A, B, C, D;
  ChannelParams params;
  Gf2Matrix message_select;
  Gf2Matrix jam_select;

  bool has_channel() const { return message_select.rows() == params.q() && params.q() > 0; }
};

inline LinearScheme build_linear_scheme(const Allocation &a, const ChannelParams &p) {
  const int q = p.q();
  LinearScheme s;
  s.params = p;
  s.k = static_cast<int>(a.message_levels.size());
  s.m = static_cast<int>(a.jam_levels.size());
  s.message_select = Gf2Matrix(q, s.k);
  s.jam_select = Gf2Matrix(q, s.m);
  for (int c = 0; c < s.k; ++c) {
    const int lvl = a.message_levels[static_cast<std::size_t>(c)];
    if (lvl < 1 || lvl > p.n11())
      throw parameter_error("message level " + std::to_string(lvl) + " outside 1.." + std::to_string(p.n11()));
    s.message_select.set(lvl - 1, c, true);
  }
  for (int c = 0; c < s.m; ++c) {
    const int lvl = a.jam_levels[static_cast<std::size_t>(c)];
    if (lvl < 1 || lvl > p.n2())
      throw parameter_error("jam level " + std::to_string(lvl) + " outside 1.." + std::to_string(p.n2()));
    s.jam_select.set(lvl - 1, c, true);
  }
  const auto s_eve = Gf2Matrix::shift(q - p.n2(), q);
  s.A = s_eve * s.message_select;
  s.B = s_eve * s.jam_select;
  s.C = Gf2Matrix::shift(q - p.n11(), q) * s.message_select;
  s.D = Gf2Matrix::shift(q - p.n21(), q) * s.jam_select;
  return s;
}

} // namespace wiretap

#endif
