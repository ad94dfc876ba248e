#ifndef WIRETAP_VERIFY_HPP
#define WIRETAP_VERIFY_HPP

// Exact secrecy and decodability checks for one-shot linear schemes, and an
// exhaustive search over level-allocation schemes on small instances.
//
// With message bits w and jam bits u independent and uniform over GF(2),
// Y2 = A w + B u is uniform on the column space of [A | B], so
//   H(Y2) = rank[A | B],  H(Y2 | W) = rank B,  I(W; Y2) = rank[A | B] - rank B.
// w is recoverable from Y1 = C w + D u for every u iff C is injective and its
// column space meets that of D only in 0, i.e. rank[C | D] = k + rank D.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "wiretap/bounds.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/ldm.hpp"
#include "wiretap/scheme.hpp"

namespace wiretap {

inline int leakage(const LinearScheme &s) {
  if (s.A.rows() != s.B.rows()) throw parameter_error("leakage: A and B row counts differ");
  if (s.A.cols() != s.k || s.B.cols() != s.m) throw parameter_error("leakage: matrix widths disagree with k/m");
  return gf2_rank(hconcat(s.A, s.B)) - gf2_rank(s.B);
}

inline bool decodable(const LinearScheme &s) {
  if (s.C.rows() != s.D.rows()) throw parameter_error("decodable: C and D row counts differ");
  if (s.C.cols() != s.k || s.D.cols() != s.m) throw parameter_error("decodable: matrix widths disagree with k/m");
  return gf2_rank(s.C) == s.k && gf2_rank(hconcat(s.C, s.D)) == s.k + gf2_rank(s.D);
}

struct VerifyReport {
  int leakage_bits = 0;
  bool decodable = false;
  int message_bits = 0;
  std::vector<std::string> notes;
};

inline VerifyReport verify_scheme(const LinearScheme &s) {
  VerifyReport r;
  r.message_bits = s.k;
  r.leakage_bits = leakage(s);
  r.decodable = decodable(s);
  if (r.leakage_bits > 0) r.notes.push_back(std::to_string(r.leakage_bits) + " message bit(s) visible at the eavesdropper");
  if (!r.decodable) r.notes.push_back("message not recoverable at the legitimate receiver");
  return r;
}

namespace detail {

inline BitVector random_bits(std::size_t n, std::mt19937_64 &rng) {
  BitVector v(n);
  for (std::size_t i = 1; i <= n; ++i) v.set_level(i, (rng() & 1U) != 0);
  return v;
}

inline BitVector head(const BitVector &v, std::size_t n) {
  BitVector out(n);
  for (std::size_t i = 1; i <= n; ++i) out.set_level(i, v.level(i));
  return out;
}

} // namespace detail

// Encodes random (w, u) pairs, pushes them through the channel and decodes w
// from Y1 by solving [C | D] x = y1. Any solution carries the true w because
// the message and jam subspaces intersect trivially.
inline bool simulate_roundtrip(const LinearScheme &s, int trials, std::uint64_t seed) {
  if (!decodable(s)) throw contract_error("simulate_roundtrip requires a decodable scheme");
  if (trials < 0) throw parameter_error("trial count must be nonnegative");
  if (s.k == 0) return true;

  const Gf2Matrix cd = hconcat(s.C, s.D);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const BitVector w = detail::random_bits(static_cast<std::size_t>(s.k), rng);
    const BitVector u = detail::random_bits(static_cast<std::size_t>(s.m), rng);
    BitVector y1 = s.C * w ^ s.D * u;
    if (s.has_channel()) {
      const auto out = ldm_channel(s.message_select * w, s.jam_select * u, s.params);
      if (out.y1 != y1 || out.y2 != (s.A * w ^ s.B * u)) return false;
      y1 = out.y1;
    }
    const auto x = solve(cd, y1);
    if (!x || detail::head(*x, static_cast<std::size_t>(s.k)) != w) return false;
  }
  return true;
}

struct OracleResult {
  int rate = 0;
  Allocation witness;
};

inline constexpr int kDefaultOracleCap = 12;
inline constexpr int kOracleHardCap = 20;

namespace detail {

// Incremental GF(2) span over row bitmasks.
class XorBasis {
public:
  int rank() const noexcept { return rank_; }
  bool contains(std::uint64_t v) const noexcept { return reduce(v) == 0; }
  bool insert(std::uint64_t v) noexcept {
    v = reduce(v);
    if (!v) return false;
    basis_[std::bit_width(v) - 1] = v;
    ++rank_;
    return true;
  }

private:
  std::uint64_t reduce(std::uint64_t v) const noexcept {
    while (v) {
      const int top = std::bit_width(v) - 1;
      if (!basis_[top]) break;
      v ^= basis_[top];
    }
    return v;
  }
  std::uint64_t basis_[64] = {};
  int rank_ = 0;
};

struct OracleColumns {
  std::vector<std::uint64_t> msg_eve, msg_bob; // per X'_1 level 1..n11
  std::vector<std::uint64_t> jam_eve, jam_bob; // per X'_2 level 1..min(n2, q)
};

inline OracleColumns oracle_columns(const ChannelParams &p) {
  const int q = p.q();
  const auto col = [q](int level, int gain) -> std::uint64_t {
    const int row = level + (q - gain); // 1-based row after the shift
    return row <= q ? std::uint64_t{1} << (row - 1) : 0;
  };
  OracleColumns c;
  for (int i = 1; i <= p.n11(); ++i) {
    c.msg_eve.push_back(col(i, p.n2()));
    c.msg_bob.push_back(col(i, p.n11()));
  }
  for (int j = 1; j <= p.n2(); ++j) {
    c.jam_eve.push_back(col(j, p.n2()));
    c.jam_bob.push_back(col(j, p.n21()));
  }
  return c;
}

struct JamBranchResult {
  int rate = -1;
  std::uint64_t msg_mask = 0;
  std::uint64_t jam_mask = 0;
};

// Best message set for each jam set in [jam_begin, jam_end). Feasible message
// sets are closed under taking subsets, so the first feasible mask in
// descending popcount order is optimal for that jam set.
inline JamBranchResult search_jam_range(const OracleColumns &cols, const std::vector<std::uint64_t> &msg_order,
                                        std::uint64_t jam_begin, std::uint64_t jam_end) {
  JamBranchResult best;
  for (std::uint64_t jam = jam_begin; jam < jam_end; ++jam) {
    XorBasis eve_kernel, bob_kernel;
    for (std::size_t j = 0; j < cols.jam_eve.size(); ++j)
      if (jam >> j & 1U) {
        eve_kernel.insert(cols.jam_eve[j]);
        bob_kernel.insert(cols.jam_bob[j]);
      }
    for (std::uint64_t msg : msg_order) {
      const int k = std::popcount(msg);
      if (k <= best.rate) break;
      // leakage = 0: every message column lies in span(B)
      bool ok = true;
      for (std::uint64_t bits = msg; bits && ok; bits &= bits - 1)
        ok = eve_kernel.contains(cols.msg_eve[static_cast<std::size_t>(std::countr_zero(bits))]);
      if (!ok) continue;
      // decodable: each message column extends span(D) by one dimension
      XorBasis bob = bob_kernel;
      for (std::uint64_t bits = msg; bits && ok; bits &= bits - 1)
        ok = bob.insert(cols.msg_bob[static_cast<std::size_t>(std::countr_zero(bits))]);
      if (!ok) continue;
      best = {k, msg, jam};
      break;
    }
  }
  return best;
}

inline Allocation allocation_from_masks(const ChannelParams &p, std::uint64_t msg, std::uint64_t jam) {
  Allocation a;
  a.delta = p.delta();
  for (int i = 0; i < 64; ++i) {
    if (msg >> i & 1U) a.message_levels.push_back(i + 1);
    if (jam >> i & 1U) a.jam_levels.push_back(i + 1);
  }
  return a;
}

} // namespace detail

// Maximum message-bit count over level-allocation schemes with zero leakage
// that decode at Y1. Message levels below Bob's noise floor (i > n11) can never
// decode and jam levels below Eve's noise floor (j > n2) cannot reduce
// leakage, so both are left out of the search without loss.
inline OracleResult oracle_best_rate(const ChannelParams &p, int max_q = kDefaultOracleCap,
                                     unsigned threads = std::thread::hardware_concurrency()) {
  if (max_q > kOracleHardCap) throw capacity_error("oracle cap may not exceed " + std::to_string(kOracleHardCap));
  if (p.q() > max_q)
    throw capacity_error("oracle search limited to q <= " + std::to_string(max_q) + ", got q = " + std::to_string(p.q()));

  const auto cols = detail::oracle_columns(p);
  std::vector<std::uint64_t> msg_order(std::size_t{1} << p.n11());
  for (std::uint64_t m = 0; m < msg_order.size(); ++m) msg_order[m] = m;
  std::stable_sort(msg_order.begin(), msg_order.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });

  const std::uint64_t jam_count = std::uint64_t{1} << cols.jam_eve.size();
  threads = std::clamp<unsigned>(threads, 1, 64);
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, jam_count);

  detail::JamBranchResult best;
  if (chunks <= 1) {
    best = detail::search_jam_range(cols, msg_order, 0, jam_count);
  } else {
    std::vector<std::future<detail::JamBranchResult>> parts;
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t lo = jam_count * c / chunks, hi = jam_count * (c + 1) / chunks;
      parts.push_back(std::async(std::launch::async, [&cols, &msg_order, lo, hi] {
        return detail::search_jam_range(cols, msg_order, lo, hi);
      }));
    }
    // chunks are in ascending jam order; strict > keeps the lowest-jam witness
    for (auto &f : parts) {
      const auto r = f.get();
      if (r.rate > best.rate) best = r;
    }
  }
  return {best.rate, detail::allocation_from_masks(p, best.msg_mask, best.jam_mask)};
}

} // namespace wiretap

#endif
