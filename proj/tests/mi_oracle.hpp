#ifndef WIRETAP_TESTS_MI_ORACLE_HPP
#define WIRETAP_TESTS_MI_ORACLE_HPP

// Test-only: I(W; Y2) by tabulating the joint distribution of (W, Y2) over
// all 2^(k+m) equally likely (w, u) inputs. Shares nothing with the rank path.

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <utility>

#include "wiretap/scheme.hpp"

namespace wiretap::testing {

inline std::string eve_view(const LinearScheme &s, unsigned w, unsigned u) {
  std::string y(static_cast<std::size_t>(s.A.rows()), '0');
  for (int r = 0; r < s.A.rows(); ++r) {
    bool bit = false;
    for (int c = 0; c < s.k; ++c) bit ^= s.A.get(r, c) && (w >> c & 1U);
    for (int c = 0; c < s.m; ++c) bit ^= s.B.get(r, c) && (u >> c & 1U);
    y[static_cast<std::size_t>(r)] = bit ? '1' : '0';
  }
  return y;
}

inline double mutual_information_by_enumeration(const LinearScheme &s) {
  const unsigned nw = 1U << s.k, nu = 1U << s.m;
  const double total = double(nw) * nu;
  std::map<std::pair<unsigned, std::string>, double> joint;
  std::map<std::string, double> marginal_y;
  for (unsigned w = 0; w < nw; ++w)
    for (unsigned u = 0; u < nu; ++u) {
      const auto y = eve_view(s, w, u);
      joint[{w, y}] += 1.0 / total;
      marginal_y[y] += 1.0 / total;
    }
  const double pw = 1.0 / nw;
  double mi = 0;
  for (const auto &[key, pwy] : joint) mi += pwy * std::log2(pwy / (pw * marginal_y[key.second]));
  return mi;
}

inline LinearScheme random_scheme(int rows, int k, int m, std::mt19937_64 &rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  LinearScheme s;
  s.k = k;
  s.m = m;
  s.A = Gf2Matrix(rows, k);
  s.B = Gf2Matrix(rows, m);
  s.C = Gf2Matrix(rows, k);
  s.D = Gf2Matrix(rows, m);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < k; ++c) {
      s.A.set(r, c, coin(rng));
      s.C.set(r, c, coin(rng));
    }
    for (int c = 0; c < m; ++c) {
      s.B.set(r, c, coin(rng));
      s.D.set(r, c, coin(rng));
    }
  }
  return s;
}

} // namespace wiretap::testing

#endif
