#pragma once

#include <bit>
#include <set>
#include <vector>

#include "logmot/epoly.hpp"
#include "logmot/errors.hpp"

namespace logmot {

// The cohomology oracle computes E^log = sum dim H^q(wedge^p Omega^log) u^p v^q
// directly, with no motivic input, for the presets where sheaf cohomology has
// a closed form: split bundles on P^1, constant free log structures over a
// base with known e-polynomial, and smooth proper toric varieties. The ring
// side is certified against these values.

// A split vector bundle O(d_1) + ... + O(d_r) on P^1, recorded by its degree
// multiset.
struct SplitBundle {
  std::multiset<int> degrees;

  int rank() const { return static_cast<int>(degrees.size()); }

  friend bool operator==(const SplitBundle& a, const SplitBundle& b) {
    return a.degrees == b.degrees;
  }
};

// Line bundle cohomology on P^1: h^0(O(d)) = max(d+1, 0), h^1 = max(-d-1, 0).
inline std::pair<long long, long long> p1_cohomology(long long d) {
  return {std::max(d + 1, 0LL), std::max(-d - 1, 0LL)};
}

// wedge^p of a split bundle: degrees are the p-element subset sums.
inline SplitBundle exterior_power(const SplitBundle& b, unsigned p) {
  SplitBundle out;
  if (p > static_cast<unsigned>(b.rank())) return out;  // zero bundle
  std::vector<int> d(b.degrees.begin(), b.degrees.end());
  const size_t r = d.size();
  for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != p) continue;
    int sum = 0;
    for (size_t i = 0; i < r; ++i)
      if (mask & (size_t{1} << i)) sum += d[i];
    out.degrees.insert(sum);
  }
  return out;
}

// h^{p,q}_log dimensions of a P^1 preset whose log differentials split as the
// given bundle, together with the generating polynomial.
struct LogHodgeTable {
  std::map<std::pair<int, int>, long long> entries;  // (p, q) -> dimension

  long long at(int p, int q) const {
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
  }
};

struct ElogResult {
  LogHodgeTable table;
  EPolynomial e;
};

inline ElogResult elog_p1(const SplitBundle& omega_log) {
  ElogResult out;
  for (int p = 0; p <= omega_log.rank(); ++p) {
    SplitBundle wedge = exterior_power(omega_log, static_cast<unsigned>(p));
    long long h0 = 0, h1 = 0;
    for (int d : wedge.degrees) {
      auto [a, b] = p1_cohomology(d);
      h0 += a;
      h1 += b;
    }
    if (h0 != 0) out.table.entries[{p, 0}] = h0;
    if (h1 != 0) out.table.entries[{p, 1}] = h1;
    out.e += uv_monomial(p, 0, h0) + uv_monomial(p, 1, h1);
  }
  return out;
}

// A constant free log structure of the given rank over a smooth projective
// base with the given e-polynomial.
struct ConstantFreeSpec {
  EPolynomial base_e;
  unsigned rank = 0;
  unsigned dimension = 0;
};

// E^log of a constant free preset: the log differentials split off a trivial
// rank-r summand, so E^log = e(base) (1+u)^r.
inline EPolynomial elog_constant_free(const ConstantFreeSpec& spec) {
  EPolynomial one_plus_u = uv_monomial(0, 0) + uv_monomial(1, 0);
  return spec.base_e * one_plus_u.pow(spec.rank);
}

// E^log of a smooth proper toric n-fold: Omega^log is trivial of rank n and
// the structure sheaf has no higher cohomology, so E^log = (1+u)^n.
inline EPolynomial elog_smooth_proper_toric(unsigned n) {
  EPolynomial one_plus_u = uv_monomial(0, 0) + uv_monomial(1, 0);
  return one_plus_u.pow(n);
}

// The scissor-relation counterexample: compactify G_m inside toric P^1 and
// inside plain (P^1)°. If any motivic extension of E^log existed, twice its
// value on the standard log point would equal
// E^log(P^1) - E^log((P^1)°) + 2 E^log(pt), whose u-coefficient is odd. The
// certificate reports the companion difference
// E^log(P^1) - E^log((P^1)°) - 2 E^log(pt) = -2 + u - uv, with the same odd
// witness, and checks that both v = -1 reductions of the G_m class coincide.
struct CounterexampleCertificate {
  EPolynomial difference;           // -2 + u - uv
  UVExp odd_witness;                // monomial with odd coefficient
  UniPoly reduction_log_side;       // Ebar_1(P^1) - 2 Ebar_1(P)
  UniPoly reduction_trivial_side;   // Ebar_1((P^1)°) - 2 Ebar_1(pt)
  bool consistent = false;
};

inline CounterexampleCertificate counterexample_certificate() {
  CounterexampleCertificate cert;
  EPolynomial toric_p1 = elog_p1(SplitBundle{{0}}).e;      // 1 + u
  EPolynomial plain_p1 = elog_p1(SplitBundle{{-2}}).e;     // 1 + uv
  EPolynomial point = EPolynomial::constant(1);
  EPolynomial log_point = elog_constant_free({point, 1, 0});  // 1 + u

  cert.difference = toric_p1 - plain_p1 - Integer(2) * point;
  cert.odd_witness = UVExp{1, 0};

  cert.reduction_log_side =
      at_v(toric_p1, -1) - Integer(2) * at_v(log_point, -1);
  cert.reduction_trivial_side =
      at_v(plain_p1, -1) - Integer(2) * at_v(point, -1);

  UniPoly expected;  // -1 - u
  expected.add_term(0, -1);
  expected.add_term(1, -1);
  bool odd = cert.difference.coeff(cert.odd_witness) % 2 != 0;
  cert.consistent = odd && cert.reduction_log_side == expected &&
                    cert.reduction_trivial_side == expected;
  return cert;
}

}  // namespace logmot
