#pragma once

#include <string>
#include <tuple>

#include "logmot/sparse_poly.hpp"

namespace logmot {

// Exponent pair of a u^a v^b monomial. Exponents stay nonnegative for
// E-polynomials proper; the type itself does not care.
struct UVExp {
  int u = 0;
  int v = 0;

  friend UVExp operator+(UVExp a, UVExp b) { return {a.u + b.u, a.v + b.v}; }
  friend bool operator==(UVExp a, UVExp b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(UVExp a, UVExp b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  }
};

// Hodge-Deligne generating function sum h^{p,q} u^p v^q.
using EPolynomial = sparse_poly<UVExp>;

// Univariate polynomial with integer (possibly negative) exponents. The
// variable name is supplied at print time; Ebar components, the b-map image
// and the chi_y comparison all live here.
using UniPoly = sparse_poly<int>;

inline EPolynomial uv_monomial(int pu, int pv, Integer c = 1) {
  return EPolynomial::monomial(UVExp{pu, pv}, std::move(c));
}

inline Integer eval(const EPolynomial& e, const Integer& u, const Integer& v) {
  Integer total = 0;
  for (const auto& [m, c] : e.terms()) {
    Integer t = c;
    for (int i = 0; i < m.u; ++i) t *= u;
    for (int i = 0; i < m.v; ++i) t *= v;
    total += t;
  }
  return total;
}

// Substitute v := value; result is a polynomial in u.
inline UniPoly at_v(const EPolynomial& e, const Integer& value) {
  UniPoly r;
  for (const auto& [m, c] : e.terms()) {
    Integer t = c;
    for (int i = 0; i < m.v; ++i) t *= value;
    r.add_term(m.u, t);
  }
  return r;
}

// Substitute u := value; result is a polynomial in v.
inline UniPoly at_u(const EPolynomial& e, const Integer& value) {
  UniPoly r;
  for (const auto& [m, c] : e.terms()) {
    Integer t = c;
    for (int i = 0; i < m.u; ++i) t *= value;
    r.add_term(m.v, t);
  }
  return r;
}

inline int total_degree(const EPolynomial& e) {
  int d = 0;
  for (const auto& [m, c] : e.terms()) d = std::max(d, m.u + m.v);
  return d;
}

// The pair (E(u,-1), E(0,v)): Euler characteristics of the wedge powers and
// Betti numbers of the structure sheaf. This is the target of both the
// cohomology oracle and the ring-side tbar map.
struct EBarPair {
  UniPoly first;   // in u
  UniPoly second;  // in v

  friend bool operator==(const EBarPair& a, const EBarPair& b) {
    return a.first == b.first && a.second == b.second;
  }
  friend bool operator!=(const EBarPair& a, const EBarPair& b) { return !(a == b); }
};

inline EBarPair ebar_of(const EPolynomial& e) { return {at_v(e, -1), at_u(e, 0)}; }

namespace detail {

inline void append_signed_coeff(std::string& out, const Integer& c, bool lead,
                                bool print_unit) {
  Integer a = c < 0 ? Integer(-c) : c;
  if (lead) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  if (print_unit || a != 1) out += a.str();
}

}  // namespace detail

// Monomials are printed in descending canonical order with explicit '*' and
// '^' so the output re-parses under the expression grammar.
inline std::string to_string(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool lead = true;
  for (const auto& [e, c] : p.terms()) {
    detail::append_signed_coeff(out, c, lead, e == 0);
    if (e != 0) {
      Integer a = c < 0 ? Integer(-c) : c;
      if (a != 1) out += "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    lead = false;
  }
  return out;
}

inline std::string to_string(const EPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool lead = true;
  for (const auto& [m, c] : p.terms()) {
    const bool unit_mono = m.u == 0 && m.v == 0;
    detail::append_signed_coeff(out, c, lead, unit_mono);
    Integer a = c < 0 ? Integer(-c) : c;
    bool need_star = !unit_mono && a != 1;
    if (m.u != 0) {
      out += need_star ? "*u" : "u";
      if (m.u != 1) out += "^" + std::to_string(m.u);
      need_star = true;
    }
    if (m.v != 0) {
      out += need_star ? "*v" : "v";
      if (m.v != 1) out += "^" + std::to_string(m.v);
    }
    lead = false;
  }
  return out;
}

}  // namespace logmot
