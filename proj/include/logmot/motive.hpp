#pragma once

#include <string>
#include <utility>

#include "logmot/symbols.hpp"

namespace logmot {

// Exponent assignment of one monomial: symbol name -> exponent, no zero
// entries. The map's lexicographic comparison over (name, exponent) pairs is
// exactly the canonical monomial order.
struct SymbolMonomial {
  std::map<std::string, int> exps;

  static SymbolMonomial single(std::string name, int exp) {
    SymbolMonomial m;
    if (exp != 0) m.exps.emplace(std::move(name), exp);
    return m;
  }

  friend SymbolMonomial operator+(const SymbolMonomial& a, const SymbolMonomial& b) {
    SymbolMonomial r = a;
    for (const auto& [name, e] : b.exps) {
      auto [it, fresh] = r.exps.try_emplace(name, e);
      if (!fresh) {
        it->second += e;
        if (it->second == 0) r.exps.erase(it);
      }
    }
    return r;
  }

  friend bool operator==(const SymbolMonomial& a, const SymbolMonomial& b) {
    return a.exps == b.exps;
  }
  friend bool operator<(const SymbolMonomial& a, const SymbolMonomial& b) {
    return a.exps < b.exps;
  }
};

// An element of the modeled Grothendieck ring of varieties: a free commutative
// ring over the declared symbols, Laurent in L and polynomial in everything
// else. Model equality is polynomial equality, which is sound but incomplete
// for true equality of classes of varieties; every identity the library
// verifies lives inside this modeled subring.
class MotiveClass {
 public:
  MotiveClass() = default;

  static MotiveClass zero() { return MotiveClass(); }

  static MotiveClass constant(Integer c) {
    MotiveClass x;
    x.poly_ = Poly::constant(std::move(c));
    return x;
  }

  // The Lefschetz class L^k; any integer k is allowed.
  static MotiveClass lefschetz(int k = 1, Integer c = 1) {
    MotiveClass x;
    if (k == 0)
      x.poly_ = Poly::constant(std::move(c));
    else
      x.poly_ = Poly::monomial(SymbolMonomial::single(kLefschetz, k), std::move(c));
    return x;
  }

  // [G_m] = L - 1; kept as a derived class so toric output stays in Z[L].
  static MotiveClass gm() { return lefschetz() - constant(1); }

  static MotiveClass symbol(SymbolTablePtr table, const std::string& name) {
    if (name == kLefschetz) return lefschetz();
    if (!table || !table->find(name))
      throw domain_violation("unknown symbol '" + name + "'");
    MotiveClass x;
    x.poly_ = Poly::monomial(SymbolMonomial::single(name, 1));
    x.table_ = std::move(table);
    return x;
  }

  bool is_zero() const { return poly_.is_zero(); }

  // True when L is the only symbol appearing.
  bool is_l_pure() const {
    for (const auto& [m, c] : poly_.terms())
      for (const auto& [name, e] : m.exps)
        if (name != kLefschetz) return false;
    return true;
  }

  const SymbolTablePtr& table() const { return table_; }

  MotiveClass& operator+=(const MotiveClass& o) {
    table_ = merged_table(*this, o);
    poly_ += o.poly_;
    return *this;
  }
  MotiveClass& operator-=(const MotiveClass& o) {
    table_ = merged_table(*this, o);
    poly_ -= o.poly_;
    return *this;
  }
  MotiveClass& operator*=(const MotiveClass& o) {
    table_ = merged_table(*this, o);
    poly_ = poly_ * o.poly_;
    return *this;
  }

  friend MotiveClass operator+(MotiveClass a, const MotiveClass& b) { return a += b; }
  friend MotiveClass operator-(MotiveClass a, const MotiveClass& b) { return a -= b; }
  friend MotiveClass operator*(MotiveClass a, const MotiveClass& b) { return a *= b; }
  friend MotiveClass operator-(const MotiveClass& a) {
    MotiveClass r;
    r.poly_ = -a.poly_;
    r.table_ = a.table_;
    return r;
  }

  MotiveClass pow(unsigned long long e) const {
    MotiveClass r = constant(1);
    r.table_ = table_;
    for (unsigned long long i = 0; i < e; ++i) r *= *this;
    return r;
  }

  // Equality is structural; the table is bookkeeping, not content.
  friend bool operator==(const MotiveClass& a, const MotiveClass& b) {
    return a.poly_ == b.poly_;
  }
  friend bool operator!=(const MotiveClass& a, const MotiveClass& b) {
    return !(a == b);
  }
  friend bool operator<(const MotiveClass& a, const MotiveClass& b) {
    return a.poly_ < b.poly_;
  }

  const std::map<SymbolMonomial, Integer>& terms() const { return poly_.terms(); }

  // If the class is a single monomial c * L^k with c = +-1, return (c, k).
  // These are the only units the expression grammar may invert.
  bool unit_monomial(Integer& c, int& k) const {
    if (poly_.terms().size() != 1) return false;
    const auto& [m, coeff] = *poly_.terms().begin();
    if (coeff != 1 && coeff != -1) return false;
    if (m.exps.empty()) {
      c = coeff;
      k = 0;
      return true;
    }
    if (m.exps.size() != 1 || m.exps.begin()->first != kLefschetz) return false;
    c = coeff;
    k = m.exps.begin()->second;
    return true;
  }

  friend MotiveClass operator*(const MotiveClass& a, const Integer& k) {
    MotiveClass r;
    r.poly_ = a.poly_ * k;
    r.table_ = a.table_;
    return r;
  }
  friend MotiveClass operator*(const Integer& k, const MotiveClass& a) { return a * k; }

 private:
  using Poly = sparse_poly<SymbolMonomial>;

  // Operands must come from the same table; an L-pure class (null table) is
  // compatible with anything.
  static SymbolTablePtr merged_table(const MotiveClass& a, const MotiveClass& b) {
    if (a.table_ && b.table_ && a.table_ != b.table_)
      throw domain_violation("operands use different symbol tables");
    return a.table_ ? a.table_ : b.table_;
  }

  Poly poly_;
  SymbolTablePtr table_;

  friend EPolynomial e_of(const MotiveClass&);
  friend MotiveClass dual_of(const MotiveClass&);
  friend MotiveClass substitute_symbol(const MotiveClass&, const std::string&,
                                       const MotiveClass&);
};

// The Hodge-Deligne realization: ring homomorphism with L -> uv and each
// declared symbol to its e-polynomial. Defined on the ring itself, not its
// localization, so negative L-exponents are rejected.
inline EPolynomial e_of(const MotiveClass& x) {
  EPolynomial total;
  for (const auto& [m, c] : x.terms()) {
    EPolynomial t = EPolynomial::constant(c);
    for (const auto& [name, e] : m.exps) {
      if (e < 0)
        throw domain_violation(
            "e is undefined on negative exponents (class lies outside the "
            "unlocalized ring)");
      if (name == kLefschetz) {
        t *= uv_monomial(e, e);
      } else {
        t *= x.table()->at(name).e_poly.pow(static_cast<unsigned>(e));
      }
    }
    total += t;
  }
  return total;
}

// Compactly supported Euler characteristic: e evaluated at u = v = 1.
inline Integer chi_c_of(const MotiveClass& x) { return eval(e_of(x), 1, 1); }

// The classical duality involution on the localized ring: L -> L^-1 and each
// smooth projective symbol S -> S * L^-dim(S). Monomials over symbols without
// the smooth_projective flag have no dual in the model.
inline MotiveClass dual_of(const MotiveClass& x) {
  MotiveClass r;
  r.table_ = x.table_;
  for (const auto& [m, c] : x.terms()) {
    long long l_exp = 0;
    SymbolMonomial dual_m;
    for (const auto& [name, e] : m.exps) {
      if (name == kLefschetz) {
        l_exp -= e;
      } else {
        const VarietySymbol& s = x.table()->at(name);
        if (!s.smooth_projective)
          throw domain_violation("symbol '" + name +
                                 "' is not smooth projective; duality is "
                                 "undefined on it");
        l_exp -= static_cast<long long>(e) * s.dimension;
        dual_m.exps.emplace(name, e);
      }
    }
    if (l_exp != 0) dual_m.exps.emplace(kLefschetz, static_cast<int>(l_exp));
    r.poly_.add_term(std::move(dual_m), c);
  }
  return r;
}

// Replace every occurrence of a symbol by a class. Used by consistency
// checkers that solve for unknown coefficients symbolically.
inline MotiveClass substitute_symbol(const MotiveClass& x, const std::string& name,
                                     const MotiveClass& value) {
  MotiveClass total;
  for (const auto& [m, c] : x.terms()) {
    MotiveClass t = MotiveClass::constant(c);
    t.table_ = x.table_;
    unsigned long long sub_exp = 0;
    SymbolMonomial rest;
    for (const auto& [n, e] : m.exps) {
      if (n == name) {
        if (e < 0)
          throw domain_violation("cannot substitute into a negative power of '" +
                                 name + "'");
        sub_exp = static_cast<unsigned long long>(e);
      } else {
        rest.exps.emplace(n, e);
      }
    }
    MotiveClass rest_cls;
    rest_cls.table_ = x.table_;
    rest_cls.poly_ = MotiveClass::Poly::monomial(std::move(rest));
    t *= rest_cls;
    if (sub_exp > 0) t *= value.pow(sub_exp);
    total += t;
  }
  return total;
}

inline std::string to_string(const MotiveClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool lead = true;
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    detail::append_signed_coeff(out, c, lead, m.exps.empty());
    Integer a = c < 0 ? Integer(-c) : c;
    bool need_star = !m.exps.empty() && a != 1;
    for (const auto& [name, e] : m.exps) {
      if (need_star) out += "*";
      out += name;
      if (e != 1) out += "^" + std::to_string(e);
      need_star = true;
    }
    lead = false;
  }
  return out;
}

}  // namespace logmot
