#pragma once

#include "logmot/motive.hpp"

namespace logmot {

// An element of the log Grothendieck ring in normal form a + b*P, where P is
// the class of the standard log point. The ring is K0[P]/(P^2 + P(L-1)), so
// every product is reduced eagerly by P^2 -> -(L-1)P and the representation
// stays at degree < 2 in P. Classes with b = 0 embed the ordinary ring.
class LogClass {
 public:
  LogClass() = default;

  explicit LogClass(MotiveClass scalar) : a_(std::move(scalar)) {}

  LogClass(MotiveClass scalar, MotiveClass p_part)
      : a_(std::move(scalar)), b_(std::move(p_part)) {}

  static LogClass zero() { return LogClass(); }
  static LogClass constant(Integer c) { return LogClass(MotiveClass::constant(std::move(c))); }
  static LogClass point() { return LogClass(MotiveClass(), MotiveClass::constant(1)); }

  const MotiveClass& scalar_part() const { return a_; }
  const MotiveClass& p_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  LogClass& operator+=(const LogClass& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  LogClass& operator-=(const LogClass& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }

  // (a + bP)(c + dP) = ac + (ad + bc - bd(L-1)) P.
  LogClass& operator*=(const LogClass& o) {
    MotiveClass ac = a_ * o.a_;
    MotiveClass p = a_ * o.b_ + b_ * o.a_ - b_ * o.b_ * MotiveClass::gm();
    a_ = std::move(ac);
    b_ = std::move(p);
    return *this;
  }

  friend LogClass operator+(LogClass x, const LogClass& y) { return x += y; }
  friend LogClass operator-(LogClass x, const LogClass& y) { return x -= y; }
  friend LogClass operator*(LogClass x, const LogClass& y) { return x *= y; }
  friend LogClass operator-(const LogClass& x) { return LogClass(-x.a_, -x.b_); }

  LogClass pow(unsigned long long e) const {
    LogClass r = constant(1);
    for (unsigned long long i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const LogClass& x, const LogClass& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const LogClass& x, const LogClass& y) { return !(x == y); }

 private:
  MotiveClass a_;
  MotiveClass b_;
};

inline LogClass operator*(const MotiveClass& m, const LogClass& x) {
  return LogClass(m) * x;
}

// Log Betti map: the ring homomorphism with P -> 0.
inline MotiveClass tau(const LogClass& x) { return x.scalar_part(); }

// Log Hodge map: the ring homomorphism with P -> -[G_m].
inline MotiveClass rho(const LogClass& x) {
  return x.scalar_part() - MotiveClass::gm() * x.p_part();
}

// The unique ring extension of the compactly supported Euler characteristic.
inline Integer chi_log(const LogClass& x) { return chi_c_of(tau(x)); }

// t = e after rho.
inline EPolynomial t_of(const LogClass& x) { return e_of(rho(x)); }

// tbar: t reduced mod (uv + u), realized as the substitution pair
// (t(u,-1), t(0,v)). The pair map is injective on the image of the quotient,
// so testing the pair tests the quotient class.
inline EBarPair tbar_of(const LogClass& x) { return ebar_of(t_of(x)); }

// b: substitute P -> [pt] = 1, apply e, set u = 0. Factors through the
// relation because e|_{u=0} sends P + [G_m] to 1 + (uv-1)|_{u=0} = 0.
inline UniPoly b_of(const LogClass& x) {
  return at_u(e_of(x.scalar_part() + x.p_part()), 0);
}

// The two duality involutions on the localized log ring, extending the
// classical one with i1(P) = -P*L^-1 and i2(P) = (P + [G_m])*L^-1.
//
// Note: for a proper toric n-fold these definitions give
// i1([X]) = (-1)^n L^-n [X] and i2([X]) = L^-n [X]; the exponent pattern is
// the reverse of the j-indexing one might guess, see README.
inline LogClass duality(int j, const LogClass& x) {
  if (j != 1 && j != 2) throw domain_violation("duality index must be 1 or 2");
  MotiveClass da = dual_of(x.scalar_part());
  MotiveClass db = dual_of(x.p_part());
  MotiveClass l_inv = MotiveClass::lefschetz(-1);
  if (j == 1) return LogClass(da, -(db * l_inv));
  return LogClass(da + db * MotiveClass::gm() * l_inv, db * l_inv);
}

inline LogClass duality_1(const LogClass& x) { return duality(1, x); }
inline LogClass duality_2(const LogClass& x) { return duality(2, x); }

inline std::string to_string(const LogClass& x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (!x.scalar_part().is_zero()) out = to_string(x.scalar_part());
  if (!x.p_part().is_zero()) {
    std::string p = "(" + to_string(x.p_part()) + ")*P";
    out = out.empty() ? p : out + " + " + p;
  }
  return out;
}

}  // namespace logmot
