#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "logmot/integer.hpp"

namespace logmot {

// Sparse polynomial with exact integer coefficients over an ordered monomial
// monoid. Mono must be default-constructible (the unit monomial), totally
// ordered by operator<, and combine multiplicatively via operator+.
// Invariant: no zero coefficients are stored, so representation is canonical
// and operator== is coefficient-wise equality.
template <class Mono>
class sparse_poly {
 public:
  using term_map = std::map<Mono, Integer>;

  sparse_poly() = default;

  static sparse_poly constant(Integer c) {
    sparse_poly p;
    p.add_term(Mono{}, std::move(c));
    return p;
  }

  static sparse_poly monomial(Mono m, Integer c = 1) {
    sparse_poly p;
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
  }

  const term_map& terms() const { return terms_; }

  Integer coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add_term(Mono m, Integer c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(m), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  sparse_poly& operator+=(const sparse_poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  sparse_poly& operator-=(const sparse_poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend sparse_poly operator+(sparse_poly a, const sparse_poly& b) { return a += b; }
  friend sparse_poly operator-(sparse_poly a, const sparse_poly& b) { return a -= b; }

  friend sparse_poly operator-(const sparse_poly& a) {
    sparse_poly r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend sparse_poly operator*(const sparse_poly& a, const sparse_poly& b) {
    sparse_poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
    return r;
  }

  sparse_poly& operator*=(const sparse_poly& o) { return *this = *this * o; }

  friend sparse_poly operator*(const sparse_poly& a, const Integer& k) {
    sparse_poly r;
    if (k == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * k);
    return r;
  }

  friend sparse_poly operator*(const Integer& k, const sparse_poly& a) { return a * k; }

  sparse_poly pow(unsigned long long e) const {
    sparse_poly r = constant(1);
    for (unsigned long long i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const sparse_poly& a, const sparse_poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const sparse_poly& a, const sparse_poly& b) { return !(a == b); }

  // Canonical order on polynomials (for use as map keys in callers).
  friend bool operator<(const sparse_poly& a, const sparse_poly& b) {
    return a.terms_ < b.terms_;
  }

 private:
  term_map terms_;
};

}  // namespace logmot
