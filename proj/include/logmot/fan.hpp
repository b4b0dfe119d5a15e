#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "logmot/linalg.hpp"
#include "logmot/log_class.hpp"

namespace logmot {

// A ray is a primitive integer vector in the ambient lattice.
using RayVec = std::vector<long long>;

// A cone is the sorted set of indices of its generating rays; the empty set
// is the zero cone.
using Cone = std::vector<int>;

// Raw parsed fan data, before validation.
struct FanData {
  int dim = 0;
  std::vector<RayVec> rays;
  std::vector<Cone> cones;  // listing maximal cones suffices
};

namespace detail {

inline bool is_primitive(const RayVec& r) {
  Integer g = 0;
  for (long long v : r) g = linalg::gcd(g, Integer(v));
  return g == 1;
}

inline IntMatrix ray_matrix(const std::vector<RayVec>& rays, const Cone& cone) {
  IntMatrix m;
  for (int i : cone) {
    std::vector<Integer> row(rays[i].begin(), rays[i].end());
    m.push_back(std::move(row));
  }
  return m;
}

inline std::string cone_label(const Cone& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

}  // namespace detail

// A validated fan: face-closed cone set over primitive, pairwise distinct
// rays. Immutable after construction; build one through validate_fan.
class Fan {
 public:
  int ambient_dim() const { return dim_; }
  const std::vector<RayVec>& rays() const { return rays_; }
  const std::set<Cone>& cones() const { return cones_; }

  // All cones simplicial (generators linearly independent).
  bool simplicial() const { return simplicial_; }

  // False when non-simplicial cones prevented the face-closure and
  // pairwise-intersection checks from running in full.
  bool fully_validated() const { return fully_validated_; }

  int cone_dim(const Cone& c) const { return dims_.at(c); }

  std::vector<Cone> maximal_cones() const {
    std::vector<Cone> out;
    for (const Cone& c : cones_) {
      bool max = true;
      for (const Cone& d : cones_)
        if (c != d && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
          max = false;
          break;
        }
      if (max) out.push_back(c);
    }
    return out;
  }

  // Membership of a lattice point in a given simplicial cone.
  bool cone_contains(const Cone& c, const RayVec& w) const {
    bool zero = std::all_of(w.begin(), w.end(), [](long long v) { return v == 0; });
    if (c.empty()) return zero;
    if (zero) return true;
    IntMatrix cols = detail::ray_matrix(rays_, c);  // rows here, used as columns
    std::vector<Integer> target(w.begin(), w.end());
    auto sol = linalg::solve_columns(cols, target);
    if (!sol) return false;
    return std::all_of(sol->begin(), sol->end(),
                       [](const Rational& x) { return x >= 0; });
  }

  bool in_support(const RayVec& w) const {
    for (const Cone& c : maximal_cones())
      if (cone_contains(c, w)) return true;
    return false;
  }

  int ray_index(const RayVec& w) const {
    for (size_t i = 0; i < rays_.size(); ++i)
      if (rays_[i] == w) return static_cast<int>(i);
    return -1;
  }

 private:
  Fan() = default;

  int dim_ = 0;
  std::vector<RayVec> rays_;
  std::set<Cone> cones_;
  std::map<Cone, int> dims_;
  bool simplicial_ = true;
  bool fully_validated_ = true;

  friend Fan validate_fan(const FanData&);
};

// Checks every fan invariant that is decidable here: primitive distinct rays,
// strong convexity, face closure (completed automatically for simplicial
// cones), and for simplicial fans the pairwise intersection-in-common-face
// condition via exact separating functionals. Non-simplicial cones are kept
// as given and flagged as partially validated.
inline Fan validate_fan(const FanData& data) {
  if (data.dim < 0) throw domain_violation("fan dimension must be nonnegative");
  Fan fan;
  fan.dim_ = data.dim;
  fan.rays_ = data.rays;

  for (size_t i = 0; i < fan.rays_.size(); ++i) {
    const RayVec& r = fan.rays_[i];
    if (static_cast<int>(r.size()) != data.dim)
      throw domain_violation("ray " + std::to_string(i) +
                             " has wrong dimension");
    if (std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; }))
      throw domain_violation("ray " + std::to_string(i) + " is zero");
    if (!detail::is_primitive(r))
      throw domain_violation("ray " + std::to_string(i) +
                             " is not primitive (gcd of entries != 1)");
    for (size_t j = 0; j < i; ++j)
      if (fan.rays_[j] == r)
        throw domain_violation("rays " + std::to_string(j) + " and " +
                               std::to_string(i) + " coincide");
  }

  fan.cones_.insert(Cone{});
  fan.dims_[Cone{}] = 0;

  for (Cone cone : data.cones) {
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    for (int i : cone)
      if (i < 0 || static_cast<size_t>(i) >= fan.rays_.size())
        throw domain_violation("cone " + detail::cone_label(cone) +
                               " references ray index out of range");

    int rank = linalg::rank_of(detail::ray_matrix(fan.rays_, cone));
    bool simplicial = rank == static_cast<int>(cone.size());
    if (simplicial) {
      // Every subset of the generators spans a face; close under faces.
      const size_t k = cone.size();
      for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        Cone face;
        for (size_t b = 0; b < k; ++b)
          if (mask & (size_t{1} << b)) face.push_back(cone[b]);
        fan.dims_.emplace(face, static_cast<int>(face.size()));
        fan.cones_.insert(std::move(face));
      }
    } else {
      fan.simplicial_ = false;
      fan.fully_validated_ = false;
      // Strong convexity: some functional is strictly positive on all
      // generators.
      std::vector<linalg::LinearConstraint> cs;
      for (int i : cone) {
        linalg::LinearConstraint c;
        c.a.assign(fan.rays_[i].begin(), fan.rays_[i].end());
        c.rhs = 1;
        cs.push_back(std::move(c));
      }
      if (!linalg::fm_feasible(std::move(cs), data.dim))
        throw domain_violation("cone " + detail::cone_label(cone) +
                               " is not strongly convex");
      fan.dims_.emplace(cone, rank);
      fan.cones_.insert(std::move(cone));
    }
  }

  if (fan.simplicial_) {
    // Pairwise intersections must be common faces. Checking maximal cones
    // suffices: faces inherit the property.
    std::vector<Cone> maximal = fan.maximal_cones();
    for (size_t a = 0; a < maximal.size(); ++a)
      for (size_t b = a + 1; b < maximal.size(); ++b) {
        const Cone& s = maximal[a];
        const Cone& t = maximal[b];
        Cone common;
        std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                              std::back_inserter(common));
        // Separating functional: zero on the common rays, strictly positive
        // on the rest of s, strictly negative on the rest of t.
        std::vector<linalg::LinearConstraint> cs;
        auto add = [&](int ray, Integer sign, Integer rhs) {
          linalg::LinearConstraint c;
          c.a.clear();
          for (long long v : fan.rays_[ray]) c.a.push_back(sign * Integer(v));
          c.rhs = std::move(rhs);
          cs.push_back(std::move(c));
        };
        for (int i : common) {
          add(i, 1, 0);
          add(i, -1, 0);
        }
        for (int i : s)
          if (!std::binary_search(common.begin(), common.end(), i)) add(i, 1, 1);
        for (int i : t)
          if (!std::binary_search(common.begin(), common.end(), i)) add(i, -1, 1);
        if (!linalg::fm_feasible(std::move(cs), data.dim))
          throw domain_violation(
              "cones " + detail::cone_label(s) + " and " + detail::cone_label(t) +
              " intersect outside a common face");
      }
  }

  return fan;
}

// Smoothness of each cone: simplicial with generators extending to a lattice
// basis, i.e. all elementary divisors of the generator matrix equal 1.
struct SmoothnessReport {
  bool all_smooth = true;
  std::map<Cone, bool> per_cone;
};

inline SmoothnessReport is_smooth(const Fan& fan) {
  SmoothnessReport rep;
  for (const Cone& c : fan.cones()) {
    bool smooth = true;
    if (!c.empty()) {
      if (fan.cone_dim(c) != static_cast<int>(c.size())) {
        smooth = false;  // non-simplicial
      } else {
        auto d = linalg::smith_diagonal(detail::ray_matrix(fan.rays(), c));
        smooth = d.size() == c.size() &&
                 std::all_of(d.begin(), d.end(),
                             [](const Integer& v) { return v == 1; });
      }
    }
    rep.per_cone[c] = smooth;
    rep.all_smooth = rep.all_smooth && smooth;
  }
  return rep;
}

// Compactly supported Euler characteristic of the fan's support: each
// relatively open cone of dimension r contributes (-1)^r.
inline Integer chi_c_fan(const Fan& fan) {
  Integer total = 0;
  for (const Cone& c : fan.cones())
    total += fan.cone_dim(c) % 2 == 0 ? 1 : -1;
  return total;
}

// Class of the toric variety of the fan: [G_m]^n + (1 - chi_c) P [G_m]^(n-1).
// The zero-dimensional fan is the point, class 1.
inline LogClass toric_class(const Fan& fan) {
  const int n = fan.ambient_dim();
  if (n == 0) return LogClass::constant(1);
  MotiveClass gm = MotiveClass::gm();
  Integer coeff = 1 - chi_c_fan(fan);
  return LogClass(gm.pow(n)) +
         LogClass(MotiveClass(), coeff * gm.pow(n - 1));
}

// Same class when chi_c of the underlying complex is known externally: for a
// fan taken over a polyhedral complex Q, [X] = [G_m]^n + chi_c(Q) P [G_m]^(n-1).
inline LogClass toric_class_over_complex(int n, const Integer& chi_c_q) {
  if (n <= 0) throw domain_violation("formula requires ambient dimension >= 1");
  MotiveClass gm = MotiveClass::gm();
  return LogClass(gm.pow(n)) + LogClass(MotiveClass(), chi_c_q * gm.pow(n - 1));
}

// The stratification route to the same class: each cone of dimension r
// carries the stratum [G_m]^(n-r) with constant rank-r log structure, giving
// the formal P-polynomial sum_sigma [G_m]^(n-dim) P^dim before reduction.
struct StratificationClass {
  std::vector<MotiveClass> unreduced;  // coefficient of P^i at index i
  LogClass reduced;
};

inline StratificationClass stratification_class(const Fan& fan) {
  const int n = fan.ambient_dim();
  StratificationClass out;
  out.unreduced.assign(static_cast<size_t>(n) + 1, MotiveClass::zero());
  MotiveClass gm = MotiveClass::gm();
  for (const Cone& c : fan.cones()) {
    int r = fan.cone_dim(c);
    out.unreduced[r] += gm.pow(n - r);
  }
  LogClass p = LogClass::point();
  for (size_t i = 0; i < out.unreduced.size(); ++i)
    out.reduced += LogClass(out.unreduced[i]) * p.pow(i);
  return out;
}

// Stellar subdivision at a primitive lattice point w of the support: every
// cone containing w is replaced by the joins of w with its faces that do not
// contain w. The result is a valid fan refining the input with the same
// support.
inline Fan stellar_subdivide(const Fan& fan, const RayVec& w) {
  if (!fan.simplicial())
    throw domain_violation("stellar subdivision supports simplicial fans only");
  if (static_cast<int>(w.size()) != fan.ambient_dim())
    throw domain_violation("subdivision ray has wrong dimension");
  if (std::all_of(w.begin(), w.end(), [](long long v) { return v == 0; }))
    throw domain_violation("subdivision ray is zero");
  if (!detail::is_primitive(w))
    throw domain_violation("subdivision ray is not primitive");
  if (fan.ray_index(w) >= 0)
    throw domain_violation("subdivision ray is already a ray of the fan");
  if (!fan.in_support(w))
    throw domain_violation("subdivision ray lies outside the fan's support");

  const int w_index = static_cast<int>(fan.rays().size());
  FanData refined;
  refined.dim = fan.ambient_dim();
  refined.rays = fan.rays();
  refined.rays.push_back(w);

  for (const Cone& c : fan.cones()) {
    if (!fan.cone_contains(c, w)) {
      refined.cones.push_back(c);
      continue;
    }
    // Joins of w with the faces of c not containing w.
    const size_t k = c.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      Cone face;
      for (size_t b = 0; b < k; ++b)
        if (mask & (size_t{1} << b)) face.push_back(c[b]);
      if (fan.cone_contains(face, w)) continue;
      face.push_back(w_index);
      refined.cones.push_back(std::move(face));
    }
  }
  return validate_fan(refined);
}

enum class Completeness { complete, incomplete, unknown };

// Completeness of a simplicial fan: all maximal cones full-dimensional, every
// wall shared by exactly two of them, and every probe direction (the 3^n - 1
// sign vectors) covered. Exact on the fan classes exercised in the test
// suite; non-simplicial input is unsupported and reports unknown.
inline Completeness is_complete(const Fan& fan) {
  if (!fan.simplicial()) return Completeness::unknown;
  const int n = fan.ambient_dim();
  if (n == 0) return Completeness::complete;

  std::vector<Cone> maximal = fan.maximal_cones();
  for (const Cone& c : maximal)
    if (static_cast<int>(c.size()) != n) return Completeness::incomplete;

  for (const Cone& wall : fan.cones()) {
    if (static_cast<int>(wall.size()) != n - 1) continue;
    int count = 0;
    for (const Cone& c : maximal)
      if (std::includes(c.begin(), c.end(), wall.begin(), wall.end())) ++count;
    if (count != 2) return Completeness::incomplete;
  }

  // 3^n - 1 sign-vector probes, each of which must land in some cone.
  std::vector<RayVec> probes;
  RayVec probe(n, -1);
  for (;;) {
    if (!std::all_of(probe.begin(), probe.end(),
                     [](long long v) { return v == 0; }))
      probes.push_back(probe);
    int i = 0;
    while (i < n && probe[i] == 1) probe[i++] = -1;
    if (i == n) break;
    ++probe[i];
  }
  for (const RayVec& p : probes) {
    bool covered = false;
    for (const Cone& c : maximal)
      if (fan.cone_contains(c, p)) {
        covered = true;
        break;
      }
    if (!covered) return Completeness::incomplete;
  }
  return Completeness::complete;
}

}  // namespace logmot
