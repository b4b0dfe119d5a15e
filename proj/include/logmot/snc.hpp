#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "logmot/log_class.hpp"

namespace logmot {

// Sorted set of boundary-component indices.
using ComponentSet = std::vector<int>;

// An s.n.c. pair presented combinatorially: for each subset I of boundary
// components, the class of the open stratum (points on exactly the components
// in I). The empty subset is the interior. Strata are user-supplied motive
// classes; the library checks the algebraic consistency identities, not that
// the data comes from an actual geometric pair.
struct SncSpec {
  int dim = 0;
  std::vector<std::string> components;
  std::map<ComponentSet, MotiveClass> open_strata;
  std::map<ComponentSet, MotiveClass> closed_strata;  // optional alternative input

  bool has_open() const { return !open_strata.empty(); }
  bool has_closed() const { return !closed_strata.empty(); }

  MotiveClass open_at(const ComponentSet& key) const {
    auto it = open_strata.find(key);
    return it == open_strata.end() ? MotiveClass::zero() : it->second;
  }
};

namespace detail {

inline void check_subset_keys(const SncSpec& spec,
                              const std::map<ComponentSet, MotiveClass>& strata) {
  for (const auto& [key, cls] : strata) {
    if (!std::is_sorted(key.begin(), key.end()) ||
        std::adjacent_find(key.begin(), key.end()) != key.end())
      throw domain_violation("stratum subset must be sorted and duplicate-free");
    for (int i : key)
      if (i < 0 || static_cast<size_t>(i) >= spec.components.size())
        throw domain_violation("stratum subset references unknown component");
    if (!cls.is_zero() && static_cast<int>(key.size()) > spec.dim)
      throw domain_violation(
          "nonzero stratum on more components than the dimension allows");
  }
}

template <class F>
void for_each_subset(size_t n, F&& f) {
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    ComponentSet s;
    for (size_t b = 0; b < n; ++b)
      if (mask & (size_t{1} << b)) s.push_back(static_cast<int>(b));
    f(std::move(s));
  }
}

}  // namespace detail

// Moebius inversion over the subset lattice:
// open[I] = sum over J >= I of (-1)^(|J|-|I|) closed[J].
// A missing closed entry is an empty intersection; it is an error only if a
// deeper subset is nonempty. When both tables are present they are
// cross-checked.
inline SncSpec strata_open_from_closed(SncSpec spec) {
  if (!spec.has_closed())
    throw domain_violation("closed strata are not present");
  detail::check_subset_keys(spec, spec.closed_strata);

  const size_t n = spec.components.size();
  for (const auto& [key, cls] : spec.closed_strata) {
    if (cls.is_zero()) continue;
    // Every superset chain below a nonempty stratum must be recorded.
    for (int drop : key) {
      ComponentSet shallower;
      for (int i : key)
        if (i != drop) shallower.push_back(i);
      if (!spec.closed_strata.count(shallower))
        throw domain_violation(
            "missing closed stratum entry beneath a nonempty deeper stratum");
    }
  }

  std::map<ComponentSet, MotiveClass> open;
  detail::for_each_subset(n, [&](ComponentSet base) {
    MotiveClass total;
    detail::for_each_subset(n, [&](ComponentSet super) {
      if (!std::includes(super.begin(), super.end(), base.begin(), base.end()))
        return;
      auto it = spec.closed_strata.find(super);
      if (it == spec.closed_strata.end()) return;
      if ((super.size() - base.size()) % 2 == 0)
        total += it->second;
      else
        total -= it->second;
    });
    if (!total.is_zero()) open.emplace(std::move(base), std::move(total));
  });

  if (spec.has_open() && spec.open_strata != open)
    throw domain_violation(
        "open strata disagree with the inversion of the closed strata");
  spec.open_strata = std::move(open);
  return spec;
}

// Class of the pair: each open stratum on |I| components carries constant
// rank-|I| log structure, so [X] = sum_I open[I] P^|I|, reduced.
inline LogClass snc_class(const SncSpec& spec) {
  if (!spec.has_open() && spec.has_closed())
    throw domain_violation("open strata missing; run strata_open_from_closed");
  detail::check_subset_keys(spec, spec.open_strata);
  LogClass total;
  LogClass p = LogClass::point();
  for (const auto& [key, cls] : spec.open_strata)
    total += LogClass(cls) * p.pow(key.size());
  return total;
}

// The log Hodge map evaluated directly on the stratum table:
// rho = sum_I (-[G_m])^|I| open[I]. Agrees with rho(snc_class(spec)).
inline MotiveClass rho_expansion(const SncSpec& spec) {
  detail::check_subset_keys(spec, spec.open_strata);
  MotiveClass total;
  MotiveClass minus_gm = -MotiveClass::gm();
  for (const auto& [key, cls] : spec.open_strata)
    total += minus_gm.pow(key.size()) * cls;
  return total;
}

// The class of the pair with component i dropped from the boundary: its
// strata merge into the next shallower ones.
inline SncSpec drop_component(const SncSpec& spec, int component) {
  SncSpec out;
  out.dim = spec.dim;
  for (size_t i = 0; i < spec.components.size(); ++i)
    if (static_cast<int>(i) != component) out.components.push_back(spec.components[i]);

  auto renumber = [&](const ComponentSet& key) {
    ComponentSet r;
    for (int i : key) r.push_back(i < component ? i : i - 1);
    return r;
  };
  for (const auto& [key, cls] : spec.open_strata) {
    ComponentSet without;
    for (int i : key)
      if (i != component) without.push_back(i);
    ComponentSet target = renumber(without);
    auto [it, fresh] = out.open_strata.try_emplace(target, cls);
    if (!fresh) it->second += cls;
  }
  return out;
}

// The pair induced on component i: the strata of the ambient pair that lie on
// i, reindexed over the remaining components.
inline SncSpec induced_spec(const SncSpec& spec, int component) {
  SncSpec out;
  out.dim = spec.dim > 0 ? spec.dim - 1 : 0;
  for (size_t i = 0; i < spec.components.size(); ++i)
    if (static_cast<int>(i) != component) out.components.push_back(spec.components[i]);

  for (const auto& [key, cls] : spec.open_strata) {
    if (!std::binary_search(key.begin(), key.end(), component)) continue;
    ComponentSet rest;
    for (int i : key)
      if (i != component) rest.push_back(i < component ? i : i - 1);
    auto [it, fresh] = out.open_strata.try_emplace(rest, cls);
    if (!fresh) it->second += cls;
  }
  return out;
}

// The class of component i with its induced log structure, as a class of the
// ambient ring: sum over strata lying on i. Satisfies
// component_class = snc_class(induced_spec) * P.
inline LogClass component_class(const SncSpec& spec, int component) {
  LogClass total;
  LogClass p = LogClass::point();
  for (const auto& [key, cls] : spec.open_strata) {
    if (!std::binary_search(key.begin(), key.end(), component)) continue;
    total += LogClass(cls) * p.pow(key.size());
  }
  return total;
}

// The chi_y bridge: with chi_y(V) = e(V)(-y, -1), the interior invariant
// (-u)^n chi_{-1/u}(interior) must coincide with tbar_1 of the class of the
// pair. The left side is assembled as a Laurent polynomial in u, so equality
// is tested exactly after clearing denominators.
struct ChiYBridge {
  UniPoly lhs;  // Laurent polynomial in u
  UniPoly rhs;  // tbar_1 of the class
  bool equal = false;
};

inline ChiYBridge chi_y_bridge(const SncSpec& spec) {
  ChiYBridge out;
  EPolynomial interior = e_of(spec.open_at({}));
  const int n = spec.dim;
  // (-u)^n * e(interior)(1/u, -1): the monomial c u^a v^b contributes
  // c (-1)^(b+n) u^(n-a).
  for (const auto& [m, c] : interior.terms()) {
    Integer coeff = c;
    if ((m.v + n) % 2 != 0) coeff = -coeff;
    out.lhs.add_term(n - m.u, coeff);
  }
  out.rhs = tbar_of(snc_class(spec)).first;
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace logmot
