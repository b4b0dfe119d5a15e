#pragma once

#include <map>
#include <memory>
#include <string>

#include "logmot/epoly.hpp"
#include "logmot/errors.hpp"

namespace logmot {

// A declared generator of the modeled Grothendieck ring: a name, its
// Hodge-Deligne e-polynomial, its dimension, and whether duality is defined
// on it. The distinguished Lefschetz symbol L is predeclared in every table;
// it is a class rather than a variety, so its dual is the rule L -> L^-1
// instead of the smooth-projective one.
struct VarietySymbol {
  std::string name;
  EPolynomial e_poly;
  unsigned dimension = 0;
  bool smooth_projective = false;
};

inline const std::string kLefschetz = "L";

// Append-only registry of symbols. Registration happens up front; afterwards
// the table is only read, so sharing between threads is safe.
class SymbolTable {
 public:
  static std::shared_ptr<SymbolTable> create() {
    auto t = std::shared_ptr<SymbolTable>(new SymbolTable());
    t->symbols_.emplace(kLefschetz,
                        VarietySymbol{kLefschetz, uv_monomial(1, 1), 1, false});
    return t;
  }

  const VarietySymbol& declare(const std::string& name, EPolynomial e_poly,
                               unsigned dimension, bool smooth_projective) {
    if (name == "P" || name == "u" || name == "v")
      throw domain_violation("symbol name '" + name + "' is reserved");
    if (symbols_.count(name))
      throw domain_violation("symbol '" + name + "' already registered");
    if (smooth_projective &&
        total_degree(e_poly) > 2 * static_cast<int>(dimension))
      throw domain_violation("symbol '" + name +
                             "': e-polynomial degree exceeds 2*dimension for a "
                             "smooth projective class");
    auto [it, ok] = symbols_.emplace(
        name, VarietySymbol{name, std::move(e_poly), dimension, smooth_projective});
    return it->second;
  }

  const VarietySymbol* find(const std::string& name) const {
    auto it = symbols_.find(name);
    return it == symbols_.end() ? nullptr : &it->second;
  }

  const VarietySymbol& at(const std::string& name) const {
    const VarietySymbol* s = find(name);
    if (!s) throw domain_violation("unknown symbol '" + name + "'");
    return *s;
  }

  const std::map<std::string, VarietySymbol>& all() const { return symbols_; }

 private:
  SymbolTable() = default;
  std::map<std::string, VarietySymbol> symbols_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

}  // namespace logmot
