#include <catch2/catch_amalgamated.hpp>

#include "logmot/epoly.hpp"

using namespace logmot;

namespace {

EPolynomial one_plus_uv() { return uv_monomial(0, 0) + uv_monomial(1, 1); }

}  // namespace

TEST_CASE("e-polynomial arithmetic is exact and canonical") {
  EPolynomial p = one_plus_uv();
  CHECK(p * p == uv_monomial(0, 0) + Integer(2) * uv_monomial(1, 1) +
                     uv_monomial(2, 2));
  CHECK((p - p).is_zero());
  CHECK(p.coeff({1, 1}) == 1);
  CHECK(p.coeff({2, 0}) == 0);

  // No zero coefficients survive cancellation.
  EPolynomial q = p + uv_monomial(1, 1, -1);
  CHECK(q == EPolynomial::constant(1));
  CHECK(q.terms().size() == 1);
}

TEST_CASE("substitutions and evaluation") {
  EPolynomial p = one_plus_uv();
  CHECK(eval(p, 1, 1) == 2);
  CHECK(eval(p, 3, -2) == -5);
  CHECK(at_v(p, -1) == UniPoly::constant(1) + UniPoly::monomial(1, -1));
  CHECK(at_u(p, 0) == UniPoly::constant(1));
}

TEST_CASE("Ebar pair of reference polynomials") {
  // 1 + u -> (1 + u, 1)
  EPolynomial e1 = uv_monomial(0, 0) + uv_monomial(1, 0);
  EBarPair b1 = ebar_of(e1);
  CHECK(b1.first == UniPoly::constant(1) + UniPoly::monomial(1));
  CHECK(b1.second == UniPoly::constant(1));

  // 1 + uv -> (1 - u, 1 + v)
  EBarPair b2 = ebar_of(one_plus_uv());
  CHECK(b2.first == UniPoly::constant(1) - UniPoly::monomial(1));
  CHECK(b2.second == UniPoly::constant(1) + UniPoly::monomial(1));

  // 0 -> (0, 0)
  EBarPair b3 = ebar_of(EPolynomial{});
  CHECK(b3.first.is_zero());
  CHECK(b3.second.is_zero());
}

TEST_CASE("printing") {
  CHECK(to_string(one_plus_uv()) == "1 + u*v");
  CHECK(to_string(uv_monomial(1, 0) - uv_monomial(1, 1) -
                  Integer(2) * EPolynomial::constant(1)) == "-2 + u - u*v");
  CHECK(to_string(UniPoly::constant(1) + UniPoly::monomial(1), "u") == "1 + u");
  CHECK(to_string(UniPoly{}, "u") == "0");
  UniPoly laurent = UniPoly::monomial(-2, 3) + UniPoly::constant(-1);
  CHECK(to_string(laurent, "u") == "3*u^-2 - 1");
}
