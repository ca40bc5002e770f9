#include "cnp/scalar.hpp"

namespace cnp {

const VarList& ab_vars() {
  static const VarList v = make_vars({"a", "b"});
  return v;
}

ExactScalar ab(int i, int j, const Rational& c) {
  Mono m;
  m[0] = int16_t(i);
  m[1] = int16_t(j);
  return GenRat::monomial(ab_vars(), m, c);
}

}  // namespace cnp
