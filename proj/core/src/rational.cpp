#include "taftsmash/rational.hpp"

#include "taftsmash/errors.hpp"

namespace taftsmash {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("malformed rational: " + s);
  if (r.get_den() == 0) throw DivisionByZeroError("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_str();
}

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  if (invert) {
    if (out == 0) throw DivisionByZeroError("0^negative");
    mpq_inv(out.get_mpq_t(), out.get_mpq_t());
  }
  out.canonicalize();
  return out;
}

}  // namespace taftsmash
