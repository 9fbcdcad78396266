#include "superint/rational.hpp"

#include <stdexcept>

namespace si {

Rational parse_rational(const std::string& s) {
  Rational q;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (dot != std::string::npos && slash == std::string::npos) {
    // decimal literal, exact
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    Integer den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    Integer num(whole + frac);
    q = Rational(num, den);
  } else if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational: " + s);
  }
  q.canonicalize();
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational random_rational(std::mt19937_64& rng, long pmax, long qmax) {
  std::uniform_int_distribution<long> P(-pmax, pmax), Q(1, qmax);
  long p = P(rng), d = Q(rng);
  return rat(p, d);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("0 to negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational r(1);
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

}  // namespace si
