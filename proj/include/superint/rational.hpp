#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <random>
#include <string>

namespace si {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

// uniform p/q with |p| <= pmax, 1 <= q <= qmax
Rational random_rational(std::mt19937_64& rng, long pmax = 1000000, long qmax = 1000);

Integer binomial(unsigned long n, unsigned long k);
Rational pow(const Rational& q, long e);

}  // namespace si
