#ifndef NCHO_RAT_HPP
#define NCHO_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncho {

// Exact rational with canonical representation: reduced, denominator > 0.
// mpq_class does not canonicalize on construction, so all entry points here do.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
	if (den == 0) throw std::invalid_argument("rat: zero denominator");
	Rat r(num, den);
	r.canonicalize();
	return r;
}

inline Rat rat(const Int& num, const Int& den = 1) {
	if (den == 0) throw std::invalid_argument("rat: zero denominator");
	Rat r(num, den);
	r.canonicalize();
	return r;
}

// Parses "p/q" or "p".
inline Rat rat_parse(const std::string& s) {
	Rat r;
	if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad literal: " + s);
	if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator: " + s);
	r.canonicalize();
	return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_pow(const Rat& base, long e) {
	if (e == 0) return Rat(1);
	Rat b = base;
	bool invert = e < 0;
	unsigned long n = invert ? -(unsigned long)e : (unsigned long)e;
	Rat num, den;
	mpz_pow_ui(num.get_num_mpz_t(), b.get_num_mpz_t(), n);
	mpz_pow_ui(num.get_den_mpz_t(), b.get_den_mpz_t(), n);
	if (invert) {
		if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
		num = Rat(num.get_den(), num.get_num());
		num.canonicalize();
	}
	return num;
}

inline Int int_pow(const Int& base, unsigned long e) {
	Int r;
	mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
	return r;
}

inline Int factorial(unsigned long n) {
	Int r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return r;
}

// (2n+1)!! = 1*3*5*...*(2n+1)
inline Int odd_double_factorial(unsigned long n) {
	Int r;
	mpz_2fac_ui(r.get_mpz_t(), 2 * n + 1);
	return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
	Int r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

inline Int binomial(const Int& n, unsigned long k) {
	Int r;
	mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
	return r;
}

// binom(a, k) for rational a: a(a-1)...(a-k+1)/k!
inline Rat binomial_rat(const Rat& a, unsigned long k) {
	Rat r(1);
	for (unsigned long i = 0; i < k; ++i) r *= (a - rat(i));
	return r / Rat(factorial(k));
}

// binom(-1/2, k) = (-1)^k binom(2k,k) / 4^k
inline Rat binom_mhalf(unsigned long k) {
	Rat r(binomial(2 * k, k), int_pow(4, k));
	r.canonicalize();
	if (k % 2) r = -r;
	return r;
}

inline Rat lcm_of_dens(const std::vector<Rat>& v) {
	Int l = 1;
	for (const Rat& r : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
	return Rat(l);
}

}  // namespace ncho

#endif
