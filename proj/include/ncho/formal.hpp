#ifndef NCHO_FORMAL_HPP
#define NCHO_FORMAL_HPP

#include <compare>
#include <map>
#include <string>

#include "ncho/bigfloat.hpp"
#include "ncho/rat.hpp"

namespace ncho {

// Bernoulli number B_n with the B_1 = -1/2 convention. Cached.
Rat bernoulli_number(unsigned n);

// Monomial in the canonical constant basis {pi^2 (any integer power),
// zeta(3), zeta(5), ...}. Canonical: no zero exponents stored.
struct ConstMonomial {
	int pi2 = 0;             // exponent of pi^2, may be negative
	std::map<int, int> zeta; // odd m >= 3 -> exponent >= 1

	bool is_one() const { return pi2 == 0 && zeta.empty(); }
	friend auto operator<=>(const ConstMonomial&, const ConstMonomial&) = default;

	ConstMonomial operator*(const ConstMonomial& o) const;
	// Division; throws unless o divides *this in the zeta part (pi2 may go negative).
	ConstMonomial operator/(const ConstMonomial& o) const;
	std::string str() const;
};

// Finite rational linear combination of ConstMonomials. Exact ring.
class FormalNumber {
public:
	FormalNumber() = default;
	FormalNumber(const Rat& r) { if (r != 0) terms_[ConstMonomial{}] = r; }
	FormalNumber(long n) : FormalNumber(Rat(n)) {}

	static FormalNumber monomial(const ConstMonomial& m, const Rat& c);
	static FormalNumber pi_pow(int even_exponent, const Rat& c); // c * pi^{even_exponent}
	static FormalNumber zeta_odd(int m, const Rat& c);           // c * zeta(m), m odd >= 3

	bool is_zero() const { return terms_.empty(); }
	bool is_rational() const;
	Rat rational_part() const; // coefficient of the empty monomial
	size_t term_count() const { return terms_.size(); }
	const std::map<ConstMonomial, Rat>& terms() const { return terms_; }

	FormalNumber operator+(const FormalNumber& o) const;
	FormalNumber operator-(const FormalNumber& o) const;
	FormalNumber operator*(const FormalNumber& o) const;
	FormalNumber operator-() const;
	FormalNumber& operator+=(const FormalNumber& o) { *this = *this + o; return *this; }
	FormalNumber& operator-=(const FormalNumber& o) { *this = *this - o; return *this; }
	FormalNumber& operator*=(const FormalNumber& o) { *this = *this * o; return *this; }
	friend FormalNumber operator*(const Rat& c, const FormalNumber& x);
	bool operator==(const FormalNumber& o) const { return terms_ == o.terms_; }

	// Division by a single-term FormalNumber; multi-term divisors are rejected.
	FormalNumber div_by_monomial(const FormalNumber& divisor) const;

	std::string str() const;

private:
	std::map<ConstMonomial, Rat> terms_;
	void insert_term(const ConstMonomial& m, const Rat& c);
	friend FormalNumber formal_mul(const FormalNumber&, const FormalNumber&);
};

// Hurwitz zeta(k, 1/2) = (2^k - 1) zeta(k) in the canonical basis:
// even k -> rational multiple of pi^k, odd k -> (2^k - 1) * zeta(k).
FormalNumber zeta_half(int k);

// zeta(2m) / pi^{2m} as an exact rational.
Rat zeta_even_over_pi_pow(int two_m);

// Numeric evaluation; relative error within 2^{8 - prec}.
BigComplex eval_formal(const FormalNumber& x, mpfr_prec_t prec);
BigFloat eval_formal_real(const FormalNumber& x, mpfr_prec_t prec);

}  // namespace ncho

#endif
