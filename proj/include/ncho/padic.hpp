#ifndef NCHO_PADIC_HPP
#define NCHO_PADIC_HPP

#include <optional>

#include "ncho/rat.hpp"

namespace ncho::padic {

// Exact p-adic valuation of a nonzero rational (negative for denominators).
long ordp(const Rat& x, const Int& p);
long ordp_int(const Int& x, const Int& p);

// x mod p^n for p-integral x, via modular inverse of the denominator.
// Rejects inputs whose denominator is divisible by p.
Int residue(const Rat& x, const Int& p, int n);

// Truncated p-adic number: value = p^val * unit, unit known modulo p^digits
// (0 <= unit < p^digits, p does not divide unit unless digits == 0).
// A value that vanished to working precision is kept as known_zero with
// "val" recording the modulus exponent it is zero to.
class PVal {
public:
	PVal() = default;
	static PVal from_rat(const Rat& x, const Int& p, long digits);
	static PVal exact_zero(long modulus_exponent);

	bool known_zero() const { return zero_; }
	long val() const { return val_; }
	long digits() const { return digits_; }
	const Int& unit() const { return unit_; }

	static PVal add(const PVal& a, const PVal& b, const Int& p);
	static PVal sub(const PVal& a, const PVal& b, const Int& p);
	static PVal mul(const PVal& a, const PVal& b, const Int& p);
	static PVal div(const PVal& a, const PVal& b, const Int& p); // b must not be known-zero
	PVal mul_rat(const Rat& c, const Int& p) const;
	PVal div_rat(const Rat& c, const Int& p) const;

	// ordp(*this) >= n, if decidable at current precision.
	std::optional<bool> val_at_least(long n) const;
	// Representative of p^{-val} * value modulo p^n (requires digits >= n).
	Int unit_mod(const Int& p, long n) const;

private:
	bool zero_ = true;
	long val_ = 1L << 40; // for known_zero: zero modulo p^{val_}
	long digits_ = 0;
	Int unit_ = 0;
};

} // namespace ncho::padic

#endif
