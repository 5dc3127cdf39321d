#include "ncho/padic.hpp"

#include <stdexcept>

namespace ncho::padic {

long ordp_int(const Int& x, const Int& p) {
	if (x == 0) throw std::domain_error("ordp: zero argument");
	Int r = x, q, rem;
	long v = 0;
	for (;;) {
		mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
		if (rem != 0) return v;
		r = q;
		++v;
	}
}

long ordp(const Rat& x, const Int& p) {
	if (x == 0) throw std::domain_error("ordp: zero argument");
	return ordp_int(Int(x.get_num()), p) - ordp_int(Int(x.get_den()), p);
}

Int residue(const Rat& x, const Int& p, int n) {
	if (n < 1) throw std::domain_error("residue: n >= 1 required");
	Int pn = int_pow(p, n);
	Int den(x.get_den());
	if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
		throw std::domain_error("residue: denominator divisible by p (ordp = " +
		                        std::to_string(x == 0 ? 0 : ordp(x, p)) + ")");
	Int dinv;
	if (!mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pn.get_mpz_t()))
		throw std::domain_error("residue: denominator not invertible mod p^n");
	Int r = Int(x.get_num()) * dinv;
	mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pn.get_mpz_t());
	return r;
}

PVal PVal::from_rat(const Rat& x, const Int& p, long digits) {
	if (x == 0) return exact_zero(1L << 40);
	PVal r;
	r.zero_ = false;
	r.val_ = ordp(x, p);
	r.digits_ = digits;
	Int pd = int_pow(p, digits);
	Int num(x.get_num()), den(x.get_den());
	Int pv = int_pow(p, std::abs(r.val_));
	if (r.val_ > 0) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pv.get_mpz_t());
	if (r.val_ < 0) mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pv.get_mpz_t());
	Int dinv;
	mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pd.get_mpz_t());
	r.unit_ = num * dinv;
	mpz_mod(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), pd.get_mpz_t());
	return r;
}

PVal PVal::exact_zero(long modulus_exponent) {
	PVal r;
	r.zero_ = true;
	r.val_ = modulus_exponent;
	return r;
}

PVal PVal::mul(const PVal& a, const PVal& b, const Int& p) {
	if (a.zero_ || b.zero_) return exact_zero(a.val_ + b.val_); // p^v u * (0 mod p^m) = 0 mod p^{v+m}
	PVal r;
	r.zero_ = false;
	r.val_ = a.val_ + b.val_;
	r.digits_ = std::min(a.digits_, b.digits_);
	Int pd = int_pow(p, r.digits_);
	r.unit_ = a.unit_ * b.unit_;
	mpz_mod(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), pd.get_mpz_t());
	return r;
}

PVal PVal::add(const PVal& a, const PVal& b, const Int& p) {
	if (a.zero_ && b.zero_) return exact_zero(std::min(a.val_, b.val_));
	if (a.zero_) return add(b, a, p);
	if (b.zero_) {
		// b is 0 mod p^{b.val}; the sum is a, known mod p^{min(a.val+a.digits, b.val)}
		long known = std::min(a.val_ + a.digits_, b.val_);
		if (known <= a.val_) return exact_zero(known);
		PVal r = a;
		r.digits_ = known - a.val_;
		Int pd = int_pow(p, r.digits_);
		mpz_mod(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), pd.get_mpz_t());
		return r;
	}
	long v = std::min(a.val_, b.val_);
	long known = std::min(a.val_ + a.digits_, b.val_ + b.digits_);
	if (known <= v) return exact_zero(known);
	Int pd = int_pow(p, known - v);
	Int s = a.unit_ * int_pow(p, a.val_ - v) + b.unit_ * int_pow(p, b.val_ - v);
	mpz_mod(s.get_mpz_t(), s.get_mpz_t(), pd.get_mpz_t());
	if (s == 0) return exact_zero(known);
	long t = ordp_int(s, p);
	PVal r;
	r.zero_ = false;
	r.val_ = v + t;
	r.digits_ = (known - v) - t;
	mpz_divexact(r.unit_.get_mpz_t(), s.get_mpz_t(), int_pow(p, t).get_mpz_t());
	return r;
}

PVal PVal::sub(const PVal& a, const PVal& b, const Int& p) {
	if (b.zero_) return add(a, b, p);
	PVal nb = b;
	Int pd = int_pow(p, b.digits_);
	nb.unit_ = pd - b.unit_;
	mpz_mod(nb.unit_.get_mpz_t(), nb.unit_.get_mpz_t(), pd.get_mpz_t());
	return add(a, nb, p);
}

PVal PVal::div(const PVal& a, const PVal& b, const Int& p) {
	if (b.zero_) throw std::domain_error("PVal::div: divisor is zero to working precision");
	if (a.zero_) return exact_zero(a.val_ - b.val_);
	PVal r;
	r.zero_ = false;
	r.val_ = a.val_ - b.val_;
	r.digits_ = std::min(a.digits_, b.digits_);
	Int pd = int_pow(p, r.digits_);
	Int binv;
	mpz_invert(binv.get_mpz_t(), b.unit_.get_mpz_t(), pd.get_mpz_t());
	r.unit_ = a.unit_ * binv;
	mpz_mod(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), pd.get_mpz_t());
	return r;
}

PVal PVal::mul_rat(const Rat& c, const Int& p) const {
	if (c == 0) return exact_zero(zero_ ? val_ : val_ + digits_);
	if (zero_) return exact_zero(val_ + ordp(c, p));
	PVal r = *this;
	long cv = ordp(c, p);
	r.val_ += cv;
	Int num(c.get_num()), den(c.get_den());
	Int pv = int_pow(p, std::abs(cv));
	if (cv > 0) mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pv.get_mpz_t());
	if (cv < 0) mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pv.get_mpz_t());
	Int pd = int_pow(p, r.digits_);
	Int dinv;
	mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pd.get_mpz_t());
	r.unit_ = r.unit_ * num * dinv;
	mpz_mod(r.unit_.get_mpz_t(), r.unit_.get_mpz_t(), pd.get_mpz_t());
	return r;
}

PVal PVal::div_rat(const Rat& c, const Int& p) const {
	if (c == 0) throw std::domain_error("PVal: division by zero");
	return mul_rat(Rat(1) / c, p);
}

std::optional<bool> PVal::val_at_least(long n) const {
	if (zero_) {
		if (val_ >= n) return true;
		return std::nullopt; // zero to precision below the requested modulus
	}
	return val_ >= n;
}

Int PVal::unit_mod(const Int& p, long n) const {
	if (zero_) return Int(0);
	if (digits_ < n) throw std::runtime_error("PVal: insufficient p-adic precision");
	Int pn = int_pow(p, n);
	Int r = unit_;
	mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pn.get_mpz_t());
	return r;
}

} // namespace ncho::padic
