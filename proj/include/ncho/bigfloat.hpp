#ifndef NCHO_BIGFLOAT_HPP
#define NCHO_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "ncho/rat.hpp"

namespace ncho {

// Arbitrary-precision binary float (MPFR-backed). Precision is fixed per
// value and never silently downgraded: binary operations carry the larger
// operand precision.
class BigFloat {
public:
	static constexpr mpfr_prec_t kMinPrec = 64;

	explicit BigFloat(mpfr_prec_t prec = 128) { mpfr_init2(v_, clamp(prec)); mpfr_set_zero(v_, 1); }
	BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
	BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, kMinPrec); mpfr_swap(v_, o.v_); }
	BigFloat& operator=(const BigFloat& o) {
		if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
		return *this;
	}
	BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
	~BigFloat() { mpfr_clear(v_); }

	static BigFloat from(double x, mpfr_prec_t prec) { BigFloat r(prec); mpfr_set_d(r.v_, x, MPFR_RNDN); return r; }
	static BigFloat from(long x, mpfr_prec_t prec) { BigFloat r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
	static BigFloat from(int x, mpfr_prec_t prec) { return from((long)x, prec); }
	static BigFloat from(const Int& x, mpfr_prec_t prec) { BigFloat r(prec); mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN); return r; }
	static BigFloat from(const Rat& x, mpfr_prec_t prec) { BigFloat r(prec); mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN); return r; }
	static BigFloat pi(mpfr_prec_t prec) { BigFloat r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

	mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
	double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
	bool is_zero() const { return mpfr_zero_p(v_); }
	int sign() const { return mpfr_sgn(v_); }

	std::string str(size_t digits = 0) const {
		char* s = nullptr;
		mpfr_asprintf(&s, digits ? "%.*Rg" : "%.Rg", (int)digits, v_);
		std::string out(s);
		mpfr_free_str(s);
		return out;
	}

	friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(mpfr_add, a, b); }
	friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(mpfr_sub, a, b); }
	friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(mpfr_mul, a, b); }
	friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(mpfr_div, a, b); }
	BigFloat operator-() const { BigFloat r(prec()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
	BigFloat& operator+=(const BigFloat& o) { *this = *this + o; return *this; }
	BigFloat& operator-=(const BigFloat& o) { *this = *this - o; return *this; }
	BigFloat& operator*=(const BigFloat& o) { *this = *this * o; return *this; }
	BigFloat& operator/=(const BigFloat& o) { *this = *this / o; return *this; }

	friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
	friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
	friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
	friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

	friend BigFloat abs(const BigFloat& a) { BigFloat r(a.prec()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
	friend BigFloat sqrt(const BigFloat& a) { BigFloat r(a.prec()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
	friend BigFloat exp(const BigFloat& a) { BigFloat r(a.prec()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
	friend BigFloat log(const BigFloat& a) { BigFloat r(a.prec()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
	friend BigFloat sin(const BigFloat& a) { BigFloat r(a.prec()); mpfr_sin(r.v_, a.v_, MPFR_RNDN); return r; }
	friend BigFloat cos(const BigFloat& a) { BigFloat r(a.prec()); mpfr_cos(r.v_, a.v_, MPFR_RNDN); return r; }
	friend BigFloat cosh(const BigFloat& a) { BigFloat r(a.prec()); mpfr_cosh(r.v_, a.v_, MPFR_RNDN); return r; }
	friend BigFloat sinh(const BigFloat& a) { BigFloat r(a.prec()); mpfr_sinh(r.v_, a.v_, MPFR_RNDN); return r; }
	friend BigFloat pow_si(const BigFloat& a, long e) { BigFloat r(a.prec()); mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN); return r; }
	friend BigFloat ldexp2(const BigFloat& a, long e) { BigFloat r(a.prec()); mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN); return r; }

	mpfr_ptr raw() { return v_; }
	mpfr_srcptr raw() const { return v_; }

private:
	static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, kMinPrec); }
	template <class F>
	static BigFloat bin(F f, const BigFloat& a, const BigFloat& b) {
		BigFloat r(std::max(a.prec(), b.prec()));
		f(r.v_, a.v_, b.v_, MPFR_RNDN);
		return r;
	}
	mpfr_t v_;
};

class BigComplex {
public:
	explicit BigComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
	BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

	static BigComplex from(double re, double im, mpfr_prec_t prec) {
		return BigComplex(BigFloat::from(re, prec), BigFloat::from(im, prec));
	}
	static BigComplex real(const BigFloat& x) { return BigComplex(x, BigFloat(x.prec())); }
	static BigComplex i_unit(mpfr_prec_t prec) { return BigComplex(BigFloat(prec), BigFloat::from(1L, prec)); }

	const BigFloat& re() const { return re_; }
	const BigFloat& im() const { return im_; }
	mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }

	friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
	friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
	BigComplex operator-() const { return {-re_, -im_}; }
	friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
		return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
	}
	friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
		BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
		if (d.is_zero()) throw std::domain_error("BigComplex: division by zero");
		return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
	}
	BigComplex& operator+=(const BigComplex& o) { *this = *this + o; return *this; }
	BigComplex& operator-=(const BigComplex& o) { *this = *this - o; return *this; }
	BigComplex& operator*=(const BigComplex& o) { *this = *this * o; return *this; }
	BigComplex& operator/=(const BigComplex& o) { *this = *this / o; return *this; }

	friend BigComplex conj(const BigComplex& a) { return {a.re_, -a.im_}; }
	friend BigFloat abs(const BigComplex& a) { return sqrt(a.re_ * a.re_ + a.im_ * a.im_); }

	friend BigComplex exp(const BigComplex& a) {
		BigFloat m = exp(a.re_);
		return {m * cos(a.im_), m * sin(a.im_)};
	}
	friend BigComplex pow_si(const BigComplex& a, long e) {
		if (e < 0) return BigComplex::real(BigFloat::from(1L, a.prec())) / pow_si(a, -e);
		BigComplex r = BigComplex::real(BigFloat::from(1L, a.prec()));
		BigComplex b = a;
		unsigned long n = e;
		while (n) {
			if (n & 1) r *= b;
			b *= b;
			n >>= 1;
		}
		return r;
	}

	std::string str(size_t digits = 0) const { return re_.str(digits) + (im_.sign() < 0 ? "" : "+") + im_.str(digits) + "i"; }

private:
	BigFloat re_, im_;
};

}  // namespace ncho

#endif
