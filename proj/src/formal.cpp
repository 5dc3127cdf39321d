#include "ncho/formal.hpp"

#include <mutex>
#include <sstream>
#include <vector>

#include "ncho/constants.hpp"

namespace ncho {

namespace {
std::mutex g_bern_mutex;
std::vector<Rat> g_bern; // B_0, B_1, ...
} // namespace

Rat bernoulli_number(unsigned n) {
	std::lock_guard lk(g_bern_mutex);
	if (g_bern.empty()) {
		g_bern.push_back(Rat(1));
		g_bern.push_back(rat(-1, 2));
	}
	// sum_{j=0}^{i} binom(i+1, j) B_j = 0 for i >= 1
	while (g_bern.size() <= n) {
		unsigned i = g_bern.size();
		Rat acc(0);
		for (unsigned j = 0; j < i; ++j) acc += Rat(binomial(i + 1, j)) * g_bern[j];
		g_bern.push_back(-acc / Rat(i + 1));
	}
	return g_bern[n];
}

ConstMonomial ConstMonomial::operator*(const ConstMonomial& o) const {
	ConstMonomial r;
	r.pi2 = pi2 + o.pi2;
	r.zeta = zeta;
	for (auto& [m, e] : o.zeta) {
		int ne = (r.zeta.count(m) ? r.zeta[m] : 0) + e;
		if (ne == 0) r.zeta.erase(m); else r.zeta[m] = ne;
	}
	return r;
}

ConstMonomial ConstMonomial::operator/(const ConstMonomial& o) const {
	ConstMonomial r;
	r.pi2 = pi2 - o.pi2;
	r.zeta = zeta;
	for (auto& [m, e] : o.zeta) {
		int have = r.zeta.count(m) ? r.zeta[m] : 0;
		int ne = have - e;
		if (ne < 0) throw std::domain_error("ConstMonomial: zeta exponent would go negative");
		if (ne == 0) r.zeta.erase(m); else r.zeta[m] = ne;
	}
	return r;
}

std::string ConstMonomial::str() const {
	if (is_one()) return "1";
	std::ostringstream os;
	bool first = true;
	if (pi2 != 0) {
		os << "pi^" << 2 * pi2;
		first = false;
	}
	for (auto& [m, e] : zeta) {
		if (!first) os << "*";
		os << "zeta(" << m << ")";
		if (e != 1) os << "^" << e;
		first = false;
	}
	return os.str();
}

void FormalNumber::insert_term(const ConstMonomial& m, const Rat& c) {
	if (c == 0) return;
	auto it = terms_.find(m);
	if (it == terms_.end()) {
		terms_.emplace(m, c);
	} else {
		it->second += c;
		if (it->second == 0) terms_.erase(it);
	}
}

FormalNumber FormalNumber::monomial(const ConstMonomial& m, const Rat& c) {
	FormalNumber r;
	r.insert_term(m, c);
	return r;
}

FormalNumber FormalNumber::pi_pow(int even_exponent, const Rat& c) {
	if (even_exponent % 2 != 0) throw std::domain_error("FormalNumber::pi_pow: exponent must be even");
	ConstMonomial m;
	m.pi2 = even_exponent / 2;
	return monomial(m, c);
}

FormalNumber FormalNumber::zeta_odd(int m, const Rat& c) {
	if (m < 3 || m % 2 == 0) throw std::domain_error("FormalNumber::zeta_odd: m must be odd >= 3");
	ConstMonomial mo;
	mo.zeta[m] = 1;
	return monomial(mo, c);
}

bool FormalNumber::is_rational() const {
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat FormalNumber::rational_part() const {
	auto it = terms_.find(ConstMonomial{});
	return it == terms_.end() ? Rat(0) : it->second;
}

FormalNumber FormalNumber::operator+(const FormalNumber& o) const {
	FormalNumber r = *this;
	for (auto& [m, c] : o.terms_) r.insert_term(m, c);
	return r;
}

FormalNumber FormalNumber::operator-(const FormalNumber& o) const {
	FormalNumber r = *this;
	for (auto& [m, c] : o.terms_) r.insert_term(m, -c);
	return r;
}

FormalNumber FormalNumber::operator-() const {
	FormalNumber r;
	for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
	return r;
}

FormalNumber FormalNumber::operator*(const FormalNumber& o) const {
	FormalNumber r;
	for (auto& [m1, c1] : terms_)
		for (auto& [m2, c2] : o.terms_) r.insert_term(m1 * m2, c1 * c2);
	return r;
}

FormalNumber operator*(const Rat& c, const FormalNumber& x) {
	FormalNumber r;
	if (c == 0) return r;
	for (auto& [m, v] : x.terms_) r.terms_.emplace(m, c * v);
	return r;
}

FormalNumber FormalNumber::div_by_monomial(const FormalNumber& divisor) const {
	if (divisor.terms_.size() != 1)
		throw std::domain_error("FormalNumber: divisor must have exactly one term");
	const auto& [dm, dc] = *divisor.terms_.begin();
	FormalNumber r;
	for (auto& [m, c] : terms_) r.insert_term(m / dm, c / dc);
	return r;
}

std::string FormalNumber::str() const {
	if (terms_.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	for (auto& [m, c] : terms_) {
		if (!first) os << " + ";
		if (m.is_one()) os << rat_str(c);
		else if (c == 1) os << m.str();
		else os << "(" << rat_str(c) << ")*" << m.str();
		first = false;
	}
	return os.str();
}

Rat zeta_even_over_pi_pow(int two_m) {
	if (two_m < 2 || two_m % 2 != 0) throw std::domain_error("zeta_even_over_pi_pow: even argument >= 2 required");
	int m = two_m / 2;
	// zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!)
	Rat r = bernoulli_number(2 * m) * Rat(int_pow(2, 2 * m)) / (Rat(2) * Rat(factorial(2 * m)));
	if (m % 2 == 0) r = -r;
	return r;
}

FormalNumber zeta_half(int k) {
	if (k < 2) throw std::domain_error("zeta_half: k >= 2 required");
	Rat scale(int_pow(2, k) - 1); // zeta(k, 1/2) = (2^k - 1) zeta(k)
	if (k % 2 == 0) return FormalNumber::pi_pow(k, scale * zeta_even_over_pi_pow(k));
	return FormalNumber::zeta_odd(k, scale);
}

BigFloat eval_formal_real(const FormalNumber& x, mpfr_prec_t prec) {
	mpfr_prec_t wp = prec + 32;
	BigFloat pi2 = const_pi(wp) * const_pi(wp);
	BigFloat acc(wp);
	for (auto& [m, c] : x.terms()) {
		BigFloat t = BigFloat::from(c, wp) * pow_si(pi2, m.pi2);
		for (auto& [zm, ze] : m.zeta) t *= pow_si(const_zeta(zm, wp), ze);
		acc += t;
	}
	BigFloat out(prec);
	mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
	return out;
}

BigComplex eval_formal(const FormalNumber& x, mpfr_prec_t prec) {
	return BigComplex::real(eval_formal_real(x, prec));
}

} // namespace ncho
