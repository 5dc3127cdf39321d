#include "ncho/constants.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "ncho/formal.hpp"

namespace ncho {

namespace {

std::shared_mutex g_mutex;
std::map<std::pair<int, mpfr_prec_t>, BigFloat> g_zeta_cache;
std::map<mpfr_prec_t, BigFloat> g_pi_cache;

std::string cache_path(int m, mpfr_prec_t prec) {
	const char* dir = std::getenv("NCHO_CACHE_DIR");
	if (!dir || !*dir) return {};
	return std::string(dir) + "/zeta_" + std::to_string(m) + "_p" + std::to_string(prec) + ".txt";
}

bool load_cached(const std::string& path, BigFloat& out, mpfr_prec_t prec) {
	if (path.empty()) return false;
	std::ifstream in(path);
	if (!in) return false;
	std::string s;
	in >> s;
	if (s.empty()) return false;
	BigFloat v(prec);
	if (mpfr_set_str(v.raw(), s.c_str(), 16, MPFR_RNDN) != 0) return false;
	out = v;
	return true;
}

void store_cached(const std::string& path, const BigFloat& v) {
	if (path.empty()) return;
	char* s = nullptr;
	mpfr_asprintf(&s, "%Ra", v.raw());
	std::ofstream out(path);
	if (out) out << s << "\n";
	mpfr_free_str(s);
}

// Euler-Maclaurin for zeta(s, a), integer s >= 2, rational a > 0:
//   sum_{n=0}^{N-1} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//     + sum_{j=1}^{J} B_{2j}/(2j)! * (s)_{2j-1} * (N+a)^{-s-2j+1}
// The correction terms decay once 2J < 2*pi*(N+a); iteration stops when a
// term drops below the target and that term bounds the tail.
BigFloat hurwitz_em(int s, const Rat& a, mpfr_prec_t prec) {
	mpfr_prec_t wp = prec + 64;
	long N = (long)(0.35 * wp) + s + 16;
	BigFloat sum(wp);
	BigFloat af = BigFloat::from(a, wp);
	for (long n = 0; n < N; ++n) sum += pow_si(af + BigFloat::from(n, wp), -s);
	BigFloat Na = af + BigFloat::from(N, wp);
	sum += pow_si(Na, 1 - s) / BigFloat::from(s - 1, wp);
	sum += pow_si(Na, -s) / BigFloat::from(2L, wp);

	BigFloat target = ldexp2(abs(sum), -(long)prec - 16);
	Int pochhammer = 1; // (s)_{2j-1} = s(s+1)...(s+2j-2)
	for (int j = 1;; ++j) {
		if (j == 1) {
			pochhammer = s;
		} else {
			pochhammer *= Int(s + 2 * j - 3);
			pochhammer *= Int(s + 2 * j - 2);
		}
		Rat coef = bernoulli_number(2 * j) / Rat(factorial(2 * j));
		BigFloat term = BigFloat::from(coef * Rat(pochhammer), wp) * pow_si(Na, -s - 2 * j + 1);
		sum += term;
		if (abs(term) < target) break; // remainder is bounded by the first omitted term
		if (j > 2 * N) throw std::runtime_error("hurwitz_em: correction terms not decaying");
	}
	BigFloat out(prec);
	mpfr_set(out.raw(), sum.raw(), MPFR_RNDN);
	return out;
}

} // namespace

BigFloat const_pi(mpfr_prec_t prec) {
	{
		std::shared_lock lk(g_mutex);
		auto it = g_pi_cache.find(prec);
		if (it != g_pi_cache.end()) return it->second;
	}
	BigFloat v = BigFloat::pi(prec);
	std::unique_lock lk(g_mutex);
	return g_pi_cache.emplace(prec, v).first->second;
}

BigFloat const_zeta(int m, mpfr_prec_t prec) {
	if (m < 2) throw std::domain_error("const_zeta: m >= 2 required");
	{
		std::shared_lock lk(g_mutex);
		auto it = g_zeta_cache.find({m, prec});
		if (it != g_zeta_cache.end()) return it->second;
	}
	BigFloat v(prec);
	std::string path = cache_path(m, prec);
	if (!load_cached(path, v, prec)) {
		v = hurwitz_em(m, Rat(1), prec);
		store_cached(path, v);
	}
	std::unique_lock lk(g_mutex);
	return g_zeta_cache.emplace(std::make_pair(m, prec), v).first->second;
}

BigFloat hurwitz_zeta(int s, const Rat& a, mpfr_prec_t prec) {
	if (s < 2 || a <= 0) throw std::domain_error("hurwitz_zeta: s >= 2, a > 0 required");
	return hurwitz_em(s, a, prec);
}

} // namespace ncho
