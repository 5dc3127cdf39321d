#include "ncho/apery.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace ncho::apery {

namespace {

std::shared_mutex g_tables_mutex;
std::map<int, JTable> g_tables;

Rat jtilde_closed_k1(long n) {
	// 2^n n! / (2n+1)!!
	Rat r(int_pow(2, n) * factorial(n), odd_double_factorial(n));
	r.canonicalize();
	return r;
}

Rat jtilde_closed_k2(long n) {
	Rat acc(0);
	for (long j = 0; j <= n; ++j) {
		Rat t = binom_mhalf(j) * binom_mhalf(j) * Rat(binomial(n, j));
		acc += (j % 2) ? -t : t;
	}
	return acc;
}

void extend_table(JTable& t, const JTable& lower, long n_max) {
	long n0 = (long)t.values.size();
	for (long n = n0; n <= n_max; ++n) {
		if (t.k == 1) { t.values.push_back(jtilde_closed_k1(n)); continue; }
		if (t.k == 2) { t.values.push_back(jtilde_closed_k2(n)); continue; }
		if (n == 0) { t.values.push_back(Rat(0)); continue; }
		if (n == 1) { t.values.push_back(Rat(t.k <= 4 ? 1 : 0)); continue; }
		Rat rhs = Rat(8 * n * n - 8 * n + 3) * t.values[n - 1]
		        - Rat(4 * (n - 1) * (n - 1)) * t.values[n - 2]
		        + Rat(4) * lower.values[n - 1];
		t.values.push_back(rhs / Rat(4 * n * n));
	}
}

} // namespace

const JTable& jtilde(int k, int n_max) {
	if (k < 1 || n_max < 0) throw std::domain_error("jtilde: k >= 1 and n_max >= 0 required");
	{
		std::shared_lock lk(g_tables_mutex);
		auto it = g_tables.find(k);
		if (it != g_tables.end() && (long)it->second.values.size() > n_max) return it->second;
	}
	std::unique_lock lk(g_tables_mutex);
	// build the k-cascade bottom-up so the inhomogeneous term is present
	static const JTable empty{};
	for (int kk = (k % 2) ? 1 : 2; kk <= k; kk += 2) {
		JTable& t = g_tables[kk];
		t.k = kk;
		const JTable& lower = (kk >= 3) ? g_tables[kk - 2] : empty;
		extend_table(t, lower, n_max);
	}
	return g_tables[k];
}

Rat jtilde_value(int k, long n) {
	return jtilde(k, (int)n).values[n];
}

std::string JTable::to_csv() const {
	std::ostringstream os;
	os << "k,n,value\n";
	for (size_t n = 0; n < values.size(); ++n) os << k << "," << n << "," << rat_str(values[n]) << "\n";
	return os.str();
}

std::string JTable::to_json() const {
	std::ostringstream os;
	os << "{\"k\":" << k << ",\"values\":[";
	for (size_t n = 0; n < values.size(); ++n) {
		if (n) os << ",";
		os << "\"" << rat_str(values[n]) << "\"";
	}
	os << "]}";
	return os.str();
}

Rat zsum(Parity parity, int s, int k) {
	if (s < 0 || k < 0) throw std::domain_error("zsum: s, k >= 0 required");
	if (parity == Parity::Odd && s < 1) throw std::domain_error("zsum: odd parity requires s >= 1");
	if (parity == Parity::Even && s == 0) return Rat(1);
	// March the first-entry recurrence Z_s(k+1) = Z_s(k) - Z_{s-1}(k)/(k+1/2)^2,
	// where Z_0 is 1 (even) resp. the single-index odd sum replaces s = 1.
	std::vector<Rat> z(s + 1, Rat(0)); // z[j] = Z_j(i) during the march
	z[0] = Rat(1);
	Rat zodd1(0); // Z^odd_1(i)
	for (int i = 0; i < k; ++i) {
		Rat w = rat(4, (2 * i + 1) * (long)(2 * i + 1)); // 1/(i+1/2)^2
		for (int j = s; j >= 1; --j) {
			if (parity == Parity::Odd && j == 1) continue;
			const Rat& below = (parity == Parity::Odd && j == 2) ? zodd1 : z[j - 1];
			z[j] -= w * below;
		}
		if (parity == Parity::Odd) {
			// Z^odd_1(i+1) = Z^odd_1(i) - (1/2) (i+1/2)^{-3} binom(-1/2,i)^{-2}
			Rat b = binom_mhalf(i);
			Rat w3 = rat(8, (2 * i + 1) * (long)(2 * i + 1) * (2 * i + 1));
			zodd1 -= w3 / (Rat(2) * b * b);
		}
	}
	if (parity == Parity::Odd && s == 1) return zodd1;
	if (parity == Parity::Odd) return z[s];
	return z[s];
}

Rat jtilde_explicit(int k, long n) {
	if (k < 3) throw std::domain_error("jtilde_explicit: k >= 3 required (k = 1, 2 have closed forms)");
	Parity par = (k % 2 == 0) ? Parity::Even : Parity::Odd;
	int s = (k % 2 == 0) ? (k - 2) / 2 : (k - 1) / 2;
	Rat acc(0);
	for (long j = 0; j <= n; ++j) {
		Rat b = binom_mhalf(j);
		Rat t = b * b * Rat(binomial(n, j)) * zsum(par, s, (int)j);
		acc += (j % 2) ? -t : t;
	}
	return acc;
}

FormalNumber j0_formal(int k) {
	if (k < 2) throw std::domain_error("j0_formal: k >= 2 required");
	return Rat(k - 1) * zeta_half(k);
}

FormalNumber j_formal(int k, long n) {
	if (k < 0) throw std::domain_error("j_formal: k >= 0 required");
	if (k == 0) return FormalNumber();
	if (k == 1) return FormalNumber(jtilde_value(1, n));
	FormalNumber acc;
	if (k % 2 == 0) {
		int s = k / 2;
		for (int j = 0; j <= s - 1; ++j)
			acc += j0_formal(2 * s - 2 * j) * FormalNumber(jtilde_value(2 * j + 2, n));
	} else {
		int s = (k - 1) / 2;
		for (int j = 0; j <= s - 1; ++j)
			acc += j0_formal(2 * s + 1 - 2 * j) * FormalNumber(jtilde_value(2 * j + 2, n));
		acc += FormalNumber(jtilde_value(k, n));
	}
	return acc;
}

FormalNumber j_explicit_smallL(int l, long n) {
	if (l < 2 || l > 4) throw std::domain_error("j_explicit_smallL: l in {2,3,4}");
	auto alternating = [&](auto inner) {
		FormalNumber acc;
		for (long j = 0; j <= n; ++j) {
			Rat b = binom_mhalf(j);
			Rat outer = b * b * Rat(binomial(n, j));
			if (j % 2) outer = -outer;
			acc += outer * inner(j);
		}
		return acc;
	};
	if (l == 2)
		return zeta_half(2) * alternating([](long) { return FormalNumber(Rat(1)); });
	if (l == 3) {
		FormalNumber first = alternating([](long j) {
			Rat inner(0);
			for (long i = 0; i < j; ++i) {
				Rat b = binom_mhalf(i);
				inner += rat(8, (2 * i + 1) * (long)(2 * i + 1) * (2 * i + 1)) / (b * b);
			}
			return FormalNumber(inner);
		});
		return rat(-1, 2) * first + Rat(2) * zeta_half(3) * alternating([](long) { return FormalNumber(Rat(1)); });
	}
	FormalNumber first = alternating([](long j) {
		Rat inner(0);
		for (long i = 0; i < j; ++i) inner += rat(4, (2 * i + 1) * (long)(2 * i + 1));
		return FormalNumber(inner);
	});
	return -(zeta_half(2) * first) + Rat(3) * zeta_half(4) * alternating([](long) { return FormalNumber(Rat(1)); });
}

SeriesValue j_numeric_series(int k, long n, long m_max) {
	if (k < 2 || m_max < 1) throw std::domain_error("j_numeric_series: k >= 2, m_max >= 1 required");
	auto inner_sum = [&](long m, int a) {
		double acc = 0;
		double bin = 1; // binom(n, j), updated multiplicatively
		for (long j = 0; j <= n; ++j) {
			double t = bin / std::pow(0.5 + m + 2 * j, a);
			acc += (j % 2) ? -t : t;
			bin *= double(n - j) / double(j + 1);
		}
		return acc;
	};
	auto term = [&](long m) {
		double b = std::exp(std::lgamma(2 * n + m + 1) - std::lgamma(m + 1) - std::lgamma(2 * n + 1));
		double row = 0;
		for (int r = 1; r <= k - 1; ++r) row += inner_sum(m, r) * inner_sum(m, k - r);
		return b * row;
	};
	SeriesValue out;
	double half = 0, full = 0, last = 0;
	for (long m = 0; m <= m_max; ++m) {
		last = term(m);
		full += last;
		if (m == m_max / 2) half = full;
	}
	if (k == 2) {
		// tail decays like 1/M; one Richardson step removes the leading term
		out.value = 2 * full - half;
		out.tail_bound = std::abs(full - half);
	} else {
		out.value = full;
		out.tail_bound = std::abs(last) * double(m_max) / double(k - 2); // sum_{m>M} m^{-k} ~ M^{1-k}/(k-1)
	}
	return out;
}

namespace {

double bfun(long n, double u) {
	// B_n(u) = e^{nu} / sinh(u/2)^{2n+1} * int_0^u (1-e^{-2t})^n (1-e^{-2(u-t)})^n dt,
	// inner integral by 64-node Gauss-Legendre (nodes generated by Newton).
	static std::vector<double> gl_x, gl_w;
	static std::once_flag once;
	std::call_once(once, [] {
		const int N = 64;
		for (int i = 0; i < N; ++i) {
			double x = std::cos(M_PI * (i + 0.75) / (N + 0.5));
			for (int it = 0; it < 100; ++it) {
				double p0 = 1, p1 = x;
				for (int j = 2; j <= N; ++j) {
					double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
					p0 = p1;
					p1 = p2;
				}
				double dp = N * (x * p1 - p0) / (x * x - 1);
				double dx = p1 / dp;
				x -= dx;
				if (std::abs(dx) < 1e-16) break;
			}
			double p0 = 1, p1 = x;
			for (int j = 2; j <= N; ++j) {
				double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
				p0 = p1;
				p1 = p2;
			}
			double dp = N * (x * p1 - p0) / (x * x - 1);
			gl_x.push_back(x);
			gl_w.push_back(2 / ((1 - x * x) * dp * dp));
		}
	});
	double inner = 0;
	for (size_t i = 0; i < gl_x.size(); ++i) {
		double t = 0.5 * u * (gl_x[i] + 1);
		double f = std::pow(-std::expm1(-2 * t), n) * std::pow(-std::expm1(-2 * (u - t)), n);
		inner += gl_w[i] * f;
	}
	inner *= 0.5 * u;
	// e^{nu}/sinh(u/2)^{2n+1} in log space to dodge overflow at moderate u
	double lg = n * u - (2 * n + 1) * (std::log(std::abs(std::sinh(0.5 * u))) );
	return inner * std::exp(lg);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                        double eps, int depth) {
	double m = 0.5 * (a + b);
	double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
	double flm = f(lm), frm = f(rm);
	double whole = (b - a) / 6 * (fa + 4 * fm + fb);
	double left = (m - a) / 6 * (fa + 4 * flm + fm);
	double right = (b - m) / 6 * (fm + 4 * frm + fb);
	if (depth <= 0 || std::abs(left + right - whole) < 15 * eps)
		return left + right + (left + right - whole) / 15;
	return adaptive_simpson(f, a, m, fa, flm, fm, eps / 2, depth - 1) +
	       adaptive_simpson(f, m, b, fm, frm, fb, eps / 2, depth - 1);
}

} // namespace

QuadValue j_numeric_integral(int k, long n) {
	if (k < 2) throw std::domain_error("j_numeric_integral: k >= 2 required");
	// B_n(u) decays like u e^{-u/2}; truncate the outer integral at U and
	// bound the tail by the incomplete-gamma style estimate below.
	std::function<double(double)> g = [&](double u) {
		if (u <= 0) return k == 2 ? bfun(n, 1e-9) : 0.0;
		double val = std::pow(u, k - 2) * bfun(n, u);
		return std::isfinite(val) ? val : 0.0;
	};
	const double U = 60 + 4.0 * k + 8.0 * n;
	double eps = 1e-10;
	double fa = g(1e-12), fm = g(0.5 * U), fb = g(U);
	double integral = adaptive_simpson(g, 1e-12, U, fa, fm, fb, eps * 20, 28);
	// tail: integrand <= C u^{k-1} e^{-u/2} beyond U, C from the endpoint value
	double tail = std::abs(g(U)) * 2 * (1 + 2 * (k + 2 * n) / U);
	double kfact = 1;
	for (int i = 2; i <= k - 2; ++i) kfact *= i;
	QuadValue out;
	double scale = std::pow(2.0, 2 * n + 1) * kfact;
	out.value = integral / scale;
	out.error_estimate = (eps * 20 * std::abs(integral) + tail) / scale + 1e-13;
	out.converged = std::isfinite(out.value);
	return out;
}

SpectralParams::SpectralParams(double a, double b) : alpha(a), beta(b) {
	if (!(a > 0) || !(b > 0) || !(a * b > 1))
		throw std::domain_error("SpectralParams: alpha, beta > 0 with alpha*beta > 1 required");
}

double SpectralParams::epsilon() const { return 1.0 / std::sqrt(alpha * beta); }
double SpectralParams::kappa() const { return 1.0 / std::sqrt(alpha * beta - 1.0); }

} // namespace ncho::apery
