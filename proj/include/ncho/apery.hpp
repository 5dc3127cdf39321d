#ifndef NCHO_APERY_HPP
#define NCHO_APERY_HPP

#include <string>
#include <vector>

#include "ncho/formal.hpp"
#include "ncho/rat.hpp"

namespace ncho::apery {

// Normalized sequence J~_k(0..n_max), all exact rationals.
// J~_{2s+2}(n) = J~_{2s+1}(n) = 0 for n < s and = 1/(s!)^2 at n = s.
struct JTable {
	int k = 0;
	std::vector<Rat> values;
	std::string to_csv() const;
	std::string to_json() const;
};

// Three-term recurrence 4n^2 x_n - (8n^2-8n+3) x_{n-1} + 4(n-1)^2 x_{n-2}
// = 4 y_{n-1} with y the (k-2)-table; k = 1, 2 use their closed forms.
// Tables are memoized per k and extended on demand; reads are thread-safe.
const JTable& jtilde(int k, int n_max);
Rat jtilde_value(int k, long n); // single entry without retaining table growth policy

enum class Parity { Even, Odd };

// Nested sums Z^even_s(k), Z^odd_s(k) over decreasing index chains below k.
Rat zsum(Parity parity, int s, int k);

// Theorem route: J~_{2s+2}(n) = sum_j (-1)^j binom(-1/2,j)^2 binom(n,j) Z^even_s(j)
// (odd analogue with Z^odd). Requires k >= 3.
Rat jtilde_explicit(int k, long n);

// J_k(0) = (k-1) zeta(k, 1/2) in the formal-constant ring.
FormalNumber j0_formal(int k);

// J_k(n) assembled from the normalization relations and the J~ tables.
FormalNumber j_formal(int k, long n);

// Explicit binomial-sum formulas for l = 2, 3, 4.
FormalNumber j_explicit_smallL(int l, long n);

struct SeriesValue {
	double value = 0;
	double tail_bound = 0;
};
// Double-sum series for J_k(n), truncated at m <= m_max; crude tail bound
// O(m_max^{1-k}); a single Richardson step is applied for k = 2.
SeriesValue j_numeric_series(int k, long n, long m_max);

struct QuadValue {
	double value = 0;
	double error_estimate = 0;
	bool converged = true;
};
// Direct quadrature of the B_n(u) integral representation.
QuadValue j_numeric_integral(int k, long n);

struct SpectralParams {
	double alpha = 0, beta = 0;
	SpectralParams(double a, double b);
	double epsilon() const; // 1/sqrt(alpha*beta)
	double kappa() const;   // 1/sqrt(alpha*beta - 1)
};

} // namespace ncho::apery

#endif
