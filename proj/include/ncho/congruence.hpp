#ifndef NCHO_CONGRUENCE_HPP
#define NCHO_CONGRUENCE_HPP

#include <string>
#include <vector>

#include "ncho/apery.hpp"
#include "ncho/padic.hpp"

namespace ncho::congruence {

using padic::ordp;
using padic::residue;

struct CongruenceRecord {
	long p = 0, m = 0, s = 0, n = 0;
	bool holds = false;
	std::string lhs_residue, rhs_residue;
	std::string note;
	std::string to_json() const;
};

// Theorem: p^{2sn} J~_{2s+2}(m p^n) = p^{2s(n-1)} J~_{2s+2}(m p^{n-1}) mod p^n
// for odd prime p and 1 <= m < p/2. Any failure is an implementation bug.
CongruenceRecord weak_congruence(long p, long m, long s, long n);

struct ConjectureReport {
	long p = 0, m = 0, s = 0;
	apery::Parity parity{};
	std::vector<CongruenceRecord> rows; // one per n = 2..n_max
	bool all_pass() const;
};

// Conjectural ratio congruence, both parities; failures are data.
// mp^{n_max} is capped at index_cap (default 1e5) to bound runtime.
ConjectureReport conjecture_report(long p, long m, long s, long n_max, apery::Parity parity,
                                   long index_cap = 100000);

// binom(-1/2, pj)^2 binom(m p^n, pj) = binom(-1/2, j)^2 binom(m p^{n-1}, j) mod p^n,
// and p not dividing j implies binom(m p^n, j) = 0 mod p^n.
bool binom_lemma_check(long p, long m, long n, long j);

// ord_p binom(-1/2, j) <= n - ord_p(2j+1), for 1 <= 2j+1 < p^{n+1}.
bool ordp_bound_check(long p, long n, long j);

struct CentralBinomRow {
	long j = 0, r = 0, s = 0;
	bool proved_holds = false;      // mod p^{r+1}, must hold
	bool conjectural_holds = false; // mod p^{s+r+1}, recorded
};
struct CentralBinomReport {
	long p = 0;
	std::vector<CentralBinomRow> rows;
	bool proved_all_pass() const;
};
// binom(2j',j') vs (-1)^{(p-1)/2} binom(2j,j) with 2j'+1 = p(2j+1).
CentralBinomReport central_binom_experiment(long p, long j_max);

// Internal dual route for tests: J~_k(idx) as a PVal via the p-adic
// recurrence sweep (no big-rational tables).
padic::PVal jtilde_padic(int k, long idx, const Int& p, long digits);

} // namespace ncho::congruence

#endif
