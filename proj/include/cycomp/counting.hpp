#pragma once

#include "cycomp/bigint.hpp"
#include "cycomp/polynomial.hpp"

namespace cycomp {

// Exact binomial coefficient; 0 unless 0 <= k <= n.
BigInt binomial(long long n, long long k);

BigInt catalan(int n);

// (1/n) C(n,k) C(n,k-1); 0 outside 1 <= k <= n.
BigInt narayana(int n, int k);

// Number of Dyck words of semilength n with k UD-factors and m UUD-factors:
//   (1/k) C(n,k-1) C(n-k-1,m-1) C(k,m)  when m > 0, m <= k, k+m <= n,
//   1                                   when m = 0 and n = k,
//   0                                   otherwise.
BigInt dyck_factor_count(long long n, long long k, long long m);

// Number of compositions of n into k parts with exactly m non-unitary parts,
// C(n-k-1,m-1) C(k,m); 0 outside 1 <= m <= k < n.
BigInt composition_count(long long n, long long k, long long m);

// Narayana polynomial N_n(t) by the convolution recurrence; N_0 = 1, N_1 = t.
ExactPolynomial narayana_poly(int n);

// Generating polynomial of dominant compositions of 2n+1 into n parts by
// their number of non-unitary parts, computed by its own recurrence from the
// last-part case analysis. Equals narayana_poly(n).
ExactPolynomial dominant_poly(int n);

// sum_{m=1..k} dyck_factor_count(n,k,m) t^m.
ExactPolynomial dyck_factor_poly(int n, int k);

// Gamma coefficient of the Narayana polynomial: (1/k) C(k,j) C(k-j,j-1).
BigInt gamma_narayana(int k, int j);

// (1/k) C(k,j-1) (C(k-j+1,j) - C(k-j-1,j-2)); beta(k,0) = 0.
// Counts dominant compositions with j non-unitary parts, no double
// non-unitary part, and last part 1 (for k >= 2).
BigInt beta_narayana(int k, int j);

// Gamma coefficients of the n = 2k+1 and n = 2k-1 factor polynomials:
// C(2k+1,k-1) gamma_narayana(k,j) and C(2k-1,k-1) gamma_narayana(k-1,j).
BigInt gamma_w1(int k, int j);
BigInt gamma_w2(int k, int j);

}  // namespace cycomp
