#pragma once

// Exact checks of the binomial-sum identities and double-precision residuals
// of the Bessel series closed forms.

#include <string>
#include <vector>

namespace schlomilch::identities {

// sum_{j=0}^k (-1)^j 2^-j binom(k,j) binom(j, floor(j/2)) == binom(2k,k) / (2^k (k+1)).
// k <= 1000.
bool wz1_check(int k);

// S_e = sum_j 4^-j binom(k,2j) binom(2j,j)          == binom(2k,k) / 2^k
// S_o = sum_j 2^-(2j+1) binom(k,2j+1) binom(2j+1,j) == k/(k+1) binom(2k,k) / 2^k
// k <= 1000.
bool se_so_check(int k);

// sum_j 4^j / ((2j)! (k-j)!^2)              == binom(4k,2k) / (2k)!
// sum_j 4^j / ((2j+1)! (k-j)! (k-j+1)!)     == (4k+3)/(2k+3)! binom(4k+2,2k+1)
// k <= 300.
bool lemma62_sums_check(int k);

// |sum_{n<M} binom(2n,n)/(n+1)! x^n - e^{2x} (I0(2x) - I1(2x))|, |x| <= 2, M >= 40.
double h_series_identity_check(double x, int terms = 60);

struct TrigBesselResidual {
  double bessel;          // series vs J0(2c) cos 2c + J1(2c) sin 2c
  double hypergeometric;  // series vs 2F3(1/4,3/4; 1/2,1,3/2; -4c^2)
};

// g(c) = sum_k (-1)^k binom(4k,2k)/(2k+1)! c^{2k}, |c| <= 2.
double g_series(double c, int terms = 60);
TrigBesselResidual trig_bessel_identity_check(double c, int terms = 60);

struct DerivativeCheck {
  std::string name;
  double max_residual;
  bool pass;
};

// Central differences (step 1e-5) at 50 points of (0, 2]; pass iff max
// residual <= 1e-8.
std::vector<DerivativeCheck> derivative_identity_checks();

}  // namespace schlomilch::identities
