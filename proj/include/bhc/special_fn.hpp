#pragma once

// Real special functions and the best Khinchine constants for Rademacher
// sums (Haagerup's values for real scalars, Steinhaus-type values for
// complex scalars).

namespace bhc {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.5772156649015328606065121;
inline constexpr double kPi = 3.141592653589793238462643383;
inline constexpr double kSqrtPi = 1.772453850905516027298167483;

/// ln Gamma(x) for finite x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Best constant A_p in Khinchine's inequality for real Rademacher sums,
/// ||sum a_i r_i||_p >= A_p ||a||_2, p >= 1.
///
/// For p <= p0 this is 2^{1/2-1/p}; above p0 it is sqrt(2)(Gamma((p+1)/2)/sqrt(pi))^{1/p}.
double khinchine_real(double p);

/// The branch point p0 in (1,2): Gamma((p0+1)/2) = sqrt(pi)/2.
/// Computed on first use by bisection and cached.
double find_p0();

/// Complex analogue: (Gamma((p+2)/2))^{1/p}, p >= 1.
double khinchine_complex(double p);

/// (Gamma(s)/Gamma(r))^{1/(s-r)} for r, s > 0, r != s. Nondecreasing in both
/// arguments (Qi). The removable singularity at r == s is rejected.
double qi_ratio(double r, double s);

/// Root of a continuous f on [lo, hi] with f(lo), f(hi) of opposite sign.
/// Stops when the bracket is narrower than tol.
template <class F>
double bisect_root(F&& f, double lo, double hi, double tol)
{
    double flo = f(lo);
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0)
            return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace bhc
