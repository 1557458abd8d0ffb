#include "ddeform/special_functions.hpp"

#include <numbers>
#include <string>

namespace ddeform {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this argument J_nu is summed as a power series in long double; the
// largest term is bounded by I_nu(12) ~ 2e4, which leaves ~1e-15 absolute.
constexpr double kBesselSeriesSwitch = 12.0;

bool is_integer(double v) { return std::floor(v) == v; }

void check_order(double nu, const char* who)
{
    if (!std::isfinite(nu) || nu < -1.0) {
        throw std::domain_error(std::string(who) + ": order must be >= -1");
    }
}

void check_argument(double x, const char* who)
{
    if (!std::isfinite(x) || std::abs(x) > kBesselMaxArgument) {
        throw std::domain_error(std::string(who) + ": |x| outside working range");
    }
}

// sum_k s^k (x/2)^{2k+nu} / (k! Gamma(k+nu+1)) with s = -1 (J) or +1 (I); x > 0, nu > -1.
double bessel_series(double nu, double x, long double sign)
{
    const long double half = static_cast<long double>(x) / 2.0L;
    const long double q = sign * half * half;
    const long double nul = nu;
    const long double first = std::pow(half, nul) / std::tgamma(nul + 1.0L);
    const long double r = detail::power_series<long double>(
        first,
        [&](int k) { return q / ((k + 1.0L) * (k + 1.0L + nul)); },
        "bessel_series");
    return static_cast<double>(r);
}

double bessel_j_positive(double nu, double x)
{
    if (x <= kBesselSeriesSwitch) {
        return bessel_series(nu, x, -1.0L);
    }
    if (nu >= 0.0) {
        return bessel_jy_steed(nu, x).j;
    }
    // J_{-mu} = cos(mu pi) J_mu - sin(mu pi) Y_mu, mu in (0, 1)
    const double mu = -nu;
    const BesselJY jy = bessel_jy_steed(mu, x);
    return std::cos(mu * kPi) * jy.j - std::sin(mu * kPi) * jy.y;
}

// Gamma(D/2) (x/2)^{1-D/2}, x > 0
double closed_form_prefactor(double x, double d)
{
    return std::tgamma(d / 2.0) * std::pow(x / 2.0, 1.0 - d / 2.0);
}

} // namespace

double sigma(Dimension d)
{
    const double dv = d.value();
    return 2.0 * std::pow(kPi, dv / 2.0) / std::tgamma(dv / 2.0);
}

double d_factor(int n, Dimension d)
{
    if (n < 0) {
        throw std::domain_error("d_factor: n must be >= 0");
    }
    return (n % 2 == 0) ? static_cast<double>(n) : n + d.value() - 1.0;
}

double log_d_factorial(int n, Dimension d)
{
    if (n < 0) {
        throw std::domain_error("log_d_factorial: n must be >= 0");
    }
    const double dv = d.value();
    const int half = n / 2;
    const double gamma_arg = (n % 2 == 0) ? (n + dv) / 2.0 : (n + dv + 1.0) / 2.0;
    return n * std::numbers::ln2 + std::lgamma(half + 1.0) + std::lgamma(gamma_arg)
         - std::lgamma(dv / 2.0);
}

double d_factorial(int n, Dimension d)
{
    if (n < 0) {
        throw std::domain_error("d_factorial: n must be >= 0");
    }
    if (n == 0) {
        return 1.0;
    }
    const double dv = d.value();
    const int half = n / 2;
    const double gamma_arg = (n % 2 == 0) ? (n + dv) / 2.0 : (n + dv + 1.0) / 2.0;
    // tgamma is exact enough and overflow-free for arguments below ~171
    if (gamma_arg < 170.0 && half < 170) {
        const double v = std::ldexp(std::tgamma(half + 1.0) * (std::tgamma(gamma_arg) / std::tgamma(dv / 2.0)), n);
        if (std::isfinite(v)) {
            return v;
        }
    }
    const double lv = log_d_factorial(n, d);
    if (lv >= std::log(std::numeric_limits<double>::max())) {
        throw std::overflow_error("d_factorial: [" + std::to_string(n) + "]_D! exceeds double range");
    }
    return std::exp(lv);
}

BesselJY bessel_jy_steed(double nu, double x)
{
    if (nu < 0.0 || x < 2.0) {
        throw std::domain_error("bessel_jy_steed: requires nu >= 0 and x >= 2");
    }
    constexpr double eps = 1e-16;
    constexpr double tiny = 1e-300;
    constexpr int max_iter = 100000;

    const int nl = std::max(0, static_cast<int>(nu - x + 1.5));
    const double mu = nu - nl;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;

    // CF1: J'_nu / J_nu by modified Lentz.
    int sign = 1;
    double h = std::max(nu * xi, tiny);
    double b = xi2 * nu;
    double dd = 0.0;
    double c = h;
    int it = 0;
    for (; it < max_iter; ++it) {
        b += xi2;
        dd = b - dd;
        if (std::abs(dd) < tiny) dd = tiny;
        c = b - 1.0 / c;
        if (std::abs(c) < tiny) c = tiny;
        dd = 1.0 / dd;
        const double del = c * dd;
        h *= del;
        if (dd < 0.0) sign = -sign;
        if (std::abs(del - 1.0) < eps) break;
    }
    if (it == max_iter) {
        throw SeriesNotConverged("bessel_jy_steed: CF1 did not converge");
    }

    // Downward recurrence from nu to mu on unnormalized values.
    double jl = sign * 1e-30;
    double jpl = h * jl;
    const double jl_top = jl;
    double fact = nu * xi;
    for (int l = nl; l >= 1; --l) {
        const double jtemp = fact * jl + jpl;
        fact -= xi;
        jpl = fact * jtemp - jl;
        jl = jtemp;
    }
    if (jl == 0.0) jl = eps;
    const double f = jpl / jl;

    // CF2: p + iq = (J' + iY') / (J + iY) by complex Lentz.
    using cplx = std::complex<double>;
    double a = 0.25 - mu * mu;
    cplx pq(-0.5 * xi, 1.0);
    cplx bb(2.0 * x, 2.0);
    cplx cc = bb + cplx(0.0, 1.0) * (a * xi) / pq;
    cplx dc = 1.0 / bb;
    pq *= cc * dc;
    for (it = 2; it < max_iter; ++it) {
        a += 2.0 * (it - 1);
        bb += cplx(0.0, 2.0);
        dc = a * dc + bb;
        if (std::abs(dc.real()) + std::abs(dc.imag()) < tiny) dc = tiny;
        cc = bb + a / cc;
        if (std::abs(cc.real()) + std::abs(cc.imag()) < tiny) cc = tiny;
        dc = 1.0 / dc;
        const cplx del = cc * dc;
        pq *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps) break;
    }
    if (it == max_iter) {
        throw SeriesNotConverged("bessel_jy_steed: CF2 did not converge");
    }
    const double p = pq.real();
    const double q = pq.imag();

    const double w = xi2 / kPi;
    const double gam = (p - f) / q;
    double jmu = std::sqrt(w / ((p - f) * gam + q));
    jmu = std::copysign(jmu, jl);
    double ymu = jmu * gam;
    const double ymup = ymu * (p + q / gam);
    double y1 = mu * xi * ymu - ymup;

    const double j_nu = jl_top * (jmu / jl);
    for (int i = 1; i <= nl; ++i) {
        const double ytemp = (mu + i) * xi2 * y1 - ymu;
        ymu = y1;
        y1 = ytemp;
    }
    return {j_nu, ymu};
}

double bessel_j(double nu, double x)
{
    check_order(nu, "bessel_j");
    check_argument(x, "bessel_j");
    if (nu == -1.0) {
        return -bessel_j(1.0, x);
    }
    if (x < 0.0) {
        if (!is_integer(nu)) {
            throw std::domain_error("bessel_j: negative argument needs integer order");
        }
        const double v = bessel_j_positive(nu, -x);
        return (static_cast<long>(nu) % 2 == 0) ? v : -v;
    }
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw std::domain_error("bessel_j: J_nu(0) diverges for nu < 0");
    }
    return bessel_j_positive(nu, x);
}

double bessel_i(double nu, double x)
{
    check_order(nu, "bessel_i");
    check_argument(x, "bessel_i");
    if (nu == -1.0) {
        return bessel_i(1.0, x);
    }
    if (x < 0.0) {
        if (!is_integer(nu)) {
            throw std::domain_error("bessel_i: negative argument needs integer order");
        }
        const double v = bessel_series(nu, -x, 1.0L);
        return (static_cast<long>(nu) % 2 == 0) ? v : -v;
    }
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw std::domain_error("bessel_i: I_nu(0) diverges for nu < 0");
    }
    return bessel_series(nu, x, 1.0L);
}

double deformed_cos(double x, Dimension d)
{
    const long double x2 = static_cast<long double>(x) * x;
    const long double dl = d.value();
    return static_cast<double>(detail::power_series<long double>(
        1.0L,
        [&](int m) {
            return -x2 / (detail::d_factor_ld(2 * m + 1, dl) * detail::d_factor_ld(2 * m + 2, dl));
        },
        "deformed_cos"));
}

double deformed_sin(double x, Dimension d)
{
    const long double x2 = static_cast<long double>(x) * x;
    const long double dl = d.value();
    return static_cast<double>(detail::power_series<long double>(
        static_cast<long double>(x) / dl,
        [&](int m) {
            return -x2 / (detail::d_factor_ld(2 * m + 2, dl) * detail::d_factor_ld(2 * m + 3, dl));
        },
        "deformed_sin"));
}

double deformed_exp_bessel(double x, Dimension d)
{
    if (x == 0.0) {
        return 1.0;
    }
    const double dv = d.value();
    const double ax = std::abs(x);
    const double pre = closed_form_prefactor(ax, dv);
    const double even = pre * bessel_i(dv / 2.0 - 1.0, ax);
    const double odd = pre * bessel_i(dv / 2.0, ax);
    return x > 0.0 ? even + odd : even - odd;
}

double deformed_cos_bessel(double x, Dimension d)
{
    if (x == 0.0) {
        return 1.0;
    }
    const double dv = d.value();
    const double ax = std::abs(x);
    return closed_form_prefactor(ax, dv) * bessel_j(dv / 2.0 - 1.0, ax);
}

double deformed_sin_bessel(double x, Dimension d)
{
    if (x == 0.0) {
        return 0.0;
    }
    const double dv = d.value();
    const double ax = std::abs(x);
    const double v = closed_form_prefactor(ax, dv) * bessel_j(dv / 2.0, ax);
    return x > 0.0 ? v : -v;
}

} // namespace ddeform
