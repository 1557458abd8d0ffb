#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace ddeform {

/// Space dimension D of the fractional-dimensional formalism.
///
/// Construction rejects D <= 0 and non-finite values: Gamma(D/2) has poles at
/// the non-positive even integers and the solid-angle factor sigma(D) is only
/// positive for D > 0.
class Dimension {
public:
    explicit Dimension(double d) : d_(d)
    {
        if (!std::isfinite(d) || !(d > 0.0)) {
            throw std::domain_error("dimension must be finite and > 0, got " + std::to_string(d));
        }
    }

    double value() const noexcept { return d_; }

    friend bool operator==(Dimension a, Dimension b) noexcept { return a.d_ == b.d_; }

private:
    double d_;
};

/// Raised when a power series does not reach its termination criterion within
/// the iteration cap.
class SeriesNotConverged : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kSeriesIterationCap = 10000;

/// Largest |x| accepted by bessel_j / bessel_i.
inline constexpr double kBesselMaxArgument = 100.0;

/// Solid-angle factor sigma(D) = 2 pi^{D/2} / Gamma(D/2).
double sigma(Dimension d);

/// D-factor [n]_D = n + (D-1)/2 (1 - (-1)^n).
double d_factor(int n, Dimension d);

/// D-deformed factorial [n]_D! = [n]_D [n-1]_D ... [1]_D, with [0]_D! = 1.
///
/// Evaluated from the Gamma-function closed form. Throws std::overflow_error
/// when the result exceeds the double range (n around 170 for D near 1).
double d_factorial(int n, Dimension d);

/// log([n]_D!), finite for every n >= 0.
double log_d_factorial(int n, Dimension d);

/// Bessel function of the first kind J_nu(x), nu >= -1, |x| <= kBesselMaxArgument.
/// Negative x is accepted only for integer nu.
double bessel_j(double nu, double x);

/// Modified Bessel function I_nu(x), nu >= -1, |x| <= kBesselMaxArgument.
double bessel_i(double nu, double x);

/// Bessel functions J_nu and Y_nu for nu >= 0, x >= 2 by Steed's method.
struct BesselJY {
    double j;
    double y;
};
BesselJY bessel_jy_steed(double nu, double x);

namespace detail {

// Neumaier-compensated accumulator.
template <class T>
class CompensatedSum {
public:
    void add(T v)
    {
        const T t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    T sum_{0};
    T comp_{0};
};

template <class T>
class CompensatedSum<std::complex<T>> {
public:
    void add(std::complex<T> v)
    {
        re_.add(v.real());
        im_.add(v.imag());
    }
    std::complex<T> value() const { return {re_.value(), im_.value()}; }

private:
    CompensatedSum<T> re_;
    CompensatedSum<T> im_;
};

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

inline long double d_factor_ld(int n, long double d)
{
    return (n % 2 == 0) ? static_cast<long double>(n) : static_cast<long double>(n) + d - 1.0L;
}

// Sums sum_m term_m where term_{m+1} = term_m * step(m) and term_0 = first.
// Stops once |step| < 1/2 and the next term is negligible against the
// partial sum (or against the largest term seen, when the sum cancels).
template <class Acc, class Step>
Acc power_series(Acc first, Step step, const char* name)
{
    CompensatedSum<Acc> sum;
    Acc term = first;
    long double largest = std::abs(term);
    sum.add(term);
    for (int m = 0; m < kSeriesIterationCap; ++m) {
        const Acc ratio = step(m);
        term *= ratio;
        const long double mag = std::abs(term);
        if (!std::isfinite(mag)) {
            throw SeriesNotConverged(std::string(name) + ": term overflow");
        }
        largest = std::max(largest, mag);
        sum.add(term);
        if (std::abs(ratio) < 0.5L) {
            const long double s = std::abs(sum.value());
            if (mag <= 1e-16L * s || mag <= 1e-20L * largest) {
                return sum.value();
            }
        }
    }
    throw SeriesNotConverged(std::string(name) + ": iteration cap reached");
}

} // namespace detail

/// D-deformed exponential E_D(x) = sum_n x^n / [n]_D!, for real or complex x.
/// Negative real x is summed through the equivalent confluent hypergeometric form.
template <class Scalar>
Scalar deformed_exp(Scalar x, Dimension d)
{
    using Acc = std::conditional_t<detail::is_complex<Scalar>::value,
                                   std::complex<long double>, long double>;
    const Acc xl = static_cast<Acc>(x);
    const long double dl = d.value();
    if constexpr (!detail::is_complex<Scalar>::value) {
        if (xl < 0.0L) {
            // E_D(x) = e^x M((D-1)/2, D, -2x); the Kummer series has no
            // cancellation for x < 0, unlike the direct one near D = 1.
            const long double a = 0.5L * (dl - 1.0L);
            const long double z = -2.0L * xl;
            const long double m = detail::power_series<long double>(
                1.0L,
                [&](int k) { return (a + k) / (dl + k) * z / (k + 1.0L); },
                "deformed_exp");
            return static_cast<Scalar>(std::exp(xl) * m);
        }
    }
    const Acc r = detail::power_series<Acc>(
        Acc(1),
        [&](int m) { return xl / detail::d_factor_ld(m + 1, dl); },
        "deformed_exp");
    return static_cast<Scalar>(r);
}

/// D-deformed cosine COS_D(x) = sum_n (-1)^n x^{2n} / [2n]_D!.
double deformed_cos(double x, Dimension d);

/// D-deformed sine SIN_D(x) = sum_{n>=1} (-1)^{n-1} x^{2n-1} / [2n-1]_D!.
double deformed_sin(double x, Dimension d);

// Bessel closed forms of the deformed functions:
//   E_D(x)   = Gamma(D/2) (x/2)^{1-D/2} [I_{D/2-1}(x) + I_{D/2}(x)]
//   COS_D(x) = Gamma(D/2) (x/2)^{1-D/2} J_{D/2-1}(x)
//   SIN_D(x) = Gamma(D/2) (x/2)^{1-D/2} J_{D/2}(x)
// Negative x is handled through parity; x = 0 returns the series limit.
double deformed_exp_bessel(double x, Dimension d);
double deformed_cos_bessel(double x, Dimension d);
double deformed_sin_bessel(double x, Dimension d);

} // namespace ddeform
