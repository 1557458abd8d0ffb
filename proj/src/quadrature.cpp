#include "ddeform/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace ddeform {

namespace {

// Kronrod abscissae (descending, last is the centre) and weights; Gauss 7-point
// weights pair with the odd-indexed Kronrod abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

double checked(const RealFunction& g, double x)
{
    const double v = g(x);
    if (!std::isfinite(v)) {
        throw std::domain_error("quadrature: integrand is not finite at " + std::to_string(x));
    }
    return v;
}

Segment kronrod15(const RealFunction& g, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = checked(g, centre);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = checked(g, centre - dx) + checked(g, centre + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * fsum;
        }
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

// int_a^b f(s) s^{D-1} ds for 0 <= a < b <= inf, via u = s^D / D.
QuadratureResult power_weight_half(const RealFunction& f, double dv, double a, double b, double tol)
{
    const double inv_d = 1.0 / dv;
    const auto s_of_u = [=](double u) { return std::pow(dv * u, inv_d); };
    const double ua = std::pow(a, dv) / dv;
    if (std::isinf(b)) {
        // u = ua + t / (1 - t)
        const RealFunction g = [&, s_of_u, ua](double t) {
            const double om = 1.0 - t;
            const double s = s_of_u(ua + t / om);
            const double v = f(s);
            if (!std::isfinite(v)) {
                if (s > kDecayProbeRadius) return 0.0;
                throw std::domain_error("quadrature: integrand is not finite at " + std::to_string(s));
            }
            return v / (om * om);
        };
        return gauss_kronrod(g, 0.0, 1.0, tol, tol);
    }
    const double ub = std::pow(b, dv) / dv;
    const RealFunction g = [&, s_of_u](double u) { return f(s_of_u(u)); };
    return gauss_kronrod(g, ua, ub, tol, tol);
}

// Signed int_lo^hi f(xi) |xi|^{D-1} dxi.
QuadratureResult power_weight_integral(const RealFunction& f, double dv, double lo, double hi, double tol)
{
    if (lo == hi) {
        return {0.0, 0.0, true, 0};
    }
    if (lo > hi) {
        QuadratureResult r = power_weight_integral(f, dv, hi, lo, tol);
        r.value = -r.value;
        return r;
    }
    const RealFunction mirrored = [&f](double s) { return f(-s); };
    if (lo >= 0.0) {
        return power_weight_half(f, dv, lo, hi, tol);
    }
    if (hi <= 0.0) {
        return power_weight_half(mirrored, dv, -hi, -lo, tol);
    }
    const QuadratureResult left = power_weight_half(mirrored, dv, 0.0, -lo, 0.5 * tol);
    const QuadratureResult right = power_weight_half(f, dv, 0.0, hi, 0.5 * tol);
    return {left.value + right.value, left.abs_error_estimate + right.abs_error_estimate,
            left.converged && right.converged, left.intervals + right.intervals};
}

WeightedIntegral to_weighted(const QuadratureResult& r, double dv, double lo, double hi)
{
    const double scale = sigma(Dimension(dv)) / 2.0;
    return {scale * r.value, scale * r.abs_error_estimate, dv, lo, hi, r.converged};
}

} // namespace

QuadratureResult gauss_kronrod(const RealFunction& g, double a, double b, double abs_tol,
                               double rel_tol, int max_intervals)
{
    if (!(abs_tol > 0.0) && !(rel_tol > 0.0)) {
        throw std::invalid_argument("gauss_kronrod: need a positive tolerance");
    }
    if (a == b) {
        return {0.0, 0.0, true, 0};
    }
    std::priority_queue<Segment> heap;
    Segment first = kronrod15(g, a, b);
    double total = first.value;
    double error = first.error;
    heap.push(first);
    int count = 1;
    const auto target = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
    while (error > target() && count < max_intervals) {
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            break; // interval no longer divisible in floating point
        }
        heap.pop();
        const Segment left = kronrod15(g, worst.a, mid);
        const Segment right = kronrod15(g, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++count;
    }
    // recompute from the segments to shed accumulated update rounding
    double value = 0.0;
    double err = 0.0;
    std::vector<Segment> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        value += it->value;
        err += it->error;
    }
    return {value, err, err <= std::max(abs_tol, rel_tol * std::abs(value)), count};
}

WeightedIntegral integrate_weighted(const RealFunction& f, Dimension d, double lo, double hi, double tol)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("integrate_weighted: tol must be > 0");
    }
    if (std::isnan(lo) || std::isnan(hi)) {
        throw std::invalid_argument("integrate_weighted: NaN bound");
    }
    if (std::isinf(lo) && std::isinf(hi) && lo < 0.0 && hi > 0.0) {
        return integrate_whole_line(f, d, tol);
    }
    const double dv = d.value();
    return to_weighted(power_weight_integral(f, dv, lo, hi, tol), dv, lo, hi);
}

WeightedIntegral integrate_whole_line(const RealFunction& f, Dimension d, double tol)
{
    if (!(tol > 0.0)) {
        throw std::invalid_argument("integrate_whole_line: tol must be > 0");
    }
    const double dv = d.value();
    const double probe = std::pow(kDecayProbeRadius, dv + 1.0);
    for (double s : {kDecayProbeRadius, -kDecayProbeRadius}) {
        const double v = f(s);
        if (!std::isfinite(v) || std::abs(v) * probe > 1e-10) {
            throw std::domain_error("integrate_whole_line: integrand does not decay (|f(" +
                                    std::to_string(s) + ")| too large)");
        }
    }
    const double inf = std::numeric_limits<double>::infinity();
    const RealFunction mirrored = [&f](double s) { return f(-s); };
    const QuadratureResult left = power_weight_half(mirrored, dv, 0.0, inf, 0.5 * tol);
    const QuadratureResult right = power_weight_half(f, dv, 0.0, inf, 0.5 * tol);
    const QuadratureResult both{left.value + right.value,
                                left.abs_error_estimate + right.abs_error_estimate,
                                left.converged && right.converged, left.intervals + right.intervals};
    return to_weighted(both, dv, -inf, inf);
}

} // namespace ddeform
