#include "laqw/specialfn.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace laqw {

double erfc(double x) { return std::erfc(x); }

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 1000000;

// Lower series, returns P(a,x)*Gamma-normalized.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper continued fraction (modified Lentz), returns Q(a,x).
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

double beta_cf(double a, double b, double x) {
    const double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

} // namespace

double igamc(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::invalid_argument("igamc requires a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double incbeta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("incbeta requires a, b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double lbt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                       b * std::log1p(-x);
    const double bt = std::exp(lbt);
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
    return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double beta_quantile(double gamma, double a, double b) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw std::invalid_argument("quantile level outside [0,1]");
    if (b == 0.0) return 1.0; // Beta(a, 0) boundary: point mass at 1
    if (a == 0.0) return 0.0;
    if (gamma == 0.0) return 0.0;
    if (gamma == 1.0) return 1.0;

    double lo = 0.0, hi = 1.0;
    double x = a / (a + b);
    for (int it = 0; it < 200; ++it) {
        const double f = incbeta(a, b, x) - gamma;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        // Newton step with bisection fallback; density in log space to
        // survive the huge-parameter regime.
        const double logpdf = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                              (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x);
        const double pdf = std::exp(logpdf);
        double nx = x - f / pdf;
        if (!(nx > lo && nx < hi) || pdf == 0.0 || !std::isfinite(nx)) nx = 0.5 * (lo + hi);
        if (std::abs(nx - x) < 1e-15 * (1.0 + std::abs(x)) && std::abs(f) < 1e-12) {
            x = nx;
            break;
        }
        x = nx;
        if (hi - lo < 1e-16) break;
    }
    return x;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

} // namespace laqw
