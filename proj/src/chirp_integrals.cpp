#include "lorasat/chirp_integrals.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

namespace lorasat {

namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

cd unit_phasor(double phase_rad) {
    return std::polar(1.0, std::remainder(phase_rad, 2.0 * kPi));
}

struct GlRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Newton iteration on the Legendre recurrence; nodes ascending on [-1, 1].
GlRule compute_gl(int order) {
    GlRule rule;
    rule.nodes.resize(static_cast<size_t>(order));
    rule.weights.resize(static_cast<size_t>(order));
    const int half = (order + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(order) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= order; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * x * p2 - (j - 1.0) * p3) / j;
            }
            dp = order * (x * p1 - p2) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<size_t>(i)] = -x;
        rule.nodes[static_cast<size_t>(order - 1 - i)] = x;
        rule.weights[static_cast<size_t>(i)] = w;
        rule.weights[static_cast<size_t>(order - 1 - i)] = w;
    }
    return rule;
}

const GlRule& gl_rule(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    static std::mutex mu;
    static std::map<int, GlRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gl(order)).first;
    return it->second;
}

// --- Fresnel integral -------------------------------------------------------

// Power series: F(x) = sum_m (i pi/2)^m x^(2m+1) / (m! (2m+1)).
cd fresnel_series(double x) {
    const cd ratio = kI * (kPi / 2.0) * x * x;
    cd c(x, 0.0);  // (i pi/2)^m x^(2m+1) / m!
    cd sum = c;
    for (int m = 0; m < 60; ++m) {
        c *= ratio / static_cast<double>(m + 1);
        const cd term = c / static_cast<double>(2 * m + 3);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) return sum;
    }
    throw NonConvergent("fresnel power series failed to converge");
}

// Modified Lentz continued fraction for erfc(z),
//   erfc(z) = e^{-z^2}/sqrt(pi) * 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))),
// valid for Re z > 0. Our z lies on the -45 degree ray where z^2 is purely
// imaginary, so the e^{-z^2} factor has unit magnitude at any |z|.
cd fresnel_continued_fraction(double x) {
    const cd z = (std::sqrt(kPi) / 2.0) * cd(1.0, -1.0) * x;
    const double tiny = 1e-290;
    cd f(tiny, 0.0), c_lentz(tiny, 0.0), d_lentz(0.0, 0.0);
    bool converged = false;
    for (int n = 1; n <= 400; ++n) {
        const double a_n = (n == 1) ? 1.0 : 0.5 * (n - 1.0);
        d_lentz = z + a_n * d_lentz;
        if (std::abs(d_lentz) < tiny) d_lentz = cd(tiny, 0.0);
        c_lentz = z + a_n / c_lentz;
        if (std::abs(c_lentz) < tiny) c_lentz = cd(tiny, 0.0);
        d_lentz = 1.0 / d_lentz;
        const cd delta = c_lentz * d_lentz;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NonConvergent("fresnel continued fraction failed to converge");
    // e^{-z^2} = e^{i pi x^2 / 2}
    const cd exp_mz2 = unit_phasor(kPi * x * x / 2.0);
    const cd erfc_z = exp_mz2 / std::sqrt(kPi) * f;
    const cd erf_z = 1.0 - erfc_z;
    return cd(0.5, 0.5) * erf_z;
}

// --- Segment integral regimes ------------------------------------------------
// All routines below evaluate the centered core
//   I(alpha, Bp, h) = integral_{-h}^{h} exp(i (alpha v^2 + Bp v)) dv.

cd core_gl_direct(double alpha, double bp, double h) {
    const GlRule& rule = gl_rule(32);
    cd sum(0.0, 0.0);
    for (size_t j = 0; j < rule.nodes.size(); ++j) {
        const double v = h * rule.nodes[j];
        sum += rule.weights[j] * unit_phasor(alpha * v * v + bp * v);
    }
    return h * sum;
}

// Mild quadratic, fast linear oscillation: expand exp(i alpha v^2) in powers
// of alpha and integrate each monomial moment against e^{i Bp v} by the
// boundary recurrence M_m = [v^m e / (i Bp)] - (m / (i Bp)) M_{m-1}.
// Requires |Bp| h >> 1 (callers guarantee > ~29) so the recurrence contracts.
cd core_taylor_moments(double alpha, double bp, double h) {
    const cd i_bp = kI * bp;
    const cd e_p = unit_phasor(bp * h);
    const cd e_m = std::conj(e_p);
    cd m_prev = (e_p - e_m) / i_bp;  // M_0
    cd sum = m_prev;
    cd coef(1.0, 0.0);  // (i alpha)^n / n!
    double h_pow = 1.0;
    int m = 0;
    for (int n = 1; n <= 24; ++n) {
        for (int step = 0; step < 2; ++step) {
            ++m;
            h_pow *= h;
            const double parity = (m % 2 == 0) ? 1.0 : -1.0;
            const cd boundary = h_pow * (e_p - parity * e_m);
            m_prev = boundary / i_bp - (static_cast<double>(m) / i_bp) * m_prev;
        }
        coef *= kI * alpha / static_cast<double>(n);
        const cd term = coef * m_prev;
        sum += term;
        if (std::abs(term) < 1e-18 * h) return sum;
    }
    return sum;
}

cd core_gl_panels(double alpha, double bp, double h) {
    // Phase budget per GL-16 panel kept near a dozen radians.
    const double variation =
        2.0 * (std::abs(alpha) * h * h + std::abs(bp) * h) + 1.0;
    int panels = static_cast<int>(std::ceil(variation / 12.0));
    if (panels < 1) panels = 1;
    if (panels > 2000000)
        throw NonConvergent("segment integral fallback needs too many panels");
    const GlRule& rule = gl_rule(16);
    cd sum(0.0, 0.0);
    const double width = 2.0 * h / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = -h + p * width;
        const double mid = lo + width / 2.0;
        cd local(0.0, 0.0);
        for (size_t j = 0; j < rule.nodes.size(); ++j) {
            const double v = mid + (width / 2.0) * rule.nodes[j];
            local += rule.weights[j] * unit_phasor(alpha * v * v + bp * v);
        }
        sum += (width / 2.0) * local;
    }
    return sum;
}

// Far-stationary-point asymptotic series from repeated integration by parts:
//   I = sum_m [ e^{i phi(v)} c_m / (i phi'(v)^{2m+1}) ]_{-h}^{h},
//   c_0 = 1, c_{m+1} = c_m (2m+1)(2 alpha) / i.
// Truncated at the smallest term; panels fallback if it stalls.
cd core_asymptotic(double alpha, double bp, double h) {
    const double dphi_p = 2.0 * alpha * h + bp;
    const double dphi_m = -2.0 * alpha * h + bp;
    const cd e_p = unit_phasor(alpha * h * h + bp * h);
    const cd e_m = unit_phasor(alpha * h * h - bp * h);
    cd c(1.0, 0.0);
    double pow_p = dphi_p, pow_m = dphi_m;
    cd sum(0.0, 0.0);
    double prev_scale = std::numeric_limits<double>::infinity();
    for (int m = 0; m <= 30; ++m) {
        const double scale =
            std::abs(c) * std::max(1.0 / std::abs(pow_p), 1.0 / std::abs(pow_m));
        if (scale > prev_scale) break;  // divergent tail reached
        sum += (e_p * c / pow_p - e_m * c / pow_m) / kI;
        if (scale < 1e-18 * h) return sum;
        prev_scale = scale;
        c *= (2.0 * m + 1.0) * (2.0 * alpha) / kI;
        pow_p *= dphi_p * dphi_p;
        pow_m *= dphi_m * dphi_m;
    }
    return core_gl_panels(alpha, bp, h);
}

}  // namespace

const std::vector<double>& gauss_legendre_nodes(int order) {
    return gl_rule(order).nodes;
}

const std::vector<double>& gauss_legendre_weights(int order) {
    return gl_rule(order).weights;
}

std::complex<double> fresnel(double x) {
    if (x == 0.0) return {0.0, 0.0};
    if (x < 0.0) return -fresnel(-x);
    if (x <= 2.0) return fresnel_series(x);
    return fresnel_continued_fraction(x);
}

std::complex<double> chirp_segment_integral(double alpha, double beta, double a,
                                            double b) {
    if (a == b) return {0.0, 0.0};
    if (b < a) return -chirp_segment_integral(alpha, beta, b, a);

    // Center at the midpoint: phase = phi0 + Bp v + alpha v^2, v in [-h, h].
    const double u0 = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double bp = beta + 2.0 * alpha * u0;
    const cd prefactor = unit_phasor(alpha * u0 * u0 + beta * u0);

    const double quad = std::abs(alpha) * h * h;
    cd core;
    if (quad <= 0.5) {
        if (std::abs(bp) * h + quad <= 30.0)
            core = core_gl_direct(alpha, bp, h);
        else
            core = core_taylor_moments(alpha, bp, h);
    } else {
        const double center = bp / (2.0 * alpha);  // stationary point offset
        const double scale = std::sqrt(2.0 * std::abs(alpha) / kPi);
        const double t_a = (-h + center) * scale;
        const double t_b = (h + center) * scale;
        if (t_a * t_b <= 0.0 || std::min(std::abs(t_a), std::abs(t_b)) <= 500.0) {
            cd diff = fresnel(t_b) - fresnel(t_a);
            if (alpha < 0.0) diff = std::conj(diff);
            core = std::sqrt(kPi / (2.0 * std::abs(alpha))) * diff *
                   unit_phasor(-bp * bp / (4.0 * alpha));
        } else {
            core = core_asymptotic(alpha, bp, h);
        }
    }
    return prefactor * core;
}

}  // namespace lorasat
