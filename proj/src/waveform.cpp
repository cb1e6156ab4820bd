#include "lorasat/waveform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lorasat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_symbol(const RadioConfig& radio, int k) {
    radio.validate();
    if (k < 0 || k >= radio.symbol_count())
        throw std::invalid_argument("symbol value k must lie in [0, 2^sf)");
}

// Phase in cycles at integer sample q for chirp segment selector b. The
// chirp + symbol contribution (2^{2s} q^2/2 + 2^s k' q) / 2^sf is a dyadic
// rational whose doubled numerator stays far below 2^53, so that term is
// reduced mod 1 without any rounding at all; the remaining terms are small
// and folded individually.
double sample_phase_cycles(const RadioConfig& radio, int k, const LinearDoppler& dop,
                           double frac_fmin_td, long long q, int b) {
    const double kp = static_cast<double>(
        static_cast<long long>(k) -
        static_cast<long long>(radio.symbol_count()) * b);
    const double qd = static_cast<double>(q);
    const double numer = std::ldexp(qd * qd, 2 * radio.s_exp) +
                         std::ldexp(kp * qd, radio.s_exp + 1);
    double ph = std::remainder(std::ldexp(numer, -(radio.sf + 1)), 1.0);

    const double td = radio.sample_period();
    ph += std::remainder(frac_fmin_td * qd, 1.0);
    ph += std::remainder(dop.v_d * td * qd, 1.0);
    ph += dop.c_d * td * td * qd * qd / 2.0;
    if (b) ph -= dop.delta_f_k * td * qd;
    return std::remainder(ph, 1.0);
}

}  // namespace

double folded_fmin_td(const RadioConfig& radio) {
    const double p = radio.f_min() * radio.sample_period();
    const double e = std::fma(radio.f_min(), radio.sample_period(), -p);
    return std::remainder(p, 1.0) + e;
}

ContinuousWaveform::ContinuousWaveform(const RadioConfig& radio, int k,
                                       const LinearDoppler& doppler)
    : radio_(radio), k_(k), dop_(doppler) {
    check_symbol(radio_, k_);
    t_s_ = radio_.symbol_period();
    t_k_ = radio_.chip_period() * static_cast<double>(radio_.symbol_count() - k_);
    amp_ = 1.0 / std::sqrt(t_s_);
    frac_fmin_td_ = folded_fmin_td(radio_);
}

double ContinuousWaveform::phase_cycles(double u) const {
    // At f_min * u ~ 10^7 cycles a direct product is only good to ~1e-9
    // cycles, so when u sits on the sample grid the phase is routed through
    // the exact dyadic form shared with the discrete synthesizer; the two
    // models then agree at sample instants to the last few bits.
    const double td = radio_.sample_period();
    const double qd = std::nearbyint(u / td);
    if (qd >= 0.0 && std::abs(u - qd * td) <= 1e-9 * td) {
        const long long q = static_cast<long long>(qd);
        // u > t_k resolved exactly in sample units: q 2^s > 2^sf - k.
        const int b = ((q << radio_.s_exp) >
                       static_cast<long long>(radio_.symbol_count() - k_))
                          ? 1
                          : 0;
        return sample_phase_cycles(radio_, k_, dop_, frac_fmin_td_, q, b);
    }

    const int b = (u > t_k_) ? 1 : 0;  // chirp segment selector
    const double keff = static_cast<double>(k_ - radio_.symbol_count() * b);
    const double bw_per_symbol = radio_.bandwidth_hz /
                                 static_cast<double>(radio_.symbol_count());
    // The raw phase reaches millions of cycles (f_min * u); fold each term
    // mod 1 before summing, compensating the big carrier product, so the
    // residual keeps full double precision.
    const double carrier = radio_.f_min() * u;
    double ph = std::remainder(carrier, 1.0) + std::fma(radio_.f_min(), u, -carrier);
    ph += std::remainder(radio_.chirp_rate() * u * u / 2.0, 1.0);
    ph += std::remainder(bw_per_symbol * keff * u, 1.0);
    ph += std::remainder(dop_.v_d * u, 1.0);
    ph += dop_.c_d * u * u / 2.0;
    if (b) ph -= dop_.delta_f_k * u;
    return std::remainder(ph, 1.0);
}

std::complex<double> ContinuousWaveform::operator()(double u) const {
    if (u < 0.0 || u > t_s_) return {0.0, 0.0};
    return std::polar(amp_, kTwoPi * phase_cycles(u));
}

double ContinuousWaveform::frequency_at(double u) const {
    const int b = (u > t_k_) ? 1 : 0;
    const double keff = static_cast<double>(k_ - radio_.symbol_count() * b);
    const double bw_per_symbol = radio_.bandwidth_hz /
                                 static_cast<double>(radio_.symbol_count());
    double f = radio_.f_min() + dop_.v_d +
               bw_per_symbol * (u / radio_.chip_period() + keff) + dop_.c_d * u;
    if (b) f -= dop_.delta_f_k;
    return f;
}

DiscreteWaveform::DiscreteWaveform(const RadioConfig& radio, int k,
                                   const LinearDoppler& doppler)
    : radio_(radio), k_(k), dop_(doppler) {
    check_symbol(radio_, k_);
    n_ = radio_.samples_per_symbol();
    m_k_ = (radio_.symbol_count() - k_ - 1) >> radio_.s_exp;
    amp_ = 1.0 / std::sqrt(static_cast<double>(n_));
    frac_fmin_td_ = folded_fmin_td(radio_);
}

double DiscreteWaveform::phase_cycles(long long q) const {
    const int b = (q > m_k_) ? 1 : 0;
    return sample_phase_cycles(radio_, k_, dop_, frac_fmin_td_, q, b);
}

std::complex<double> DiscreteWaveform::sample(long long q) const {
    if (q < 0 || q >= n_) return {0.0, 0.0};
    return std::polar(amp_, kTwoPi * phase_cycles(q));
}

double DiscreteWaveform::frequency_at(long long q) const {
    const int b = (q > m_k_) ? 1 : 0;
    const double kp = static_cast<double>(k_ - radio_.symbol_count() * b);
    const double bw_per_symbol = radio_.bandwidth_hz /
                                 static_cast<double>(radio_.symbol_count());
    const double qd = static_cast<double>(q);
    double f = radio_.f_min() + dop_.v_d +
               bw_per_symbol * (std::ldexp(qd, radio_.s_exp) + kp) +
               dop_.c_d * radio_.sample_period() * qd;
    if (b) f -= dop_.delta_f_k;
    return f;
}

std::vector<std::complex<double>> synthesize_discrete(const RadioConfig& radio, int k,
                                                      const LinearDoppler& doppler) {
    DiscreteWaveform w(radio, k, doppler);
    std::vector<std::complex<double>> out(static_cast<size_t>(w.length()));
    for (long long q = 0; q < w.length(); ++q)
        out[static_cast<size_t>(q)] = w.sample(q);
    return out;
}

}  // namespace lorasat
