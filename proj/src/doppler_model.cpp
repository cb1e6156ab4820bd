#include "lorasat/doppler_model.hpp"

#include <cmath>
#include <stdexcept>

namespace lorasat {

namespace {

void check_symbol(const RadioConfig& radio, int k) {
    if (k < 0 || k >= radio.symbol_count())
        throw std::invalid_argument("symbol value k must lie in [0, 2^sf)");
}

}  // namespace

LinearDoppler linearize_continuous(const DevicePass& pass, const RadioConfig& radio,
                                   int k, double t0) {
    check_symbol(radio, k);
    const double T = radio.chip_period();
    const double t_k = T * static_cast<double>(radio.symbol_count() - k);

    LinearDoppler out;
    out.v_d = pass.doppler_shift_at(t0);
    out.c_d = (pass.doppler_shift_at(t0 + T) - out.v_d) / T;
    out.delta_f_k = radio.bandwidth_hz * pass.radial_velocity_at(t0 + t_k) /
                    pass.constants.c;
    return out;
}

LinearDoppler linearize_discrete(const DevicePass& pass, const RadioConfig& radio,
                                 int k, long long m0) {
    check_symbol(radio, k);
    const double td = radio.sample_period();
    const long long m_sd = radio.samples_per_symbol() - 1;
    const long long m_k =
        static_cast<long long>(radio.symbol_count() - k - 1) >> radio.s_exp;
    const auto fd = [&](long long idx) {
        return pass.doppler_shift_at(static_cast<double>(idx) * td);
    };

    LinearDoppler out;
    out.v_d = fd(m0);
    // One-sample slope estimate, taken inside whichever chirp segment is the
    // longer so the difference never straddles the frequency wrap.
    double delta_fd;
    if (m_k + 1 >= m_sd - m_k)
        delta_fd = fd(m0 + m_k) - fd(m0 + m_k - 1);
    else
        delta_fd = fd(m0 + m_k + 2) - fd(m0 + m_k + 1);
    out.c_d = delta_fd / td;
    out.delta_f_k = radio.bandwidth_hz *
                    pass.radial_velocity_at(static_cast<double>(m0 + m_k) * td) /
                    pass.constants.c;
    return out;
}

double differential_doppler(const DevicePass& pass_a, const DevicePass& pass_b,
                            double t, double f_ref_hz) {
    return pass_a.doppler_shift_at(t, f_ref_hz) -
           pass_b.doppler_shift_at(t, f_ref_hz);
}

double tolerable_threshold(const RadioConfig& radio) {
    return radio.bandwidth_hz / static_cast<double>(2LL << radio.sf);
}

}  // namespace lorasat
