#pragma once

#include "lorasat/orbit_geometry.hpp"
#include "lorasat/scenario.hpp"

namespace lorasat {

// Piecewise-linear Doppler model for one symbol:
//   f_dl(t) = v_d + c_d * (t - t0)                 on the first chirp segment,
//   f_dl(t) = v_d + c_d * (t - t0) - delta_f_k     after the chirp wrap.
// v_d is the shift at the symbol start, c_d the (approximately constant)
// shift slope across the symbol, and delta_f_k the bookkeeping step that
// accounts for the chirp frequency wrapping by -B at the shrink time.
// All fields are in Hz / Hz-per-second regardless of domain; the discrete
// synthesizer multiplies by the sample period where needed.
struct LinearDoppler {
    double v_d = 0.0;        // Hz
    double c_d = 0.0;        // Hz/s
    double delta_f_k = 0.0;  // Hz

    // A pure carrier frequency offset is the same model with zero slope.
    static LinearDoppler cfo(double offset_hz) { return {offset_hz, 0.0, 0.0}; }
};

// Continuous-time linearization for symbol k starting at t0:
//   v_d = f_d(t0),  c_d = (f_d(t0 + T) - f_d(t0)) / T,
//   delta_f_k = B * v(t0 + t_k) / c  with t_k = T * (2^sf - k).
LinearDoppler linearize_continuous(const DevicePass& pass, const RadioConfig& radio,
                                   int k, double t0);

// Discrete-time linearization for symbol k starting at sample index m0
// (absolute time m0 * T_d). The slope is a one-sample difference of f_d taken
// inside the same chirp segment as the wrap index m_k:
//   c_d = (f_d[m0+m_k] - f_d[m0+m_k-1]) / T_d   when segment 1 is the longer,
//   c_d = (f_d[m0+m_k+2] - f_d[m0+m_k+1]) / T_d otherwise,
// and delta_f_k = B * v((m0+m_k) T_d) / c.
LinearDoppler linearize_discrete(const DevicePass& pass, const RadioConfig& radio,
                                 int k, long long m0);

// Differential Doppler shift between two devices' uplinks observed at the
// same instant: D_d = f_dA(t) - f_dB(t), evaluated at frequency f_ref.
double differential_doppler(const DevicePass& pass_a, const DevicePass& pass_b,
                            double t, double f_ref_hz);

// Maximum shift a dechirp-and-DFT receiver tolerates without a symbol
// decision error: B / 2^(sf+1) (half a DFT bin).
double tolerable_threshold(const RadioConfig& radio);

}  // namespace lorasat
