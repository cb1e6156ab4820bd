#pragma once

#include <complex>
#include <vector>

#include "lorasat/doppler_model.hpp"
#include "lorasat/scenario.hpp"

namespace lorasat {

// Continuous-time chirp for symbol k with an attached piecewise-linear
// Doppler model. Time is measured from the symbol start (u = t - t0).
//
// Phase (in cycles) on segment 1, u in [0, t_k]:
//   (f_min + v_d + (B/2^sf)(u/(2T) + k) + c_d u / 2) * u
// and on segment 2, u in (t_k, T_s], with k -> k - 2^sf and an extra
// -delta_f_k * u term. Amplitude is 1/sqrt(T_s) (unit symbol energy).
class ContinuousWaveform {
  public:
    ContinuousWaveform(const RadioConfig& radio, int k,
                       const LinearDoppler& doppler = {});

    // Complex sample at offset u from symbol start; zero outside [0, T_s].
    std::complex<double> operator()(double u) const;
    // Phase in cycles at offset u (segment chosen by u), without amplitude.
    double phase_cycles(double u) const;
    // Instantaneous frequency (absolute Hz) at offset u.
    double frequency_at(double u) const;

    double shrink_time() const { return t_k_; }      // t_k = T (2^sf - k)
    double symbol_period() const { return t_s_; }
    double amplitude() const { return amp_; }
    const RadioConfig& radio() const { return radio_; }
    int symbol() const { return k_; }
    const LinearDoppler& doppler() const { return dop_; }

  private:
    RadioConfig radio_;
    int k_;
    LinearDoppler dop_;
    double t_k_, t_s_, amp_;
    double frac_fmin_td_;  // carrier cycles per sample period, reduced mod 1
};

// Discrete-time chirp sampled at T_d = 2^s_exp / B, N = 2^(sf - s_exp)
// samples, unit energy (amplitude 1/sqrt(N)). Sample index q counts from the
// symbol start; segment 1 covers 0 <= q <= m_k with
//   m_k = floor((2^sf - k - 1) / 2^s_exp),
// segment 2 the rest. Phase (cycles) at sample q, segment 1:
//   (f_min T_d + v_d T_d + (2^(2s)/2^sf)(q/2 + k/2^s) + c_d T_d^2 q / 2) * q
// segment 2 swaps k -> k - 2^sf and subtracts delta_f_k T_d * q.
class DiscreteWaveform {
  public:
    DiscreteWaveform(const RadioConfig& radio, int k,
                     const LinearDoppler& doppler = {});

    std::complex<double> sample(long long q) const;  // zero outside [0, N)
    double phase_cycles(long long q) const;
    double frequency_at(long long q) const;  // absolute Hz at sample q

    int shrink_index() const { return m_k_; }
    int length() const { return n_; }
    double amplitude() const { return amp_; }
    const RadioConfig& radio() const { return radio_; }
    int symbol() const { return k_; }
    const LinearDoppler& doppler() const { return dop_; }

  private:
    RadioConfig radio_;
    int k_;
    LinearDoppler dop_;
    int m_k_, n_;
    double amp_;
    double frac_fmin_td_;  // f_min T_d reduced mod 1 (exactly representable)
};

// Convenience: materialize all N samples of a discrete symbol.
std::vector<std::complex<double>> synthesize_discrete(const RadioConfig& radio, int k,
                                                      const LinearDoppler& doppler = {});

// f_min * T_d reduced mod 1 with a compensated (fma) product, good to a few
// ulps of 1 even though the raw product spans thousands of cycles. Every path
// that applies the carrier term per sample index must use this same value so
// their roundings stay correlated.
double folded_fmin_td(const RadioConfig& radio);

}  // namespace lorasat
