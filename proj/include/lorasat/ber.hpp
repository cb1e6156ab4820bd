#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lorasat/doppler_model.hpp"
#include "lorasat/scenario.hpp"

namespace lorasat {

// Dechirp-and-DFT symbol decision: multiply the block by the conjugate
// reference chirp (k = 0, no Doppler), take the N-point DFT, return the
// argmax bin. Ties resolve to the lowest bin index.
int demodulate(std::span<const std::complex<double>> block, const RadioConfig& radio);

struct InterfererConfig {
    RadioConfig radio;
    LinearDoppler doppler;
};

enum class BerAxis { Snr, Sir };

struct BerConfig {
    RadioConfig radio;           // desired signal
    LinearDoppler doppler;       // Doppler model riding on the desired signal
    std::optional<InterfererConfig> interferer;

    BerAxis axis = BerAxis::Snr;
    std::vector<double> axis_db; // SNR grid (axis=Snr) or SIR grid (axis=Sir)
    double fixed_snr_db = 0.0;   // used when axis = Sir
    double fixed_sir_db = 0.0;   // used when axis = Snr and interferer present
    int symbols_per_point = 10000;
    std::uint64_t seed = 1;
    int threads = 1;
};

struct BerPoint {
    double axis_db = 0.0;
    std::uint64_t bit_errors = 0;
    std::uint64_t bits = 0;
    std::uint64_t symbol_errors = 0;
    std::uint64_t symbols = 0;
    double ber() const { return bits ? double(bit_errors) / double(bits) : 0.0; }
    double ser() const { return symbols ? double(symbol_errors) / double(symbols) : 0.0; }
};

struct BerCurve {
    std::vector<BerPoint> points;
};

// Monte Carlo uplink error rate. Per grid point, draws uniform symbols,
// synthesizes the Doppler-impacted discrete waveform (the receiver stays
// Doppler-unaware), optionally adds an aligned interferer scaled by
// 10^(-SIR/20), adds circular complex Gaussian noise with per-sample variance
// sigma^2 = (1/N) 10^(-SNR/10) (unit-energy symbols), demodulates and counts
// bit errors under the natural binary mapping. SNR of +infinity disables
// noise. Trials run in seed-derived independent blocks so the curve is
// deterministic for a given (seed, config) regardless of thread count.
BerCurve run_ber(const BerConfig& cfg);

}  // namespace lorasat
