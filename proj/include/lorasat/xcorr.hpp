#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "lorasat/doppler_model.hpp"
#include "lorasat/scenario.hpp"

namespace lorasat {

enum class Domain { Continuous, Discrete };

// One signal entering the correlator: radio parameters plus the linear
// Doppler model riding on it.
struct XcorrSignal {
    RadioConfig radio;
    LinearDoppler doppler;
};

struct XcorrPair {
    XcorrSignal s1;
    XcorrSignal s2;
};

// Overlap-structure classification of one (k1, k2, delay) evaluation. The
// product of two two-segment chirps splits the overlap into at most three
// constant-coefficient pieces; the eight reachable layouts are indexed by
// which chirp wraps inside the overlap and in which order:
//   L1  neither wraps inside, both still on segment 1
//   L2  neither wraps inside, signal 1 already wrapped (positive delay)
//   L3  only signal 1 wraps inside the overlap
//   L4  neither wraps inside, signal 2 already wrapped (negative delay)
//   L5  only signal 2 wraps inside the overlap
//   L6  signal 2 already wrapped, signal 1 wraps inside
//   L7  both wrap inside (or signal 1 pre-wrapped), signal-1 wrap first
//   L8  both wrap inside, signal-2 wrap first
enum class OverlapCase { None = 0, L1, L2, L3, L4, L5, L6, L7, L8 };

const char* to_string(OverlapCase c);

// Test fixture: flips the sign of the segment-2 frequency offset of signal 2
// inside the analytic evaluators, but only for evaluations classified as
// `row`. Used by the validation suite to prove the oracle comparison catches
// single-row table defects.
struct TableMutation {
    OverlapCase row = OverlapCase::L4;
};

// --- continuous-time domain -------------------------------------------------
// R(tau) = integral s1(t + tau - t0) s2*(t - t0) dt over the common support,
// both signals starting at the same t0, with unit-energy amplitudes.

// Defining-formula route: piecewise adaptive Gauss-Legendre quadrature over
// the product of the two synthesized waveforms. `osf` is the minimum number
// of integrand samples per oscillation cycle (floor 16); the result is
// verified by doubling the density and must move by < 1e-6, otherwise
// NonConvergent is thrown.
std::complex<double> xcorr_continuous_defining(const XcorrPair& p, int k1, int k2,
                                               double tau, int osf = 16);

// Analytic route: per-piece closed forms built from Fresnel/chirp-segment
// integrals with the case table above.
std::complex<double> xcorr_continuous_analytic(const XcorrPair& p, int k1, int k2,
                                               double tau,
                                               const TableMutation* mutation = nullptr);

OverlapCase classify_overlap_continuous(const XcorrPair& p, int k1, int k2,
                                        double tau);

// --- discrete-time domain ---------------------------------------------------
// R[m_tau] = sum_n x1[n + m_tau] x2*[n]; requires equal sample periods
// (2^s1 / B1 == 2^s2 / B2), throws std::invalid_argument otherwise.

std::complex<double> xcorr_discrete_defining(const XcorrPair& p, int k1, int k2,
                                             long long m_tau);

std::complex<double> xcorr_discrete_analytic(const XcorrPair& p, int k1, int k2,
                                             long long m_tau,
                                             const TableMutation* mutation = nullptr);

OverlapCase classify_overlap_discrete(const XcorrPair& p, int k1, int k2,
                                      long long m_tau);

// --- aggregates --------------------------------------------------------------

struct XcorrAggregate {
    double max_abs = 0.0;
    double mean_abs = 0.0;
    std::uint64_t pair_count = 0;
    bool subsampled = false;
};

// Max/mean of |R| over the (k1, k2) symbol grid (magnitude taken per pair,
// then aggregated). Grids larger than `pair_budget` are subsampled uniformly
// with the fixed default seed so results stay reproducible. Discrete
// aggregation evaluates the defining sums against cached synthesized symbols;
// continuous aggregation uses the analytic route.
XcorrAggregate aggregate_matrix(const XcorrPair& p, Domain domain, double tau,
                                long long m_tau,
                                std::uint64_t pair_budget = (1ull << 18),
                                std::uint64_t seed = 0xC0FFEE,
                                int threads = 1);

struct CfoSweepPoint {
    double delta_hz = 0.0;
    double max_abs = 0.0;
    double mean_abs = 0.0;
};

// Static-CFO sweep: for each delta, aggregates the matrix with signal 1
// carrying a pure carrier offset (v_d = delta, c_d = 0, delta_f_k = 0).
std::vector<CfoSweepPoint> cfo_sweep(const RadioConfig& r1, const RadioConfig& r2,
                                     const std::vector<double>& deltas_hz,
                                     Domain domain,
                                     std::uint64_t pair_budget = (1ull << 18),
                                     std::uint64_t seed = 0xC0FFEE,
                                     int threads = 1);

// Closed-form same-radio pure-CFO aggregate (discrete domain, m_tau = 0):
// with equal radios, signal 2 undisturbed and signal 1 carrying only a
// constant offset, |R| depends solely on (k1 - k2) mod N and reduces to a
// Dirichlet kernel, giving an O(N) exact full-grid aggregate. Returns nullopt
// when the configuration does not qualify.
std::optional<XcorrAggregate> same_sf_cfo_aggregate(const XcorrPair& p,
                                                    long long m_tau);

}  // namespace lorasat
