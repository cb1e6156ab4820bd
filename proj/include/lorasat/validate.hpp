#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace lorasat {

// Self-validation harness: fuzzes the analytic correlation tables against the
// defining formulas in both domains, checks discrete-vs-continuous sample
// agreement of the synthesizers, and re-measures the piecewise-linear Doppler
// approximation error on the default scenario geometry.
struct ValidateOptions {
    int draws = 10000;            // fuzz draws per domain
    std::uint64_t seed = 0x5EEDED;
    int osf = 16;                 // quadrature oversampling (floor 16)
    bool inject_l4_sign_flip = false;  // mutation fixture, see TableMutation
    int threads = 1;
    int min_case_hits = 50;       // required evaluations per overlap case
};

struct ValidateReport {
    bool passed = false;
    double max_err_discrete = 0.0;      // |analytic - defining|, discrete
    double max_err_continuous = 0.0;    // |analytic - defining|, continuous
    double max_mae_abs_hz = 0.0;        // Doppler linearization, absolute
    double max_mae_rel = 0.0;           // Doppler linearization, relative to |v_d|
    double max_sample_mismatch = 0.0;   // discrete vs continuous synthesizer
    std::array<int, 8> case_hits_discrete{};
    std::array<int, 8> case_hits_continuous{};
    std::string failure_detail;  // empty when passed
};

ValidateReport run_validation(const ValidateOptions& opt);
std::string format_report(const ValidateReport& r);

}  // namespace lorasat
