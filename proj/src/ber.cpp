#include "lorasat/ber.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "lorasat/waveform.hpp"

namespace lorasat {

namespace {

using cd = std::complex<double>;

const std::vector<cd>& fft_twiddles(int n) {
    thread_local std::map<int, std::vector<cd>> cache;
    std::vector<cd>& tw = cache[n];
    if (tw.empty() && n > 1) {
        tw.resize(static_cast<size_t>(n / 2));
        for (int j = 0; j < n / 2; ++j)
            tw[static_cast<size_t>(j)] =
                std::polar(1.0, -2.0 * std::numbers::pi * j / n);
    }
    return tw;
}

void fft_inplace(std::vector<cd>& a) {
    const int n = static_cast<int>(a.size());
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(j)]);
    }
    const std::vector<cd>& tw = fft_twiddles(n);
    for (int len = 2; len <= n; len <<= 1) {
        const int stride = n / len;
        for (int base = 0; base < n; base += len) {
            for (int j = 0; j < len / 2; ++j) {
                const cd u = a[static_cast<size_t>(base + j)];
                const cd v = a[static_cast<size_t>(base + j + len / 2)] *
                             tw[static_cast<size_t>(j * stride)];
                a[static_cast<size_t>(base + j)] = u + v;
                a[static_cast<size_t>(base + j + len / 2)] = u - v;
            }
        }
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Symbol dictionary with a footprint cap; above it symbols are synthesized
// on demand (only SF 12 at one sample per chip exceeds the cap).
class SymbolDict {
  public:
    SymbolDict(const RadioConfig& radio, const LinearDoppler& dop)
        : radio_(radio), dop_(dop) {
        const long long footprint = static_cast<long long>(radio.symbol_count()) *
                                    radio.samples_per_symbol();
        if (footprint <= (1LL << 23)) {
            bank_.resize(static_cast<size_t>(radio.symbol_count()));
            for (int k = 0; k < radio.symbol_count(); ++k)
                bank_[static_cast<size_t>(k)] = synthesize_discrete(radio, k, dop_);
        }
    }

    const std::vector<cd>& get(int k, std::vector<cd>& scratch) const {
        if (!bank_.empty()) return bank_[static_cast<size_t>(k)];
        scratch = synthesize_discrete(radio_, k, dop_);
        return scratch;
    }

  private:
    RadioConfig radio_;
    LinearDoppler dop_;
    std::vector<std::vector<cd>> bank_;
};

}  // namespace

int demodulate(std::span<const std::complex<double>> block,
               const RadioConfig& radio) {
    radio.validate();
    const int n = radio.samples_per_symbol();
    if (static_cast<int>(block.size()) != n)
        throw std::invalid_argument("demodulate: block length must equal the "
                                    "samples-per-symbol count");
    const DiscreteWaveform ref(radio, 0);  // Doppler-unaware reference chirp
    std::vector<cd> work(static_cast<size_t>(n));
    for (long long q = 0; q < n; ++q)
        work[static_cast<size_t>(q)] =
            block[static_cast<size_t>(q)] * std::conj(ref.sample(q));
    fft_inplace(work);
    int best = 0;
    double best_mag = std::norm(work[0]);
    for (int m = 1; m < n; ++m) {
        const double mag = std::norm(work[static_cast<size_t>(m)]);
        if (mag > best_mag) {  // ties keep the lowest bin
            best_mag = mag;
            best = m;
        }
    }
    return best;
}

BerCurve run_ber(const BerConfig& cfg) {
    cfg.radio.validate();
    if (cfg.radio.s_exp != 0)
        throw std::invalid_argument(
            "error-rate simulation requires one sample per chip (s_exp = 0) so "
            "every symbol value maps to a distinct decision bin");
    if (cfg.axis_db.empty())
        throw std::invalid_argument("error-rate grid is empty");
    if (cfg.symbols_per_point < 1)
        throw std::invalid_argument("symbols_per_point must be positive");
    if (cfg.axis == BerAxis::Sir && !cfg.interferer)
        throw std::invalid_argument("SIR axis requires an interferer");
    if (cfg.interferer) {
        cfg.interferer->radio.validate();
        if (cfg.interferer->radio.sample_period() != cfg.radio.sample_period())
            throw std::invalid_argument(
                "interferer must share the desired signal's sample period");
    }

    const int n = cfg.radio.samples_per_symbol();
    const int count = cfg.radio.symbol_count();
    const SymbolDict desired(cfg.radio, cfg.doppler);
    std::optional<SymbolDict> interf;
    if (cfg.interferer)
        interf.emplace(cfg.interferer->radio, cfg.interferer->doppler);

    constexpr int kBlock = 256;  // trials per RNG block (thread-count invariant)

    BerCurve curve;
    curve.points.resize(cfg.axis_db.size());

    for (size_t pt = 0; pt < cfg.axis_db.size(); ++pt) {
        const double snr_db =
            (cfg.axis == BerAxis::Snr) ? cfg.axis_db[pt] : cfg.fixed_snr_db;
        const double sir_db =
            (cfg.axis == BerAxis::Sir) ? cfg.axis_db[pt] : cfg.fixed_sir_db;
        const bool with_noise = !std::isinf(snr_db);
        const double sigma =
            with_noise
                ? std::sqrt(std::pow(10.0, -snr_db / 10.0) / (2.0 * n))
                : 0.0;  // per-component std dev for unit-energy symbols
        const double gain = cfg.interferer ? std::pow(10.0, -sir_db / 20.0) : 0.0;

        const int blocks = (cfg.symbols_per_point + kBlock - 1) / kBlock;
        const int n_threads = std::max(1, cfg.threads);
        std::vector<std::uint64_t> sym_err(static_cast<size_t>(n_threads), 0);
        std::vector<std::uint64_t> bit_err(static_cast<size_t>(n_threads), 0);

        const auto worker = [&](int tid) {
            std::vector<cd> rx(static_cast<size_t>(n));
            std::vector<cd> scratch_d, scratch_i;
            std::uint64_t se = 0, be = 0;
            for (int blk = tid; blk < blocks; blk += n_threads) {
                const std::uint64_t s =
                    splitmix64(splitmix64(splitmix64(cfg.seed) ^
                                          static_cast<std::uint64_t>(pt)) ^
                               static_cast<std::uint64_t>(blk));
                std::mt19937_64 rng(s);
                std::normal_distribution<double> gauss(0.0, 1.0);
                const int trials =
                    std::min(kBlock, cfg.symbols_per_point - blk * kBlock);
                for (int t = 0; t < trials; ++t) {
                    const int k = static_cast<int>(
                        rng() % static_cast<std::uint64_t>(count));
                    const std::vector<cd>& x = desired.get(k, scratch_d);
                    std::copy(x.begin(), x.end(), rx.begin());
                    if (interf) {
                        const int ki = static_cast<int>(
                            rng() %
                            static_cast<std::uint64_t>(
                                cfg.interferer->radio.symbol_count()));
                        const std::vector<cd>& xi = interf->get(ki, scratch_i);
                        const size_t m =
                            std::min(rx.size(), xi.size());
                        for (size_t q = 0; q < m; ++q) rx[q] += gain * xi[q];
                    }
                    if (with_noise) {
                        for (size_t q = 0; q < rx.size(); ++q)
                            rx[q] += cd(sigma * gauss(rng), sigma * gauss(rng));
                    }
                    const int khat = demodulate(rx, cfg.radio);
                    if (khat != k) ++se;
                    be += static_cast<std::uint64_t>(std::popcount(
                        static_cast<unsigned>(k) ^ static_cast<unsigned>(khat)));
                }
            }
            sym_err[static_cast<size_t>(tid)] = se;
            bit_err[static_cast<size_t>(tid)] = be;
        };

        if (n_threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<size_t>(n_threads));
            for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
            for (std::thread& th : pool) th.join();
        }

        BerPoint& point = curve.points[pt];
        point.axis_db = cfg.axis_db[pt];
        point.symbols = static_cast<std::uint64_t>(cfg.symbols_per_point);
        point.bits = point.symbols * static_cast<std::uint64_t>(cfg.radio.sf);
        for (int t = 0; t < n_threads; ++t) {
            point.symbol_errors += sym_err[static_cast<size_t>(t)];
            point.bit_errors += bit_err[static_cast<size_t>(t)];
        }
    }
    return curve;
}

}  // namespace lorasat
