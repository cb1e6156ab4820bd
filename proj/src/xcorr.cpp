#include "lorasat/xcorr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "lorasat/chirp_integrals.hpp"
#include "lorasat/waveform.hpp"

namespace lorasat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
using cd = std::complex<double>;

void check_inputs(const XcorrPair& p, int k1, int k2) {
    p.s1.radio.validate();
    p.s2.radio.validate();
    if (k1 < 0 || k1 >= p.s1.radio.symbol_count() || k2 < 0 ||
        k2 >= p.s2.radio.symbol_count())
        throw std::invalid_argument("symbol value out of range");
}

void check_common_rate(const XcorrPair& p) {
    if (p.s1.radio.sample_period() != p.s2.radio.sample_period())
        throw std::invalid_argument(
            "discrete cross-correlation requires equal sample periods "
            "(2^s1 / B1 == 2^s2 / B2)");
}

// Branch layout of one overlap piece. b1/b2 flag whether signal 1/2 has
// passed its frequency wrap inside this piece.
template <typename T>
struct PieceT {
    T lo, hi;  // continuous: [lo, hi); discrete: inclusive sample run
    int b1 = 0, b2 = 0;
};

using CPiece = PieceT<double>;
using DPiece = PieceT<long long>;

std::vector<CPiece> continuous_pieces(double t_k1, double ts1, double t_k2,
                                      double ts2, double tau) {
    std::vector<CPiece> out;
    const double lo = std::max(0.0, -tau);
    const double hi = std::min(ts2, ts1 - tau);
    if (!(hi > lo)) return out;
    double cuts[4] = {lo, hi, hi, hi};
    int n_cuts = 2;
    const double wrap1 = t_k1 - tau;
    if (wrap1 > lo && wrap1 < hi) cuts[n_cuts++] = wrap1;
    if (t_k2 > lo && t_k2 < hi) cuts[n_cuts++] = t_k2;
    std::sort(cuts, cuts + n_cuts);
    for (int i = 0; i + 1 < n_cuts; ++i) {
        if (!(cuts[i + 1] > cuts[i])) continue;
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        out.push_back({cuts[i], cuts[i + 1], (mid + tau > t_k1) ? 1 : 0,
                       (mid > t_k2) ? 1 : 0});
    }
    return out;
}

std::vector<DPiece> discrete_pieces(long long m_k1, long long n1, long long m_k2,
                                    long long n2, long long m_tau) {
    std::vector<DPiece> out;
    const long long lo = std::max(0LL, -m_tau);
    const long long hi = std::min(n2 - 1, n1 - 1 - m_tau);
    if (hi < lo) return out;
    // b1 flips after n = m_k1 - m_tau, b2 after n = m_k2.
    long long cuts[2];
    int n_cuts = 0;
    const long long wrap1 = m_k1 - m_tau;
    if (wrap1 >= lo && wrap1 < hi) cuts[n_cuts++] = wrap1;
    if (m_k2 >= lo && m_k2 < hi) cuts[n_cuts++] = m_k2;
    std::sort(cuts, cuts + n_cuts);
    long long start = lo;
    for (int i = 0; i < n_cuts; ++i) {
        if (cuts[i] < start) continue;  // coincident cuts collapse
        out.push_back({start, cuts[i], 0, 0});
        start = cuts[i] + 1;
    }
    out.push_back({start, hi, 0, 0});
    for (DPiece& pc : out) {
        pc.b1 = (pc.lo + m_tau > m_k1) ? 1 : 0;
        pc.b2 = (pc.lo > m_k2) ? 1 : 0;
    }
    return out;
}

// The overlap case is read off the sequence of (b1, b2) piece states, so the
// classifier can never drift out of sync with the evaluators.
template <typename Piece>
OverlapCase classify_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return OverlapCase::None;
    auto code = [](const Piece& pc) { return pc.b1 * 2 + pc.b2; };
    const int first = code(pieces.front());
    if (pieces.size() == 1) {
        switch (first) {
            case 0: return OverlapCase::L1;
            case 2: return OverlapCase::L2;
            case 1: return OverlapCase::L4;
        }
    } else if (pieces.size() == 2) {
        const int second = code(pieces.back());
        if (first == 0 && second == 2) return OverlapCase::L3;
        if (first == 0 && second == 1) return OverlapCase::L5;
        if (first == 1 && second == 3) return OverlapCase::L6;
        if (first == 2 && second == 3) return OverlapCase::L7;
        if (first == 0 && second == 3) return OverlapCase::L7;  // coincident wraps
    } else if (pieces.size() == 3) {
        const int second = code(pieces[1]);
        if (second == 2) return OverlapCase::L7;
        if (second == 1) return OverlapCase::L8;
    }
    throw std::logic_error("unreachable overlap layout");
}

// (a * b) * 2^e reduced mod 1; exact whenever a*b is an integer below 2^53
// and e only shifts the binary point (both hold at every call site).
double dyadic_fold(double a, double b, int e) {
    return std::remainder(std::ldexp(a * b, e), 1.0);
}

}  // namespace

const char* to_string(OverlapCase c) {
    switch (c) {
        case OverlapCase::None: return "none";
        case OverlapCase::L1: return "L1";
        case OverlapCase::L2: return "L2";
        case OverlapCase::L3: return "L3";
        case OverlapCase::L4: return "L4";
        case OverlapCase::L5: return "L5";
        case OverlapCase::L6: return "L6";
        case OverlapCase::L7: return "L7";
        case OverlapCase::L8: return "L8";
    }
    return "?";
}

// --- continuous --------------------------------------------------------------

OverlapCase classify_overlap_continuous(const XcorrPair& p, int k1, int k2,
                                        double tau) {
    check_inputs(p, k1, k2);
    const RadioConfig& r1 = p.s1.radio;
    const RadioConfig& r2 = p.s2.radio;
    const double t_k1 = r1.chip_period() * (r1.symbol_count() - k1);
    const double t_k2 = r2.chip_period() * (r2.symbol_count() - k2);
    return classify_pieces(
        continuous_pieces(t_k1, r1.symbol_period(), t_k2, r2.symbol_period(), tau));
}

std::complex<double> xcorr_continuous_analytic(const XcorrPair& p, int k1, int k2,
                                               double tau,
                                               const TableMutation* mutation) {
    check_inputs(p, k1, k2);
    const RadioConfig& r1 = p.s1.radio;
    const RadioConfig& r2 = p.s2.radio;
    const LinearDoppler& d1 = p.s1.doppler;
    const LinearDoppler& d2 = p.s2.doppler;

    const double t_k1 = r1.chip_period() * (r1.symbol_count() - k1);
    const double t_k2 = r2.chip_period() * (r2.symbol_count() - k2);
    const auto pieces = continuous_pieces(t_k1, r1.symbol_period(), t_k2,
                                          r2.symbol_period(), tau);
    if (pieces.empty()) return {0.0, 0.0};
    const OverlapCase layout = classify_pieces(pieces);

    // Quadratic/linear phase coefficients of each signal, cycles:
    //   phi_j(u) = a_j u^2 + w_j(b) u,
    //   a_j = C_rj/2 + c_dj/2,
    //   w_j(b) = f_minj + v_dj + B_j k_j / 2^sfj - (B_j + delta_f_kj) b.
    const double a1 = r1.chirp_rate() / 2.0 + d1.c_d / 2.0;
    const double a2 = r2.chirp_rate() / 2.0 + d2.c_d / 2.0;
    const double w1_base =
        r1.f_min() + d1.v_d +
        r1.bandwidth_hz * k1 / static_cast<double>(r1.symbol_count());
    const double w2_base =
        r2.f_min() + d2.v_d +
        r2.bandwidth_hz * k2 / static_cast<double>(r2.symbol_count());
    const double off1 = r1.bandwidth_hz + d1.delta_f_k;
    double off2 = r2.bandwidth_hz + d2.delta_f_k;
    if (mutation != nullptr && mutation->row == layout) off2 = -off2;

    const double y = a1 - a2;
    const double amp =
        1.0 / std::sqrt(r1.symbol_period() * r2.symbol_period());

    cd total(0.0, 0.0);
    for (const CPiece& pc : pieces) {
        const double w1 = w1_base - off1 * pc.b1;
        const double w2 = w2_base - off2 * pc.b2;
        const double z = w1 - w2 + 2.0 * a1 * tau;
        // Constant phase a1 tau^2 + w1 tau, folded term-by-term to keep the
        // residual well below the huge raw cycle counts.
        double c0 = std::remainder(a1 * tau * tau, 1.0);
        c0 += std::remainder(w1 * tau, 1.0);
        const cd pref = std::polar(1.0, kTwoPi * std::remainder(c0, 1.0));
        total += pref *
                 chirp_segment_integral(kTwoPi * y, kTwoPi * z, pc.lo, pc.hi);
    }
    return amp * total;
}

std::complex<double> xcorr_continuous_defining(const XcorrPair& p, int k1, int k2,
                                               double tau, int osf) {
    if (osf < 16)
        throw NonConvergent("oversampling factor below the supported floor of 16");
    check_inputs(p, k1, k2);
    const RadioConfig& r1 = p.s1.radio;
    const RadioConfig& r2 = p.s2.radio;
    const ContinuousWaveform s1(r1, k1, p.s1.doppler);
    const ContinuousWaveform s2(r2, k2, p.s2.doppler);

    const auto pieces = continuous_pieces(s1.shrink_time(), s1.symbol_period(),
                                          s2.shrink_time(), s2.symbol_period(),
                                          tau);
    if (pieces.empty()) return {0.0, 0.0};

    // Beat-frequency bound per piece for the panel budget (the integrand's
    // instantaneous frequency difference is affine inside a piece).
    const double a1 = r1.chirp_rate() / 2.0 + p.s1.doppler.c_d / 2.0;
    const double a2 = r2.chirp_rate() / 2.0 + p.s2.doppler.c_d / 2.0;
    const double y = a1 - a2;

    const std::vector<double>& nodes = gauss_legendre_nodes(10);
    const std::vector<double>& weights = gauss_legendre_weights(10);

    const auto evaluate = [&](int density) {
        cd acc(0.0, 0.0);
        for (const CPiece& pc : pieces) {
            const double mid = 0.5 * (pc.lo + pc.hi);
            const double df_lo = s1.frequency_at(0.5 * (pc.lo + mid) + tau) -
                                 s2.frequency_at(0.5 * (pc.lo + mid));
            const double df_hi = s1.frequency_at(0.5 * (pc.hi + mid) + tau) -
                                 s2.frequency_at(0.5 * (pc.hi + mid));
            const double beat =
                std::max(std::abs(df_lo), std::abs(df_hi)) +
                std::abs(y) * (pc.hi - pc.lo);
            const double cycles = beat * (pc.hi - pc.lo) + 2.0;
            const long long panels = static_cast<long long>(
                std::ceil(cycles * static_cast<double>(density) / 10.0));
            if (panels > 25'000'000LL)
                throw NonConvergent("quadrature panel budget exhausted");
            const double width = (pc.hi - pc.lo) / static_cast<double>(panels);
            for (long long j = 0; j < panels; ++j) {
                const double center = pc.lo + (static_cast<double>(j) + 0.5) * width;
                cd local(0.0, 0.0);
                for (size_t i = 0; i < nodes.size(); ++i) {
                    const double t = center + 0.5 * width * nodes[i];
                    local += weights[i] * s1(t + tau) * std::conj(s2(t));
                }
                acc += 0.5 * width * local;
            }
        }
        return acc;
    };

    const cd coarse = evaluate(osf);
    const cd fine = evaluate(2 * osf);
    if (std::abs(fine - coarse) > 1e-6)
        throw NonConvergent("quadrature self-check failed: doubling the sample "
                            "density moved the result by more than 1e-6");
    return fine;
}

// --- discrete ----------------------------------------------------------------

OverlapCase classify_overlap_discrete(const XcorrPair& p, int k1, int k2,
                                      long long m_tau) {
    check_inputs(p, k1, k2);
    check_common_rate(p);
    const RadioConfig& r1 = p.s1.radio;
    const RadioConfig& r2 = p.s2.radio;
    const long long m_k1 = (r1.symbol_count() - k1 - 1) >> r1.s_exp;
    const long long m_k2 = (r2.symbol_count() - k2 - 1) >> r2.s_exp;
    return classify_pieces(discrete_pieces(m_k1, r1.samples_per_symbol(), m_k2,
                                           r2.samples_per_symbol(), m_tau));
}

std::complex<double> xcorr_discrete_defining(const XcorrPair& p, int k1, int k2,
                                             long long m_tau) {
    check_inputs(p, k1, k2);
    check_common_rate(p);
    const DiscreteWaveform s1(p.s1.radio, k1, p.s1.doppler);
    const DiscreteWaveform s2(p.s2.radio, k2, p.s2.doppler);
    const long long lo = std::max(0LL, -m_tau);
    const long long hi =
        std::min<long long>(s2.length() - 1, s1.length() - 1 - m_tau);
    cd acc(0.0, 0.0);
    for (long long n = lo; n <= hi; ++n)
        acc += s1.sample(n + m_tau) * std::conj(s2.sample(n));
    return acc;
}

std::complex<double> xcorr_discrete_analytic(const XcorrPair& p, int k1, int k2,
                                             long long m_tau,
                                             const TableMutation* mutation) {
    check_inputs(p, k1, k2);
    check_common_rate(p);
    const RadioConfig& r1 = p.s1.radio;
    const RadioConfig& r2 = p.s2.radio;
    const LinearDoppler& d1 = p.s1.doppler;
    const LinearDoppler& d2 = p.s2.doppler;

    const long long m_k1 = (r1.symbol_count() - k1 - 1) >> r1.s_exp;
    const long long m_k2 = (r2.symbol_count() - k2 - 1) >> r2.s_exp;
    const long long n1 = r1.samples_per_symbol();
    const long long n2 = r2.samples_per_symbol();
    const auto pieces = discrete_pieces(m_k1, n1, m_k2, n2, m_tau);
    if (pieces.empty()) return {0.0, 0.0};
    const OverlapCase layout = classify_pieces(pieces);

    const double td = r1.sample_period();
    const double ff1 = folded_fmin_td(r1);
    const double ff2 = folded_fmin_td(r2);
    const double mtau_d = static_cast<double>(m_tau);
    // Exact-dyadic exponents: chirp term of signal j at sample m contributes
    // 2^{2 s_j} m^2 / 2^{sf_j + 1} cycles, the symbol term k_j 2^{s_j} m / 2^{sf_j};
    // both numerators stay below 2^53 so the mod-1 reductions are exact. The
    // segment-2 adjustments 2^{s_j} b m and the k -> k - 2^sf swap are whole
    // cycles at integer samples and drop out of the reduced phase entirely,
    // leaving delta_f_k T_d as the only branch-visible offset.
    const int e1 = 2 * r1.s_exp - (r1.sf + 1);
    const int e2 = 2 * r2.s_exp - (r2.sf + 1);
    const int ek1 = r1.s_exp - r1.sf;
    const int ek2 = r2.s_exp - r2.sf;
    const double y_small = (d1.c_d - d2.c_d) * td * td / 2.0;

    double mut_sign = 1.0;
    if (mutation != nullptr && mutation->row == layout) mut_sign = -1.0;

    const double amp =
        1.0 / std::sqrt(static_cast<double>(n1) * static_cast<double>(n2));

    cd total(0.0, 0.0);
    for (const DPiece& pc : pieces) {
        // Linear coefficient z = w1(b1) - w2(b2) + 2 a1 m_tau, split into the
        // exact dyadic parts applied per sample and this small folded rest.
        const double z_small = (ff1 - ff2) + (d1.v_d - d2.v_d) * td -
                               d1.delta_f_k * td * pc.b1 +
                               mut_sign * d2.delta_f_k * td * pc.b2 +
                               d1.c_d * td * td * mtau_d;
        // Constant phase c0 = a1 m_tau^2 + w1(b1) m_tau, reduced mod 1.
        double c0 = dyadic_fold(mtau_d, mtau_d, e1);
        c0 += d1.c_d * td * td * mtau_d * mtau_d / 2.0;
        c0 += std::remainder(ff1 * mtau_d, 1.0);
        c0 += std::remainder(d1.v_d * td * mtau_d, 1.0);
        c0 += dyadic_fold(static_cast<double>(k1), mtau_d, ek1);
        c0 -= d1.delta_f_k * td * pc.b1 * mtau_d;
        const cd pref = std::polar(1.0, kTwoPi * std::remainder(c0, 1.0));

        cd piece_sum(0.0, 0.0);
        for (long long n = pc.lo; n <= pc.hi; ++n) {
            const double nd = static_cast<double>(n);
            double ph = dyadic_fold(nd, nd, e1) - dyadic_fold(nd, nd, e2);
            ph += dyadic_fold(mtau_d, nd, e1 + 1);  // 2 a1 m_tau n, dyadic part
            ph += dyadic_fold(static_cast<double>(k1), nd, ek1);
            ph -= dyadic_fold(static_cast<double>(k2), nd, ek2);
            ph += y_small * nd * nd + z_small * nd;
            piece_sum += std::polar(1.0, kTwoPi * std::remainder(ph, 1.0));
        }
        total += pref * piece_sum;
    }
    return amp * total;
}

// --- aggregates ----------------------------------------------------------------

namespace {

cd cached_dot(const std::vector<cd>& x1, const std::vector<cd>& x2,
              long long m_tau) {
    const long long lo = std::max(0LL, -m_tau);
    const long long hi = std::min<long long>(
        static_cast<long long>(x2.size()) - 1,
        static_cast<long long>(x1.size()) - 1 - m_tau);
    cd acc(0.0, 0.0);
    for (long long n = lo; n <= hi; ++n)
        acc += x1[static_cast<size_t>(n + m_tau)] *
               std::conj(x2[static_cast<size_t>(n)]);
    return acc;
}

// Read-only symbol bank; caches every symbol when the footprint is moderate,
// otherwise synthesizes on demand.
class SymbolBank {
  public:
    SymbolBank(const RadioConfig& radio, const LinearDoppler& dop)
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

XcorrAggregate aggregate_matrix(const XcorrPair& p, Domain domain, double tau,
                                long long m_tau, std::uint64_t pair_budget,
                                std::uint64_t seed, int threads) {
    p.s1.radio.validate();
    p.s2.radio.validate();
    if (pair_budget == 0)
        throw std::invalid_argument("pair budget must be positive");
    if (domain == Domain::Discrete) check_common_rate(p);

    const std::uint64_t count1 = static_cast<std::uint64_t>(p.s1.radio.symbol_count());
    const std::uint64_t count2 = static_cast<std::uint64_t>(p.s2.radio.symbol_count());
    const std::uint64_t full = count1 * count2;
    const bool subsampled = full > pair_budget;
    const std::uint64_t evaluated = subsampled ? pair_budget : full;

    // Subsampled grids draw their (k1, k2) list once, up front, so the result
    // does not depend on the thread count.
    std::vector<std::pair<int, int>> drawn;
    if (subsampled) {
        drawn.reserve(evaluated);
        std::mt19937_64 rng(seed);
        for (std::uint64_t i = 0; i < evaluated; ++i)
            drawn.emplace_back(static_cast<int>(rng() % count1),
                               static_cast<int>(rng() % count2));
    }
    const auto pair_at = [&](std::uint64_t i) {
        if (subsampled) return drawn[i];
        return std::make_pair(static_cast<int>(i / count2),
                              static_cast<int>(i % count2));
    };

    std::optional<SymbolBank> bank1, bank2;
    if (domain == Domain::Discrete) {
        bank1.emplace(p.s1.radio, p.s1.doppler);
        bank2.emplace(p.s2.radio, p.s2.doppler);
    }

    const int n_threads = std::max(1, threads);
    std::vector<double> max_local(static_cast<size_t>(n_threads), 0.0);
    std::vector<double> sum_local(static_cast<size_t>(n_threads), 0.0);

    const auto worker = [&](int tid) {
        std::vector<cd> scratch1, scratch2;
        double mx = 0.0, sum = 0.0;
        for (std::uint64_t i = static_cast<std::uint64_t>(tid); i < evaluated;
             i += static_cast<std::uint64_t>(n_threads)) {
            const auto [k1, k2] = pair_at(i);
            double mag;
            if (domain == Domain::Discrete) {
                const std::vector<cd>& x1 = bank1->get(k1, scratch1);
                const std::vector<cd>& x2 = bank2->get(k2, scratch2);
                mag = std::abs(cached_dot(x1, x2, m_tau));
            } else {
                mag = std::abs(xcorr_continuous_analytic(p, k1, k2, tau));
            }
            mx = std::max(mx, mag);
            sum += mag;
        }
        max_local[static_cast<size_t>(tid)] = mx;
        sum_local[static_cast<size_t>(tid)] = sum;
    };

    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
        for (std::thread& th : pool) th.join();
    }

    XcorrAggregate agg;
    agg.pair_count = evaluated;
    agg.subsampled = subsampled;
    for (int t = 0; t < n_threads; ++t) {
        agg.max_abs = std::max(agg.max_abs, max_local[static_cast<size_t>(t)]);
        agg.mean_abs += sum_local[static_cast<size_t>(t)];
    }
    agg.mean_abs /= static_cast<double>(evaluated);
    return agg;
}

namespace {

double dirichlet_abs(int n, double beta) {
    const double frac = std::remainder(beta, 1.0);
    if (std::abs(frac) < 1e-13) return 1.0;
    const double num =
        std::abs(std::sin(std::numbers::pi *
                          std::remainder(static_cast<double>(n) * beta, 2.0)));
    const double den = static_cast<double>(n) *
                       std::abs(std::sin(std::numbers::pi * frac));
    return num / den;
}

}  // namespace

std::optional<XcorrAggregate> same_sf_cfo_aggregate(const XcorrPair& p,
                                                    long long m_tau) {
    const RadioConfig& r1 = p.s1.radio;
    const RadioConfig& r2 = p.s2.radio;
    r1.validate();
    r2.validate();
    const bool same_radio = r1.fc_hz == r2.fc_hz &&
                            r1.bandwidth_hz == r2.bandwidth_hz &&
                            r1.sf == r2.sf && r1.s_exp == r2.s_exp;
    const LinearDoppler& d1 = p.s1.doppler;
    const LinearDoppler& d2 = p.s2.doppler;
    const bool pure_cfo = d1.c_d == 0.0 && d1.delta_f_k == 0.0 && d2.v_d == 0.0 &&
                          d2.c_d == 0.0 && d2.delta_f_k == 0.0;
    if (!same_radio || !pure_cfo || m_tau != 0) return std::nullopt;

    // Identical chirps cancel; the reduced per-sample phase is
    //   ((k1 - k2) 2^s / 2^sf + v_d T_d) n  (the wrap adjustments are whole
    // cycles at integer samples), so |R| is a Dirichlet kernel in the residue
    // r = (k1 - k2) mod N, and every residue class has the same population.
    const int n = r1.samples_per_symbol();
    const double beta_cfo = d1.v_d * r1.sample_period();
    XcorrAggregate agg;
    double sum = 0.0;
    for (int r = 0; r < n; ++r) {
        const double beta =
            std::ldexp(static_cast<double>(r), -(r1.sf - r1.s_exp)) + beta_cfo;
        const double value = dirichlet_abs(n, beta);
        agg.max_abs = std::max(agg.max_abs, value);
        sum += value;
    }
    agg.mean_abs = sum / static_cast<double>(n);
    agg.pair_count = static_cast<std::uint64_t>(r1.symbol_count()) *
                     static_cast<std::uint64_t>(r2.symbol_count());
    agg.subsampled = false;
    return agg;
}

std::vector<CfoSweepPoint> cfo_sweep(const RadioConfig& r1, const RadioConfig& r2,
                                     const std::vector<double>& deltas_hz,
                                     Domain domain, std::uint64_t pair_budget,
                                     std::uint64_t seed, int threads) {
    std::vector<CfoSweepPoint> out;
    out.reserve(deltas_hz.size());
    for (double delta : deltas_hz) {
        XcorrPair p{{r1, LinearDoppler::cfo(delta)}, {r2, {}}};
        XcorrAggregate agg;
        if (domain == Domain::Discrete) {
            if (auto fast = same_sf_cfo_aggregate(p, 0))
                agg = *fast;
            else
                agg = aggregate_matrix(p, domain, 0.0, 0, pair_budget, seed,
                                       threads);
        } else {
            agg = aggregate_matrix(p, domain, 0.0, 0, pair_budget, seed, threads);
        }
        out.push_back({delta, agg.max_abs, agg.mean_abs});
    }
    return out;
}

}  // namespace lorasat
