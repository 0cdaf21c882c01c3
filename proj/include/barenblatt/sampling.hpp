#ifndef BARENBLATT_SAMPLING_HPP
#define BARENBLATT_SAMPLING_HPP

#include "barenblatt/family.hpp"
#include "barenblatt/rng.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace barenblatt {

/// Beta(a, b) variate by inversion of a uniform through inv_reg_inc_beta.
/// The result is kept strictly inside (0, 1).
double sample_beta(RngStream& rng, double a, double b);

/// V = c Y^(1/beta), Y ~ Beta(1/beta, gamma + 1). Requires d = 1.
double sample_velocity(RngStream& rng, const FamilyParams& p);

/// X(t) = D V t^alpha with an independent random sign D. Requires d = 1.
double sample_position_1d(RngStream& rng, const FamilyParams& p, double t);

/// Uniform point on S^{d-1}, d >= 2.
std::vector<double> sample_direction(RngStream& rng, int d);

/// Radius c t^alpha Y^(1/beta) with Y ~ Beta(d/beta, gamma + 1) times a
/// uniform direction. For d = 1 this is sample_position_1d.
std::vector<double> sample_position(RngStream& rng, const FamilyParams& p, double t);

/// |X| only, without drawing a direction.
double sample_radius(RngStream& rng, const FamilyParams& p, double t);

/// sqrt(B) with B ~ Beta(1/2, (d - 1)/2): the absolute first coordinate of
/// a uniform direction on S^{d-1}.
double sample_projection_w(RngStream& rng, int d);

struct TelegraphPath {
    double value = 0.0;
    std::uint64_t flips = 0;
};

/// U(0) * integral over [eps, t] of (-1)^N(s) ds, N a Poisson process of
/// rate xi / s and U(0) uniform on {-c, c}.
///
/// In the variable ln s the switching rate is the constant xi, so the
/// switch times are generated downward from t by s <- s exp(-E / xi) with
/// E ~ Exp(1). The sign on the last piece before t is symmetric, which makes
/// this equal in law to running forward from eps with a random start sign.
/// A given stream state yields the same path for every eps; only the point
/// where it is cut off moves.
TelegraphPath sample_epd_telegraph_path(RngStream& rng, double xi, double c, double t,
                                        double eps);
double sample_epd_telegraph(RngStream& rng, double xi, double c, double t, double eps);

struct KSResult {
    double statistic = 0.0;
    std::size_t n = 0;
    double critical_value = 0.0;
    bool pass = false;
};

/// sqrt(-ln(alpha / 2) / 2), the asymptotic Kolmogorov quantile.
double kolmogorov_c(double alpha);

/// One-sample Kolmogorov-Smirnov test; `sorted` must be ascending.
KSResult ks_test(std::span<const double> sorted, const std::function<double(double)>& cdf,
                 double alpha);

/// Two-sample test; both inputs ascending. The critical value is
/// c(alpha) sqrt((n + m) / (n m)).
KSResult ks_test_two_sample(std::span<const double> a, std::span<const double> b, double alpha);

/// Fixed work decomposition for parallel Monte Carlo: sample i belongs to
/// chunk i / chunk_size, and chunk k draws from root.substream(k). The output
/// therefore depends on (seed, stream, n, chunk_size) only, never on the
/// number of threads.
struct ParallelSchedule {
    std::size_t chunk_size = 4096;
    unsigned threads = 1;
};

template <class T, class Gen>
std::vector<T> parallel_generate(const RngStream& root, std::size_t n, Gen gen,
                                 ParallelSchedule sched = {}) {
    std::vector<T> out(n);
    const std::size_t chunk = std::max<std::size_t>(1, sched.chunk_size);
    const std::size_t n_chunks = (n + chunk - 1) / chunk;
    auto run_chunk = [&](std::size_t k) {
        RngStream rng = root.substream(k);
        const std::size_t end = std::min(n, (k + 1) * chunk);
        for (std::size_t i = k * chunk; i < end; ++i) out[i] = gen(rng);
    };
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(1u, sched.threads), n_chunks));
    if (workers <= 1) {
        for (std::size_t k = 0; k < n_chunks; ++k) run_chunk(k);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < n_chunks; k += workers) run_chunk(k);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

} // namespace barenblatt

#endif // BARENBLATT_SAMPLING_HPP
