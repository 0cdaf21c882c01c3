#ifndef BARENBLATT_RNG_HPP
#define BARENBLATT_RNG_HPP

#include <cstdint>
#include <random>

namespace barenblatt {

/// Seedable random stream. The engine is std::mt19937_64 seeded through
/// std::seed_seq with the four 32-bit halves of (seed, stream_id); both are
/// fully specified by the C++ standard, so output is identical on every
/// conforming implementation. Variate transforms (uniform, normal,
/// exponential) are implemented here rather than taken from <random>, whose
/// distributions are implementation-defined.
///
/// A stream is single-owner. Parallel work derives one substream per worker.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on the open interval (0, 1), 53 bits of resolution.
    double uniform();

    /// Standard normal, Marsaglia polar method.
    double normal();

    double exponential();

    /// -1 or +1 with equal probability.
    int sign();

    /// Stream for worker `index`: same seed, stream id mixed with the index
    /// through the SplitMix64 finaliser.
    RngStream substream(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace barenblatt

#endif // BARENBLATT_RNG_HPP
