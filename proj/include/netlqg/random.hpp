#pragma once

#include <cstdint>
#include <random>

namespace netlqg {

/// Deterministic random stream derived from (master_seed, stream_id, salt).
/// Each simulation trial owns exactly one stream; streams are never shared
/// between threads. Identical derivation inputs give identical draw sequences.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t stream_id, std::uint64_t salt = 0) {
        std::seed_seq seq{
            static_cast<std::uint32_t>(master_seed),
            static_cast<std::uint32_t>(master_seed >> 32),
            static_cast<std::uint32_t>(stream_id),
            static_cast<std::uint32_t>(stream_id >> 32),
            static_cast<std::uint32_t>(salt),
            static_cast<std::uint32_t>(salt >> 32)};
        gen_.seed(seq);
    }

    /// Standard normal draw.
    double gaussian() { return normal_(gen_); }

    /// Uniform draw on [0, 1).
    double uniform01() { return unit_(gen_); }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
};

} // namespace netlqg
