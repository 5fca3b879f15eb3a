#pragma once

#include <cstdint>

namespace gaussalg {

/// Deterministic 64-bit random stream (splitmix64 over a Weyl counter).
/// The draw sequence depends only on the seed, never on platform or
/// scheduling; replicate streams are derived by hashing (master, replicate).
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for one replicate of a seeded run. `attempt`
    /// distinguishes retries after degenerate draws.
    static RngStream child(std::uint64_t master, std::uint64_t replicate,
                           std::uint64_t attempt = 0);

    std::uint64_t next_u64();
    /// Uniform in the open interval (0, 1).
    double uniform01();
    /// Unbiased integer in [0, bound).
    std::uint64_t uniform_below(std::uint64_t bound);
    /// Standard normal via Box-Muller (pairs are cached).
    double normal();

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace gaussalg
