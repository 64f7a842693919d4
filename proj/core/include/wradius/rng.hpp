#pragma once

#include <cstdint>

#include "wradius/matrix.hpp"

namespace wradius {

/// SplitMix64 finaliser (Steele, Lea, Flood 2014).
std::uint64_t mix64(std::uint64_t x);

/// Seed of the index-th substream of a master seed: mix64(master ^ mix64(index)).
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

/// Counter-based SplitMix64: the k-th draw is mix64(seed + k * golden_gamma).
/// Uniform doubles take the top 53 bits; Gaussians use the Box-Muller pair
/// (both values consumed in order).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform on [0, 1).
    double uniform();
    /// Standard normal.
    double gaussian();
    /// Standard complex Gaussian: E|z|^2 = 1, real and imaginary parts N(0, 1/2).
    Complex complex_gaussian();

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace wradius
