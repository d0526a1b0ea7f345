#pragma once

#include "accrl/bigint.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace accrl {

/// Deterministic byte stream (ChaCha20 keyed by a 32-byte seed). Every
/// seeded operation in the toolkit draws from one of these so identical
/// seeds reproduce identical artifacts bit for bit.
class SeededRng {
public:
    explicit SeededRng(std::span<const std::uint8_t, 32> seed);

    /// Fresh generator keyed from OS entropy.
    static SeededRng from_entropy();

    /// Derive an independent stream for a labelled sub-purpose.
    SeededRng fork(std::string_view label) const;

    void fill(std::span<std::uint8_t> out);
    std::uint64_t next_u64();

    /// Uniform value with exactly `bits` bits (top bit set), bits >= 2.
    Bigint uniform_bits(std::size_t bits);

    /// Uniform value in [0, bound), bound > 0.
    Bigint uniform_below(const Bigint& bound);

private:
    std::array<std::uint8_t, 32> key_{};
    std::uint64_t block_ = 0;
};

} // namespace accrl
