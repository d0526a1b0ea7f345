#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace accrl {

using Digest32 = std::array<std::uint8_t, 32>;
using Signature = std::array<std::uint8_t, 64>;

Digest32 sha256(std::span<const std::uint8_t> data);

namespace ed25519 {

struct PublicKey {
    std::array<std::uint8_t, 32> bytes{};
    friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct SecretKey {
    std::array<std::uint8_t, 64> bytes{};
};

struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

KeyPair keypair_from_seed(std::span<const std::uint8_t, 32> seed);
KeyPair keypair_random();

Signature sign(std::span<const std::uint8_t> message, const SecretKey& sk);
bool verify(std::span<const std::uint8_t> message, const Signature& sig, const PublicKey& pk);

} // namespace ed25519

/// Hex helpers for keys, serials and digests.
std::string to_hex(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_hex_bytes(std::string_view hex);

} // namespace accrl
