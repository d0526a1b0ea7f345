#include "accrl/crypto.hpp"

#include <sodium.h>

#include <mutex>
#include <stdexcept>

namespace accrl {

namespace detail {
void ensure_sodium() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0) {
            throw std::runtime_error("libsodium initialization failed");
        }
    });
}
} // namespace detail

Digest32 sha256(std::span<const std::uint8_t> data) {
    detail::ensure_sodium();
    Digest32 out;
    crypto_hash_sha256(out.data(), data.data(), data.size());
    return out;
}

namespace ed25519 {

KeyPair keypair_from_seed(std::span<const std::uint8_t, 32> seed) {
    detail::ensure_sodium();
    KeyPair kp;
    crypto_sign_ed25519_seed_keypair(kp.pk.bytes.data(), kp.sk.bytes.data(), seed.data());
    return kp;
}

KeyPair keypair_random() {
    detail::ensure_sodium();
    KeyPair kp;
    crypto_sign_ed25519_keypair(kp.pk.bytes.data(), kp.sk.bytes.data());
    return kp;
}

Signature sign(std::span<const std::uint8_t> message, const SecretKey& sk) {
    detail::ensure_sodium();
    Signature sig;
    crypto_sign_ed25519_detached(sig.data(), nullptr, message.data(), message.size(),
                                 sk.bytes.data());
    return sig;
}

bool verify(std::span<const std::uint8_t> message, const Signature& sig, const PublicKey& pk) {
    detail::ensure_sodium();
    return crypto_sign_ed25519_verify_detached(sig.data(), message.data(), message.size(),
                                               pk.bytes.data()) == 0;
}

} // namespace ed25519

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

static int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::vector<std::uint8_t> from_hex_bytes(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw std::invalid_argument("hex string must have even length");
    }
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = hex_nibble(hex[2 * i]);
        int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw std::invalid_argument("invalid hex digit");
        }
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

} // namespace accrl
