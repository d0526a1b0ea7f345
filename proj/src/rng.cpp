#include "accrl/rng.hpp"

#include "accrl/crypto.hpp"

#include <sodium.h>

#include <cstring>
#include <stdexcept>
#include <string_view>

namespace accrl {

namespace detail {
void ensure_sodium();
}

SeededRng::SeededRng(std::span<const std::uint8_t, 32> seed) {
    detail::ensure_sodium();
    std::copy(seed.begin(), seed.end(), key_.begin());
}

SeededRng SeededRng::from_entropy() {
    detail::ensure_sodium();
    std::array<std::uint8_t, 32> key;
    randombytes_buf(key.data(), key.size());
    return SeededRng(key);
}

SeededRng SeededRng::fork(std::string_view label) const {
    std::vector<std::uint8_t> pre(key_.begin(), key_.end());
    pre.insert(pre.end(), label.begin(), label.end());
    Digest32 sub = sha256(pre);
    return SeededRng(sub);
}

void SeededRng::fill(std::span<std::uint8_t> out) {
    // Each call consumes a fresh nonce so request sizes do not affect the
    // stream alignment of later calls.
    std::uint8_t nonce[crypto_stream_chacha20_NONCEBYTES] = {};
    std::uint64_t n = block_++;
    std::memcpy(nonce, &n, sizeof(n));
    std::fill(out.begin(), out.end(), 0);
    crypto_stream_chacha20_xor(out.data(), out.data(), out.size(), nonce, key_.data());
}

std::uint64_t SeededRng::next_u64() {
    std::array<std::uint8_t, 8> buf;
    fill(buf);
    std::uint64_t v = 0;
    for (auto b : buf) {
        v = (v << 8) | b;
    }
    return v;
}

Bigint SeededRng::uniform_bits(std::size_t bits) {
    if (bits < 2) {
        throw std::invalid_argument("uniform_bits: need at least 2 bits");
    }
    std::vector<std::uint8_t> buf((bits + 7) / 8);
    fill(buf);
    // Clear excess leading bits, then force the top bit.
    std::size_t excess = buf.size() * 8 - bits;
    buf[0] &= static_cast<std::uint8_t>(0xff >> excess);
    buf[0] |= static_cast<std::uint8_t>(0x80 >> excess);
    return bn::from_bytes_be(buf);
}

Bigint SeededRng::uniform_below(const Bigint& bound) {
    if (bound <= 0) {
        throw std::invalid_argument("uniform_below: bound must be positive");
    }
    std::size_t bits = bn::bit_length(bound);
    std::vector<std::uint8_t> buf((bits + 7) / 8);
    std::size_t excess = buf.size() * 8 - bits;
    for (;;) {
        fill(buf);
        buf[0] &= static_cast<std::uint8_t>(0xff >> excess);
        Bigint v = bn::from_bytes_be(buf);
        if (v < bound) {
            return v;
        }
    }
}

} // namespace accrl
