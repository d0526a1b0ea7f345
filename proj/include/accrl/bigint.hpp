#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace accrl {

/// Arbitrary-precision integer. GMP's C++ class gives us value semantics;
/// the helpers below add the modular and byte-level operations the
/// accumulator needs.
using Bigint = mpz_class;

namespace bn {

/// base^exp mod m, exp >= 0.
Bigint powm(const Bigint& base, const Bigint& exp, const Bigint& mod);

/// base^exp mod m for signed exp; negative exponents use the modular
/// inverse of base (base must be a unit mod m).
Bigint powm_signed(const Bigint& base, const Bigint& exp, const Bigint& mod);

/// Multiplicative inverse of a mod m, or nullopt when gcd(a, m) != 1.
std::optional<Bigint> invert(const Bigint& a, const Bigint& m);

Bigint gcd(const Bigint& a, const Bigint& b);

/// g = gcd(a, b) together with s, t such that s*a + t*b = g.
void gcdext(const Bigint& a, const Bigint& b, Bigint& g, Bigint& s, Bigint& t);

/// Exact quotient a / b (b must divide a).
Bigint divexact(const Bigint& a, const Bigint& b);

std::size_t bit_length(const Bigint& v);

/// Non-negative value from big-endian magnitude bytes (empty -> 0).
Bigint from_bytes_be(std::span<const std::uint8_t> bytes);

/// Minimal-length big-endian magnitude (0 -> empty vector). v must be >= 0.
std::vector<std::uint8_t> to_bytes_be(const Bigint& v);

/// Fixed-width big-endian encoding, left zero padded. Throws
/// std::length_error when v does not fit.
void to_bytes_be_fixed(const Bigint& v, std::span<std::uint8_t> out);

Bigint from_hex(std::string_view hex);
std::string to_hex(const Bigint& v);

std::uint64_t mod_u64(const Bigint& v, std::uint64_t m);

} // namespace bn
} // namespace accrl
