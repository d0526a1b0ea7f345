#include "accrl/bigint.hpp"

#include <stdexcept>

namespace accrl::bn {

Bigint powm(const Bigint& base, const Bigint& exp, const Bigint& mod) {
    Bigint r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

Bigint powm_signed(const Bigint& base, const Bigint& exp, const Bigint& mod) {
    if (exp >= 0) {
        return powm(base, exp, mod);
    }
    auto inv = invert(base, mod);
    if (!inv) {
        throw std::domain_error("powm_signed: base is not a unit modulo m");
    }
    Bigint e = -exp;
    return powm(*inv, e, mod);
}

std::optional<Bigint> invert(const Bigint& a, const Bigint& m) {
    Bigint r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return r;
}

Bigint gcd(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

void gcdext(const Bigint& a, const Bigint& b, Bigint& g, Bigint& s, Bigint& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

Bigint divexact(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::size_t bit_length(const Bigint& v) {
    if (v == 0) {
        return 0;
    }
    return mpz_sizeinbase(v.get_mpz_t(), 2);
}

Bigint from_bytes_be(std::span<const std::uint8_t> bytes) {
    Bigint r;
    if (!bytes.empty()) {
        mpz_import(r.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    }
    return r;
}

std::vector<std::uint8_t> to_bytes_be(const Bigint& v) {
    if (v < 0) {
        throw std::domain_error("to_bytes_be: negative value");
    }
    if (v == 0) {
        return {};
    }
    std::size_t count = (bit_length(v) + 7) / 8;
    std::vector<std::uint8_t> out(count);
    std::size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 1, 0, v.get_mpz_t());
    out.resize(written);
    return out;
}

void to_bytes_be_fixed(const Bigint& v, std::span<std::uint8_t> out) {
    auto bytes = to_bytes_be(v);
    if (bytes.size() > out.size()) {
        throw std::length_error("to_bytes_be_fixed: value too wide for field");
    }
    std::size_t pad = out.size() - bytes.size();
    std::fill(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(pad), 0);
    std::copy(bytes.begin(), bytes.end(), out.begin() + static_cast<std::ptrdiff_t>(pad));
}

Bigint from_hex(std::string_view hex) {
    Bigint r;
    if (mpz_set_str(r.get_mpz_t(), std::string(hex).c_str(), 16) != 0) {
        throw std::invalid_argument("from_hex: invalid hex string");
    }
    return r;
}

std::string to_hex(const Bigint& v) {
    return v.get_str(16);
}

std::uint64_t mod_u64(const Bigint& v, std::uint64_t m) {
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

} // namespace accrl::bn
