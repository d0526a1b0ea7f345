#pragma once

#include <stdexcept>
#include <string>

namespace accrl {

enum class ErrorCode {
    // setup / prime generation
    UnsupportedBitLength,
    PrimeGenerationTimeout,
    SearchExhausted,
    // accumulator inputs
    NonPrimeInput,
    DuplicateRep,
    NotAMember,
    IsRevoked,
    NotCoprime,
    // codecs
    BadMagic,
    BadVersion,
    TruncatedFile,
    UnsortedEntries,
    BadSignature,
    // manager
    DeviceRevoked,
    BadCrlSignature,
    StaleDelta,
    DuplicateRevocation,
    CorruptState,
    // simulator
    NotASquare,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace accrl
