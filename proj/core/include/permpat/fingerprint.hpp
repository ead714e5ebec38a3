#pragma once

#include <cstdint>

#include "permpat/permutation.hpp"

namespace permpat {

// Dedup key for patterns: the Lehmer code (inversion table) packed in
// factorial base. Injective within each length for lengths <= 20, since
// 20! - 1 still fits in 64 bits. encode((1)) has code 0.
struct PatternFingerprint {
  std::uint64_t code = 0;
  int length = 0;

  bool operator==(const PatternFingerprint&) const = default;
  auto operator<=>(const PatternFingerprint&) const = default;
};

inline constexpr int kFingerprintMaxLen = 20;

// kFactorial[i] = i!, valid for i <= 20.
inline constexpr std::uint64_t kFactorial[21] = {
    1ull,
    1ull,
    2ull,
    6ull,
    24ull,
    120ull,
    720ull,
    5040ull,
    40320ull,
    362880ull,
    3628800ull,
    39916800ull,
    479001600ull,
    6227020800ull,
    87178291200ull,
    1307674368000ull,
    20922789888000ull,
    355687428096000ull,
    6402373705728000ull,
    121645100408832000ull,
    2432902008176640000ull,
};

// length > 20 -> CapacityError pointing at the census byte-key fallback.
PatternFingerprint encode_fingerprint(const Pattern& q);
// Rejects codes >= length! and lengths outside 1..20.
Pattern decode_fingerprint(const PatternFingerprint& f);

}  // namespace permpat
