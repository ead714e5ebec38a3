#include "permpat/fingerprint.hpp"

#include <string>

#include "permpat/errors.hpp"

namespace permpat {

PatternFingerprint encode_fingerprint(const Pattern& q) {
  const int k = q.size();
  if (k > kFingerprintMaxLen)
    throw CapacityError("pattern length " + std::to_string(k) +
                        " exceeds the 64-bit fingerprint capacity of 20; "
                        "use the census byte-key fallback");
  std::uint64_t code = 0;
  for (int j = 2; j <= k; ++j) {
    std::uint64_t c = 0;
    for (int i = 1; i < j; ++i)
      if (q[i] > q[j]) ++c;
    code += c * kFactorial[j - 1];
  }
  return PatternFingerprint{code, k};
}

Pattern decode_fingerprint(const PatternFingerprint& f) {
  const int k = f.length;
  if (k < 1 || k > kFingerprintMaxLen)
    throw InvalidInputError("fingerprint length " + std::to_string(k) +
                            " outside 1..20");
  if (f.code >= kFactorial[k])
    throw InvalidInputError("fingerprint code out of range for length " +
                            std::to_string(k));
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) {
    // c = number of earlier entries greater than entry j, so the new entry
    // ranks j - c within the prefix; bump existing values to make room.
    int c = static_cast<int>((f.code / kFactorial[j - 1]) %
                             static_cast<std::uint64_t>(j));
    int rank = j - c;
    for (int& v : entries)
      if (v >= rank) ++v;
    entries.push_back(rank);
  }
  return Pattern(std::move(entries));
}

}  // namespace permpat
