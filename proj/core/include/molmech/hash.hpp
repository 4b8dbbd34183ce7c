//
// Project molmech - Copyright 2026 molmech developers.
// SPDX-License-Identifier: Apache-2.0
//
#ifndef MOLMECH_HASH_HPP
#define MOLMECH_HASH_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace molmech {

// All hashing in the project goes through the two primitives below so that
// fingerprints, scaffold buckets and file checksums are bit-identical across
// platforms. Constants are fixed by contract and must never change.

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Full-avalanche 64-bit mix.
inline constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-dependent combination of two hashes.
inline constexpr uint64_t hash_combine(uint64_t h, uint64_t v) {
  return mix64(h ^ mix64(v));
}

/// FNV-1a 64-bit over a byte stream. Used for file checksums and text keys.
class Fnv1a64 {
 public:
  static constexpr uint64_t kOffset = 14695981039346656037ULL;
  static constexpr uint64_t kPrime = 1099511628211ULL;

  void update(const void* data, size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
      state_ ^= p[i];
      state_ *= kPrime;
    }
  }
  void update(std::string_view s) { update(s.data(), s.size()); }

  uint64_t digest() const { return state_; }

 private:
  uint64_t state_ = kOffset;
};

inline uint64_t hash_bytes(const void* data, size_t n) {
  Fnv1a64 h;
  h.update(data, n);
  return h.digest();
}

inline uint64_t hash_string(std::string_view s) {
  return hash_bytes(s.data(), s.size());
}

/// Hex rendering used for checksums in manifests.
std::string to_hex(uint64_t v);
uint64_t from_hex(std::string_view s);

}  // namespace molmech

#endif
