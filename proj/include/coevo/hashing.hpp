#pragma once

#include <cstdint>
#include <string_view>

namespace coevo {

// Deterministic, platform-independent hashing. Everything random-looking in
// the synthetic world and the trainer is derived from these functions, so a
// (seed, ids) tuple replays bit-identically across runs and across thread
// schedules.

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_mix(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2)));
}

// Chained key builder: key(seed, "exec", problem_id, ...) style call sites.
constexpr std::uint64_t hash_key(std::uint64_t h) { return splitmix64(h); }

template <typename... Rest>
constexpr std::uint64_t hash_key(std::uint64_t h, std::string_view s, Rest... rest) {
  return hash_key(hash_mix(h, fnv1a64(s)), rest...);
}

template <typename... Rest>
constexpr std::uint64_t hash_key(std::uint64_t h, std::uint64_t v, Rest... rest) {
  return hash_key(hash_mix(h, v), rest...);
}

// Uniform double in [0, 1) from a 64-bit hash.
constexpr double unit_double(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1p-53;
}

// Unbiased uniform index in [0, n) drawn from a hash-seeded splitmix stream.
inline std::uint64_t uniform_index(std::uint64_t key, std::uint64_t n) {
  const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
  std::uint64_t state = key;
  for (;;) {
    state = splitmix64(state + 0x632be59bd9b4e019ull);
    if (state < limit) return state % n;
  }
}

}  // namespace coevo
