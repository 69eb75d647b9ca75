#pragma once
#include <cmath>
#include <cstdint>

namespace oamq {

// Counter-based splitmix64. Draw i of a keyed stream is a pure function of
// (key, i), so any index range can be generated independently and in
// parallel with bit-identical results. The algorithm identifier below is
// recorded in run metadata to pin reproducibility across implementations.
inline constexpr char kRngAlgorithm[] = "splitmix64-ctr";

inline uint64_t splitmix64_fin(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

inline uint64_t rng_draw(uint64_t key, uint64_t counter) {
  return splitmix64_fin(key + (counter + 1) * 0x9e3779b97f4a7c15ull);
}

// Derives an independent stream key from a user seed and a stream tag.
inline uint64_t rng_key(uint64_t seed, uint64_t stream) {
  return splitmix64_fin(seed ^ splitmix64_fin(stream * 0xda942042e4dd58b5ull + 0x2545f4914f6cdd1dull));
}

inline double to_unit(uint64_t x) { return static_cast<double>(x >> 11) * 0x1.0p-53; }  // [0,1)

struct CounterRng {
  uint64_t key = 0;
  uint64_t counter = 0;

  CounterRng() = default;
  CounterRng(uint64_t seed, uint64_t stream) : key(rng_key(seed, stream)) {}

  uint64_t next_u64() { return rng_draw(key, counter++); }
  double next_unit() { return to_unit(next_u64()); }

  // Exponential inter-arrival gap with the given rate.
  double next_exponential(double rate) { return -std::log1p(-next_unit()) / rate; }
};

// Standard normal deviate from two consecutive counter draws (Box-Muller).
inline double gaussian_at(uint64_t key, uint64_t counter) {
  const double u1 = to_unit(rng_draw(key, counter));
  const double u2 = to_unit(rng_draw(key, counter + 1));
  return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(6.28318530717958647692 * u2);
}

}  // namespace oamq
