#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

namespace spaudit {

namespace detail {

// SplitMix64 output finalizer (Steele, Lea & Flood 2014). Bijective on u64.
constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<uint8_t>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace detail

// Stream ids are derived from purpose tags so every stochastic operation in a
// run draws from its own independent stream of the one PRNG algorithm.
constexpr uint64_t derive_stream_id(std::string_view tag) { return detail::fnv1a64(tag); }

constexpr uint64_t derive_stream_id(std::string_view tag, uint64_t index) {
  return detail::mix64(detail::fnv1a64(tag) ^ detail::mix64(index + detail::kGolden));
}

// SplitMix64 in counter mode: value(i) = mix64(origin + i*golden). Pure
// integer arithmetic, so the u64 sequence is bit-identical on every platform
// for a given (seed, stream_id).
class RngStream {
 public:
  static constexpr const char* kAlgorithmId = "splitmix64-counter";

  RngStream(uint64_t seed, uint64_t stream_id)
      : origin_(detail::mix64(detail::mix64(seed + detail::kGolden) ^ stream_id)) {}

  RngStream(uint64_t seed, std::string_view tag) : RngStream(seed, derive_stream_id(tag)) {}
  RngStream(uint64_t seed, std::string_view tag, uint64_t index)
      : RngStream(seed, derive_stream_id(tag, index)) {}

  uint64_t next_u64() { return detail::mix64(origin_ + (counter_++) * detail::kGolden); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased integer in [0, n) by rejection.
  uint64_t uniform_below(uint64_t n) {
    for (;;) {
      uint64_t r = next_u64();
      uint64_t v = r % n;
      if (r - v <= UINT64_MAX - (n - 1)) return v;
    }
  }

  // Box-Muller, two uniforms per variate; the sine branch is discarded so
  // consumption per call is fixed.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(uniform_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices from [0, n), returned sorted.
  std::vector<size_t> sample_without_replacement(size_t n, size_t k) {
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    for (size_t i = 0; i < k && i + 1 < n; ++i) {
      size_t j = i + static_cast<size_t>(uniform_below(n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(std::min(k, n));
    std::sort(idx.begin(), idx.end());
    return idx;
  }

 private:
  uint64_t origin_;
  uint64_t counter_ = 0;
};

}  // namespace spaudit
