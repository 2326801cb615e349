#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "valleyscape/point.hpp"

namespace valleyscape {

/// SplitMix64 finalizer (Steele, Lea & Flood 2014):
///   z ^= z >> 30; z *= 0xbf58476d1ce4e5b9;
///   z ^= z >> 27; z *= 0x94d049bb133111eb;
///   z ^= z >> 31.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// Counter-based random stream.
///
/// The stream key is a pure function of (seed, id):
///   key = mix64(seed ^ mix64(id + kGoldenGamma))
/// and draw k (0-based) is
///   u64(k) = mix64(key + (k + 1) * kGoldenGamma)
/// which is exactly the SplitMix64 sequence started from state `key`.
/// Uniform reals take the top 53 bits: (u64 >> 11) * 2^-53, in [0, 1).
///
/// Because any draw is addressable by its index, parallel consumers can
/// split one stream into disjoint index ranges and reproduce the serial
/// sequence bit for bit.
class RngStream {
 public:
  using result_type = std::uint64_t;

  RngStream(std::uint64_t seed, std::uint64_t id) noexcept
      : seed_(seed), id_(id), key_(mix64(seed ^ mix64(id + kGoldenGamma))) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t id() const noexcept { return id_; }
  std::uint64_t position() const noexcept { return counter_; }

  /// Draw at absolute index `k`, independent of the current position.
  std::uint64_t u64_at(std::uint64_t k) const noexcept { return mix64(key_ + (k + 1) * kGoldenGamma); }
  double uniform_at(std::uint64_t k) const noexcept { return to_unit(u64_at(k)); }

  std::uint64_t next_u64() noexcept { return u64_at(counter_++); }
  double next_uniform() noexcept { return to_unit(next_u64()); }
  void skip(std::uint64_t count) noexcept { counter_ += count; }

  // UniformRandomBitGenerator
  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }
  result_type operator()() noexcept { return next_u64(); }

  static constexpr double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t id_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline RngStream substream(std::uint64_t seed, std::uint64_t id) noexcept { return RngStream(seed, id); }

/// `count` i.i.d. points, coordinate i uniform in [lower_i, upper_i].
/// Consumes exactly count * d draws, point-major.
std::vector<Point> uniform_in_box(RngStream& stream, const Domain& domain, std::size_t count);

}  // namespace valleyscape
