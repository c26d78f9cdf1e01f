#pragma once

// Randomized invariant sweeps over recurrence data. Each property draws its
// own cases from a splitmix64 stream seeded by (seed, property index), so
// the output is a function of the seed alone.

#include <cstdint>
#include <string>
#include <vector>

namespace askey {

/// splitmix64; doubles are formed from the top 53 bits so the stream is
/// identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double worst = 0;      // largest measured error ratio (error / allowed)
  std::string example;   // first failing case
};

/// Properties: monicity, recurrence-residual, rescale-roundtrip,
/// rescale-commutation, favard-preservation, parity, self-identification.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, std::size_t cases);

}  // namespace askey
