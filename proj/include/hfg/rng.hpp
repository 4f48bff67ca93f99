#ifndef HFG_RNG_HPP
#define HFG_RNG_HPP

#include <cstdint>
#include <random>

namespace hfg {

/// One named, seeded stream per run. All stochastic branching draws from it
/// in a documented order; deterministic branches must not consume draws, so
/// seeded runs are bit-reproducible.
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 bits; avoids std::uniform_real_distribution,
  /// whose output is not pinned down by the standard.
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool next_bool() { return (engine_() >> 63) & 1; }

  uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hfg

#endif
