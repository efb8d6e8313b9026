#pragma once

#include <cstdint>

#include "fqc/geom.hpp"

namespace fqc {

/// Counter-based deterministic stream: draw i of a stream is
/// mix64(seed + (i+1) * 0x9E3779B97F4A7C15), where mix64 is the splitmix64
/// finalizer. Identical (seed, i) gives identical output on every platform.
std::uint64_t mix64(std::uint64_t x);

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() { return mix64(seed_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

  /// Unbiased draw in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n);

  /// Derives an independent stream for a sub-task.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 1));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

enum class GenKind { uniform, full_space, sphere, subspace };

struct GenSpec {
  GenKind kind = GenKind::uniform;
  std::size_t size = 0;   // uniform: sample size; sphere: 0 = whole sphere
  code_t radius = 1;      // sphere
  unsigned subdim = 1;    // subspace
};

/// Deterministic given (spec, seed). Uniform draws codes in [0, q^d) without
/// replacement; sphere returns S(0, t) (optionally subsampled); subspace
/// returns the axis-aligned {(a_1..a_s, 0..0)}.
PointSet generate_set(std::shared_ptr<const Fq> F, unsigned d, const GenSpec& spec,
                      std::uint64_t seed);

}  // namespace fqc
