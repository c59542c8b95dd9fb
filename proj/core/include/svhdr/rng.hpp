#pragma once

#include <array>
#include <cstdint>

namespace svhdr {

// Philox4x32-10 counter-based generator. Draws are addressed by
// (key, counter) so any pixel / sample / exposure can own an independent
// stream whose output does not depend on evaluation order or thread count.
namespace philox {

std::array<uint32_t, 4> block(const std::array<uint32_t, 4>& counter,
                              const std::array<uint32_t, 2>& key);

}  // namespace philox

// Random stream addressed by (seed, stream, substream). Consecutive calls
// advance an internal 64-bit draw counter; two streams never collide.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed, uint64_t stream = 0, uint64_t substream = 0);

  uint32_t next_u32();
  uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1]; safe to pass to log().
  double uniform_open();
  // Standard normal via Box-Muller (pairs cached).
  double gaussian();
  // Poisson sample; inversion below lambda=10, PTRS transformed rejection above.
  int64_t poisson(double lambda);
  // Triangular distribution on [lo, hi] with the given mode.
  double triangular(double lo, double mode, double hi);

 private:
  void refill();

  std::array<uint32_t, 2> key_;
  uint64_t stream_lo_;
  uint64_t draw_ = 0;
  std::array<uint32_t, 4> buf_{};
  int buf_pos_ = 4;
  double spare_gauss_ = 0.0;
  bool has_spare_ = false;
};

// Stable 64-bit sub-seed derived from a root seed and up to three indices
// (sample, exposure, ...). Built on a Philox block, so derived seeds are
// independent for distinct inputs.
uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0);

// FNV-1a hash of a string; used to key per-parameter init streams by name.
uint64_t fnv1a64(const char* s);

}  // namespace svhdr
