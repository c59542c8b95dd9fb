#include "svhdr/rng.hpp"

#include <cmath>
#include <cstring>

#include "svhdr/common.hpp"

namespace svhdr {

namespace philox {
namespace {

constexpr uint32_t kMul0 = 0xD2511F53u;
constexpr uint32_t kMul1 = 0xCD9E8D57u;
constexpr uint32_t kWeyl0 = 0x9E3779B9u;
constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  uint64_t p = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(p >> 32);
  lo = static_cast<uint32_t>(p);
}

}  // namespace

std::array<uint32_t, 4> block(const std::array<uint32_t, 4>& counter,
                              const std::array<uint32_t, 2>& key) {
  std::array<uint32_t, 4> c = counter;
  std::array<uint32_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
    uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
  return c;
}

}  // namespace philox

CounterRng::CounterRng(uint64_t seed, uint64_t stream, uint64_t substream) {
  key_ = {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)};
  // Fold (stream, substream) into one 64-bit stream id with a Philox block so
  // distinct pairs map to distinct, well-separated ids.
  if (substream != 0) {
    auto mixed = philox::block({static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32),
                                static_cast<uint32_t>(substream), static_cast<uint32_t>(substream >> 32)},
                               {0x243F6A88u, 0x85A308D3u});
    stream_lo_ = (static_cast<uint64_t>(mixed[1]) << 32) | mixed[0];
  } else {
    stream_lo_ = stream;
  }
}

void CounterRng::refill() {
  buf_ = philox::block({static_cast<uint32_t>(stream_lo_), static_cast<uint32_t>(stream_lo_ >> 32),
                        static_cast<uint32_t>(draw_), static_cast<uint32_t>(draw_ >> 32)},
                       key_);
  ++draw_;
  buf_pos_ = 0;
}

uint32_t CounterRng::next_u32() {
  if (buf_pos_ >= 4) refill();
  return buf_[static_cast<size_t>(buf_pos_++)];
}

uint64_t CounterRng::next_u64() {
  uint64_t lo = next_u32();
  uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform_open() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double CounterRng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_gauss_;
  }
  double u1 = uniform_open();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_gauss_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

int64_t CounterRng::poisson(double lambda) {
  SVHDR_CHECK(lambda >= 0.0 && std::isfinite(lambda), "poisson rate must be finite and >= 0, got ",
              lambda);
  if (lambda == 0.0) return 0;
  if (lambda < 10.0) {
    // Multiplication method: product of uniforms against exp(-lambda).
    double enlam = std::exp(-lambda);
    int64_t k = 0;
    double prod = 1.0;
    for (;;) {
      prod *= uniform_open();
      if (prod > enlam) {
        ++k;
      } else {
        return k;
      }
    }
  }
  // PTRS transformed rejection (Hormann). Exact for lambda >= 10.
  double b = 0.931 + 2.53 * std::sqrt(lambda);
  double a = -0.059 + 0.02483 * b;
  double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  double v_r = 0.9277 - 3.6224 / (b - 2.0);
  double log_lambda = std::log(lambda);
  for (;;) {
    double u = uniform() - 0.5;
    double v = uniform_open();
    double us = 0.5 - std::fabs(u);
    double k = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<int64_t>(k);
    if (k < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
        k * log_lambda - lambda - std::lgamma(k + 1.0)) {
      return static_cast<int64_t>(k);
    }
  }
}

double CounterRng::triangular(double lo, double mode, double hi) {
  SVHDR_CHECK(lo <= mode && mode <= hi && lo < hi, "invalid triangular parameters (", lo, ", ",
              mode, ", ", hi, ")");
  double u = uniform();
  double fc = (mode - lo) / (hi - lo);
  if (u < fc) return lo + std::sqrt(u * (hi - lo) * (mode - lo));
  return hi - std::sqrt((1.0 - u) * (hi - lo) * (hi - mode));
}

uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  auto out = philox::block(
      {static_cast<uint32_t>(a), static_cast<uint32_t>(a >> 32),
       static_cast<uint32_t>(b ^ (c << 16) ^ (c >> 48)), static_cast<uint32_t>((b >> 32) ^ c)},
      {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)});
  return (static_cast<uint64_t>(out[1]) << 32) | out[0];
}

uint64_t fnv1a64(const char* s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (; *s; ++s) {
    h ^= static_cast<uint64_t>(static_cast<unsigned char>(*s));
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace svhdr
