#include "splitkit/kernels.hpp"

#include <algorithm>
#include <bit>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace splitkit::kernels {

namespace scalar {

int max_intersection_size(std::span<const std::uint16_t> masks, std::uint16_t x) {
  int best = 0;
  for (std::uint16_t m : masks) {
    best = std::max(best, std::popcount(static_cast<std::uint16_t>(m & x)));
  }
  return best;
}

std::size_t filter_intersection_at_most(std::span<const std::uint16_t> in,
                                        std::uint16_t h, int cap,
                                        std::uint16_t* out) {
  std::size_t count = 0;
  for (std::uint16_t m : in) {
    std::uint16_t v = m;
    if (std::popcount(static_cast<std::uint16_t>(m & h)) <= cap) out[count++] = v;
  }
  return count;
}

}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {

bool available() { return __builtin_cpu_supports("avx2"); }

// Per-16-bit-lane popcount via the nibble LUT + pshufb trick, then a
// horizontal byte-pair sum with maddubs.
__attribute__((target("avx2"))) static inline __m256i popcount_epi16(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low4 = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low4);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low4);
  __m256i cnt8 = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                 _mm256_shuffle_epi8(lut, hi));
  return _mm256_maddubs_epi16(cnt8, _mm256_set1_epi8(1));
}

__attribute__((target("avx2"))) int max_intersection_size(
    std::span<const std::uint16_t> masks, std::uint16_t x) {
  const __m256i vx = _mm256_set1_epi16(static_cast<short>(x));
  __m256i vmax = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 16 <= masks.size(); i += 16) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + i));
    vmax = _mm256_max_epu16(vmax, popcount_epi16(_mm256_and_si256(v, vx)));
  }
  alignas(32) std::uint16_t lanes[16];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vmax);
  int best = 0;
  for (std::uint16_t l : lanes) best = std::max(best, static_cast<int>(l));
  for (; i < masks.size(); ++i) {
    best = std::max(best, std::popcount(static_cast<std::uint16_t>(masks[i] & x)));
  }
  return best;
}

__attribute__((target("avx2"))) std::size_t filter_intersection_at_most(
    std::span<const std::uint16_t> in, std::uint16_t h, int cap,
    std::uint16_t* out) {
  const __m256i vh = _mm256_set1_epi16(static_cast<short>(h));
  const __m256i vcap = _mm256_set1_epi16(static_cast<short>(cap));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 16 <= in.size(); i += 16) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + i));
    __m256i cnt = popcount_epi16(_mm256_and_si256(v, vh));
    // keep lane <=> !(cnt > cap); movemask yields 2 identical bits per lane.
    std::uint32_t drop = static_cast<std::uint32_t>(
        _mm256_movemask_epi8(_mm256_cmpgt_epi16(cnt, vcap)));
    alignas(32) std::uint16_t lanes[16];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    for (int lane = 0; lane < 16; ++lane) {
      out[count] = lanes[lane];
      count += ((drop >> (2 * lane)) & 1u) ^ 1u;
    }
  }
  for (; i < in.size(); ++i) {
    std::uint16_t m = in[i];
    if (std::popcount(static_cast<std::uint16_t>(m & h)) <= cap) out[count++] = m;
  }
  return count;
}

}  // namespace avx2
#endif  // x86

#if defined(__aarch64__)
namespace neon {

int max_intersection_size(std::span<const std::uint16_t> masks, std::uint16_t x) {
  const uint16x8_t vx = vdupq_n_u16(x);
  uint16x8_t vmax = vdupq_n_u16(0);
  std::size_t i = 0;
  for (; i + 8 <= masks.size(); i += 8) {
    uint16x8_t v = vandq_u16(vld1q_u16(masks.data() + i), vx);
    uint16x8_t cnt = vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u16(v)));
    vmax = vmaxq_u16(vmax, cnt);
  }
  int best = static_cast<int>(vmaxvq_u16(vmax));
  for (; i < masks.size(); ++i) {
    best = std::max(best, std::popcount(static_cast<std::uint16_t>(masks[i] & x)));
  }
  return best;
}

std::size_t filter_intersection_at_most(std::span<const std::uint16_t> in,
                                        std::uint16_t h, int cap,
                                        std::uint16_t* out) {
  const uint16x8_t vh = vdupq_n_u16(h);
  const uint16x8_t vcap = vdupq_n_u16(static_cast<std::uint16_t>(cap));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= in.size(); i += 8) {
    uint16x8_t v = vld1q_u16(in.data() + i);
    uint16x8_t cnt = vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u16(vandq_u16(v, vh))));
    uint16x8_t keep = vcleq_u16(cnt, vcap);
    std::uint16_t lanes[8], keeps[8];
    vst1q_u16(lanes, v);
    vst1q_u16(keeps, keep);
    for (int lane = 0; lane < 8; ++lane) {
      out[count] = lanes[lane];
      count += keeps[lane] & 1u;
    }
  }
  for (; i < in.size(); ++i) {
    std::uint16_t m = in[i];
    if (std::popcount(static_cast<std::uint16_t>(m & h)) <= cap) out[count++] = m;
  }
  return count;
}

}  // namespace neon
#endif  // aarch64

namespace {

using MaxFn = int (*)(std::span<const std::uint16_t>, std::uint16_t);
using FilterFn = std::size_t (*)(std::span<const std::uint16_t>, std::uint16_t,
                                 int, std::uint16_t*);

struct Dispatch {
  MaxFn max_fn = &scalar::max_intersection_size;
  FilterFn filter_fn = &scalar::filter_intersection_at_most;
  std::string_view name = "scalar";

  Dispatch() {
#if defined(__x86_64__) || defined(__i386__)
    if (avx2::available()) {
      max_fn = &avx2::max_intersection_size;
      filter_fn = &avx2::filter_intersection_at_most;
      name = "avx2";
    }
#elif defined(__aarch64__)
    max_fn = &neon::max_intersection_size;
    filter_fn = &neon::filter_intersection_at_most;
    name = "neon";
#endif
  }
};

const Dispatch& dispatch() {
  static const Dispatch d;
  return d;
}

}  // namespace

int max_intersection_size(std::span<const std::uint16_t> masks, std::uint16_t x) {
  return dispatch().max_fn(masks, x);
}

std::size_t filter_intersection_at_most(std::span<const std::uint16_t> in,
                                        std::uint16_t h, int cap,
                                        std::uint16_t* out) {
  return dispatch().filter_fn(in, h, cap, out);
}

std::string_view active_backend() { return dispatch().name; }

}  // namespace splitkit::kernels
