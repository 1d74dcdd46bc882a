#include <doctest.h>

#include <bit>
#include <random>
#include <vector>

#include "splitkit/kernels.hpp"

using namespace splitkit;

namespace {

std::vector<std::uint16_t> random_masks(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::uint16_t> v(count);
  for (auto& m : v) m = static_cast<std::uint16_t>(rng());
  return v;
}

}  // namespace

TEST_CASE("scalar max-intersection reference") {
  std::vector<std::uint16_t> masks = {0b0011, 0b0110, 0b1111};
  CHECK(kernels::scalar::max_intersection_size(masks, 0b0101) == 2);
  CHECK(kernels::scalar::max_intersection_size(masks, 0) == 0);
  CHECK(kernels::scalar::max_intersection_size({}, 0b1111) == 0);
}

TEST_CASE("scalar filter keeps order and bound") {
  std::vector<std::uint16_t> in = {0b0011, 0b0111, 0b1000, 0b1111};
  std::vector<std::uint16_t> out(in.size());
  std::size_t n = kernels::scalar::filter_intersection_at_most(in, 0b0111, 2, out.data());
  out.resize(n);
  CHECK(out == std::vector<std::uint16_t>{0b0011, 0b1000});
}

TEST_CASE("dispatched kernels match the scalar reference") {
  // Sizes straddle the vector width, including ragged tails.
  for (std::size_t count : {0u, 1u, 5u, 15u, 16u, 17u, 31u, 64u, 1000u}) {
    auto masks = random_masks(count, static_cast<std::uint32_t>(count) * 7919u + 13u);
    for (std::uint16_t x : {std::uint16_t{0}, std::uint16_t{0x00ff}, std::uint16_t{0xabcd}}) {
      CHECK(kernels::max_intersection_size(masks, x) ==
            kernels::scalar::max_intersection_size(masks, x));
      for (int cap : {0, 3, 8, 16}) {
        std::vector<std::uint16_t> a(count), b(count);
        std::size_t na = kernels::filter_intersection_at_most(masks, x, cap, a.data());
        std::size_t nb = kernels::scalar::filter_intersection_at_most(masks, x, cap, b.data());
        a.resize(na);
        b.resize(nb);
        CHECK(a == b);
      }
    }
  }
}

#if defined(__x86_64__) || defined(__i386__)
TEST_CASE("avx2 variants match scalar when available") {
  if (!kernels::avx2::available()) return;
  for (std::uint32_t seed = 1; seed <= 8; ++seed) {
    auto masks = random_masks(16 * seed + seed % 3, seed);
    std::uint16_t x = static_cast<std::uint16_t>(seed * 2654435761u);
    CHECK(kernels::avx2::max_intersection_size(masks, x) ==
          kernels::scalar::max_intersection_size(masks, x));
    for (int cap = 0; cap <= 16; cap += 4) {
      std::vector<std::uint16_t> a(masks.size()), b(masks.size());
      std::size_t na = kernels::avx2::filter_intersection_at_most(masks, x, cap, a.data());
      std::size_t nb = kernels::scalar::filter_intersection_at_most(masks, x, cap, b.data());
      a.resize(na);
      b.resize(nb);
      CHECK(a == b);
    }
  }
}
#endif

TEST_CASE("filter compacts in place") {
  auto masks = random_masks(100, 42);
  std::vector<std::uint16_t> expected(masks.size());
  std::size_t ne =
      kernels::scalar::filter_intersection_at_most(masks, 0x0f0f, 5, expected.data());
  expected.resize(ne);
  std::size_t n = kernels::filter_intersection_at_most(masks, 0x0f0f, 5, masks.data());
  masks.resize(n);
  CHECK(masks == expected);
}

TEST_CASE("a backend is selected") {
  auto name = kernels::active_backend();
  CHECK((name == "avx2" || name == "neon" || name == "scalar"));
}
