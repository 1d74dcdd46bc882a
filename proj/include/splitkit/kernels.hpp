#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops over arrays of 16-bit set masks. Each kernel has
// a scalar reference implementation and SIMD variants; the unqualified entry
// points dispatch to the widest variant the CPU supports, selected once at
// startup. The variants are equivalence-tested against the scalar reference.

namespace splitkit::kernels {

/// max over masks m of popcount(m & x); 0 for an empty array.
int max_intersection_size(std::span<const std::uint16_t> masks, std::uint16_t x);

/// Copies every mask m with popcount(m & h) <= cap into out (capacity must be
/// at least in.size(); in-place compaction with out == in.data() is allowed).
/// Returns the number of survivors, preserving input order.
std::size_t filter_intersection_at_most(std::span<const std::uint16_t> in,
                                        std::uint16_t h, int cap,
                                        std::uint16_t* out);

/// Name of the dispatched variant: "avx2", "neon" or "scalar".
std::string_view active_backend();

namespace scalar {
int max_intersection_size(std::span<const std::uint16_t> masks, std::uint16_t x);
std::size_t filter_intersection_at_most(std::span<const std::uint16_t> in,
                                        std::uint16_t h, int cap,
                                        std::uint16_t* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
bool available();
int max_intersection_size(std::span<const std::uint16_t> masks, std::uint16_t x);
std::size_t filter_intersection_at_most(std::span<const std::uint16_t> in,
                                        std::uint16_t h, int cap,
                                        std::uint16_t* out);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
int max_intersection_size(std::span<const std::uint16_t> masks, std::uint16_t x);
std::size_t filter_intersection_at_most(std::span<const std::uint16_t> in,
                                        std::uint16_t h, int cap,
                                        std::uint16_t* out);
}  // namespace neon
#endif

}  // namespace splitkit::kernels
