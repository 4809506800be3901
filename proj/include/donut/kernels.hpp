#pragma once

// Batched donut predicates over structure-of-arrays quadruples, used by the
// exhaustive sweeps. The scalar kernels are the reference; vector variants
// must produce identical output and are selected at runtime.
//
// Vector paths work on 64-bit lanes with 32x32->64 multiplies, so they
// require every side < kVectorValueLimit. The dispatching entry points check
// this per call and fall back to scalar otherwise.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "donut/core.hpp"

namespace donut::kernels {

enum class Isa { Scalar, Avx2 };

inline constexpr u64 kVectorValueLimit = u64{1} << 31;

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);

/// Best supported ISA, unless overridden by force_isa() or by the
/// DONUT_SIMD environment variable ("scalar" or "avx2").
Isa active_isa();

/// Pins the ISA used by the dispatching entry points; nullopt restores
/// automatic selection. Throws DomainError for an unsupported ISA.
void force_isa(std::optional<Isa> isa);

/// Quadruples stored column-wise.
struct QuadBatch {
    std::vector<u64> a, b, x, y;

    std::size_t size() const { return a.size(); }
    bool empty() const { return a.empty(); }
    void clear();
    void reserve(std::size_t n);
    void push_back(const Quad& q);
    Quad operator[](std::size_t i) const { return {a[i], b[i], x[i], y[i]}; }
};

/// out[i] = violation_mask({a[i], b[i], x[i], y[i]}). Sides must be nonzero.
void violation_masks(std::span<const u64> a, std::span<const u64> b, std::span<const u64> x,
                     std::span<const u64> y, std::span<std::uint16_t> out);

/// out[i] = (2x[i] > a[i] && 2y[i] > a[i]).
void twistable_fast(std::span<const u64> a, std::span<const u64> x, std::span<const u64> y,
                    std::span<std::uint8_t> out);

namespace scalar {
void violation_masks(std::span<const u64> a, std::span<const u64> b, std::span<const u64> x,
                     std::span<const u64> y, std::span<std::uint16_t> out);
void twistable_fast(std::span<const u64> a, std::span<const u64> x, std::span<const u64> y,
                    std::span<std::uint8_t> out);
}  // namespace scalar

// Only callable when isa_supported(Isa::Avx2) and every side is below
// kVectorValueLimit.
namespace avx2 {
void violation_masks(std::span<const u64> a, std::span<const u64> b, std::span<const u64> x,
                     std::span<const u64> y, std::span<std::uint16_t> out);
void twistable_fast(std::span<const u64> a, std::span<const u64> x, std::span<const u64> y,
                    std::span<std::uint8_t> out);
}  // namespace avx2

}  // namespace donut::kernels
