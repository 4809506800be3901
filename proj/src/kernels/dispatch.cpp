#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

#include "donut/kernels.hpp"

namespace donut::kernels {

namespace {

// -1: automatic, otherwise the forced Isa value
std::atomic<int> g_forced{-1};

bool fits_vector_lanes(std::span<const u64> v) {
    return std::all_of(v.begin(), v.end(), [](u64 s) { return s < kVectorValueLimit; });
}

Isa detect() {
    if (const char* env = std::getenv("DONUT_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return Isa::Scalar;
        if (want == "avx2" && isa_supported(Isa::Avx2)) return Isa::Avx2;
    }
    return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

void check_sizes(std::size_t out, std::initializer_list<std::size_t> ins) {
    for (auto n : ins) {
        if (n < out) throw DomainError("kernel input shorter than output");
    }
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "?";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(__x86_64__) && defined(DONUT_BUILD_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() {
    const int forced = g_forced.load();
    if (forced >= 0) return static_cast<Isa>(forced);
    static const Isa detected = detect();
    return detected;
}

void force_isa(std::optional<Isa> isa) {
    if (isa && !isa_supported(*isa)) {
        throw DomainError("ISA not supported on this CPU: " + std::string(isa_name(*isa)));
    }
    g_forced = isa ? static_cast<int>(*isa) : -1;
}

void QuadBatch::clear() {
    a.clear();
    b.clear();
    x.clear();
    y.clear();
}

void QuadBatch::reserve(std::size_t n) {
    a.reserve(n);
    b.reserve(n);
    x.reserve(n);
    y.reserve(n);
}

void QuadBatch::push_back(const Quad& q) {
    a.push_back(q.a);
    b.push_back(q.b);
    x.push_back(q.x);
    y.push_back(q.y);
}

void violation_masks(std::span<const u64> a, std::span<const u64> b, std::span<const u64> x,
                     std::span<const u64> y, std::span<std::uint16_t> out) {
    check_sizes(out.size(), {a.size(), b.size(), x.size(), y.size()});
    const auto n = out.size();
    if (active_isa() == Isa::Avx2 && fits_vector_lanes(a.first(n)) && fits_vector_lanes(b.first(n)) &&
        fits_vector_lanes(x.first(n)) && fits_vector_lanes(y.first(n))) {
        avx2::violation_masks(a, b, x, y, out);
        return;
    }
    scalar::violation_masks(a, b, x, y, out);
}

void twistable_fast(std::span<const u64> a, std::span<const u64> x, std::span<const u64> y,
                    std::span<std::uint8_t> out) {
    check_sizes(out.size(), {a.size(), x.size(), y.size()});
    const auto n = out.size();
    if (active_isa() == Isa::Avx2 && fits_vector_lanes(a.first(n)) && fits_vector_lanes(x.first(n)) &&
        fits_vector_lanes(y.first(n))) {
        avx2::twistable_fast(a, x, y, out);
        return;
    }
    scalar::twistable_fast(a, x, y, out);
}

}  // namespace donut::kernels
