// Built with -mavx2; only entered after a runtime CPU check.

#include "donut/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>
#define DONUT_HAVE_AVX2 1
#else
#define DONUT_HAVE_AVX2 0
#endif

#include <stdexcept>

namespace donut::kernels::avx2 {

#if DONUT_HAVE_AVX2

namespace {

inline __m256i load4(const u64* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

inline __m256i bit_if(__m256i fail, std::uint16_t bit) {
    return _mm256_and_si256(fail, _mm256_set1_epi64x(bit));
}

}  // namespace

void violation_masks(std::span<const u64> a, std::span<const u64> b, std::span<const u64> x,
                     std::span<const u64> y, std::span<std::uint16_t> out) {
    const std::size_t n = out.size();
    const __m256i ones = _mm256_set1_epi64x(-1);
    const __m256i one = _mm256_set1_epi64x(1);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = load4(a.data() + i);
        const __m256i vb = load4(b.data() + i);
        const __m256i vx = load4(x.data() + i);
        const __m256i vy = load4(y.data() + i);
        // lanes hold values < 2^31: products fit and signed compares are exact
        const __m256i ab = _mm256_mul_epu32(va, vb);
        const __m256i two_xy = _mm256_slli_epi64(_mm256_mul_epu32(vx, vy), 1);

        const __m256i short_ok = _mm256_cmpgt_epi64(vb, one);
        const __m256i order_bad = _mm256_cmpgt_epi64(vb, va);
        const __m256i area_ok = _mm256_cmpgt_epi64(ab, va);
        const __m256i half_ok = _mm256_cmpeq_epi64(ab, two_xy);
        const __m256i xfit_ok = _mm256_cmpgt_epi64(va, vx);
        const __m256i yfit_ok = _mm256_cmpgt_epi64(vb, vy);

        __m256i mask = bit_if(_mm256_xor_si256(short_ok, ones),
                              static_cast<std::uint16_t>(Constraint::ShortSideAboveOne));
        mask = _mm256_or_si256(mask, bit_if(order_bad, static_cast<std::uint16_t>(Constraint::SidesOrdered)));
        mask = _mm256_or_si256(mask, bit_if(_mm256_xor_si256(area_ok, ones),
                                            static_cast<std::uint16_t>(Constraint::LongSideBelowArea)));
        mask = _mm256_or_si256(mask, bit_if(_mm256_xor_si256(half_ok, ones),
                                            static_cast<std::uint16_t>(Constraint::HalfArea)));
        mask = _mm256_or_si256(mask, bit_if(_mm256_xor_si256(xfit_ok, ones),
                                            static_cast<std::uint16_t>(Constraint::HoleFitsLong)));
        mask = _mm256_or_si256(mask, bit_if(_mm256_xor_si256(yfit_ok, ones),
                                            static_cast<std::uint16_t>(Constraint::HoleFitsShort)));

        alignas(32) u64 lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), mask);
        for (int j = 0; j < 4; ++j) out[i + j] = static_cast<std::uint16_t>(lanes[j]);
    }
    scalar::violation_masks(a.subspan(i), b.subspan(i), x.subspan(i), y.subspan(i), out.subspan(i));
}

void twistable_fast(std::span<const u64> a, std::span<const u64> x, std::span<const u64> y,
                    std::span<std::uint8_t> out) {
    const std::size_t n = out.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = load4(a.data() + i);
        const __m256i two_x = _mm256_slli_epi64(load4(x.data() + i), 1);
        const __m256i two_y = _mm256_slli_epi64(load4(y.data() + i), 1);
        const __m256i ok =
            _mm256_and_si256(_mm256_cmpgt_epi64(two_x, va), _mm256_cmpgt_epi64(two_y, va));
        const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(ok));
        for (int j = 0; j < 4; ++j) out[i + j] = static_cast<std::uint8_t>((bits >> j) & 1);
    }
    scalar::twistable_fast(a.subspan(i), x.subspan(i), y.subspan(i), out.subspan(i));
}

#else

void violation_masks(std::span<const u64>, std::span<const u64>, std::span<const u64>,
                     std::span<const u64>, std::span<std::uint16_t>) {
    throw std::logic_error("AVX2 kernels not compiled in");
}

void twistable_fast(std::span<const u64>, std::span<const u64>, std::span<const u64>,
                    std::span<std::uint8_t>) {
    throw std::logic_error("AVX2 kernels not compiled in");
}

#endif

}  // namespace donut::kernels::avx2
