#include "donut/kernels.hpp"

namespace donut::kernels::scalar {

void violation_masks(std::span<const u64> a, std::span<const u64> b, std::span<const u64> x,
                     std::span<const u64> y, std::span<std::uint16_t> out) {
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = donut::violation_mask({a[i], b[i], x[i], y[i]});
    }
}

void twistable_fast(std::span<const u64> a, std::span<const u64> x, std::span<const u64> y,
                    std::span<std::uint8_t> out) {
    using u128 = unsigned __int128;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = static_cast<u128>(x[i]) * 2 > a[i] && static_cast<u128>(y[i]) * 2 > a[i];
    }
}

}  // namespace donut::kernels::scalar
