#pragma once

// Rectangular donuts: an a x b exterior with an x x y hole, sides parallel
// (x along a), where the exterior area is twice the hole area.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "donut/arith.hpp"

namespace donut {

/// Raw (a, b, x, y) quadruple with no validity guarantee.
struct Quad {
    u64 a = 0;
    u64 b = 0;
    u64 x = 0;
    u64 y = 0;

    friend auto operator<=>(const Quad&, const Quad&) = default;
};

std::string to_string(const Quad& q);
std::ostream& operator<<(std::ostream& os, const Quad& q);

/// One bit per defining constraint. The bit values are shared with the batch
/// kernels, which report violations as a mask.
enum class Constraint : std::uint16_t {
    ShortSideAboveOne = 1u << 0,  // 1 < b
    SidesOrdered = 1u << 1,       // b <= a
    LongSideBelowArea = 1u << 2,  // a < ab
    HalfArea = 1u << 3,           // ab = 2xy
    HoleFitsLong = 1u << 4,       // x < a
    HoleFitsShort = 1u << 5,      // y < b
};

inline constexpr Constraint kAllConstraints[] = {
    Constraint::ShortSideAboveOne, Constraint::SidesOrdered, Constraint::LongSideBelowArea,
    Constraint::HalfArea,          Constraint::HoleFitsLong, Constraint::HoleFitsShort,
};

/// Stable identifier used in reports, e.g. "y < b".
std::string_view constraint_name(Constraint c);

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
};

/// Checks every defining constraint and names each one that fails. Does not
/// reorder sides: a < b is reported as a violation of "b <= a".
/// Throws DomainError if any argument is zero.
ValidationReport validate(u64 a, u64 b, u64 x, u64 y);
ValidationReport validate(const Quad& q);

/// Violation mask (bitwise OR of Constraint values); 0 means valid.
/// Arguments must be nonzero.
std::uint16_t violation_mask(const Quad& q);

inline bool is_valid(const Quad& q) {
    return q.a != 0 && q.b != 0 && q.x != 0 && q.y != 0 && violation_mask(q) == 0;
}

/// A quadruple known to satisfy every donut constraint.
class DonutConfig {
public:
    static std::optional<DonutConfig> make(const Quad& q);
    static std::optional<DonutConfig> make(u64 a, u64 b, u64 x, u64 y) {
        return make(Quad{a, b, x, y});
    }
    /// Throws DomainError listing the violated constraints.
    static DonutConfig checked(const Quad& q);
    static DonutConfig checked(u64 a, u64 b, u64 x, u64 y) { return checked(Quad{a, b, x, y}); }

    u64 a() const { return q_.a; }
    u64 b() const { return q_.b; }
    u64 x() const { return q_.x; }
    u64 y() const { return q_.y; }
    const Quad& quad() const { return q_; }

    friend auto operator<=>(const DonutConfig&, const DonutConfig&) = default;

private:
    explicit DonutConfig(const Quad& q) : q_(q) {}
    Quad q_;
};

std::ostream& operator<<(std::ostream& os, const DonutConfig& d);

/// a * b. Throws OverflowError instead of wrapping.
u64 area(const DonutConfig& d);

/// Swaps the hole sides: (a, b, y, x). The result may not be a donut.
Quad twist(const DonutConfig& d);
Quad twist(const Quad& q);

/// (a, b, y, x) is itself a donut.
bool is_twistable_definitional(const DonutConfig& d);

/// Closed form: 2x > a and 2y > a. Agrees with the definitional test on every
/// valid donut.
bool is_twistable_fast(const DonutConfig& d);

/// gcd(a, x) = 1 and gcd(b, y) = 1.
bool is_coprime_config(const DonutConfig& d);

/// (h*a, k*b, h*x, k*y), with exterior and hole sides swapped together when
/// k*b > h*a so the first exterior side stays the longer one.
/// Throws DomainError for h or k zero and OverflowError on overflow.
DonutConfig scale(const DonutConfig& d, u64 h, u64 k);

}  // namespace donut
