#include "donut/core.hpp"

#include <sstream>

namespace donut {

namespace {

using u128 = unsigned __int128;

}  // namespace

std::string to_string(const Quad& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Quad& q) {
    return os << '(' << q.a << ',' << q.b << ',' << q.x << ',' << q.y << ')';
}

std::ostream& operator<<(std::ostream& os, const DonutConfig& d) { return os << d.quad(); }

std::string_view constraint_name(Constraint c) {
    switch (c) {
        case Constraint::ShortSideAboveOne: return "1 < b";
        case Constraint::SidesOrdered: return "b <= a";
        case Constraint::LongSideBelowArea: return "a < ab";
        case Constraint::HalfArea: return "ab = 2xy";
        case Constraint::HoleFitsLong: return "x < a";
        case Constraint::HoleFitsShort: return "y < b";
    }
    return "?";
}

std::uint16_t violation_mask(const Quad& q) {
    const u128 ab = static_cast<u128>(q.a) * q.b;
    const u128 two_xy = static_cast<u128>(q.x) * q.y * 2;
    std::uint16_t mask = 0;
    auto fail = [&](bool bad, Constraint c) {
        if (bad) mask |= static_cast<std::uint16_t>(c);
    };
    fail(!(q.b > 1), Constraint::ShortSideAboveOne);
    fail(!(q.b <= q.a), Constraint::SidesOrdered);
    fail(!(q.a < ab), Constraint::LongSideBelowArea);
    fail(ab != two_xy, Constraint::HalfArea);
    fail(!(q.x < q.a), Constraint::HoleFitsLong);
    fail(!(q.y < q.b), Constraint::HoleFitsShort);
    return mask;
}

ValidationReport validate(const Quad& q) {
    if (q.a == 0 || q.b == 0 || q.x == 0 || q.y == 0) {
        throw DomainError("validate: sides must be positive, got " + to_string(q));
    }
    ValidationReport report;
    const auto mask = violation_mask(q);
    for (auto c : kAllConstraints) {
        if (mask & static_cast<std::uint16_t>(c)) report.violations.emplace_back(constraint_name(c));
    }
    report.valid = report.violations.empty();
    return report;
}

ValidationReport validate(u64 a, u64 b, u64 x, u64 y) { return validate(Quad{a, b, x, y}); }

std::optional<DonutConfig> DonutConfig::make(const Quad& q) {
    if (!is_valid(q)) return std::nullopt;
    return DonutConfig(q);
}

DonutConfig DonutConfig::checked(const Quad& q) {
    const auto report = validate(q);
    if (!report.valid) {
        std::string msg = to_string(q) + " is not a donut:";
        for (const auto& v : report.violations) msg += " [" + v + "]";
        throw DomainError(msg);
    }
    return DonutConfig(q);
}

u64 area(const DonutConfig& d) { return checked_mul(d.a(), d.b()); }

Quad twist(const Quad& q) { return {q.a, q.b, q.y, q.x}; }

Quad twist(const DonutConfig& d) { return twist(d.quad()); }

bool is_twistable_definitional(const DonutConfig& d) { return is_valid(twist(d)); }

bool is_twistable_fast(const DonutConfig& d) {
    const u128 two_x = static_cast<u128>(d.x()) * 2;
    const u128 two_y = static_cast<u128>(d.y()) * 2;
    return two_x > d.a() && two_y > d.a();
}

bool is_coprime_config(const DonutConfig& d) {
    return gcd(d.a(), d.x()) == 1 && gcd(d.b(), d.y()) == 1;
}

DonutConfig scale(const DonutConfig& d, u64 h, u64 k) {
    if (h == 0 || k == 0) throw DomainError("scale: factors must be positive");
    Quad q{checked_mul(h, d.a()), checked_mul(k, d.b()), checked_mul(h, d.x()),
           checked_mul(k, d.y())};
    if (q.b > q.a) q = {q.b, q.a, q.y, q.x};
    // products of the scaled sides must also fit for area() to be usable
    checked_mul(q.a, q.b);
    return DonutConfig::checked(q);
}

}  // namespace donut
