#include "donut/census.hpp"

#include <algorithm>

#include "donut/kernels.hpp"
#include "donut/pythagoras.hpp"

namespace donut {

std::string_view kind_name(DonutKind kind) {
    switch (kind) {
        case DonutKind::NotADonut: return "not_a_donut";
        case DonutKind::PlainDonut: return "plain";
        case DonutKind::Primitive: return "primitive";
        case DonutKind::QuasiPrimitive: return "quasi_primitive";
    }
    return "?";
}

namespace {

DonutKind kind_for(u64 coprime, u64 total) {
    if (total == 0) return DonutKind::NotADonut;
    if (coprime == 0) return DonutKind::PlainDonut;
    return coprime == 1 ? DonutKind::Primitive : DonutKind::QuasiPrimitive;
}

}  // namespace

DonutKind DonutClass::kind_by_orbits() const {
    return kind_for(coprime_orbit_count, total_config_count);
}

std::vector<DonutConfig> configurations(u64 D) {
    std::vector<DonutConfig> out;
    if (D < 4 || D % 2 != 0) return out;

    // D/2 shares D's factorization with one fewer factor of two
    auto factors = factorize(D);
    const auto exterior_sides = divisors(factors);
    if (--factors.front().exponent == 0) factors.erase(factors.begin());
    const auto hole_sides = divisors(factors);
    const u64 half = D / 2;

    for (const u64 b : exterior_sides) {
        if (b < 2) continue;
        if (b > D / b) break;
        const u64 a = D / b;
        for (auto it = hole_sides.rbegin(); it != hole_sides.rend(); ++it) {
            const u64 x = *it;
            if (x >= a) continue;
            const u64 y = half / x;
            if (y >= b) break;  // y only grows as x shrinks
            if (auto d = DonutConfig::make(a, b, x, y)) out.push_back(*d);
        }
    }
    std::sort(out.begin(), out.end(), [](const DonutConfig& l, const DonutConfig& r) {
        return l.a() != r.a() ? l.a() > r.a() : l.x() > r.x();
    });
    return out;
}

DonutClass classify(u64 D) {
    DonutClass cls;
    const auto configs = configurations(D);
    cls.total_config_count = configs.size();
    for (const auto& d : configs) {
        if (!is_coprime_config(d)) continue;
        ++cls.coprime_config_count;
        ++cls.coprime_orbit_count;
        // drop one of each pair whose twist is also a coprime configuration
        if (d.x() < d.y()) {
            if (auto t = DonutConfig::make(twist(d)); t && is_coprime_config(*t)) {
                --cls.coprime_orbit_count;
            }
        }
    }
    cls.kind = kind_for(cls.coprime_config_count, cls.total_config_count);
    return cls;
}

std::vector<u64> donut_numbers(u64 limit, const std::set<DonutKind>& filter) {
    std::vector<u64> out;
    for (u64 D = 1; D <= limit; ++D) {
        if (filter.contains(classify(D).kind)) out.push_back(D);
    }
    return out;
}

VerificationReport verify_theorem1(u64 limit, const SweepOptions& options) {
    enum : std::size_t {
        kNotADonut,
        kPlain,
        kPrimitive,
        kQuasi,
        kDonutNumbers,
        kPerimeters,
        kPrimitiveOrbit,
        kQuasiOrbit,
        kConfigs,
        kCoprimeConfigs,
    };
    std::vector<std::string> names{
        "not_a_donut",
        "plain",
        "primitive",
        "quasi_primitive",
        "donut_numbers",
        "primitive_perimeters",
        "primitive_by_orbit",
        "quasi_primitive_by_orbit",
        "configurations",
        "coprime_configurations",
    };
    auto check = [](u64 lo, u64 hi, ChunkResult& out) {
        auto& t = out.tallies;
        for (u64 D = lo; D <= hi; ++D) {
            const auto cls = classify(D);
            const bool has_coprime = cls.coprime_config_count > 0;
            const bool is_perimeter = !primitive_triples_with_perimeter(D).empty();
            switch (cls.kind) {
                case DonutKind::NotADonut: ++t[kNotADonut]; break;
                case DonutKind::PlainDonut: ++t[kPlain]; break;
                case DonutKind::Primitive: ++t[kPrimitive]; break;
                case DonutKind::QuasiPrimitive: ++t[kQuasi]; break;
            }
            const auto by_orbit = cls.kind_by_orbits();
            if (by_orbit == DonutKind::Primitive) ++t[kPrimitiveOrbit];
            if (by_orbit == DonutKind::QuasiPrimitive) ++t[kQuasiOrbit];
            if (has_coprime) ++t[kDonutNumbers];
            if (is_perimeter) ++t[kPerimeters];
            t[kConfigs] += cls.total_config_count;
            t[kCoprimeConfigs] += cls.coprime_config_count;
            if (has_coprime != is_perimeter) {
                out.counterexamples.push_back(
                    {D, has_coprime ? "coprime configuration but not a primitive perimeter"
                                    : "primitive perimeter without a coprime configuration"});
            }
        }
    };
    return run_sweep("theorem1", limit, std::move(names), check, options);
}

VerificationReport verify_twistability(u64 limit, const SweepOptions& options) {
    enum : std::size_t { kConfigs, kTwistable, kRigid, kMismatch };
    std::vector<std::string> names{"configurations", "twistable", "not_twistable", "mismatches"};
    auto check = [](u64 lo, u64 hi, ChunkResult& out) {
        kernels::QuadBatch batch;
        for (u64 D = lo; D <= hi; ++D) {
            for (const auto& d : configurations(D)) batch.push_back(d.quad());
        }
        const std::size_t n = batch.size();
        std::vector<std::uint16_t> twisted_violations(n);
        std::vector<std::uint8_t> fast(n);
        // twisted quadruple: hole columns swapped
        kernels::violation_masks(batch.a, batch.b, batch.y, batch.x, twisted_violations);
        kernels::twistable_fast(batch.a, batch.x, batch.y, fast);

        auto& t = out.tallies;
        t[kConfigs] += n;
        for (std::size_t i = 0; i < n; ++i) {
            const bool definitional = twisted_violations[i] == 0;
            ++t[definitional ? kTwistable : kRigid];
            if (definitional != (fast[i] != 0)) {
                ++t[kMismatch];
                const Quad q = batch[i];
                out.counterexamples.push_back(
                    {q.a * q.b, to_string(q) + (definitional ? " twistable but fails 2x > a, 2y > a"
                                                             : " passes 2x > a, 2y > a but twist invalid")});
            }
        }
    };
    return run_sweep("theorem2", limit, std::move(names), check, options);
}

}  // namespace donut
