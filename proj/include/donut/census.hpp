#pragma once

// Every configuration of a donut number D, and the primitive /
// quasi-primitive classification built on top of it.

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

#include "donut/core.hpp"
#include "donut/sweep.hpp"

namespace donut {

enum class DonutKind { NotADonut, PlainDonut, Primitive, QuasiPrimitive };

std::string_view kind_name(DonutKind kind);

struct DonutClass {
    DonutKind kind = DonutKind::NotADonut;
    /// Configurations with gcd(a, x) = gcd(b, y) = 1. (a, b, x, y) and its
    /// twist (a, b, y, x) count separately.
    u64 coprime_config_count = 0;
    u64 total_config_count = 0;
    /// Coprime configurations counted once per twist pair.
    u64 coprime_orbit_count = 0;

    /// Kind under the convention where a twisted hole is not a new
    /// configuration.
    DonutKind kind_by_orbits() const;
};

/// All valid (a, b, x, y) with ab = D, sorted by a then x, both descending.
std::vector<DonutConfig> configurations(u64 D);

DonutClass classify(u64 D);

/// D in 1..limit whose kind is in `filter`, ascending.
std::vector<u64> donut_numbers(u64 limit, const std::set<DonutKind>& filter);

/// For every D <= limit: some coprime configuration exists iff D is the
/// perimeter of a primitive Pythagorean triple.
VerificationReport verify_theorem1(u64 limit, const SweepOptions& options = {});

/// For every configuration with area <= limit: the closed-form twist test
/// agrees with checking (a, b, y, x) directly. Runs on the batch kernels.
VerificationReport verify_twistability(u64 limit, const SweepOptions& options = {});

}  // namespace donut
