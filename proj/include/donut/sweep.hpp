#pragma once

// Chunked exhaustive sweeps over 1..limit. Chunks are claimed by worker
// threads in any order but merged strictly by chunk index, so a report never
// depends on the thread count or schedule.

#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "donut/arith.hpp"

namespace donut {

struct Counterexample {
    u64 n = 0;
    std::string detail;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
    std::string name;
    u64 limit = 0;
    /// Every n in 1..checked_through was examined.
    u64 checked_through = 0;
    bool complete = false;
    std::vector<Counterexample> counterexamples;  // ascending by n
    std::vector<std::pair<std::string, u64>> tallies;

    bool passed() const { return complete && counterexamples.empty(); }
    /// Value of a named tally; throws std::out_of_range if absent.
    u64 tally(const std::string& key) const;
};

struct SweepOptions {
    unsigned threads = 1;
    /// Polled between chunks. When set, the report covers the completed
    /// prefix and is marked incomplete.
    const std::atomic<bool>* cancel = nullptr;
    /// Called with (chunks done, chunk total); serialized, any thread.
    std::function<void(std::size_t, std::size_t)> progress;
};

/// Partial result for one chunk; `tallies` is positional.
struct ChunkResult {
    std::vector<u64> tallies;
    std::vector<Counterexample> counterexamples;
};

/// Sweeps [1, limit] in fixed-size chunks. `check(lo, hi, out)` examines
/// lo..hi inclusive; it must size `out.tallies` to `tally_names.size()`.
VerificationReport run_sweep(std::string name, u64 limit, std::vector<std::string> tally_names,
                             const std::function<void(u64, u64, ChunkResult&)>& check,
                             const SweepOptions& options);

/// Chunk width used for a given limit; depends on the limit only.
u64 sweep_chunk_size(u64 limit);

}  // namespace donut
