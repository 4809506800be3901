#include "donut/sweep.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

namespace donut {

u64 VerificationReport::tally(const std::string& key) const {
    for (const auto& [name, value] : tallies) {
        if (name == key) return value;
    }
    throw std::out_of_range("no tally named " + key);
}

u64 sweep_chunk_size(u64 limit) { return std::clamp<u64>(limit / 512, 16, 4096); }

VerificationReport run_sweep(std::string name, u64 limit, std::vector<std::string> tally_names,
                             const std::function<void(u64, u64, ChunkResult&)>& check,
                             const SweepOptions& options) {
    if (limit == 0) throw DomainError("sweep limit must be >= 1");
    if (options.threads == 0) throw DomainError("thread count must be >= 1");

    const u64 width = sweep_chunk_size(limit);
    const std::size_t chunk_count = static_cast<std::size_t>((limit + width - 1) / width);
    std::vector<std::optional<ChunkResult>> results(chunk_count);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex mu;
    std::size_t done = 0;
    std::exception_ptr error;

    auto cancelled = [&] {
        return failed.load() || (options.cancel != nullptr && options.cancel->load());
    };

    auto worker = [&] {
        while (!cancelled()) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= chunk_count) return;
            const u64 lo = 1 + idx * width;
            const u64 hi = std::min(limit, lo + width - 1);
            ChunkResult chunk;
            chunk.tallies.assign(tally_names.size(), 0);
            try {
                check(lo, hi, chunk);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!error) error = std::current_exception();
                failed = true;
                return;
            }
            std::lock_guard lock(mu);
            results[idx] = std::move(chunk);
            ++done;
            if (options.progress) options.progress(done, chunk_count);
        }
    };

    const unsigned spawn = static_cast<unsigned>(
        std::min<std::size_t>(options.threads, std::max<std::size_t>(chunk_count, 1)));
    if (spawn <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(spawn);
        for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    VerificationReport report;
    report.name = std::move(name);
    report.limit = limit;
    std::vector<u64> totals(tally_names.size(), 0);
    std::size_t merged = 0;
    for (; merged < chunk_count && results[merged]; ++merged) {
        auto& chunk = *results[merged];
        if (chunk.tallies.size() != totals.size()) {
            throw std::logic_error("sweep chunk produced the wrong number of tallies");
        }
        for (std::size_t i = 0; i < totals.size(); ++i) totals[i] += chunk.tallies[i];
        for (auto& c : chunk.counterexamples) report.counterexamples.push_back(std::move(c));
    }
    report.complete = merged == chunk_count;
    report.checked_through = std::min(limit, merged * width);
    std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
                     [](const Counterexample& l, const Counterexample& r) { return l.n < r.n; });
    for (std::size_t i = 0; i < totals.size(); ++i) {
        report.tallies.emplace_back(std::move(tally_names[i]), totals[i]);
    }
    return report;
}

}  // namespace donut
