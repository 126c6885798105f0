#include <algorithm>

#include "commands.hpp"
#include "hexile/counting.hpp"
#include "hexile/errors.hpp"
#include "hexile/oracle.hpp"

namespace hexile::cli {

std::vector<std::uint64_t> count_checkpoints(std::uint64_t limit) {
    std::vector<std::uint64_t> points;
    for (std::uint64_t p = 1; p <= limit; p *= 10) {
        points.push_back(p);
        if (p > limit / 10) break;
    }
    for (std::uint64_t k = 1; k <= 16; ++k) {
        points.push_back(std::max<std::uint64_t>(1, limit / 16 * k));
    }
    points.push_back(limit);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

VerifyReport verify(std::uint64_t limit, const CliConfig& config, const VerifyOptions& options) {
    if (limit < 2) {
        throw DomainError("verify: limit must be >= 2");
    }
    VerifyReport report;
    report.limit = limit;
    const auto reference = oracle::eratosthenes(limit, config.memory_budget_bytes);
    const auto sieve_options = config.sieve_options();

    auto produced = config.segment_levels ? primes_segmented(limit, *config.segment_levels, sieve_options)
                                          : primes_up_to(limit, sieve_options);
    if (options.fault_level) {
        const std::uint64_t victim = 6 * *options.fault_level + 1;
        if (victim <= limit) {
            const auto it = std::lower_bound(produced.begin(), produced.end(), victim);
            if (it != produced.end() && *it == victim) {
                produced.erase(it);
            } else {
                produced.insert(it, victim);
            }
        }
    }

    report.primes_checked = produced.size();
    const auto [ours, theirs] = std::mismatch(produced.begin(), produced.end(), reference.primes.begin(),
                                              reference.primes.end());
    if (ours != produced.end() || theirs != reference.primes.end()) {
        report.sieve_ok = false;
        if (ours == produced.end()) {
            report.first_divergence = *theirs;
        } else if (theirs == reference.primes.end()) {
            report.first_divergence = *ours;
        } else {
            report.first_divergence = std::min(*ours, *theirs);
        }
    }

    for (const auto x : count_checkpoints(limit)) {
        ++report.checkpoints;
        if (pi(x, sieve_options).pi != reference.pi(x)) {
            report.count_ok = false;
            report.count_divergence = x;
            break;
        }
    }
    return report;
}

} // namespace hexile::cli
