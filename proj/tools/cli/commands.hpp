#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hexile/colide.hpp"
#include "hexile/sieve.hpp"

namespace hexile::cli {

enum class OutputFormat { Text, Csv, Jsonl };

struct CliConfig {
    std::uint64_t limit = 0;
    OutputFormat format = OutputFormat::Text;
    /// Unset means the monolithic sieve.
    std::optional<Level> segment_levels;
    unsigned workers = 1;
    std::size_t memory_budget_bytes = kDefaultMemoryBudget;

    [[nodiscard]] SieveOptions sieve_options() const { return {memory_budget_bytes, workers}; }
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapacity = 3;
} // namespace exit_code

/// Parses argv-style arguments (args[0] is the program name), dispatches the
/// subcommand and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes the state-function matrix: m across the top starting at start_m,
/// n down the side starting at start_n.
void emit_table(ColideKind kind, Level rows, Level cols, Level start_m, Level start_n, OutputFormat format,
                std::ostream& out);

/// The origin each kind's table uses by default: (1,1) for c11 and c15, (0,0) for c55.
[[nodiscard]] Level default_table_start(ColideKind kind) noexcept;

struct VerifyOptions {
    /// Test hook: toggles 6N+1 in the sieve output before comparison.
    std::optional<Level> fault_level;
};

struct VerifyReport {
    std::uint64_t limit = 0;
    bool sieve_ok = true;
    bool count_ok = true;
    std::size_t primes_checked = 0;
    std::size_t checkpoints = 0;
    /// Smallest integer at which the sieve list and the oracle disagree.
    std::optional<std::uint64_t> first_divergence;
    /// First x whose pi(x) disagrees with the oracle.
    std::optional<std::uint64_t> count_divergence;

    [[nodiscard]] bool ok() const noexcept { return sieve_ok && count_ok; }
};

/// Compares the sieve stream and pi(x) at checkpoints against Eratosthenes.
[[nodiscard]] VerifyReport verify(std::uint64_t limit, const CliConfig& config, const VerifyOptions& options = {});

/// Points where verify checks pi(x): powers of ten, sixteenths of the limit, the limit.
[[nodiscard]] std::vector<std::uint64_t> count_checkpoints(std::uint64_t limit);

} // namespace hexile::cli
