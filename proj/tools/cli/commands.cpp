#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexile/counting.hpp"
#include "hexile/errors.hpp"
#include "hexile/oracle.hpp"

namespace hexile::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const TupleSolution& s) {
    return Json{{"kind", to_string(s.kind)}, {"m", s.m}, {"n", s.n}, {"p", s.p}, {"q", s.q}};
}

std::string describe(const TupleSolution& s) {
    std::ostringstream os;
    os << s.p << " x " << s.q << " (" << to_string(s.kind) << " m=" << s.m << " n=" << s.n << ")";
    return os.str();
}

// c15:1:0:7:5 entries joined by ';' so csv rows stay comma-free.
std::string compact(const std::vector<TupleSolution>& solutions) {
    std::string out;
    for (const auto& s : solutions) {
        if (!out.empty()) out += ';';
        out += std::string(to_string(s.kind)) + ":" + std::to_string(s.m) + ":" + std::to_string(s.n) + ":" +
               std::to_string(s.p) + ":" + std::to_string(s.q);
    }
    return out;
}

std::uint64_t resolve_limit(const std::optional<std::uint64_t>& positional, const CliConfig& config,
                            const char* command) {
    if (positional) return *positional;
    if (config.limit != 0) return config.limit;
    throw DomainError(std::string(command) + ": a limit is required (positional or --limit)");
}

void require_positive(std::uint64_t x, const char* command) {
    if (x == 0) {
        throw DomainError(std::string(command) + ": argument must be >= 1");
    }
}

int cmd_classify(std::uint64_t x, const CliConfig& config, std::ostream& out) {
    require_positive(x, "classify");
    const auto coord = coordinate(x);
    const auto verdict = classify_integer(x);
    const auto kind = to_string(verdict.category);
    switch (config.format) {
    case OutputFormat::Text:
        out << x << ": class " << coord.hclass.value() << ", level " << coord.level << ", " << kind;
        for (std::size_t i = 0; i < verdict.solutions.size(); ++i) {
            out << (i == 0 ? " via " : ", ") << describe(verdict.solutions[i]);
        }
        out << '\n';
        break;
    case OutputFormat::Csv:
        out << "x,class,level,kind,solutions\n"
            << x << ',' << coord.hclass.value() << ',' << coord.level << ',' << kind << ','
            << compact(verdict.solutions) << '\n';
        break;
    case OutputFormat::Jsonl: {
        Json sols = Json::array();
        for (const auto& s : verdict.solutions) sols.push_back(to_json(s));
        out << Json{{"x", x}, {"class", coord.hclass.value()}, {"level", coord.level}, {"kind", kind},
                    {"solutions", sols}}
                   .dump()
            << '\n';
        break;
    }
    }
    return exit_code::kOk;
}

int cmd_factor(std::uint64_t x, const CliConfig& config, std::ostream& out) {
    require_positive(x, "factor");
    const auto verdict = classify_integer(x);
    const auto kind = to_string(verdict.category);
    switch (config.format) {
    case OutputFormat::Text:
        if (verdict.solutions.empty()) {
            out << x << ": " << kind << '\n';
        }
        for (const auto& s : verdict.solutions) {
            out << x << " = " << describe(s) << '\n';
        }
        break;
    case OutputFormat::Csv:
        out << "x,verdict,kind,m,n,p,q\n";
        if (verdict.solutions.empty()) {
            out << x << ',' << kind << ",,,,,\n";
        }
        for (const auto& s : verdict.solutions) {
            out << x << ',' << kind << ',' << to_string(s.kind) << ',' << s.m << ',' << s.n << ',' << s.p << ','
                << s.q << '\n';
        }
        break;
    case OutputFormat::Jsonl: {
        Json sols = Json::array();
        for (const auto& s : verdict.solutions) sols.push_back(to_json(s));
        out << Json{{"x", x}, {"verdict", kind}, {"solutions", sols}}.dump() << '\n';
        break;
    }
    }
    return exit_code::kOk;
}

int cmd_table(ColideKind kind, Level rows, Level cols, std::optional<Level> start_m, std::optional<Level> start_n,
              const CliConfig& config, std::ostream& out) {
    if (rows == 0 || cols == 0) {
        throw DomainError("table: rows and cols must be >= 1");
    }
    emit_table(kind, rows, cols, start_m.value_or(default_table_start(kind)),
               start_n.value_or(default_table_start(kind)), config.format, out);
    return exit_code::kOk;
}

int cmd_sieve(std::uint64_t limit, const CliConfig& config, const std::string& output_path, std::ostream& out) {
    require_positive(limit, "sieve");
    std::ofstream file;
    std::ostream* sink_stream = &out;
    if (!output_path.empty()) {
        file.open(output_path);
        if (!file) {
            throw DomainError("sieve: cannot open " + output_path);
        }
        sink_stream = &file;
    }
    auto& os = *sink_stream;
    PrimeSink sink;
    switch (config.format) {
    case OutputFormat::Text:
        sink = [&os](std::uint64_t p) { os << p << '\n'; };
        break;
    case OutputFormat::Csv:
        os << "prime\n";
        sink = [&os](std::uint64_t p) { os << p << '\n'; };
        break;
    case OutputFormat::Jsonl:
        sink = [&os](std::uint64_t p) { os << "{\"prime\":" << p << "}\n"; };
        break;
    }
    if (config.segment_levels) {
        stream_primes_segmented(limit, *config.segment_levels, sink, config.sieve_options());
    } else {
        stream_primes_up_to(limit, sink, config.sieve_options());
    }
    os.flush();
    return exit_code::kOk;
}

void emit_record(const std::vector<std::pair<std::string_view, std::string>>& record, OutputFormat format,
                 bool header, std::ostream& out) {
    switch (format) {
    case OutputFormat::Text:
        for (const auto& [key, value] : record) out << key << ": " << value << '\n';
        break;
    case OutputFormat::Csv:
        if (header) {
            for (std::size_t i = 0; i < record.size(); ++i) out << (i ? "," : "") << record[i].first;
            out << '\n';
        }
        for (std::size_t i = 0; i < record.size(); ++i) out << (i ? "," : "") << record[i].second;
        out << '\n';
        break;
    case OutputFormat::Jsonl: {
        // Values are preformatted numbers or identifiers; identifiers get quoted.
        out << '{';
        for (std::size_t i = 0; i < record.size(); ++i) {
            const auto& v = record[i].second;
            const bool numeric = !v.empty() && v.find_first_not_of("-0123456789.e") == std::string::npos;
            out << (i ? "," : "") << Json(std::string(record[i].first)).dump() << ':'
                << (numeric ? v : Json(v).dump());
        }
        out << "}\n";
        break;
    }
    }
}

int cmd_count(std::uint64_t x, const CliConfig& config, std::ostream& out) {
    require_positive(x, "count");
    emit_record(fields(pi(x, config.sieve_options())), config.format, true, out);
    return exit_code::kOk;
}

int cmd_verify(std::uint64_t limit, const CliConfig& config, std::optional<Level> fault_level, std::ostream& out) {
    const auto report = verify(limit, config, VerifyOptions{fault_level});
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("none"); };
    if (config.format == OutputFormat::Text) {
        out << "sieve: " << (report.sieve_ok ? "PASS" : "FAIL") << " (" << report.primes_checked
            << " primes <= " << limit << ")";
        if (report.first_divergence) out << " first diverging integer " << *report.first_divergence;
        out << '\n';
        out << "count: " << (report.count_ok ? "PASS" : "FAIL") << " (" << report.checkpoints << " checkpoints)";
        if (report.count_divergence) out << " first diverging x " << *report.count_divergence;
        out << '\n';
        out << (report.ok() ? "PASS" : "FAIL") << '\n';
    } else {
        emit_record({{"limit", std::to_string(limit)},
                     {"sieve", report.sieve_ok ? "PASS" : "FAIL"},
                     {"count", report.count_ok ? "PASS" : "FAIL"},
                     {"primes", std::to_string(report.primes_checked)},
                     {"checkpoints", std::to_string(report.checkpoints)},
                     {"first_divergence", opt(report.first_divergence)},
                     {"count_divergence", opt(report.count_divergence)},
                     {"result", report.ok() ? "PASS" : "FAIL"}},
                    config.format, true, out);
    }
    return report.ok() ? exit_code::kOk : exit_code::kMismatch;
}

int cmd_bench(std::uint64_t limit, const CliConfig& config, std::ostream& out) {
    require_positive(limit, "bench");
    const auto options = config.sieve_options();
    const Level segment = config.segment_levels.value_or(Level{1} << 16);
    bool header = true;
    auto time = [&](std::string_view name, auto&& body) {
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t result = body();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::ostringstream secs;
        secs << elapsed.count();
        emit_record({{"name", std::string(name)},
                     {"limit", std::to_string(limit)},
                     {"seconds", secs.str()},
                     {"result", std::to_string(result)}},
                    config.format == OutputFormat::Text ? OutputFormat::Csv : config.format, header, out);
        header = false;
    };
    auto counter = [](std::uint64_t& n) { return [&n](std::uint64_t) { ++n; }; };
    time("sieve_monolithic", [&] {
        std::uint64_t n = 0;
        stream_primes_up_to(limit, counter(n), options);
        return n;
    });
    time("sieve_segmented", [&] {
        std::uint64_t n = 0;
        stream_primes_segmented(limit, segment, counter(n), options);
        return n;
    });
    time("count_pi", [&] { return pi(limit, options).pi; });
    if (limit >= 2) {
        time("oracle_eratosthenes",
             [&] { return static_cast<std::uint64_t>(oracle::eratosthenes(limit, config.memory_budget_bytes).primes.size()); });
    }
    return exit_code::kOk;
}

std::size_t digits(std::uint64_t v) { return std::to_string(v).size(); }

} // namespace

Level default_table_start(ColideKind kind) noexcept { return kind == ColideKind::C55 ? 0 : 1; }

void emit_table(ColideKind kind, Level rows, Level cols, Level start_m, Level start_n, OutputFormat format,
                std::ostream& out) {
    std::vector<std::vector<Level>> cells(rows, std::vector<Level>(cols));
    for (Level r = 0; r < rows; ++r) {
        for (Level c = 0; c < cols; ++c) {
            cells[r][c] = cs(kind, start_m + c, start_n + r);
        }
    }
    switch (format) {
    case OutputFormat::Csv:
        out << "n\\m";
        for (Level c = 0; c < cols; ++c) out << ',' << start_m + c;
        out << '\n';
        for (Level r = 0; r < rows; ++r) {
            out << start_n + r;
            for (const auto v : cells[r]) out << ',' << v;
            out << '\n';
        }
        break;
    case OutputFormat::Jsonl:
        for (Level r = 0; r < rows; ++r) {
            for (Level c = 0; c < cols; ++c) {
                out << Json{{"kind", to_string(kind)}, {"m", start_m + c}, {"n", start_n + r}, {"value", cells[r][c]}}
                           .dump()
                    << '\n';
            }
        }
        break;
    case OutputFormat::Text: {
        std::size_t width = 3; // "n\m"
        for (Level c = 0; c < cols; ++c) width = std::max(width, digits(start_m + c));
        for (Level r = 0; r < rows; ++r) {
            width = std::max(width, digits(start_n + r));
            for (const auto v : cells[r]) width = std::max(width, digits(v));
        }
        auto pad = [&](const std::string& s) { out << std::string(width - s.size() + 1, ' ') << s; };
        out << to_string(kind) << '\n';
        pad("n\\m");
        for (Level c = 0; c < cols; ++c) pad(std::to_string(start_m + c));
        out << '\n';
        for (Level r = 0; r < rows; ++r) {
            pad(std::to_string(start_n + r));
            for (const auto v : cells[r]) pad(std::to_string(v));
            out << '\n';
        }
        break;
    }
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hexile mod-6 sieve, colide factorizer and prime counter", "hexile"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig config;
    std::string format = "text";
    std::optional<Level> segment_levels;
    app.add_option("--limit", config.limit, "Default limit for sieve/count/verify/bench")->envname("HEXILE_LIMIT");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}))
        ->envname("HEXILE_FORMAT");
    app.add_option("--segment-levels", segment_levels, "Levels per sieve window (enables the segmented sieve)")
        ->check(CLI::PositiveNumber)
        ->envname("HEXILE_SEGMENT_LEVELS");
    app.add_option("--workers", config.workers, "Worker threads for segmented sieving")
        ->check(CLI::PositiveNumber)
        ->envname("HEXILE_WORKERS");
    app.add_option("--memory-budget", config.memory_budget_bytes, "Bitset memory budget (bytes, or e.g. 64MiB)")
        ->transform(CLI::AsSizeValue(false))
        ->envname("HEXILE_MEMORY_BUDGET");

    std::uint64_t value = 0;
    std::optional<std::uint64_t> limit_arg;
    std::string kind_text;
    Level rows = 0;
    Level cols = 0;
    std::optional<Level> start_m;
    std::optional<Level> start_n;
    std::string output_path;
    std::optional<Level> fault_level;

    auto* classify_cmd = app.add_subcommand("classify", "Residue class, level and colide verdict of x");
    classify_cmd->add_option("x", value, "Integer >= 1")->required();

    auto* factor_cmd = app.add_subcommand("factor", "All colide decompositions of x");
    factor_cmd->add_option("x", value, "Integer >= 1")->required();

    auto* table_cmd = app.add_subcommand("table", "State-function matrix (m across, n down)");
    table_cmd->add_option("kind", kind_text, "c11, c55 or c15")->required();
    table_cmd->add_option("rows", rows, "Number of n rows")->required();
    table_cmd->add_option("cols", cols, "Number of m columns")->required();
    table_cmd->add_option("--start-m", start_m, "First m column");
    table_cmd->add_option("--start-n", start_n, "First n row");

    auto* sieve_cmd = app.add_subcommand("sieve", "Primes <= limit in ascending order");
    sieve_cmd->add_option("limit", limit_arg, "Upper bound");
    sieve_cmd->add_option("-o,--output", output_path, "Write to file instead of stdout");

    auto* count_cmd = app.add_subcommand("count", "pi(x) with its full breakdown");
    count_cmd->add_option("limit", limit_arg, "x >= 1");

    auto* verify_cmd = app.add_subcommand("verify", "Check sieve and counting against Eratosthenes");
    verify_cmd->add_option("limit", limit_arg, "Upper bound >= 2");
    verify_cmd->add_option("--inject-fault-level", fault_level, "Flip one class-1 level in the sieve output")
        ->group("");

    auto* bench_cmd = app.add_subcommand("bench", "Time sieve, count and oracle at a limit");
    bench_cmd->add_option("limit", limit_arg, "Upper bound");

    std::vector<std::string> argv_rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(argv_rest.begin(), argv_rest.end());
    try {
        app.parse(argv_rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::kOk : exit_code::kUsage;
    }

    static const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}, {"jsonl", OutputFormat::Jsonl}};
    config.format = formats.at(format);
    config.segment_levels = segment_levels;

    try {
        if (*classify_cmd) return cmd_classify(value, config, out);
        if (*factor_cmd) return cmd_factor(value, config, out);
        if (*table_cmd) {
            const auto kind = parse_colide_kind(kind_text);
            if (!kind) throw DomainError("table: unknown kind '" + kind_text + "' (expected c11, c55 or c15)");
            return cmd_table(*kind, rows, cols, start_m, start_n, config, out);
        }
        if (*sieve_cmd) return cmd_sieve(resolve_limit(limit_arg, config, "sieve"), config, output_path, out);
        if (*count_cmd) return cmd_count(resolve_limit(limit_arg, config, "count"), config, out);
        if (*verify_cmd) return cmd_verify(resolve_limit(limit_arg, config, "verify"), config, fault_level, out);
        if (*bench_cmd) return cmd_bench(resolve_limit(limit_arg, config, "bench"), config, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kUsage;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kCapacity;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kCapacity;
    }
    return exit_code::kUsage;
}

} // namespace hexile::cli
