#include "hexile/sieve.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <string>
#include <thread>

#include "hexile/errors.hpp"

namespace hexile {

namespace {

/// Levels start, start + stride, start + 2 stride, ...
struct Progression {
    Level start;
    Level stride;
};

void require_candidate(HexileClass cls) {
    if (!cls.is_prime_candidate()) {
        throw DomainError("level sets exist only for classes 1 and 5, got class " +
                          std::to_string(cls.value()));
    }
}

void require_budget(std::size_t bytes, const SieveOptions& options) {
    if (bytes > options.memory_budget_bytes) {
        throw CapacityError("sieve needs " + std::to_string(bytes) + " bytes of bitset, budget is " +
                            std::to_string(options.memory_budget_bytes));
    }
}

/*
 * Rows of the state functions that reach a level below `hi`, canonical so
 * each composite factorization is stepped once:
 *   class 1: cs11(m, n >= m) from 6m^2+2m by 6m+1,
 *            cs55(m, n >= m) from 6m^2+10m+4 by 6m+5;
 *   class 5: cs15(m, n >= m) from 6m^2+6m by 6m+1,
 *            cs15(m > n, n)  from 6n^2+12n+5 by 6n+5.
 * Sorted by start so window scans can stop at the first start >= hi.
 */
std::vector<Progression> progressions(HexileClass cls, Level hi) {
    std::vector<Progression> rows;
    auto add = [&](Level start, Level stride) {
        if (start < hi) {
            rows.push_back({start, stride});
            return true;
        }
        return false;
    };
    if (cls.value() == 1) {
        for (Level m = 1; add(6 * m * m + 2 * m, 6 * m + 1); ++m) {}
        for (Level m = 0; add(6 * m * m + 10 * m + 4, 6 * m + 5); ++m) {}
    } else {
        for (Level m = 1; add(6 * m * m + 6 * m, 6 * m + 1); ++m) {}
        for (Level n = 0; add(6 * n * n + 12 * n + 5, 6 * n + 5); ++n) {}
    }
    std::sort(rows.begin(), rows.end(),
              [](const Progression& a, const Progression& b) { return a.start < b.start; });
    return rows;
}

void mark_into(Segment& seg, const std::vector<Progression>& rows) {
    const Level lo = seg.lo();
    const Level hi = seg.hi();
    for (const auto& row : rows) {
        if (row.start >= hi) {
            break;
        }
        Level v = row.start;
        if (v < lo) {
            v += (lo - v + row.stride - 1) / row.stride * row.stride;
        }
        for (; v < hi; v += row.stride) {
            seg.set(v);
        }
    }
}

/// Emits primes from complemented class-1 and class-5 windows over the same
/// level range, interleaving 6n+1 before 6n+5 and dropping anything above x.
void emit_window(const LevelSet& t1, const LevelSet& t5, std::uint64_t x, const PrimeSink& sink) {
    const auto w1 = t1.words();
    const auto w5 = t5.words();
    for (std::size_t w = 0; w < w1.size(); ++w) {
        for (auto bits = w1[w] | w5[w]; bits != 0; bits &= bits - 1) {
            const auto i = std::countr_zero(bits);
            const Level n = t1.lo() + 64 * w + static_cast<Level>(i);
            if ((w1[w] >> i) & 1u) {
                const std::uint64_t p = 6 * n + 1;
                if (p > x) return;
                sink(p);
            }
            if ((w5[w] >> i) & 1u) {
                const std::uint64_t p = 6 * n + 5;
                if (p > x) return;
                sink(p);
            }
        }
    }
}

void emit_small(std::uint64_t x, const PrimeSink& sink) {
    if (x >= 2) sink(2);
    if (x >= 3) sink(3);
}

void check_limit(std::uint64_t x) {
    // 6 * (x / 6) + 5 must not wrap.
    if (x / 6 > (UINT64_MAX - 5) / 6) {
        throw OverflowError("sieve limit too close to the 64-bit range");
    }
}

} // namespace

Segment mark_window(HexileClass cls, Level lo, Level hi) {
    require_candidate(cls);
    Segment seg(cls, lo, hi);
    mark_into(seg, progressions(cls, hi));
    return seg;
}

LevelSet mark_levels(HexileClass cls, Level q_max, const SieveOptions& options) {
    require_candidate(cls);
    require_budget(LevelSet::storage_bytes(q_max + 1), options);
    return mark_window(cls, 0, q_max + 1);
}

LevelSet prime_levels(HexileClass cls, Level q_max, const SieveOptions& options) {
    auto set = mark_levels(cls, q_max, options);
    set.complement();
    if (cls.value() == 1) {
        set.reset(0);
    }
    return set;
}

void stream_primes_up_to(std::uint64_t x, const PrimeSink& sink, const SieveOptions& options) {
    check_limit(x);
    emit_small(x, sink);
    if (x < 5) {
        return;
    }
    const Level q_max = x / 6;
    require_budget(2 * LevelSet::storage_bytes(q_max + 1), options);
    const auto t = prime_levels(kClass1, q_max, options);
    const auto w = prime_levels(kClass5, q_max, options);
    emit_window(t, w, x, sink);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t x, const SieveOptions& options) {
    std::vector<std::uint64_t> out;
    stream_primes_up_to(x, [&](std::uint64_t p) { out.push_back(p); }, options);
    return out;
}

void stream_primes_segmented(std::uint64_t x, Level segment_levels, const PrimeSink& sink,
                             const SieveOptions& options) {
    if (segment_levels == 0) {
        throw DomainError("segment_levels must be >= 1");
    }
    check_limit(x);
    emit_small(x, sink);
    if (x < 5) {
        return;
    }
    const Level q_max = x / 6;
    const Level total = q_max + 1;
    const Level seg_len = std::min(segment_levels, total);
    const std::uint64_t segments = (total + seg_len - 1) / seg_len;
    const unsigned workers = std::max(1u, options.workers);
    require_budget(std::size_t{2} * workers * LevelSet::storage_bytes(seg_len), options);

    const auto rows1 = progressions(kClass1, total);
    const auto rows5 = progressions(kClass5, total);

    auto sieve_segment = [&](std::uint64_t index, const PrimeSink& out) {
        const Level lo = index * seg_len;
        const Level hi = std::min(total, lo + seg_len);
        Segment t(kClass1, lo, hi);
        Segment w(kClass5, lo, hi);
        mark_into(t, rows1);
        mark_into(w, rows5);
        t.complement();
        w.complement();
        if (lo == 0) {
            t.reset(0);
        }
        emit_window(t, w, x, out);
    };

    if (workers == 1) {
        for (std::uint64_t i = 0; i < segments; ++i) {
            sieve_segment(i, sink);
        }
        return;
    }

    // Batches of segments are sieved in parallel into per-segment buffers,
    // then flushed in index order.
    const std::uint64_t batch =
        std::max<std::uint64_t>(std::uint64_t{workers} * 4, (std::uint64_t{1} << 18) / seg_len);
    std::vector<std::vector<std::uint64_t>> buffers;
    for (std::uint64_t base = 0; base < segments; base += batch) {
        const std::uint64_t count = std::min(batch, segments - base);
        buffers.assign(static_cast<std::size_t>(count), {});
        std::atomic<std::uint64_t> next{0};
        auto work = [&] {
            for (auto k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
                auto& buf = buffers[static_cast<std::size_t>(k)];
                sieve_segment(base + k, [&buf](std::uint64_t p) { buf.push_back(p); });
            }
        };
        {
            std::vector<std::jthread> pool;
            for (unsigned i = 1; i < workers; ++i) {
                pool.emplace_back(work);
            }
            work();
        }
        for (const auto& buf : buffers) {
            for (const auto p : buf) {
                sink(p);
            }
        }
    }
}

std::vector<std::uint64_t> primes_segmented(std::uint64_t x, Level segment_levels,
                                            const SieveOptions& options) {
    std::vector<std::uint64_t> out;
    stream_primes_segmented(x, segment_levels, [&](std::uint64_t p) { out.push_back(p); }, options);
    return out;
}

} // namespace hexile
