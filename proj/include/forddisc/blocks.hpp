#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "bitword.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "sequence.hpp"

namespace forddisc {

// One block of the order-n sequence: the run of consecutive length-n Lyndon
// words whose leading zero run (equivalently cyclic maximal zero run) is
// exactly k.  max_signed/min_signed are the extremes of the running skew
// within the block, starting from 0 at the block boundary.
struct BlockReport {
    unsigned k = 0;
    std::uint64_t length = 0;
    std::uint64_t word_count = 0;
    std::int64_t skew = 0;
    std::int64_t max_signed = 0;
    std::int64_t min_signed = 0;
};

struct ScalingRow {
    unsigned n = 0;
    std::int64_t disc = 0;
    std::uint64_t position = 0;
    double ratio = 0.0; // n * disc / (2^n * ln n)
};

namespace detail {

inline bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct BlockScan {
    BlockReport rep;
    std::uint64_t start_offset = 0;  // symbol index of the block start in the full sequence
    std::uint64_t first_max_pos = 0; // earliest within-block prefix length attaining max_signed
    std::uint64_t first_min_pos = 0;
};

inline void validate_prime_order(const char* op, unsigned n, unsigned max_order) {
    if (n == 2) {
        std::ostringstream os;
        os << op << ": order 2 is degenerate (single interior word)";
        throw std::invalid_argument(os.str());
    }
    if (n < 3) {
        std::ostringstream os;
        os << op << ": order must be >= 3";
        throw std::invalid_argument(os.str());
    }
    if (!is_prime(n)) {
        std::ostringstream os;
        os << op << ": order is composite; use composite_correction";
        throw std::invalid_argument(os.str());
    }
    if (n > max_order) {
        std::ostringstream os;
        os << op << ": order exceeds streaming cap " << max_order;
        throw capacity_error(os.str());
    }
}

// Stream the interior length-n words and fold them into per-k block scans.
// Stream order is k = n-1 down to 1; a k increase would violate the
// lexicographic block layout and aborts.
inline std::vector<BlockScan> scan_blocks(unsigned n, unsigned max_order) {
    std::vector<BlockScan> blocks;
    LyndonWordStream words(n);
    if (words.current() != std::vector<std::uint8_t>{0})
        throw std::logic_error("scan_blocks: stream did not start at \"0\"");
    words.advance();
    std::uint64_t offset = 1; // past the initial sentinel symbol
    while (!(words.current().size() == 1 && words.current()[0] == 1)) {
        const auto& w = words.current();
        if (w.size() != n) throw std::logic_error("scan_blocks: interior word of non-prime length");
        unsigned k = 0;
        while (k < w.size() && w[k] == 0) ++k;
        if (blocks.empty() || blocks.back().rep.k != k) {
            if (!blocks.empty() && k > blocks.back().rep.k)
                throw std::logic_error("scan_blocks: leading-zero class increased");
            BlockScan bs;
            bs.rep.k = k;
            bs.start_offset = offset;
            blocks.push_back(bs);
        }
        BlockScan& bs = blocks.back();
        std::int64_t run = bs.rep.skew;
        for (std::size_t i = 0; i < w.size(); ++i) {
            run += w[i] ? -1 : 1;
            std::uint64_t pos = bs.rep.length + i + 1;
            if (bs.rep.word_count == 0 && i == 0) {
                bs.rep.max_signed = run;
                bs.rep.min_signed = run;
                bs.first_max_pos = pos;
                bs.first_min_pos = pos;
            } else {
                if (run > bs.rep.max_signed) {
                    bs.rep.max_signed = run;
                    bs.first_max_pos = pos;
                }
                if (run < bs.rep.min_signed) {
                    bs.rep.min_signed = run;
                    bs.first_min_pos = pos;
                }
            }
        }
        bs.rep.skew = run;
        bs.rep.length += w.size();
        bs.rep.word_count += 1;
        offset += w.size();
        words.advance();
    }
    return blocks;
}

inline DiscReport track_stream(FkmSymbolStream& s) {
    DiscReport r;
    std::int64_t sum = 0, best = -1;
    while (!s.done()) {
        sum += s.next() ? -1 : 1;
        r.max_signed = std::max(r.max_signed, sum);
        r.min_signed = std::min(r.min_signed, sum);
        std::int64_t a = sum < 0 ? -sum : sum;
        if (a > best) {
            best = a;
            r.argmax_position = s.emitted();
        }
    }
    r.disc = best;
    return r;
}

} // namespace detail

// Decompose the order-n sequence (n prime) into its leading-zero-run blocks.
inline std::vector<BlockReport> decompose(unsigned n, unsigned max_order = streaming_cap()) {
    detail::validate_prime_order("decompose", n, max_order);
    auto scans = detail::scan_blocks(n, max_order);
    std::vector<BlockReport> out;
    out.reserve(scans.size());
    for (const auto& s : scans) out.push_back(s.rep);
    return out;
}

// Both routes to disc of the order-n sequence, plus the block-boundary upper
// bound max_t (1 + sum of the first t block skews + within-block disc of
// block t+1).  from_blocks is reconstructed from block summaries only;
// streamed is an independent running-sum pass.
struct BlockwiseDiscReport {
    DiscReport from_blocks;
    DiscReport streamed;
    std::int64_t formula_bound = 0;
    std::vector<std::int64_t> boundary_sums; // running sum entering each block, plus the final pre-sentinel sum
};

inline BlockwiseDiscReport disc_blockwise(unsigned n, unsigned max_order = streaming_cap()) {
    detail::validate_prime_order("disc_blockwise", n, max_order);
    if (n < 5) throw std::invalid_argument("disc_blockwise: order must be >= 5 (needs two interior blocks)");
    auto scans = detail::scan_blocks(n, max_order);

    BlockwiseDiscReport out;
    std::int64_t base = 1; // running sum after the initial "0"
    std::int64_t best = 1; // |sum| of the first prefix
    std::uint64_t best_pos = 1;
    std::int64_t hi = 1, lo = 1;
    for (const auto& bs : scans) {
        out.boundary_sums.push_back(base);
        hi = std::max(hi, base + bs.rep.max_signed);
        lo = std::min(lo, base + bs.rep.min_signed);
        std::int64_t cand_hi = std::abs(base + bs.rep.max_signed);
        std::int64_t cand_lo = std::abs(base + bs.rep.min_signed);
        std::int64_t block_best = std::max(cand_hi, cand_lo);
        if (block_best > best) {
            best = block_best;
            std::uint64_t pos = UINT64_MAX;
            if (cand_hi == block_best) pos = bs.start_offset + bs.first_max_pos;
            if (cand_lo == block_best) pos = std::min(pos, bs.start_offset + bs.first_min_pos);
            best_pos = pos;
        }
        base += bs.rep.skew;
    }
    out.boundary_sums.push_back(base); // before the final "1"; the full sum is base - 1
    lo = std::min(lo, base - 1);
    out.from_blocks.disc = best;
    out.from_blocks.max_signed = hi;
    out.from_blocks.min_signed = lo;
    out.from_blocks.argmax_position = best_pos;

    // The displayed boundary formula, t running over proper block prefixes.
    std::int64_t formula = INT64_MIN;
    std::int64_t skew_prefix = 0;
    for (std::size_t t = 1; t < scans.size(); ++t) {
        skew_prefix += scans[t - 1].rep.skew;
        const auto& nxt = scans[t].rep;
        std::int64_t block_disc = std::max(std::abs(nxt.max_signed), std::abs(nxt.min_signed));
        formula = std::max(formula, 1 + skew_prefix + block_disc);
    }
    out.formula_bound = formula;

    FkmSymbolStream s(n);
    out.streamed = detail::track_stream(s);
    return out;
}

// The weighted-skew identity for block k of the order-n sequence: summing
// (k - 2 + skew(w)) / (t + 1) over all words w of length n-k-2 with no zero
// run of length k+1, where t is the number of maximal zero runs of length
// exactly k in w, must reproduce the block's skew exactly (each cyclic class
// of t+1 eligible rotations contributes once).
inline BigRational block_skew_weighted(unsigned n, unsigned k, unsigned max_order = 22) {
    if (!detail::is_prime(n)) throw std::invalid_argument("block_skew_weighted: order must be prime");
    if (n > max_order) throw capacity_error("block_skew_weighted: order exceeds enumeration cap");
    if (k < 4 || k + 3 > n) throw std::invalid_argument("block_skew_weighted: need 4 <= k <= n-3");
    const unsigned m = n - k - 2;
    BigRational total = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        std::vector<std::uint8_t> bits(m);
        for (unsigned i = 0; i < m; ++i) bits[i] = (x >> (m - 1 - i)) & 1;
        BitWord w(std::move(bits));
        RunStats rs = zero_run_stats(w, false);
        if (rs.max_run > k) continue;
        std::uint64_t t = rs.max_run == k ? rs.run_count : 0;
        BigRational term(static_cast<std::int64_t>(k) - 2 + skew(w), static_cast<std::int64_t>(t) + 1);
        total += term;
    }
    return total;
}

// Exact cross-multiplied sandwich for every block skew:
//   (k - 6) * A <= 3 * skew(block k)   and   skew(block k) <= (2k - 3) * A,
// where A counts the words of length n-k-2 with no zero run of length k+1.
// Checked for 4 <= k <= n-3; the two top classes are flagged as out of the
// bound's domain (the count argument would have negative length).
inline CheckReport check_block_skew_sandwich(unsigned n, unsigned max_order = streaming_cap()) {
    if (!detail::is_prime(n) || n < 11)
        throw std::invalid_argument("check_block_skew_sandwich: order must be prime and >= 11");
    CheckReport rep;
    rep.claim = "block_skew_sandwich";
    std::ostringstream os;
    os << "n=" << n << ", 4 <= k <= " << n - 3;
    rep.range = os.str();
    auto blocks = decompose(n, max_order);
    for (const auto& b : blocks) {
        if (b.k < 4 || b.k + 3 > n) continue;
        CountTable t(b.k + 1, n - b.k - 2);
        const BigInt& alpha = t.a(n - b.k - 2);
        BigInt sk3 = BigInt(3) * b.skew;
        BigInt lower = (static_cast<int>(b.k) - 6) * alpha;
        BigInt upper = (2 * static_cast<int>(b.k) - 3) * alpha;
        if (!(lower <= sk3 && BigInt(b.skew) <= upper)) {
            rep.pass = false;
            std::ostringstream ce;
            ce << "n=" << n << ", k=" << b.k << ": skew=" << b.skew << ", count=" << alpha;
            rep.counterexample = ce.str();
            return rep;
        }
    }
    std::ostringstream ob;
    ob << "k=" << n - 2 << " and k=" << n - 1 << " not checkable in this form (count argument below 0)";
    rep.observations.push_back(ob.str());
    return rep;
}

// Composite orders: the words of length d | n, d < n displace full-length
// words; their symbol total is tiny against the sequence.
struct CompositeReport {
    unsigned n = 0;
    std::vector<unsigned> divisors;     // proper divisors, ascending
    std::uint64_t actual_symbols = 0;   // symbols contributed by short words in the stream
    BigInt word_bound;                  // sum over d of d * 2^d
    double budget = 0.0;                // n^2 * 2^(n/2)
    bool actual_le_bound = false;
    bool bound_lt_budget = false;       // exact: (sum)^2 < n^4 * 2^n
};

inline CompositeReport composite_correction(unsigned n, unsigned max_order = streaming_cap()) {
    if (n < 4 || detail::is_prime(n))
        throw std::invalid_argument("composite_correction: order must be composite (>= 4)");
    if (n > max_order) throw capacity_error("composite_correction: order exceeds streaming cap");
    CompositeReport rep;
    rep.n = n;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) rep.divisors.push_back(d);
    for (LyndonWordStream s(n); !s.exhausted(); s.advance())
        if (s.current().size() < n) rep.actual_symbols += s.current().size();
    for (unsigned d : rep.divisors) rep.word_bound += BigInt(d) * (BigInt(1) << d);
    rep.budget = static_cast<double>(n) * n * std::pow(2.0, n / 2.0);
    rep.actual_le_bound = BigInt(rep.actual_symbols) <= rep.word_bound;
    rep.bound_lt_budget = rep.word_bound * rep.word_bound < BigInt(n) * n * n * n * (BigInt(1) << n);
    return rep;
}

// Exact disc, argmax position, and the ratio n * disc / (2^n * ln n) for
// each order in [n_min, n_max].  Orders are independent; worker threads
// claim them from a shared counter and rows come back in increasing n.
inline std::vector<ScalingRow> scaling_sweep(unsigned n_min, unsigned n_max, unsigned threads = 1,
                                             unsigned max_order = streaming_cap()) {
    if (n_min < 2 || n_min > n_max) throw std::invalid_argument("scaling_sweep: need 2 <= n_min <= n_max");
    if (n_max > max_order) throw capacity_error("scaling_sweep: max order exceeds streaming cap");
    const unsigned count = n_max - n_min + 1;
    std::vector<ScalingRow> rows(count);
    auto work = [&rows, n_min](unsigned idx) {
        const unsigned n = n_min + idx;
        FkmSymbolStream s(n);
        DiscReport d = detail::track_stream(s);
        ScalingRow& row = rows[idx];
        row.n = n;
        row.disc = d.disc;
        row.position = d.argmax_position;
        row.ratio = static_cast<double>(n) * static_cast<double>(d.disc) /
                    (std::pow(2.0, n) * std::log(static_cast<double>(n)));
    };
    if (threads <= 1) {
        for (unsigned i = 0; i < count; ++i) work(i);
    } else {
        std::atomic<unsigned> next{0};
        std::vector<std::thread> pool;
        unsigned nthreads = std::min(threads, count);
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (unsigned i = next.fetch_add(1); i < count; i = next.fetch_add(1)) work(i);
            });
        for (auto& th : pool) th.join();
    }
    return rows;
}

} // namespace forddisc
