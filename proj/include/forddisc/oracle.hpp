#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "bitword.hpp"
#include "errors.hpp"

// Deliberately naive enumerate-and-filter reference implementations.  These
// share no logic with the streaming/table code they validate: runs, rotations
// and window checks are recomputed from scratch here.

namespace forddisc {

struct OracleConfig {
    unsigned max_word_length = 22;  // exhaustive {0,1}^m enumeration cap
    unsigned max_debruijn_order = 4; // exhaustive de Bruijn search cap
};

namespace oracle_detail {

inline std::vector<std::uint8_t> word_of(std::uint64_t x, unsigned m) {
    std::vector<std::uint8_t> w(m);
    for (unsigned i = 0; i < m; ++i) w[i] = (x >> (m - 1 - i)) & 1;
    return w;
}

inline bool has_zero_run(const std::vector<std::uint8_t>& w, unsigned k) {
    unsigned run = 0;
    for (auto b : w) {
        run = b == 0 ? run + 1 : 0;
        if (run >= k) return true;
    }
    return false;
}

inline int word_skew(const std::vector<std::uint8_t>& w) {
    int s = 0;
    for (auto b : w) s += b ? -1 : 1;
    return s;
}

// Longest cyclic zero run, via maximal runs of the doubled word that start
// in the first period (capped at |w| for the all-zero word).
inline unsigned cyclic_max_zero_run(const std::vector<std::uint8_t>& w) {
    const std::size_t n = w.size();
    std::vector<std::uint8_t> d(w);
    d.insert(d.end(), w.begin(), w.end());
    unsigned best = 0;
    std::size_t i = 0;
    while (i < d.size()) {
        if (d[i] == 0) {
            std::size_t j = i;
            while (j < d.size() && d[j] == 0) ++j;
            if (i < n) best = std::max(best, static_cast<unsigned>(j - i));
            i = j;
        } else {
            ++i;
        }
    }
    return std::min<unsigned>(best, static_cast<unsigned>(n));
}

inline std::vector<std::uint8_t> least_rotation_naive(const std::vector<std::uint8_t>& w) {
    std::vector<std::uint8_t> best = w;
    std::vector<std::uint8_t> cur = w;
    for (std::size_t j = 1; j < w.size(); ++j) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

} // namespace oracle_detail

// Count of words in {0,1}^m with no linear zero run of length k.
inline std::uint64_t alpha_brute(unsigned k, unsigned m, const OracleConfig& cfg = {}) {
    if (k < 1) throw std::invalid_argument("alpha_brute: k must be >= 1");
    if (m > cfg.max_word_length) throw capacity_error("alpha_brute: word length exceeds oracle cap");
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x)
        if (!oracle_detail::has_zero_run(oracle_detail::word_of(x, m), k)) ++count;
    return count;
}

// Total skew over the same word set.
inline std::int64_t beta_brute(unsigned k, unsigned m, const OracleConfig& cfg = {}) {
    if (k < 1) throw std::invalid_argument("beta_brute: k must be >= 1");
    if (m > cfg.max_word_length) throw capacity_error("beta_brute: word length exceeds oracle cap");
    std::int64_t total = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        auto w = oracle_detail::word_of(x, m);
        if (!oracle_detail::has_zero_run(w, k)) total += oracle_detail::word_skew(w);
    }
    return total;
}

// Block k of the order-n sequence, built the slow way: enumerate all length-n
// words whose cyclic maximal zero run is exactly k, canonicalize each to its
// least rotation, deduplicate, and concatenate in lexicographic order.
inline BitWord ell_brute(unsigned n, unsigned k, const OracleConfig& = {}) {
    if (n > 20) throw capacity_error("ell_brute: order exceeds oracle cap");
    {
        bool prime = n >= 2;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) prime = false;
        if (!prime) throw std::invalid_argument("ell_brute: order must be prime");
    }
    if (k < 1 || k >= n) throw std::invalid_argument("ell_brute: need 1 <= k <= n-1");
    std::set<std::vector<std::uint8_t>> reps;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        auto w = oracle_detail::word_of(x, n);
        if (oracle_detail::cyclic_max_zero_run(w) == k)
            reps.insert(oracle_detail::least_rotation_naive(w));
    }
    BitWord out;
    for (const auto& r : reps)
        for (auto b : r) out.push_back(b);
    return out;
}

struct DebruijnCensus {
    std::uint64_t count = 0;
    BitWord lex_least;
};

// Exhaustive census of de Bruijn cycles of the given order, canonicalized as
// the rotation starting with 0^n (which every cycle contains exactly once).
// Candidates are enumerated in lexicographic order, so the first hit is the
// least de Bruijn word overall.
inline DebruijnCensus count_debruijn_exhaustive(unsigned n, const OracleConfig& cfg = {}) {
    if (n < 1) throw std::invalid_argument("count_debruijn_exhaustive: order must be >= 1");
    if (n > cfg.max_debruijn_order) throw capacity_error("count_debruijn_exhaustive: order exceeds oracle cap");
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t free_bits = total - n;
    DebruijnCensus census;
    std::vector<std::uint8_t> w(total, 0);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << free_bits); ++x) {
        for (std::uint64_t i = 0; i < free_bits; ++i) w[n + i] = (x >> (free_bits - 1 - i)) & 1;
        std::set<std::vector<std::uint8_t>> windows;
        bool ok = true;
        for (std::uint64_t s = 0; s < total && ok; ++s) {
            std::vector<std::uint8_t> win(n);
            for (unsigned i = 0; i < n; ++i) win[i] = w[(s + i) % total];
            ok = windows.insert(win).second;
        }
        if (ok) {
            if (census.count == 0) census.lex_least = BitWord(w);
            ++census.count;
        }
    }
    return census;
}

// Reference for the discrepancy scan: materialize all prefix sums, take the
// max absolute value.
inline std::int64_t disc_brute(const BitWord& w) {
    if (w.empty()) throw std::invalid_argument("disc_brute: empty word");
    if (w.size() > (std::size_t{1} << 24)) throw capacity_error("disc_brute: word exceeds oracle cap");
    std::vector<std::int64_t> sums;
    sums.reserve(w.size());
    std::int64_t s = 0;
    for (auto b : w) {
        s += b ? -1 : 1;
        sums.push_back(s);
    }
    std::int64_t best = 0;
    for (auto v : sums) best = std::max(best, v < 0 ? -v : v);
    return best;
}

} // namespace forddisc
