#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace forddisc {

// A binary word stored one symbol per byte.  Every stored value is 0 or 1;
// the constructors enforce this so downstream arithmetic can trust it.
class BitWord {
public:
    BitWord() = default;

    explicit BitWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("BitWord: symbol out of range");
    }

    static BitWord parse(std::string_view text) {
        BitWord w;
        w.bits_.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') throw std::invalid_argument("BitWord: expected '0' or '1'");
            w.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return w;
    }

    std::string str() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
        return s;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    void push_back(std::uint8_t bit) {
        if (bit > 1) throw std::invalid_argument("BitWord: symbol out of range");
        bits_.push_back(bit);
    }

    auto begin() const { return bits_.begin(); }
    auto end() const { return bits_.end(); }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    // Left rotation by j: rotated(1) of 0110 is 1100.
    BitWord rotated(std::size_t j) const {
        if (empty()) return *this;
        j %= size();
        BitWord out;
        out.bits_.reserve(size());
        out.bits_.insert(out.bits_.end(), bits_.begin() + static_cast<std::ptrdiff_t>(j), bits_.end());
        out.bits_.insert(out.bits_.end(), bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(j));
        return out;
    }

    friend bool operator==(const BitWord& a, const BitWord& b) { return a.bits_ == b.bits_; }
    friend bool operator<(const BitWord& a, const BitWord& b) {
        return std::lexicographical_compare(a.bits_.begin(), a.bits_.end(),
                                            b.bits_.begin(), b.bits_.end());
    }

private:
    std::vector<std::uint8_t> bits_;
};

// Result of a discrepancy scan.  max_signed/min_signed are the extreme
// running sums over nonempty prefixes; argmax_position is the length of the
// earliest prefix whose |sum| equals disc.
struct DiscReport {
    std::int64_t disc = 0;
    std::int64_t max_signed = 0;
    std::int64_t min_signed = 0;
    std::uint64_t argmax_position = 0;
};

// Maximal zero-run statistics.  run_print holds the start indices of the
// runs achieving max_run, ascending; run_count == run_print.size().
struct RunStats {
    std::size_t max_run = 0;
    std::size_t run_count = 0;
    std::vector<std::size_t> run_print;
};

// Number of zeros minus number of ones.
inline std::int64_t skew(const BitWord& w) {
    std::int64_t s = 0;
    for (auto b : w) s += b ? -1 : 1;
    return s;
}

// Maximum |running skew| over nonempty prefixes, with the earliest prefix
// length attaining it.
inline DiscReport discrepancy(const BitWord& w) {
    if (w.empty()) throw std::invalid_argument("discrepancy: empty word");
    DiscReport r;
    std::int64_t sum = 0, best = -1;
    std::uint64_t pos = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        sum += w[i] ? -1 : 1;
        r.max_signed = std::max(r.max_signed, sum);
        r.min_signed = std::min(r.min_signed, sum);
        std::int64_t a = sum < 0 ? -sum : sum;
        if (a > best) {
            best = a;
            pos = static_cast<std::uint64_t>(i) + 1;
        }
    }
    // First prefix always has |sum| == 1 >= best start, so best >= 1 here.
    r.disc = best;
    r.argmax_position = pos;
    return r;
}

namespace detail {

// Booth's least-rotation algorithm; returns the start index of the
// lexicographically least rotation.
inline std::size_t least_rotation_index(const BitWord& w) {
    const std::size_t n = w.size();
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const std::uint8_t sj = w[j % n];
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != w[(k + static_cast<std::size_t>(i) + 1) % n]) {
            if (sj < w[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
            i = f[static_cast<std::size_t>(i)];
        }
        if (i == -1 && sj != w[k % n]) {
            if (sj < w[k % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

} // namespace detail

// Lexicographically least rotation.
inline BitWord min_rotation(const BitWord& w) {
    if (w.empty()) throw std::invalid_argument("min_rotation: empty word");
    return w.rotated(detail::least_rotation_index(w));
}

// True iff w is strictly smaller than every proper suffix (equivalently:
// aperiodic and equal to its least rotation).
inline bool is_lyndon(const BitWord& w) {
    if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
    const std::size_t n = w.size();
    for (std::size_t i = 1; i < n; ++i) {
        bool less = std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (!less) return false;
    }
    return true;
}

// Maximal runs of zeros, linear or cyclic.  Cyclic mode joins a leading and
// trailing run across the wrap; the joined run starts at the trailing run's
// index.  The all-zero word counts as one run of length n starting at 0 in
// both modes.
inline RunStats zero_run_stats(const BitWord& w, bool cyclic) {
    if (w.empty()) throw std::invalid_argument("zero_run_stats: empty word");
    const std::size_t n = w.size();
    std::vector<std::pair<std::size_t, std::size_t>> runs; // (start, length)
    std::size_t i = 0;
    while (i < n) {
        if (w[i] == 0) {
            std::size_t j = i;
            while (j < n && w[j] == 0) ++j;
            runs.emplace_back(i, j - i);
            i = j;
        } else {
            ++i;
        }
    }
    if (cyclic && runs.size() >= 2 && w[0] == 0 && w[n - 1] == 0) {
        auto first = runs.front();
        auto last = runs.back();
        runs.erase(runs.begin());
        runs.back() = {last.first, last.second + first.second};
    }
    RunStats st;
    for (const auto& r : runs) st.max_run = std::max(st.max_run, r.second);
    if (st.max_run > 0) {
        for (const auto& r : runs)
            if (r.second == st.max_run) st.run_print.push_back(r.first);
        std::sort(st.run_print.begin(), st.run_print.end());
    }
    st.run_count = st.run_print.size();
    return st;
}

} // namespace forddisc
