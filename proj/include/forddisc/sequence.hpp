#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bitword.hpp"
#include "errors.hpp"

namespace forddisc {

// Streams, in lexicographic order, the binary Lyndon words whose length
// divides the order n.  Their concatenation is the lexicographically least
// de Bruijn sequence of order n.  Successor rule: extend the current word
// periodically to length n, drop trailing 1s, flip the final 0 to 1, and
// keep the result only when its length divides n.  O(n) state.
class LyndonWordStream {
public:
    explicit LyndonWordStream(unsigned order) : n_(order) {
        if (order < 1 || order > 62)
            throw std::invalid_argument("LyndonWordStream: order must be in [1, 62]");
        w_.assign(1, 0);
    }

    unsigned order() const { return n_; }
    bool exhausted() const { return exhausted_; }

    const std::vector<std::uint8_t>& current() const {
        if (exhausted_) throw std::logic_error("LyndonWordStream: exhausted");
        return w_;
    }

    void advance() {
        if (exhausted_) throw std::logic_error("LyndonWordStream: exhausted");
        if (w_.size() == 1 && w_[0] == 1) {
            exhausted_ = true;
            return;
        }
        do {
            std::vector<std::uint8_t> t(n_);
            for (unsigned i = 0; i < n_; ++i) t[i] = w_[i % w_.size()];
            while (t.back() == 1) t.pop_back(); // t[0] == 0, so never empties
            t.back() = 1;
            w_ = std::move(t);
        } while (n_ % w_.size() != 0);
    }

private:
    unsigned n_;
    std::vector<std::uint8_t> w_;
    bool exhausted_ = false;
};

// Symbol-level view of the same stream: the 2^n symbols of the sequence.
class FkmSymbolStream {
public:
    explicit FkmSymbolStream(unsigned order) : words_(order) {}

    unsigned order() const { return words_.order(); }
    std::uint64_t total() const { return std::uint64_t{1} << words_.order(); }
    std::uint64_t emitted() const { return emitted_; }
    bool done() const { return words_.exhausted(); }

    std::uint8_t next() {
        const auto& w = words_.current();
        std::uint8_t b = w[pos_++];
        ++emitted_;
        if (pos_ == w.size()) {
            words_.advance();
            pos_ = 0;
        }
        return b;
    }

private:
    LyndonWordStream words_;
    std::size_t pos_ = 0;
    std::uint64_t emitted_ = 0;
};

// Materialized sequence; guarded because it allocates 2^order bytes.
inline BitWord fkm_sequence(unsigned order, unsigned max_order = streaming_cap()) {
    if (order < 1) throw std::invalid_argument("fkm_sequence: order must be >= 1");
    if (order > max_order) throw capacity_error("fkm_sequence: order exceeds streaming cap");
    std::vector<std::uint8_t> bits;
    bits.reserve(std::size_t{1} << order);
    FkmSymbolStream s(order);
    while (!s.done()) bits.push_back(s.next());
    return BitWord(std::move(bits));
}

// Greedy construction: seed the window with 1^n, then repeatedly append 0 if
// the resulting window is new, else 1 if new, else stop.  Independent of the
// word stream; needs a 2^n-entry seen table.
inline BitWord greedy_prefer_zero(unsigned order, unsigned max_order = streaming_cap()) {
    if (order < 1) throw std::invalid_argument("greedy_prefer_zero: order must be >= 1");
    if (order > max_order) throw capacity_error("greedy_prefer_zero: order exceeds table cap");
    const std::uint64_t mask = (std::uint64_t{1} << order) - 1;
    std::vector<bool> seen(std::size_t{1} << order, false);
    std::uint64_t window = mask; // 1^n
    std::vector<std::uint8_t> bits;
    bits.reserve(std::size_t{1} << order);
    for (;;) {
        bool extended = false;
        for (std::uint8_t b : {std::uint8_t{0}, std::uint8_t{1}}) {
            std::uint64_t cand = ((window << 1) | b) & mask;
            if (!seen[cand]) {
                seen[cand] = true;
                bits.push_back(b);
                window = cand;
                extended = true;
                break;
            }
        }
        if (!extended) break;
    }
    return BitWord(std::move(bits));
}

// True iff the 2^n cyclic length-n windows of w are pairwise distinct.
inline bool verify_debruijn(const BitWord& w, unsigned order) {
    if (order < 1 || order > 30)
        throw std::invalid_argument("verify_debruijn: order must be in [1, 30]");
    const std::uint64_t total = std::uint64_t{1} << order;
    if (w.size() != total)
        throw std::invalid_argument("verify_debruijn: word length must equal 2^order");
    const std::uint64_t mask = total - 1;
    std::vector<bool> seen(total, false);
    std::uint64_t window = 0;
    for (unsigned i = 0; i < order; ++i) window = (window << 1) | w[i];
    for (std::uint64_t i = 0; i < total; ++i) {
        if (seen[window]) return false;
        seen[window] = true;
        window = ((window << 1) | w[(i + order) % total]) & mask;
    }
    return true;
}

// All Lyndon words of length dividing the order, materialized.
inline std::vector<BitWord> lyndon_words(unsigned order, unsigned max_order = 24) {
    if (order < 1) throw std::invalid_argument("lyndon_words: order must be >= 1");
    if (order > max_order) throw capacity_error("lyndon_words: order exceeds materialization cap");
    std::vector<BitWord> out;
    for (LyndonWordStream s(order); !s.exhausted(); s.advance())
        out.emplace_back(s.current());
    return out;
}

} // namespace forddisc
