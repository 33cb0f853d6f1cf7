#pragma once

#include <cstdint>
#include <vector>

#include "relaysched/errors.hpp"

namespace relaysched {

/// A subset of the relays {1, ..., n}, stored as a bit mask (relay i <-> bit i-1).
/// Used both for cuts (relays grouped with the source) and for states
/// (relays currently transmitting). n is capped at 30 so a mask always
/// fits one machine word.
class RelaySet {
public:
    static constexpr int kMaxRelays = 30;

    constexpr RelaySet() = default;
    explicit RelaySet(std::uint32_t mask) : mask_(mask) {}

    /// {a, a+1, ..., b}; empty when a > b. 1-based bounds.
    static RelaySet interval(int a, int b) {
        if (a > b) return RelaySet{};
        check_index(a);
        check_index(b);
        std::uint32_t hi = (b >= 32) ? ~0u : ((1u << b) - 1u);
        std::uint32_t lo = (1u << (a - 1)) - 1u;
        return RelaySet{hi & ~lo};
    }

    static RelaySet singleton(int i) {
        check_index(i);
        return RelaySet{1u << (i - 1)};
    }

    /// The full set [n] = {1, ..., n}.
    static RelaySet full(int n) { return interval(1, n); }

    std::uint32_t mask() const { return mask_; }
    bool empty() const { return mask_ == 0; }
    int count() const { return __builtin_popcount(mask_); }
    bool contains(int i) const { return i >= 1 && i <= 32 && ((mask_ >> (i - 1)) & 1u); }

    RelaySet complement(int n) const { return RelaySet{~mask_ & full(n).mask_}; }

    friend RelaySet operator&(RelaySet a, RelaySet b) { return RelaySet{a.mask_ & b.mask_}; }
    friend RelaySet operator|(RelaySet a, RelaySet b) { return RelaySet{a.mask_ | b.mask_}; }
    friend bool operator==(RelaySet a, RelaySet b) { return a.mask_ == b.mask_; }

    bool subset_of(RelaySet other) const { return (mask_ & ~other.mask_) == 0; }

    /// Member relay ids in ascending order, 1-based.
    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint32_t m = mask_; m != 0; m &= m - 1)
            out.push_back(__builtin_ctz(m) + 1);
        return out;
    }

private:
    static void check_index(int i) {
        if (i < 1 || i > kMaxRelays)
            throw input_error("relay index " + std::to_string(i) + " outside [1, 30]");
    }

    std::uint32_t mask_ = 0;
};

} // namespace relaysched
