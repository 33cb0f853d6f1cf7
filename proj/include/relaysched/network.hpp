#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "relaysched/relay_set.hpp"

namespace relaysched {

/// A half-duplex diamond network: a source feeding n interconnected relays
/// that feed one destination. All links carry integer capacities (the
/// deterministic-model bit widths). Instances are immutable after
/// construction; every constructor path enforces the invariants
/// (zero self-links, eta = max capacity, n in [1, 30]).
struct Network {
    int n = 0;
    std::vector<int> cap_from_source;           // index i-1: source -> relay i
    std::vector<int> cap_to_dest;               // index i-1: relay i -> destination
    std::vector<std::vector<int>> cap_relay;    // [i-1][j-1]: relay j -> relay i
    int eta = 0;                                // max capacity in the network

    /// Validates and builds a network; throws input_error with a field path
    /// on any violation.
    static Network make(int n,
                        std::vector<int> from_source,
                        std::vector<int> to_dest,
                        std::vector<std::vector<int>> relay);

    int from_source(int i) const { return cap_from_source[i - 1]; }
    int to_dest(int i) const { return cap_to_dest[i - 1]; }
    /// Capacity of the link relay j -> relay i.
    int relay_link(int i, int j) const { return cap_relay[i - 1][j - 1]; }

    /// True when relays are sorted by ascending source-side capacity.
    bool is_canonical() const;

    bool operator==(const Network& other) const = default;
};

/// Integer capacity of a complex channel gain: smallest non-negative c with
/// 2^c >= gain_squared (0 for gain_squared <= 1). Rejects negative or
/// non-finite input.
int capacity_from_gain(double gain_squared);

/// Relabels relays so source-side capacities are ascending (stable on ties).
/// Returns the relabeled network and the permutation applied:
/// perm[new_index] = old_index, 0-based.
std::pair<Network, std::vector<int>> canonicalize(const Network& net);

/// Swaps the roles of source and destination and transposes the relay
/// links. Involutive; preserves eta.
Network reverse(const Network& net);

/// Applies a relay relabeling: perm[new_index] = old_index, 0-based.
Network apply_permutation(const Network& net, const std::vector<int>& perm);

/// Deterministic seeded network: every off-diagonal capacity uniform on
/// [0, max_cap]. Same seed, same network, independent of platform.
Network random_network(int n, int max_cap, std::uint64_t seed);

} // namespace relaysched
