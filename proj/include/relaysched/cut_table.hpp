#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "relaysched/gf2_matrix.hpp"
#include "relaysched/network.hpp"
#include "relaysched/relay_set.hpp"

namespace relaysched {

/// Transfer matrix of the cut/state pair (omega, state): inputs are the
/// source plus the transmitting relays on the source side (omega ∩ state),
/// outputs are the destination plus the receiving relays on the destination
/// side (omega^c ∩ state^c). Row blocks: destination first, then the
/// receiving-side relays ascending; column blocks: source first, then the
/// source-side transmitters ascending. Every block is the eta x eta shift
/// block of the corresponding link capacity (source->destination has
/// capacity 0).
Gf2Matrix transfer_matrix(const Network& net, RelaySet omega, RelaySet state);

/// max over receiving-side relays of their source capacity, plus max over
/// source-side transmitters of their destination capacity (empty max = 0).
/// Always a lower bound on the cut value; exact when either set is empty.
int rank_lower_bound(const Network& net, RelaySet omega, RelaySet state);

/// Memoized cut values f(omega, state) = rank of the transfer matrix, for
/// one fixed network. The closed form is used where it is exact (one of the
/// two relay groups empty); everywhere else the GF(2) rank is computed.
/// Not thread-safe: confine one table to one worker.
class CutValueTable {
public:
    explicit CutValueTable(Network net) : net_(std::move(net)) {}

    const Network& network() const { return net_; }

    int cut_value(RelaySet omega, RelaySet state) const;

    /// (f([i:n], {1}), ..., f([i:n], {n}), f([i:n], {})) for i in [1, n+1];
    /// i = n+1 yields the empty cut.
    std::vector<int> cut_value_row(int i) const;

private:
    Network net_;
    mutable std::unordered_map<std::uint64_t, int> cache_;
};

} // namespace relaysched
