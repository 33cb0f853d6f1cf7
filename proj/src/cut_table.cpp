#include "relaysched/cut_table.hpp"

#include <algorithm>

#include "relaysched/errors.hpp"

namespace relaysched {

namespace {

void check_range(const Network& net, RelaySet set, const char* what) {
    if (!set.subset_of(RelaySet::full(net.n)))
        throw input_error(std::string(what) + " contains a relay outside [1, n]");
}

} // namespace

Gf2Matrix transfer_matrix(const Network& net, RelaySet omega, RelaySet state) {
    check_range(net, omega, "omega");
    check_range(net, state, "state");
    const int n = net.n;
    const int eta = net.eta;
    const auto receivers = (omega.complement(n) & state.complement(n)).elements();
    const auto transmitters = (omega & state).elements();

    // Row bands: destination, then receiving-side relays; column bands:
    // source, then source-side transmitters. The source->destination block
    // is the zero shift block (that link has capacity 0).
    std::vector<std::vector<Gf2Matrix>> grid;
    grid.reserve(1 + receivers.size());
    {
        std::vector<Gf2Matrix> band;
        band.push_back(shift_block(eta, 0));
        for (int j : transmitters) band.push_back(shift_block(eta, net.to_dest(j)));
        grid.push_back(std::move(band));
    }
    for (int i : receivers) {
        std::vector<Gf2Matrix> band;
        band.push_back(shift_block(eta, net.from_source(i)));
        for (int j : transmitters) band.push_back(shift_block(eta, net.relay_link(i, j)));
        grid.push_back(std::move(band));
    }
    return block_assemble(grid);
}

int rank_lower_bound(const Network& net, RelaySet omega, RelaySet state) {
    check_range(net, omega, "omega");
    check_range(net, state, "state");
    const int n = net.n;
    int from_side = 0;
    for (int i : (omega.complement(n) & state.complement(n)).elements())
        from_side = std::max(from_side, net.from_source(i));
    int to_side = 0;
    for (int j : (omega & state).elements())
        to_side = std::max(to_side, net.to_dest(j));
    return from_side + to_side;
}

int CutValueTable::cut_value(RelaySet omega, RelaySet state) const {
    check_range(net_, omega, "omega");
    check_range(net_, state, "state");
    const std::uint64_t key =
        (static_cast<std::uint64_t>(omega.mask()) << 32) | state.mask();
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const int n = net_.n;
    int value;
    if ((omega & state).empty() || (omega.complement(n) & state.complement(n)).empty()) {
        // One side has no relays: the bound is exact, skip the matrix.
        value = rank_lower_bound(net_, omega, state);
    } else {
        value = transfer_matrix(net_, omega, state).rank();
        if (value < rank_lower_bound(net_, omega, state))
            throw internal_inconsistency("cut value fell below its lower bound");
    }
    cache_.emplace(key, value);
    return value;
}

std::vector<int> CutValueTable::cut_value_row(int i) const {
    const int n = net_.n;
    if (i < 1 || i > n + 1) throw input_error("row index must be in [1, n+1]");
    const RelaySet omega = RelaySet::interval(i, n);  // empty when i = n+1
    std::vector<int> row(n + 1);
    for (int j = 1; j <= n; ++j) row[j - 1] = cut_value(omega, RelaySet::singleton(j));
    row[n] = cut_value(omega, RelaySet{});
    return row;
}

} // namespace relaysched
