#include "relaysched/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "relaysched/errors.hpp"

namespace relaysched {

namespace {

int max_capacity(const Network& net) {
    int m = 0;
    for (int v : net.cap_from_source) m = std::max(m, v);
    for (int v : net.cap_to_dest) m = std::max(m, v);
    for (const auto& row : net.cap_relay)
        for (int v : row) m = std::max(m, v);
    return m;
}

// splitmix64: tiny, seedable, identical on every platform.
std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Uniform draw on [0, bound] by rejection, so the distribution is exact.
int draw_uniform(std::uint64_t& state, int bound) {
    const std::uint64_t span = static_cast<std::uint64_t>(bound) + 1;
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
    for (;;) {
        const std::uint64_t r = splitmix64(state);
        if (r < limit || limit == 0) return static_cast<int>(r % span);
    }
}

} // namespace

Network Network::make(int n,
                      std::vector<int> from_source,
                      std::vector<int> to_dest,
                      std::vector<std::vector<int>> relay) {
    if (n < 1 || n > RelaySet::kMaxRelays)
        throw input_error("n: must be in [1, 30], got " + std::to_string(n));
    auto check_vec = [&](const std::vector<int>& v, const std::string& name) {
        if (static_cast<int>(v.size()) != n)
            throw input_error(name + ": expected " + std::to_string(n) + " entries, got " +
                              std::to_string(v.size()));
        for (int i = 0; i < n; ++i)
            if (v[i] < 0)
                throw input_error(name + "[" + std::to_string(i) + "]: negative capacity");
    };
    check_vec(from_source, "source_to_relay");
    check_vec(to_dest, "relay_to_dest");
    if (static_cast<int>(relay.size()) != n)
        throw input_error("relay_to_relay: expected " + std::to_string(n) + " rows");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(relay[i].size()) != n)
            throw input_error("relay_to_relay[" + std::to_string(i) + "]: expected " +
                              std::to_string(n) + " entries");
        for (int j = 0; j < n; ++j) {
            if (relay[i][j] < 0)
                throw input_error("relay_to_relay[" + std::to_string(i) + "][" +
                                  std::to_string(j) + "]: negative capacity");
            if (i == j && relay[i][j] != 0)
                throw input_error("relay_to_relay[" + std::to_string(i) + "][" +
                                  std::to_string(j) + "]: self-link must be 0");
        }
    }
    Network net;
    net.n = n;
    net.cap_from_source = std::move(from_source);
    net.cap_to_dest = std::move(to_dest);
    net.cap_relay = std::move(relay);
    net.eta = max_capacity(net);
    return net;
}

bool Network::is_canonical() const {
    return std::is_sorted(cap_from_source.begin(), cap_from_source.end());
}

int capacity_from_gain(double gain_squared) {
    if (!(gain_squared >= 0.0) || !std::isfinite(gain_squared))
        throw input_error("gain_squared must be finite and non-negative");
    if (gain_squared <= 1.0) return 0;
    int c = 0;
    while (std::ldexp(1.0, c) < gain_squared) ++c;
    return c;
}

Network apply_permutation(const Network& net, const std::vector<int>& perm) {
    const int n = net.n;
    std::vector<int> src(n), dst(n);
    std::vector<std::vector<int>> rel(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        src[i] = net.cap_from_source[perm[i]];
        dst[i] = net.cap_to_dest[perm[i]];
        for (int j = 0; j < n; ++j) rel[i][j] = net.cap_relay[perm[i]][perm[j]];
    }
    return Network::make(n, std::move(src), std::move(dst), std::move(rel));
}

std::pair<Network, std::vector<int>> canonicalize(const Network& net) {
    std::vector<int> perm(net.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return net.cap_from_source[a] < net.cap_from_source[b];
    });
    return {apply_permutation(net, perm), perm};
}

Network reverse(const Network& net) {
    const int n = net.n;
    std::vector<std::vector<int>> rel(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rel[i][j] = net.cap_relay[j][i];
    return Network::make(n, net.cap_to_dest, net.cap_from_source, std::move(rel));
}

Network random_network(int n, int max_cap, std::uint64_t seed) {
    if (n < 1 || n > RelaySet::kMaxRelays)
        throw input_error("random_network: n must be in [1, 30]");
    if (max_cap < 0) throw input_error("random_network: max_cap must be >= 0");
    std::uint64_t state = seed;
    // Draw order is part of the format: sources, dests, then relay rows
    // (diagonal skipped). Changing it would break seed reproducibility.
    std::vector<int> src(n), dst(n);
    std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) src[i] = draw_uniform(state, max_cap);
    for (int i = 0; i < n; ++i) dst[i] = draw_uniform(state, max_cap);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) rel[i][j] = draw_uniform(state, max_cap);
    return Network::make(n, std::move(src), std::move(dst), std::move(rel));
}

} // namespace relaysched
