#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "relaysched/errors.hpp"
#include "relaysched/network.hpp"
#include "test_support.hpp"

using namespace relaysched;
using test_support::example_network;

TEST_CASE("capacity_from_gain") {
    CHECK(capacity_from_gain(4.0) == 2);
    CHECK(capacity_from_gain(0.5) == 0);
    CHECK(capacity_from_gain(5.0) == 3);
    CHECK(capacity_from_gain(0.0) == 0);
    CHECK(capacity_from_gain(1.0) == 0);
    CHECK(capacity_from_gain(1.0001) == 1);
    CHECK(capacity_from_gain(std::ldexp(1.0, 40)) == 40);
    CHECK(capacity_from_gain(std::ldexp(1.0, 40) + 1.0) == 41);
    CHECK_THROWS_AS(capacity_from_gain(-1.0), input_error);
    CHECK_THROWS_AS(capacity_from_gain(std::numeric_limits<double>::infinity()), input_error);
    CHECK_THROWS_AS(capacity_from_gain(std::numeric_limits<double>::quiet_NaN()), input_error);
}

TEST_CASE("network construction enforces invariants") {
    CHECK_THROWS_AS(Network::make(0, {}, {}, {}), input_error);
    CHECK_THROWS_AS(Network::make(31, std::vector<int>(31, 0), std::vector<int>(31, 0),
                                  std::vector<std::vector<int>>(31, std::vector<int>(31, 0))),
                    input_error);
    CHECK_THROWS_AS(Network::make(1, {-1}, {0}, {{0}}), input_error);
    CHECK_THROWS_AS(Network::make(1, {0}, {0}, {{3}}), input_error);  // self-link
    CHECK_THROWS_AS(Network::make(2, {1}, {1, 1}, {{0, 0}, {0, 0}}), input_error);

    const Network net = example_network();
    CHECK(net.eta == 6);
    CHECK(net.from_source(1) == 1);
    CHECK(net.to_dest(3) == 3);
    CHECK(net.relay_link(2, 1) == 4);  // relay 1 -> relay 2
    CHECK(net.relay_link(1, 2) == 3);  // relay 2 -> relay 1
}

TEST_CASE("canonicalize: already sorted is identity") {
    const auto [canon, perm] = canonicalize(example_network());
    CHECK(canon == example_network());
    CHECK(perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("canonicalize sorts by source capacity and remaps all links") {
    const Network net = Network::make(3, {5, 1, 3}, {7, 8, 9},
                                      {{0, 1, 2}, {3, 0, 4}, {5, 6, 0}});
    const auto [canon, perm] = canonicalize(net);
    CHECK(perm == std::vector<int>{1, 2, 0});
    CHECK(canon.cap_from_source == std::vector<int>{1, 3, 5});
    CHECK(canon.cap_to_dest == std::vector<int>{8, 9, 7});
    // new relay 1 = old relay 2, new relay 2 = old relay 3, new relay 3 = old relay 1
    CHECK(canon.relay_link(1, 2) == net.relay_link(2, 3));
    CHECK(canon.relay_link(3, 1) == net.relay_link(1, 2));
}

TEST_CASE("canonicalize keeps tied relays in original order") {
    const Network net = Network::make(3, {2, 2, 2}, {1, 2, 3},
                                      {{0, 1, 2}, {3, 0, 4}, {5, 6, 0}});
    const auto [canon, perm] = canonicalize(net);
    CHECK(perm == std::vector<int>{0, 1, 2});
    CHECK(canon == net);
}

TEST_CASE("canonicalize is idempotent") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Network net = random_network(4, 9, seed);
        const Network once = canonicalize(net).first;
        CHECK(canonicalize(once).first == once);
    }
}

TEST_CASE("reverse swaps roles and transposes relay links") {
    const Network rev = reverse(example_network());
    CHECK(rev.cap_from_source == std::vector<int>{6, 5, 3});
    CHECK(rev.cap_to_dest == std::vector<int>{1, 3, 5});
    CHECK(rev.relay_link(1, 2) == example_network().relay_link(2, 1));
    CHECK(rev.eta == 6);
}

TEST_CASE("reverse fixes symmetric networks") {
    const Network sym = Network::make(2, {3, 4}, {3, 4}, {{0, 2}, {2, 0}});
    CHECK(reverse(sym) == sym);
}

TEST_CASE("reverse is an involution") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Network net = random_network(5, 7, seed);
        CHECK(reverse(reverse(net)) == net);
    }
}

TEST_CASE("random networks are deterministic and in range") {
    const Network zero = random_network(3, 0, 7);
    CHECK(zero.eta == 0);

    CHECK(random_network(2, 5, 1) == random_network(2, 5, 1));
    CHECK(random_network(2, 5, 1) != random_network(2, 5, 2));

    const Network net = random_network(4, 8, 42);
    for (int v : net.cap_from_source) CHECK((v >= 0 && v <= 8));
    for (int v : net.cap_to_dest) CHECK((v >= 0 && v <= 8));
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            CHECK(net.relay_link(i, j) >= 0);
            CHECK(net.relay_link(i, j) <= 8);
        }
    for (int i = 1; i <= 4; ++i) CHECK(net.relay_link(i, i) == 0);

    CHECK_THROWS_AS(random_network(0, 5, 1), input_error);
    CHECK_THROWS_AS(random_network(2, -1, 1), input_error);
}

TEST_CASE("relay set basics") {
    const RelaySet all = RelaySet::full(5);
    CHECK(all.count() == 5);
    CHECK(RelaySet::interval(2, 4).elements() == std::vector<int>{2, 3, 4});
    CHECK(RelaySet::interval(4, 2).empty());
    CHECK(RelaySet::interval(6, 5).empty());  // [n+1 : n]
    CHECK(RelaySet::singleton(3).complement(3).elements() == std::vector<int>{1, 2});
    CHECK((RelaySet::singleton(1) | RelaySet::singleton(3)).mask() == 0b101u);
    CHECK((RelaySet::interval(1, 3) & RelaySet::singleton(2)) == RelaySet::singleton(2));
    CHECK_THROWS_AS(RelaySet::singleton(31), input_error);
}
