#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relaysched/cut_table.hpp"
#include "relaysched/errors.hpp"
#include "relaysched/properties.hpp"
#include "test_support.hpp"

using namespace relaysched;
using test_support::example_network;

TEST_CASE("transfer matrix layout for a mixed cut/state pair") {
    // omega = {3}, state = {2,3}: inputs {s,3}, outputs {d,1}; eta = 6.
    const Network net = example_network();
    const Gf2Matrix f = transfer_matrix(net, RelaySet::singleton(3),
                                        RelaySet{0b110});
    CHECK(f.rows() == 12);
    CHECK(f.cols() == 12);
    const Gf2Matrix expected = block_assemble({
        {shift_block(6, 0), shift_block(6, net.to_dest(3))},
        {shift_block(6, net.from_source(1)), shift_block(6, net.relay_link(1, 3))},
    });
    CHECK(f == expected);
    CHECK(f.rank() == 4);
}

TEST_CASE("transfer matrix degenerate shapes") {
    const Network net = example_network();
    // everything on the source side and transmitting: single row band
    const Gf2Matrix top = transfer_matrix(net, RelaySet::full(3), RelaySet::full(3));
    CHECK(top.rows() == 6);
    CHECK(top.cols() == 24);
    // everything receiving on the destination side: single column band
    const Gf2Matrix left = transfer_matrix(net, RelaySet{}, RelaySet{});
    CHECK(left.rows() == 24);
    CHECK(left.cols() == 6);

    CHECK_THROWS_AS(transfer_matrix(net, RelaySet::singleton(4), RelaySet{}), input_error);
}

TEST_CASE("rank lower bound") {
    const Network net = example_network();
    CHECK(rank_lower_bound(net, RelaySet::interval(2, 3), RelaySet::singleton(2)) == 6);
    CHECK(rank_lower_bound(net, RelaySet::full(3), RelaySet{}) == 0);
    // strict inequality case: bound 6, true rank 7
    CHECK(rank_lower_bound(net, RelaySet::singleton(3), RelaySet::singleton(3)) == 6);
    CHECK(transfer_matrix(net, RelaySet::singleton(3), RelaySet::singleton(3)).rank() == 7);
}

TEST_CASE("cut values on the reference network") {
    CutValueTable table(example_network());
    CHECK(table.cut_value(RelaySet::interval(1, 3), RelaySet::singleton(1)) == 6);
    CHECK(table.cut_value(RelaySet::interval(3, 3), RelaySet::singleton(2)) == 1);
    CHECK(table.cut_value(RelaySet::singleton(3), RelaySet::singleton(3)) == 7);
    CHECK(table.cut_value(RelaySet::interval(2, 3), RelaySet::singleton(2)) == 6);
}

TEST_CASE("cut value rows match the reference table") {
    CutValueTable table(example_network());
    CHECK(table.cut_value_row(1) == std::vector<int>{6, 5, 3, 0});
    CHECK(table.cut_value_row(2) == std::vector<int>{0, 6, 4, 1});
    CHECK(table.cut_value_row(3) == std::vector<int>{3, 1, 7, 3});
    CHECK(table.cut_value_row(4) == std::vector<int>{5, 5, 3, 5});
    CHECK_THROWS_AS(table.cut_value_row(0), input_error);
    CHECK_THROWS_AS(table.cut_value_row(5), input_error);
}

TEST_CASE("empty-cut row ends with the largest source capacity") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Network net = canonicalize(random_network(4, 9, seed)).first;
        CutValueTable table(net);
        CHECK(table.cut_value_row(5).back() == net.from_source(4));
    }
}

TEST_CASE("zero-capacity network has all-zero cut values") {
    CutValueTable table(random_network(3, 0, 1));
    for (std::uint32_t om = 0; om < 8; ++om)
        for (std::uint32_t st = 0; st < 8; ++st)
            CHECK(table.cut_value(RelaySet{om}, RelaySet{st}) == 0);
}

TEST_CASE("fast path always agrees with the matrix rank") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const Network net = random_network(4, 7, seed);
        CutValueTable table(net);
        for (std::uint32_t om = 0; om < 16; ++om)
            for (std::uint32_t st = 0; st < 16; ++st) {
                const int via_table = table.cut_value(RelaySet{om}, RelaySet{st});
                const int via_rank = transfer_matrix(net, RelaySet{om}, RelaySet{st}).rank();
                CHECK(via_table == via_rank);
            }
    }
}

TEST_CASE("property battery holds on the reference and random networks") {
    CHECK(all_passed(run_property_battery(example_network())));
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const auto results = run_property_battery(random_network(3, 8, seed), seed);
        for (const auto& r : results) {
            INFO(r.name, " seed=", seed, " ", r.detail);
            CHECK(r.pass);
        }
    }
}
