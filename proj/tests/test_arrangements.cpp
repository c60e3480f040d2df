#include <doctest.h>

#include "arrangements.hpp"
#include "error.hpp"

using namespace mwplet;

TEST_CASE("partition enumeration") {
    auto p3 = partitions3(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition3{3, 0, 0});
    CHECK(p3[1] == Partition3{2, 1, 0});
    CHECK(p3[2] == Partition3{1, 1, 1});
    CHECK(partitions3(7).size() == 8);
}

TEST_CASE("diagram counts agree along all three routes") {
    CHECK(young_count(1) == 1);
    CHECK(young_count(2) == 2);
    CHECK(young_count(3) == 3);
    CHECK(young_count(6) == 7);
    CHECK(young_count(7) == 8);
    for (long k = 1; k <= 60; ++k) CHECK(young_count(k) >= 1);
}

TEST_CASE("weak arrangement of type 2") {
    NTArrangement arr = build_arrangement(2, Partition3{1, 1, 0}, ArrangementKind::Weak);
    REQUIRE(arr.members.size() == 2);
    CHECK(arr.members[0].group == 1);
    CHECK(arr.members[1].group == 2);
    CHECK(arr.census.tacnodes == 8);
}

TEST_CASE("full arrangement of type 3 across all families") {
    NTArrangement arr = build_arrangement(3, Partition3{1, 1, 1}, ArrangementKind::Full);
    REQUIRE(arr.members.size() == 3);
    CHECK(arr.census.quartic_nodes == 4);
    CHECK(arr.census.tacnodes == 12);
    CHECK(arr.census.member_nodes == 12);
    CHECK(arr.census.other == 0);
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(build_arrangement(3, Partition3{1, 1, 0}, ArrangementKind::Full),
                    MwpError);
    CHECK_THROWS_AS(build_arrangement(3, Partition3{0, 1, 2}, ArrangementKind::Full),
                    MwpError);
    CHECK_THROWS_AS(build_arrangement(2, Partition3{1, 1, 0}, ArrangementKind::Full),
                    MwpError);
}

TEST_CASE("cover predicate reduces to family equality, any odd prime") {
    NTArrangement arr = build_arrangement(3, Partition3{2, 1, 0}, ArrangementKind::Full);
    CHECK(cover_exists(arr, 0, 1, 3));
    CHECK_FALSE(cover_exists(arr, 0, 2, 3));
    CHECK(cover_exists(arr, 0, 1, 5) == cover_exists(arr, 0, 1, 3));
    CHECK_THROWS_AS(cover_exists(arr, 0, 0, 3), MwpError);
    CHECK_THROWS_AS(cover_exists(arr, 0, 1, 4), MwpError);
    CHECK_THROWS_AS(cover_exists(arr, 0, 9, 3), MwpError);
}

TEST_CASE("plet certification at k = 3") {
    PletCertificate cert = certify_plet(3, 3);
    CHECK(cert.entries.size() == 3);
    CHECK(cert.pairwise_distinct);
    CHECK(cert.entries[0].invariant == std::array<long, 3>{3, 0, 0});
    CHECK(cert.entries[1].invariant == std::array<long, 3>{2, 1, 0});
    CHECK(cert.entries[2].invariant == std::array<long, 3>{1, 1, 1});
    CHECK_THROWS_AS(certify_plet(2, 3), MwpError);
}
