#include <doctest.h>

#include "wordeq/partitions.hpp"

using namespace wordeq;

namespace {

std::vector<Word> ground(std::size_t k) {
    std::vector<Word> out;
    for (std::size_t i = 1; i <= k; ++i) out.push_back(parse_word("p" + std::to_string(i)));
    return out;
}

}  // namespace

TEST_CASE("partition normalization relabels blocks by first appearance") {
    const Partition p(ground(3), {7, 7, 2});
    CHECK(p.block_index(0) == 0);
    CHECK(p.block_index(2) == 1);
    CHECK(p.block_count() == 2);
    CHECK(p.same_block(0, 1));
    CHECK(!p.same_block(0, 2));
    CHECK(p.str() == "p1,p2|p3");
    CHECK(p == Partition(ground(3), {0, 0, 1}));
}

TEST_CASE("equality and single-block constructors") {
    CHECK(Partition::equality(ground(3)).block_count() == 3);
    CHECK(Partition::single_block(ground(3)).block_count() == 1);
    CHECK(Partition::equality(ground(1)) == Partition::single_block(ground(1)));
}

TEST_CASE("partition counts follow the Bell numbers") {
    const std::size_t bell[] = {1, 2, 5, 15, 52, 203};
    for (std::size_t k = 1; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(enumerate_partitions(ground(k)).size() == bell[k - 1]);
    }
    const auto parts = enumerate_partitions(ground(3));
    CHECK(parts.front() == Partition::single_block(ground(3)));
    CHECK(parts.back() == Partition::equality(ground(3)));
}

TEST_CASE("meet is the common refinement, join the transitive closure") {
    const Partition p(ground(4), {0, 0, 1, 1});
    const Partition q(ground(4), {0, 1, 1, 0});
    CHECK(meet(p, q) == Partition(ground(4), {0, 1, 2, 3}));
    CHECK(join(p, q) == Partition(ground(4), {0, 0, 0, 0}));

    const Partition r(ground(4), {0, 0, 1, 2});
    CHECK(meet(p, r) == r);
    CHECK(join(p, r) == p);
    CHECK_THROWS_AS(meet(p, Partition(ground(3), {0, 0, 0})), std::invalid_argument);
}

TEST_CASE("lattice laws hold across all partitions of four elements") {
    const auto parts = enumerate_partitions(ground(4));
    for (const Partition& p : parts)
        for (const Partition& q : parts) {
            const Partition m = meet(p, q);
            const Partition j = join(p, q);
            CHECK(m == meet(q, p));
            CHECK(j == join(q, p));
            CHECK(is_finer(m, p));
            CHECK(is_finer(p, j));
            CHECK(meet(p, j) == p);   // absorption
            CHECK(join(p, m) == p);
            // Order agrees with the operations.
            CHECK(is_finer(p, q) == (meet(p, q) == p));
            CHECK(is_finer(p, q) == (join(p, q) == q));
        }
}

TEST_CASE("identity systems of partitions") {
    const Partition p(ground(3), {0, 0, 0});
    const IdentitySystem all = id_of_partition(p);
    CHECK(all.size() == 3);  // one per unordered pair
    CHECK(all.name() == "Id(p1,p2,p3)");
    CHECK(all.contains(parse_identity("p1 = p3")));

    CHECK(id_of_partition(Partition::equality(ground(3))).empty());

    // Id of the meet is the intersection of the Id systems.
    const Partition a(ground(4), {0, 0, 1, 1});
    const Partition b(ground(4), {0, 1, 1, 0});
    const IdentitySystem ma = id_of_partition(a);
    const IdentitySystem mb = id_of_partition(b);
    for (const Identity& id : id_of_partition(meet(a, b))) {
        CHECK(ma.contains(id));
        CHECK(mb.contains(id));
    }
    std::size_t shared = 0;
    for (const Identity& id : ma)
        if (mb.contains(id)) ++shared;
    CHECK(shared == id_of_partition(meet(a, b)).size());
}

TEST_CASE("partition literals parse back") {
    const auto g = ground(3);
    for (const Partition& p : enumerate_partitions(g)) CHECK(parse_partition(p.str(), g) == p);
    CHECK(parse_partition("p2,p3|p1", g) == Partition(g, {0, 1, 1}));

    CHECK_THROWS_AS(parse_partition("p1|p2", g), ParseError);        // p3 missing
    CHECK_THROWS_AS(parse_partition("p1,p1,p2|p3", g), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_partition("p1,p4|p2,p3", g), ParseError);  // unknown
    CHECK_THROWS_AS(parse_partition("", g), ParseError);
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(enumerate_partitions(ground(11)), std::invalid_argument);
}
