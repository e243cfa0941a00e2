#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncprob/ncpart.hpp"

using namespace ncprob;

TEST_CASE("catalan counts") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(catalan(4) == 14);
    CHECK(catalan(10) == 16796);
}

TEST_CASE("enumeration size matches catalan") {
    for (std::size_t n = 1; n <= 9; ++n)
        CHECK(enumerate_nc(n).size() == static_cast<std::size_t>(catalan(n)));
}

TEST_CASE("noncrossing predicate") {
    CHECK(is_noncrossing(4, {{1, 2}, {3, 4}}));
    CHECK(is_noncrossing(4, {{1, 4}, {2, 3}}));
    CHECK_FALSE(is_noncrossing(4, {{1, 3}, {2, 4}}));
    CHECK_THROWS(NcPartition(4, {{1, 3}, {2, 4}}));
    CHECK_THROWS(NcPartition(3, {{1, 2}}));       // not a partition of {1,2,3}
    CHECK_THROWS(NcPartition(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("kreweras matches the brute-force oracle") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& pi : enumerate_nc(n))
            CHECK(kreweras(pi) == kreweras_bruteforce(pi));
}

TEST_CASE("kreweras block-count identity") {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& pi : enumerate_nc(n))
            CHECK(pi.blocks().size() + kreweras(pi).blocks().size() == n + 1);
}

TEST_CASE("kreweras fixed values") {
    NcPartition pi(3, {{1, 2}, {3}});
    CHECK(kreweras(pi) == NcPartition(3, {{1}, {2, 3}}));
    CHECK(kreweras(NcPartition::minimum(4)) == NcPartition::maximum(4));
    CHECK(kreweras(NcPartition::maximum(4)) == NcPartition::minimum(4));
}

TEST_CASE("kreweras is a lattice anti-isomorphism on samples") {
    for (const auto& sig : enumerate_nc(5))
        for (const auto& pi : enumerate_nc(5))
            if (leq(sig, pi)) CHECK(leq(kreweras(pi), kreweras(sig)));
}

TEST_CASE("relative kreweras block-count identity") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& pi : enumerate_nc(n))
            for (const auto& sig : enumerate_nc(n)) {
                if (!leq(sig, pi)) continue;
                CHECK(sig.blocks().size() + relative_kreweras(sig, pi).blocks().size() ==
                      n + pi.blocks().size());
            }
}

TEST_CASE("relative kreweras at the top is the plain complement") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& sig : enumerate_nc(n))
            CHECK(relative_kreweras(sig, NcPartition::maximum(n)) == kreweras(sig));
}

TEST_CASE("mobius of the full interval") {
    // mu(0_n, 1_n) = (-1)^(n-1) * catalan(n-1)
    for (std::size_t n = 1; n <= 7; ++n) {
        Rat expect = Rat(catalan(n - 1)) * ((n % 2 == 1) ? 1 : -1);
        CHECK(mobius(NcPartition::minimum(n), NcPartition::maximum(n)) == expect);
    }
    CHECK(mobius(NcPartition::minimum(3), NcPartition::maximum(3)) == 2);
}

TEST_CASE("mobius satisfies the defining axioms") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto all = enumerate_nc(n);
        for (const auto& pi : all)
            for (const auto& rho : all) {
                if (!leq(rho, pi)) continue;
                Rat sum(0);
                for (const auto& sig : interval(rho, pi).elements) sum += mobius(sig, pi);
                CHECK(sum == (rho == pi ? 1 : 0));
            }
    }
}

TEST_CASE("interval contents") {
    auto iv = interval(NcPartition::minimum(3), NcPartition::maximum(3));
    CHECK(iv.elements.size() == 5);
    auto iv2 = interval(NcPartition(3, {{1, 2}, {3}}), NcPartition::maximum(3));
    CHECK(iv2.elements.size() == 2);
}

TEST_CASE("enumeration over an arbitrary point set") {
    auto parts = enumerate_nc_of({2, 5, 7, 8});
    CHECK(parts.size() == 14);
    for (const auto& blocks : parts) {
        std::size_t total = 0;
        for (const auto& b : blocks) total += b.size();
        CHECK(total == 4);
    }
}
