#include <doctest.h>

#include <set>

#include "endostar/rng.hpp"
#include "endostar/suites.hpp"
#include "helpers.hpp"

using namespace endostar;
using namespace endostar::testing;

TEST_CASE("phi iterates") {
    auto Z = make_instance("shift-z");
    CHECK(Z->phi_pow(zv({{0, 1}}), 2) == zv({{2, 1}}));
    CHECK(Z->phi_pow(zv({{0, 1}, {2, -3}}), 0) == zv({{0, 1}, {2, -3}}));

    auto F = make_instance("free-shift");
    CHECK(F->phi_pow(fw({1, -2}), 1) == fw({2, -3}));
    CHECK(F->phi_pow(fw({1, -2}), 0) == fw({1, -2}));

    auto T = make_instance("times2");
    CHECK(T->phi_pow(iv(3), 4) == iv(48));
}

TEST_CASE("phi preimages") {
    auto Z = make_instance("shift-z");
    CHECK(Z->phi_preimage(zv({{2, 5}}), 2) == zv({{0, 5}}));
    CHECK(!Z->phi_preimage(zv({{0, 1}}), 1).has_value());

    auto T = make_instance("times2");
    CHECK(T->phi_preimage(iv(6), 1) == iv(3));
    CHECK(!T->phi_preimage(iv(6), 2).has_value());

    auto F = make_instance("free-shift");
    CHECK(F->phi_preimage(fw({2, -3}), 1) == fw({1, -2}));
    CHECK(!F->phi_preimage(fw({1}), 1).has_value());
}

TEST_CASE("lattice membership") {
    auto Z = make_instance("shift-z");
    CHECK(Z->member(zv({{1, 3}}), phiG(1)));
    CHECK(!Z->member(zv({{0, 1}}), phiG(1)));
    CHECK(Z->member(zv({{0, 2}}), phiH(0)));
    CHECK(!Z->member(zv({{0, 1}}), phiH(0)));
    CHECK(Z->member(Z->identity(), phiH(2)));

    auto F = make_instance("free-shift");
    CHECK(F->member(fw({3, 4}), phiG(2)));
    CHECK(!F->member(fw({2, 3}), phiG(2)));
    CHECK(F->member(F->identity(), phiG(5)));

    auto T = make_instance("times2", {"G", "H3"});
    CHECK(T->member(iv(12), phiG(2)));
    CHECK(!T->member(iv(12), phiG(3)));
    CHECK(T->member(iv(-6), phiH(1))); // 3 * 2^1 divides -6
    CHECK(T->member(T->identity(), phiH(3)));
}

TEST_CASE("homomorphism and injectivity of phi on random samples") {
    for (const char* id : {"shift-z", "free-shift", "times2"}) {
        auto G = make_instance(id);
        auto elems = enumerate_n(*G, 200);
        Rng rng(7);
        for (int i = 0; i < 1200; ++i) {
            const auto& x = elems[rng.below(elems.size())];
            const auto& y = elems[rng.below(elems.size())];
            CHECK(G->phi(G->mul(x, y)) == G->mul(G->phi(x), G->phi(y)));
            if (G->phi(x) == G->phi(y)) CHECK(x == y);
        }
        // group axioms while we are at it
        for (int i = 0; i < 400; ++i) {
            const auto& x = elems[rng.below(elems.size())];
            const auto& y = elems[rng.below(elems.size())];
            const auto& z = elems[rng.below(elems.size())];
            CHECK(G->mul(G->mul(x, y), z) == G->mul(x, G->mul(y, z)));
            CHECK(G->mul(x, G->inv(x)) == G->identity());
        }
    }
}

TEST_CASE("phi_preimage inverts phi_pow; membership matches preimages") {
    for (const char* id : {"shift-z", "free-shift", "times2"}) {
        auto G = make_instance(id);
        auto elems = enumerate_n(*G, 150);
        for (const auto& g : elems)
            for (int n = 0; n <= 6; ++n) {
                auto back = G->phi_preimage(G->phi_pow(g, n), n);
                REQUIRE(back.has_value());
                CHECK(*back == g);
                CHECK(G->member(g, G->phi_power_subgroup(n)) ==
                      G->phi_preimage(g, n).has_value());
            }
    }
}

TEST_CASE("enumeration is deterministic, duplicate-free, starts at identity") {
    for (const char* id : {"shift-z", "free-shift", "times2"}) {
        auto G = make_instance(id);
        auto a = enumerate_n(*G, 500);
        auto b = enumerate_n(*G, 500);
        CHECK(a == b);
        CHECK(a.front() == G->identity());
        std::set<std::string> seen;
        for (const auto& g : a) CHECK(seen.insert(g.key()).second);
    }
}

TEST_CASE("purity probes") {
    auto Z = make_instance("shift-z");
    auto pz = purity_probe(*Z, 5, 1000);
    CHECK(pz.ok());

    auto T = make_instance("times2");
    auto pt = purity_probe(*T, 10, 201); // elements with |x| <= 100
    CHECK(pt.ok());
    CHECK(pt.deepest_survival < 10);

    // a window wide enough to contain 2^10 flags that element, so probe
    // windows must respect the power budget
    auto deep = purity_probe(*T, 10, 4096);
    CHECK(!deep.ok());
}

TEST_CASE("phi-power hypothesis check") {
    auto ZH = make_instance("shift-z", {"G", "H"});
    auto h1 = check_phi_power_hypothesis(*ZH);
    CHECK(h1.holds);
    CHECK(h1.k == 1); // phi(G) sits inside H

    auto Z = make_instance("shift-z", {"G"});
    CHECK(check_phi_power_hypothesis(*Z).k == 0);

    auto bad = make_instance("times2", {"G", "H3"});
    auto h2 = check_phi_power_hypothesis(*bad);
    CHECK(!h2.holds);
    REQUIRE(h2.failures.size() == 1);
    CHECK(h2.failures[0].first == "H3");
    // a certifying escape witness for every probed power
    CHECK(h2.failures[0].second.size() == 7);
}

TEST_CASE("instance configuration errors") {
    CHECK_THROWS_AS(make_instance("nope"), Error);
    CHECK_THROWS_AS(make_instance("shift-z", {"H"}), Error);         // must start with G
    CHECK_THROWS_AS(make_instance("free-shift", {"G", "H"}), Error); // no extra base
}
