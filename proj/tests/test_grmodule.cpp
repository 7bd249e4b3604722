#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsod/module.hpp"
#include "gsod/multigraded.hpp"
#include "oracles.hpp"

using namespace gsod;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r->vars()); }
RingPtr E1() { return make_graded_ring({"x", "y"}, {1, -1}); }
RingPtr E2() { return make_graded_ring({"x1", "x2"}, {1, 1}); }
} // namespace

TEST_CASE("twist conventions") {
    auto r = E1();
    auto A = ModulePresentation::free_module(r, {0}, "A");
    auto Am1 = twist(A, -1);
    CHECK(Am1.pres.tgt.gen_weights[0] == 1); // A(-1) generated in weight 1
    auto back = twist(twist(Am1, 5), -5);
    CHECK(back.pres.tgt.gen_weights == Am1.pres.tgt.gen_weights);

    // character of A(-2) over Q[x1,x2] at weight 3 is dim A_1 = 2
    auto r2 = E2();
    auto Am2 = twist(ModulePresentation::free_module(r2, {0}), -2);
    auto d = module_piece_dim(Am2, 3);
    REQUIRE(d.has_value());
    CHECK(*d == 2);
}

TEST_CASE("ring piece enumeration certificates") {
    auto r1 = E1();
    CHECK(!ring_piece_basis(*r1, 0).has_value()); // infinite: free A0-module
    auto r2 = E2();
    auto b = ring_piece_basis(*r2, 3);
    REQUIRE(b.has_value());
    CHECK(b->size() == 4);
    CHECK(ring_piece_basis(*r2, -1)->empty());

    // quotient with a pure power: finite pieces appear
    auto rq = make_graded_ring({"x", "y"}, {1, 1}, {parse_polynomial("x^2", {"x", "y"})});
    auto bq = ring_piece_basis(*rq, 5);
    REQUIRE(bq.has_value());
    CHECK(bq->size() == 2); // x y^4, y^5
}

TEST_CASE("character tables") {
    auto r1 = E1();
    auto A = ModulePresentation::free_module(r1, {0}, "A");
    auto ch = character(A, -2, 2);
    for (int64_t i = -2; i <= 2; ++i) {
        CHECK(!ch.entries.at(i).finite);
        CHECK(ch.entries.at(i).descriptor == "f.g. A0-module on 1 generator(s)");
    }
    auto r2 = E2();
    auto k = ModulePresentation::cyclic(r2, {P(r2, "x1"), P(r2, "x2")});
    auto chk = character(k, -2, 2);
    CHECK(chk.entries.at(0) == CharEntry::exact(1));
    CHECK(chk.entries.at(1) == CharEntry::exact(0));
    CHECK(chk.entries.at(-1) == CharEntry::exact(0));

    auto qy = ModulePresentation::cyclic(r1, {P(r1, "x")});
    auto chq = module_character(qy, -3, 0);
    for (int64_t i = -3; i <= 0; ++i) CHECK(chq.entries.at(i) == CharEntry::exact(1));
    CHECK(module_character(qy, 1, 2).entries.at(1) == CharEntry::exact(0));
}

TEST_CASE("window generators of truncations") {
    auto r1 = E1();
    auto A1 = ModulePresentation::free_module(r1, {0}, "A");
    auto g1 = window_generators(truncate_geq(A1, 1));
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].weight == 1);
    CHECK(g1[0].element[0] == P(r1, "x"));

    auto g0 = window_generators(truncate_geq(A1, 0));
    REQUIRE(g0.size() == 1);
    CHECK(g0[0].weight == 0);
    CHECK(g0[0].element[0] == P(r1, "1"));

    auto r2 = E2();
    auto A2 = ModulePresentation::free_module(r2, {0}, "A");
    auto g2 = window_generators(truncate_geq(A2, 1));
    REQUIRE(g2.size() == 2);
    CHECK(g2[0].weight == 1);
    CHECK(g2[1].weight == 1);

    // Q[y] = A/(x) lives in weights <= 0: the window >= 1 is zero.
    auto qy = ModulePresentation::cyclic(r1, {P(r1, "x")});
    CHECK(window_generators(truncate_geq(qy, 1)).empty());

    auto zrep = is_fg_window(truncate_geq(ModulePresentation::zero(r1), 0));
    CHECK(zrep.is_fg);
    CHECK(zrep.generators.empty());
}

TEST_CASE("window generators actually generate (character comparison)") {
    auto r2 = E2();
    auto A2 = ModulePresentation::free_module(r2, {0}, "A");
    for (int64_t w : {0, 1, 2}) {
        auto gens = window_generators(truncate_geq(A2, w));
        // Map from the free window module on the generators into A.
        GradedMatrix phi;
        phi.tgt = A2.pres.tgt;
        for (const auto& g : gens) phi.src.gen_weights.push_back(g.weight);
        phi.e.assign(1, {});
        for (const auto& g : gens) phi.e[0].push_back(g.element[0]);
        phi.validate(*r2);
        for (int64_t j = w; j <= w + 8; ++j) {
            auto mj = matrix_at_weight(*r2, phi, j);
            REQUIRE(mj.has_value());
            auto full = module_piece_dim(A2, j);
            REQUIRE(full.has_value());
            CHECK(int64_t(qmat_rank(*mj)) == *full);
        }
    }
}

TEST_CASE("hom in weight zero") {
    auto r1 = E1();
    auto qy = ModulePresentation::cyclic(r1, {P(r1, "x")}, "A/(x)");
    SUBCASE("torsion source into torsion-free target vanishes") {
        auto Am1 = twist(ModulePresentation::free_module(r1, {0}), -1);
        // pieces of A(-1) are infinite over A0, but the hom is still decided
        // by the descriptor path? No: target pieces infinite -> descriptor.
        auto h = hom_weight0(qy, Am1);
        if (h.finite) CHECK(h.dim == 0);
    }
    SUBCASE("representable: Hom(A, M) = M_0") {
        auto r2 = E2();
        auto A2 = ModulePresentation::free_module(r2, {0});
        auto k = ModulePresentation::cyclic(r2, {P(r2, "x1"), P(r2, "x2")});
        auto h = hom_weight0(A2, k);
        REQUIRE(h.finite);
        CHECK(h.dim == 1);
        auto h2 = hom_weight0(A2, twist(A2, 3));
        REQUIRE(h2.finite);
        CHECK(h2.dim == 4); // (A(3))_0 = A_3 over Q[x1,x2]
    }
    SUBCASE("endomorphisms of A/(x) over a finite-piece quotient") {
        // Work over A=Q[x,y]/(x^2), weights (1,-1): pieces are finite.
        auto rq = make_graded_ring({"x", "y"}, {1, -1},
                                   {parse_polynomial("x^2", {"x", "y"})});
        auto m = ModulePresentation::cyclic(rq, {P(rq, "x")});
        auto h = hom_weight0(m, m);
        REQUIRE(h.finite);
        CHECK(h.dim >= 1); // contains the identity
    }
}

TEST_CASE("window equality ignores data below the cutoff") {
    // M = A/(x) (weights <= 0) and N = 0 agree in weights >= 1.
    auto r1 = E1();
    auto qy = ModulePresentation::cyclic(r1, {P(r1, "x")});
    auto z = ModulePresentation::zero(r1);
    for (int64_t j = 1; j <= 6; ++j) {
        auto a = piece_dim(qy, j);
        auto b = piece_dim(z, j);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(*a == *b);
    }
    CHECK(window_generators(truncate_geq(qy, 1)).empty());
    CHECK(window_generators(truncate_geq(z, 1)).empty());
}
