#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "gsod/ring.hpp"
#include "gsod/groebner.hpp"

using namespace gsod;

TEST_CASE("weight_of basics") {
    std::vector<int> w{1, -1};
    Monomial m(std::vector<int32_t>{2, 3});
    CHECK(m.weight(w) == -1);
    CHECK(Monomial(2).weight(w) == 0);
    std::vector<int> w4{1, 1, -1, -1};
    Monomial loc(std::vector<int32_t>{-1, -1, 0, 0});
    CHECK(loc.weight(w4) == -2);
    CHECK_THROWS_AS(m.weight(w4), std::invalid_argument);
}

TEST_CASE("polynomial parse/print roundtrip") {
    std::vector<std::string> vars{"x1", "y2", "y1"};
    Polynomial p = parse_polynomial("3*x1^2*y2 - 1/2*y1", vars);
    CHECK(p.nterms() == 2);
    CHECK(to_string(p, vars) == "3*x1^2*y2 - 1/2*y1");
    Polynomial q = parse_polynomial(to_string(p, vars), vars);
    CHECK(p == q);
    CHECK(parse_polynomial("0", vars).is_zero());
    CHECK_THROWS(parse_polynomial("x1 +", vars));
    CHECK_THROWS(parse_polynomial("z", vars));
    Polynomial r = parse_polynomial("x1 y2^2", vars); // '*' optional
    CHECK(r.nterms() == 1);
    CHECK(r.lm().total_degree() == 3);
}

TEST_CASE("homogeneous components") {
    std::vector<std::string> vars{"x", "y"};
    std::vector<int> w{1, -1};
    Polynomial p = parse_polynomial("x + y", vars);
    auto comps = p.homogeneous_components(w);
    CHECK(comps.size() == 2);
    CHECK(comps.at(1) == parse_polynomial("x", vars));
    CHECK(comps.at(-1) == parse_polynomial("y", vars));
    Polynomial sum;
    for (auto& [k, c] : comps) sum += c;
    CHECK(sum == p);
    CHECK(Polynomial().homogeneous_components(w).empty());
    auto both = parse_polynomial("xy + x^2y^2", vars).homogeneous_components(w);
    CHECK(both.size() == 1);
    CHECK(both.count(0) == 1);
}

TEST_CASE("make_graded_ring validation and defaults") {
    auto E1 = make_graded_ring({"x", "y"}, {1, -1});
    CHECK(E1->torus_flag());
    CHECK(E1->iplus().size() == 1);
    CHECK(E1->iminus().size() == 1);
    CHECK(E1->iplus_vars() == std::vector<int>{0});

    auto E3 = make_graded_ring({"x1", "x2", "y1", "y2"}, {1, 1, -1, -1});
    CHECK(E3->iplus().size() == 2);
    CHECK(E3->iminus().size() == 2);

    std::vector<std::string> vars{"x", "y"};
    CHECK_THROWS_AS(make_graded_ring({"x", "y"}, {1, -1},
                                     {parse_polynomial("x + y", vars)}),
                    InputError);
}

TEST_CASE("weight zero hilbert basis") {
    auto E1 = make_graded_ring({"x", "y"}, {1, -1});
    auto hb = E1->weight_zero_hilbert_basis();
    REQUIRE(hb.size() == 1);
    CHECK(hb[0] == Monomial(std::vector<int32_t>{1, 1}));

    auto E3 = make_graded_ring({"x1", "x2", "y1", "y2"}, {1, 1, -1, -1});
    CHECK(E3->weight_zero_hilbert_basis().size() == 4);

    auto E2 = make_graded_ring({"x1", "x2"}, {1, 1});
    CHECK(E2->weight_zero_hilbert_basis().empty());
}

TEST_CASE("ring arithmetic is weight graded") {
    std::vector<std::string> vars{"x", "y"};
    std::vector<int> w{1, -1};
    Polynomial a = parse_polynomial("x^2 + 3x^3y", vars);   // weight 2
    Polynomial b = parse_polynomial("y - 2xy^2", vars);     // weight -1
    CHECK(a.homogeneous_weight(w) == 2);
    CHECK(b.homogeneous_weight(w) == -1);
    CHECK((a * b).homogeneous_weight(w) == 1);
}
