#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gsod/groebner.hpp"
#include "oracles.hpp"

using namespace gsod;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r->vars()); }

GradedMatrix row_matrix(const RingPtr& ring, std::vector<Polynomial> entries,
                        std::vector<int64_t> src_weights, int64_t tgt_weight = 0) {
    GradedMatrix m;
    m.tgt.gen_weights = {tgt_weight};
    m.src.gen_weights = std::move(src_weights);
    m.e.assign(1, std::move(entries));
    m.validate(*ring);
    return m;
}

} // namespace

TEST_CASE("single generator is already a basis") {
    auto R = make_graded_ring({"x1", "x2"}, {1, 1});
    Vec g{P(R, "x2"), P(R, "0-x1")};
    GroebnerBasis gb(*R, {g}, 2);
    REQUIRE(gb.elements().size() == 1);
    CHECK(gb.elements()[0][0] == P(R, "x2"));
    CHECK(gb.elements()[0][1] == P(R, "-x1"));
}

TEST_CASE("flop ideal (x1y1, x1y2): no new leading terms through degree 6") {
    auto R = make_graded_ring({"x1", "x2", "y1", "y2"}, {1, 1, -1, -1});
    std::vector<Polynomial> gens = {P(R, "x1*y1"), P(R, "x1*y2")};
    std::vector<Vec> vgens;
    for (auto& g : gens) vgens.push_back(Vec{g});
    GroebnerBasis gb(*R, vgens, 1);
    CHECK(gb.elements().size() == 2);
    // Oracle: the staircase of the claimed basis accounts for the full
    // degree-D piece of the ideal for all D <= 6.
    for (int64_t D = 1; D <= 6; ++D) {
        std::size_t staircase = 0;
        for (const auto& m : oracle::monomials_of_degree(4, D)) {
            bool divisible = false;
            for (const auto& el : gb.elements())
                if (el[0].lm().divides(m)) { divisible = true; break; }
            if (divisible) ++staircase;
        }
        CHECK(staircase == oracle::macaulay_dim(4, gens, D));
    }
}

TEST_CASE("ideal (x^2, xy) with nf(x^2 y) = 0") {
    auto R = make_graded_ring({"x", "y"}, {1, 1});
    GroebnerBasis gb(*R, {Vec{P(R, "x^2")}, Vec{P(R, "x*y")}}, 1);
    CHECK(gb.elements().size() == 2);
    CHECK(gb.contains(Vec{P(R, "x^2*y")}));
    for (int64_t D = 2; D <= 6; ++D) {
        std::size_t staircase = 0;
        for (const auto& m : oracle::monomials_of_degree(2, D)) {
            bool divisible = false;
            for (const auto& el : gb.elements())
                if (el[0].lm().divides(m)) { divisible = true; break; }
            if (divisible) ++staircase;
        }
        CHECK(staircase == oracle::macaulay_dim(2, {P(R, "x^2"), P(R, "x*y")}, D));
    }
}

TEST_CASE("normal form examples") {
    auto R = make_graded_ring({"x", "y"}, {1, -1});
    {
        GroebnerBasis gb(*R, {Vec{P(R, "x*y")}}, 1);
        CHECK(gb.normal_form(Vec{P(R, "x^2*y^2")})[0].is_zero());
    }
    {
        GroebnerBasis gb(*R, {Vec{P(R, "y")}}, 1);
        CHECK(gb.normal_form(Vec{P(R, "x")})[0] == P(R, "x"));
    }
    {
        auto R2 = make_graded_ring({"x1", "x2"}, {1, 1});
        // nf(x2^2 e1) against {x2 e1 - x1 e2} -> x1 x2 e2
        GroebnerBasis gb(*R2, {Vec{P(R2, "x2"), P(R2, "-x1")}}, 2);
        Vec v{P(R2, "x2^2"), P(R2, "0")};
        Vec nf = gb.normal_form(v);
        CHECK(nf[0].is_zero());
        CHECK(nf[1] == P(R2, "x1*x2"));
        // idempotent
        Vec nf2 = gb.normal_form(nf);
        CHECK(nf2[0] == nf[0]);
        CHECK(nf2[1] == nf[1]);
    }
}

TEST_CASE("kernel of (x1 x2) over Q[x1,x2] is the Koszul syzygy") {
    auto R = make_graded_ring({"x1", "x2"}, {1, 1});
    GradedMatrix m = row_matrix(R, {P(R, "x1"), P(R, "x2")}, {1, 1});
    GradedMatrix k = kernel(*R, m);
    REQUIRE(k.src.rank() == 1);
    CHECK(k.src.gen_weights[0] == 2);
    // Column is (x2, -x1) up to sign.
    bool plus = k.e[0][0] == P(R, "x2") && k.e[1][0] == P(R, "-x1");
    bool minus = k.e[0][0] == P(R, "-x2") && k.e[1][0] == P(R, "x1");
    CHECK((plus || minus));
    // Rank check per weight j <= 6: dim ker (A_{j-1})^2 -> A_j == dim A_{j-2}.
    for (int64_t j = 2; j <= 6; ++j) {
        auto dom1 = oracle::monomials_of_degree(2, j - 1);
        auto codom = oracle::monomials_of_degree(2, j);
        oracle::QMatrix rows;
        for (int which = 0; which < 2; ++which)
            for (const auto& mm : dom1)
                rows.push_back(oracle::coeff_row(
                    (which == 0 ? P(R, "x1") : P(R, "x2")).term_mul(Rational(1), mm), codom));
        std::size_t kerdim = 2 * dom1.size() - oracle::rank(rows);
        CHECK(kerdim == oracle::monomials_of_degree(2, j - 2).size());
    }
}

TEST_CASE("kernel of identity and of a nonzerodivisor is zero") {
    auto R = make_graded_ring({"x", "y"}, {1, -1});
    GradedMatrix id = GradedMatrix::identity(FreeModule{{3}}, R->nvars());
    CHECK(kernel(*R, id).src.rank() == 0);
    GradedMatrix m = row_matrix(R, {P(R, "x")}, {1});
    CHECK(kernel(*R, m).src.rank() == 0);
}

TEST_CASE("free resolutions") {
    auto R = make_graded_ring({"x1", "x2"}, {1, 1});
    SUBCASE("Koszul shape for A/(x1,x2)") {
        GradedMatrix pres = row_matrix(R, {P(R, "x1"), P(R, "x2")}, {1, 1});
        Resolution res = free_resolution(*R, pres, 12);
        CHECK(!res.truncated);
        REQUIRE(res.steps.size() == 2);
        CHECK(res.steps[0].tgt.rank() == 1);
        CHECK(res.steps[0].src.rank() == 2);
        CHECK(res.steps[1].src.rank() == 1);
        CHECK(res.steps[1].src.gen_weights[0] == 2);
        // d compose d = 0
        CHECK(mat_mul(res.steps[0], res.steps[1]).is_zero());
    }
    SUBCASE("free module resolves as itself") {
        GradedMatrix pres = GradedMatrix::zero(FreeModule{}, FreeModule{{5}});
        Resolution res = free_resolution(*R, pres, 12);
        CHECK(res.steps.size() == 1);
        CHECK(res.steps[0].src.rank() == 0);
    }
    SUBCASE("A/(xy) over the (1,-1) ring: one step") {
        auto R1 = make_graded_ring({"x", "y"}, {1, -1});
        GradedMatrix pres = row_matrix(R1, {P(R1, "x*y")}, {0});
        Resolution res = free_resolution(*R1, pres, 12);
        CHECK(res.steps.size() == 1);
        CHECK(res.steps[0].src.rank() == 1);
    }
}

TEST_CASE("resolution exactness via kernel/image comparison") {
    auto R = make_graded_ring({"x1", "x2", "y1", "y2"}, {1, 1, -1, -1});
    GradedMatrix pres = row_matrix(R, {P(R, "x1*y1"), P(R, "x1*y2"), P(R, "x2*y1")},
                                   {0, 0, 0});
    Resolution res = free_resolution(*R, pres, 12);
    CHECK(!res.truncated);
    for (std::size_t k = 0; k + 1 < res.steps.size(); ++k) {
        CHECK(mat_mul(res.steps[k], res.steps[k + 1]).is_zero());
        // ker(steps[k]) == im(steps[k+1]) over A: mutual membership.
        GradedMatrix ker_k = kernel(*R, res.steps[k]);
        std::vector<Vec> img;
        for (std::size_t j = 0; j < res.steps[k + 1].src.rank(); ++j)
            img.push_back(res.steps[k + 1].column(j));
        GroebnerBasis img_gb(*R, img, res.steps[k + 1].tgt.rank());
        for (std::size_t j = 0; j < ker_k.src.rank(); ++j)
            CHECK(img_gb.contains(ker_k.column(j)));
        std::vector<Vec> kv;
        for (std::size_t j = 0; j < ker_k.src.rank(); ++j) kv.push_back(ker_k.column(j));
        GroebnerBasis ker_gb(*R, kv, ker_k.tgt.rank());
        for (const auto& v : img) CHECK(ker_gb.contains(v));
    }
    // Minimality: no unit entries anywhere.
    for (const auto& s : res.steps)
        for (const auto& row : s.e)
            for (const auto& p : row)
                CHECK((p.is_zero() || !p.lm().is_one()));
}

TEST_CASE("determinism of reduced bases") {
    auto R = make_graded_ring({"x", "y", "z"}, {1, 1, 1});
    std::vector<Vec> gens = {Vec{P(R, "x^2 - y*z")}, Vec{P(R, "x*y + z^2")}, Vec{P(R, "y^3 - x*z^2")}};
    GroebnerBasis a(*R, gens, 1), b(*R, gens, 1);
    REQUIRE(a.elements().size() == b.elements().size());
    for (std::size_t i = 0; i < a.elements().size(); ++i)
        CHECK(a.elements()[i][0] == b.elements()[i][0]);
}

TEST_CASE("lift expresses members in the original generators") {
    auto R = make_graded_ring({"x", "y"}, {1, -1});
    std::vector<Vec> gens = {Vec{P(R, "x^2")}, Vec{P(R, "x*y")}};
    GroebnerBasis gb(*R, gens, 1, /*track=*/true);
    Vec v{P(R, "x^3*y + x^2*y^2")};
    auto c = gb.lift(v);
    REQUIRE(c.has_value());
    Polynomial recomb = (*c)[0] * P(R, "x^2") + (*c)[1] * P(R, "x*y");
    CHECK(recomb == v[0]);
    CHECK(!gb.lift(Vec{P(R, "y")}).has_value());
}

TEST_CASE("membership over quotient rings lifts J") {
    // A = Q[x,y]/(xy): x is a zerodivisor; (x) contains x*y^5.
    auto R = make_graded_ring({"x", "y"}, {1, -1}, {parse_polynomial("x*y", {"x", "y"})});
    GroebnerBasis gb(*R, {Vec{P(R, "x^2")}}, 1);
    CHECK(gb.contains(Vec{P(R, "x^2*y^3")}));
    CHECK(!gb.contains(Vec{P(R, "x")}));
    // kernel of x: A(-1) -> A picks up the annihilator (y).
    GradedMatrix m = row_matrix(R, {P(R, "x")}, {1});
    GradedMatrix k = kernel(*R, m);
    REQUIRE(k.src.rank() == 1);
    CHECK(k.e[0][0] == P(R, "y"));
}

TEST_CASE("randomized soundness vs Macaulay oracle (small batch)") {
    std::mt19937_64 rng(12345);
    auto R = make_graded_ring({"x", "y", "z"}, {1, 1, 1});
    auto random_poly = [&](int64_t deg) {
        Polynomial p;
        for (const auto& m : oracle::monomials_of_degree(3, deg)) {
            int c = int(rng() % 5) - 2;
            if (c != 0) p += Polynomial::monomial(m, Rational(c));
        }
        return p;
    };
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Polynomial> gens;
        int ngens = 1 + int(rng() % 3);
        for (int i = 0; i < ngens; ++i) {
            auto g = random_poly(1 + rng() % 3);
            if (!g.is_zero()) gens.push_back(g);
        }
        if (gens.empty()) continue;
        std::vector<Vec> vg;
        for (auto& g : gens) vg.push_back(Vec{g});
        GroebnerBasis gb(*R, vg, 1);
        for (int64_t D = 1; D <= 6; ++D) {
            // Probe a few random elements of degree D plus a known member.
            for (int probe = 0; probe < 3; ++probe) {
                Polynomial f = random_poly(D);
                bool viags = gb.contains(Vec{f});
                bool viamac = oracle::macaulay_member(3, gens, f, D);
                CHECK(viags == viamac);
            }
            if (gens[0].total_degree() <= D) {
                Polynomial member = gens[0] * random_poly(D - gens[0].total_degree());
                CHECK(gb.contains(Vec{member}));
            }
        }
    }
}
