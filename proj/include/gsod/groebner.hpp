#pragma once

#include <optional>

#include "gsod/ring.hpp"

namespace gsod {

// Free graded module: generator k spans a copy of A(-a_k), generated in
// weight a_k.
struct FreeModule {
    std::vector<int64_t> gen_weights;

    std::size_t rank() const { return gen_weights.size(); }
    bool operator==(const FreeModule&) const = default;
};

// Element of a free module: one polynomial per generator.
using Vec = std::vector<Polynomial>;

bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scaled(const Vec& a, const Rational& c);
Vec vec_term_mul(const Vec& a, const Rational& c, const Monomial& m);
Vec vec_zero(std::size_t rank);

// Weight of a homogeneous vector in the free module with generator weights gw:
// component k of weight t contributes t + gw[k]. nullopt if inhomogeneous.
std::optional<int64_t> vec_weight(const Vec& v, const FreeModule& f, const std::vector<int>& w);

// Homogeneous matrix of a degree-0 map between twisted free modules. Column j
// holds the image of source generator j; entry (i,j) is zero or homogeneous of
// weight src.gen_weights[j] - tgt.gen_weights[i].
struct GradedMatrix {
    FreeModule src, tgt;
    std::vector<std::vector<Polynomial>> e; // e[i][j], i < tgt.rank(), j < src.rank()

    static GradedMatrix zero(FreeModule src_, FreeModule tgt_);
    static GradedMatrix identity(const FreeModule& f, std::size_t nvars);

    Vec column(std::size_t j) const;
    Vec apply(const Vec& v) const; // matrix * coordinate-vector
    bool is_zero() const;

    void validate(const GradedRing& ring) const; // throws InputError on bad weights
};

GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix mat_sub(const GradedMatrix& a, const GradedMatrix& b);

// Module monomial: position + monomial. Order: position-over-term, top-down
// (lower position wins), degrevlex within a position.
struct ModMono {
    std::size_t pos;
    Monomial m;
};
int modmono_cmp(const ModMono& a, const ModMono& b);

std::optional<ModMono> vec_lead(const Vec& v);

// Groebner basis of a submodule of a free module over the ambient polynomial
// ring of `ring`. Quotient relations are adjoined internally, so membership
// and normal forms are taken over A = S/J.
class GroebnerBasis {
  public:
    // gens: homogeneous elements of a free module of rank `rank`.
    // If track_lifts, every basis element remembers its expression in the
    // original generators (quotient-relation columns included at the end).
    GroebnerBasis(const GradedRing& ring, std::vector<Vec> gens, std::size_t rank,
                  bool track_lifts = false);

    const std::vector<Vec>& elements() const { return elems_; }
    std::size_t rank() const { return rank_; }
    bool reduced() const { return reduced_; }

    Vec normal_form(const Vec& v) const;
    // Normal form together with the quotients against the basis elements.
    Vec normal_form(const Vec& v, std::vector<Polynomial>* quotients) const;

    bool contains(const Vec& v) const { return vec_is_zero(normal_form(v)); }

    // Expression of v in the original generators (indices < #user gens);
    // requires track_lifts and v in the module. Coefficients are only
    // well-defined modulo syzygies; a fixed deterministic one is returned.
    std::optional<std::vector<Polynomial>> lift(const Vec& v) const;

    std::size_t user_gen_count() const { return user_gen_count_; }

  private:
    const GradedRing& ring_;
    std::size_t rank_;
    std::size_t user_gen_count_;
    bool reduced_ = false;
    std::vector<Vec> elems_;
    std::vector<ModMono> leads_;
    std::vector<std::vector<Polynomial>> lifts_; // per element, over all input gens
    bool track_;

    void run(std::vector<Vec> gens);
    void reduce_self();
};

// Kernel of a graded matrix over A: presentation matrix whose image is exactly
// ker(M), computed by the elimination (tag) method. Column weights homogeneous.
GradedMatrix kernel(const GradedRing& ring, const GradedMatrix& m);

// Prunes redundant generators: returns the subset of columns of m whose image
// still generates the same submodule of m.tgt over A (deterministic greedy).
GradedMatrix minimalize_generators(const GradedRing& ring, const GradedMatrix& m);

struct Resolution {
    // steps[0]: F1 -> F0 (the presentation), steps[k]: F_{k+1} -> F_k.
    std::vector<GradedMatrix> steps;
    bool truncated = false; // length cap reached before exactness
    const FreeModule& f0() const { return steps.front().tgt; }
};

// Minimal free resolution of coker(pres) over A, up to length_cap steps.
Resolution free_resolution(const GradedRing& ring, const GradedMatrix& pres, int length_cap);

// Gaussian cancellation of unit entries across a chain of composable maps
// (steps[k] : F_{k+1} -> F_k); preserves the quasi-isomorphism class.
void minimize_chain(std::vector<GradedMatrix>& steps);

} // namespace gsod
