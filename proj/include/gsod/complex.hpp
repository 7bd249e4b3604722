#pragma once

#include "gsod/module.hpp"

namespace gsod {

// Bounded cochain complex of twisted free modules with weight-homogeneous
// differentials. d^p maps term(p) to term(p+1); d o d = 0 is enforced by
// validate(), which every construction path calls.
struct FreeComplex {
    RingPtr ring;
    std::map<int, FreeModule> terms;
    std::map<int, GradedMatrix> diffs;

    int lo() const { return terms.empty() ? 0 : terms.begin()->first; }
    int hi() const { return terms.empty() ? -1 : terms.rbegin()->first; }
    bool empty() const { return terms.empty(); }

    FreeModule term(int p) const {
        auto it = terms.find(p);
        return it == terms.end() ? FreeModule{} : it->second;
    }
    GradedMatrix diff(int p) const; // zero matrix of the right shape if absent

    void drop_zero_terms();
    void validate() const;
};

// Degree-0 chain map; commutes with differentials exactly (validated).
struct ChainMap {
    std::map<int, GradedMatrix> comps;
    GradedMatrix comp(const FreeComplex& src, const FreeComplex& tgt, int p) const;
};

void validate_chain_map(const FreeComplex& src, const FreeComplex& tgt, const ChainMap& f);

FreeComplex complex_from_resolution(const RingPtr& ring, const Resolution& res);
// Convenience: minimal free resolution of a module, as a complex in degrees
// [-len, 0].
FreeComplex resolve_to_complex(const ModulePresentation& m, int length_cap);

FreeComplex shift(const FreeComplex& c, int k);          // C[k]^p = C^{p+k}
FreeComplex twist_complex(const FreeComplex& c, int64_t i);
FreeComplex dual_complex(const FreeComplex& c);          // entrywise transpose, weights negated
FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);

// Mapping cone: C(f)^p = X^{p+1} (+) Y^p with d = [[-d_X, 0], [f, d_Y]].
FreeComplex cone(const FreeComplex& x, const FreeComplex& y, const ChainMap& f);

// Total complex of a tensor product, d = d_a (x) 1 + (-1)^p 1 (x) d_b.
FreeComplex total_tensor(const FreeComplex& a, const FreeComplex& b);

// Cochain Koszul complex on homogeneous elements of positive weight: the
// degree-|S| term is generated in weight -sum of the weights over S.
FreeComplex koszul_cochain(const RingPtr& ring, const std::vector<Polynomial>& f);

// Homological Koszul complex on the j-th powers, in degrees [-r, 0].
FreeComplex koszul_chain_on_ring(const RingPtr& ring, const std::vector<Polynomial>& f, int j);

// Homological Koszul complex of a module (tensored with its resolution).
FreeComplex koszul_chain(const ModulePresentation& m, const std::vector<Polynomial>& f, int j,
                         int length_cap);

// Gaussian cancellation of unit entries (quasi-isomorphism preserved).
void minimize(FreeComplex& c);

// Chain map into a resolution-like complex (exact in negative degrees) from a
// bounded-above complex of frees, extending a given degree-0 component.
ChainMap lift_to_resolution(const FreeComplex& x, const FreeComplex& y, GradedMatrix phi0);

// Per-weight cohomology via the general engine (finite pieces only; entries
// that cannot be certified are reported as such). Torus-ring callers should
// prefer the multigraded engine.
CohomTable complex_cohomology_general(const FreeComplex& c, int64_t lo, int64_t hi);

// Euler characteristic per weight when all involved pieces are finite.
std::optional<std::map<int64_t, int64_t>> euler_characteristic(const FreeComplex& c, int64_t lo,
                                                               int64_t hi);

} // namespace gsod
