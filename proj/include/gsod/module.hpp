#pragma once

#include "gsod/groebner.hpp"
#include "gsod/linalg.hpp"
#include "gsod/tables.hpp"

namespace gsod {

// Finitely generated graded module, stored as the cokernel of a
// weight-homogeneous matrix F1 -> F0.
struct ModulePresentation {
    RingPtr ring;
    GradedMatrix pres;
    std::string name;

    const FreeModule& f0() const { return pres.tgt; }

    static ModulePresentation free_module(RingPtr r, std::vector<int64_t> gen_weights,
                                          std::string name = {});
    // A / (gens), gens homogeneous.
    static ModulePresentation cyclic(RingPtr r, std::vector<Polynomial> gens,
                                     std::string name = {});
    static ModulePresentation zero(RingPtr r);
};

ModulePresentation twist(const ModulePresentation& m, int64_t i);
ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);

// F_{>=w}-module stored as a carrier plus a cutoff; equality of windows is
// equality of the weight-i data for all i >= cutoff.
struct WindowedModule {
    ModulePresentation carrier;
    int64_t cutoff;
};

inline WindowedModule truncate_geq(ModulePresentation m, int64_t w) {
    return WindowedModule{std::move(m), w};
}

// ---- weight-piece machinery (the "general engine") ----

// Basis element of a weight piece of a free module: generator index + std
// monomial.
struct PieceBasisElem {
    std::size_t gen;
    Monomial m;
};

// Std monomials of A of weight wt, when a finite enumeration is certified
// (coordinate bounds from pure powers in J plus interval propagation on the
// weight equation). nullopt = not certified finite.
std::optional<std::vector<Monomial>> ring_piece_basis(const GradedRing& ring, int64_t wt);

std::optional<std::vector<PieceBasisElem>> free_piece_basis(const GradedRing& ring,
                                                            const FreeModule& f, int64_t wt);

// Matrix of a graded map at a single weight, over the piece bases. nullopt if
// either piece is not certified finite.
std::optional<QMat> matrix_at_weight(const GradedRing& ring, const GradedMatrix& m, int64_t wt);

// dim_Q of coker(pres) at weight wt (exact), or nullopt when not certified.
std::optional<int64_t> module_piece_dim(const ModulePresentation& m, int64_t wt);

// Monomials of weight wt that are std and not divisible by any weight-zero
// monomial generator: always a finite set (Nakayama candidates over A_0).
std::vector<Monomial> nakayama_candidates(const GradedRing& ring, int64_t wt);
std::vector<PieceBasisElem> nakayama_candidates(const GradedRing& ring, const FreeModule& f,
                                                int64_t wt);

// A_0-module generators of the weight-wt piece of coker(pres), as explicit
// elements of F0 (each homogeneous of weight wt). Exact and always finite.
std::vector<Vec> piece_a0_generators(const ModulePresentation& m, int64_t wt);

// ---- module operations ----

struct WindowGenerator {
    int64_t weight;
    Vec element; // in F0 of the carrier
};

// Finite generating set of W as an F_{>=w}-module: A_0-generators of the
// weight pieces on [w, N0 + max generator weight] (override widens/narrows).
std::vector<WindowGenerator> window_generators(const WindowedModule& w,
                                               std::optional<int64_t> jmax_override = {});

struct FgWindowReport {
    bool is_fg = false;
    bool indeterminate = false;
    std::vector<WindowGenerator> generators;
};
FgWindowReport is_fg_window(const WindowedModule& w);

// Character of a module over a weight window. Infinite pieces get the
// A0-descriptor entry (generator count is still exact).
WeightCharacter character(const ModulePresentation& m, int64_t lo, int64_t hi);

struct HomResult {
    bool finite = false;
    int64_t dim = 0;
    std::string descriptor;
    // Basis of maps: per map, one F0(N)-element per generator of M.
    std::vector<std::vector<Vec>> maps;
};

// Degree-0 module maps M -> N via presentation lifting.
HomResult hom_weight0(const ModulePresentation& m, const ModulePresentation& n);

} // namespace gsod
