#pragma once

#include "gsod/complex.hpp"

namespace gsod {

// One summand of a term of a multigraded complex: a copy of the (localized)
// ring shifted by delta. Its basis at lattice point d is the monomial
// x^(d - delta), alive when the off-inverted exponents are nonnegative and the
// monomial is nonzero in the localized quotient (no forbidden generator
// divides it away from the inverted variables).
struct MgSummand {
    std::vector<int64_t> delta;
    uint32_t inverted = 0;
    std::vector<Monomial> forbidden; // saturated: inverted coordinates zeroed
};

struct MgEntry {
    std::size_t row, col; // target summand, source summand
    Rational c;
    std::vector<int64_t> alpha; // multidegree of the multiplier term
};

// Connected multigraded component. All summands share one weight base: the
// basis element of summand s at point d has true weight w.d + weight_base.
struct MgComponent {
    std::map<int, std::vector<MgSummand>> terms;
    std::map<int, std::vector<MgEntry>> diffs; // diffs[p] : term p -> term p+1
    int64_t weight_base = 0;

    int lo() const { return terms.empty() ? 0 : terms.begin()->first; }
    int hi() const { return terms.empty() ? -1 : terms.rbegin()->first; }
};

struct MgComplex {
    RingPtr ring;
    std::vector<MgComponent> components;
    bool absolute = true; // deltas are honest multidegrees (box queries valid)
};

// ---- construction ----

// Lift of a complex of frees with term entries to multidegrees. nullopt when
// an entry is not a single term or the constraints are inconsistent.
std::optional<MgComplex> mg_from_free_complex(const FreeComplex& c);

// Multigraded model of a module presentation (degrees -1, 0; cohomology in
// degree 0 is the module). Requires term entries.
std::optional<MgComplex> mg_from_presentation(const ModulePresentation& m);

// Cech complex on the variables with the given indices, in degrees
// [0, r-1]; rgamma produces the extended complex in degrees [0, r].
MgComplex mg_cech(const MgComplex& c, const std::vector<int>& ideal_vars);
MgComplex mg_rgamma(const MgComplex& c, const std::vector<int>& ideal_vars);

// Tensor with the Koszul cochain complex on x_v^t for the listed variables
// (used by the Koszul-colimit local cohomology engine).
MgComplex mg_tensor_koszul_cochain(const MgComplex& c, const std::vector<int>& ideal_vars, int t);

// ---- evaluation ----

// Per-(degree, weight) cohomology dimensions over a weight window. Entries
// whose lattice count is certified infinite are flagged with a descriptor.
CohomTable mg_cohomology(const MgComplex& c, int64_t lo, int64_t hi, std::string engine_tag);

// Per-multidegree dimensions over a box (absolute complexes only).
BoxTable mg_box_cohomology(const MgComplex& c, const std::vector<int>& lo,
                           const std::vector<int>& hi);

// Weight character of the terms (not cohomology) per degree.
std::map<int, CharEntry> mg_term_character(const MgComplex& c, int64_t weight);

// Support certificate: max weight with possibly-nonzero cohomology in the
// given degree range, or nullopt when unbounded above.
std::optional<int64_t> mg_support_upper_bound(const MgComplex& c);
std::optional<int64_t> mg_support_lower_bound(const MgComplex& c);

// Explicit cohomology data at one lattice point of one component.
struct PointCohomology {
    std::map<int, std::size_t> dim;
    // Basis of H^p as coset representatives in the alive-summand coordinates,
    // plus the data needed to express arbitrary cocycles.
    std::map<int, std::vector<std::vector<Rational>>> basis;
    std::map<int, std::vector<std::size_t>> alive; // alive summand indices per degree
};
PointCohomology mg_point_cohomology(const MgComponent& comp, const std::vector<int64_t>& d);

// Induced map on point cohomology for multiplication by the monomial x^gamma
// (gamma arbitrary-signed; the map goes from point d to point d + gamma).
std::map<int, QMat> mg_point_action(const MgComponent& comp, const std::vector<int64_t>& d,
                                    const std::vector<int64_t>& gamma);

// Cohomology support points of one component restricted to one weight
// (finite list; throws UnsupportedError if certified infinite).
std::vector<std::vector<int64_t>> mg_weight_support(const MgComponent& comp, const RingPtr& ring,
                                                    int64_t weight);

// Induced map on per-(p, weight) cohomology for a chain map between two
// structurally matched complexes (same component count; summand-to-summand
// entries). Used for Koszul stabilization transition checks.
struct MgChainMap {
    // per component, per degree: entries mapping source summand -> target
    // summand with a term multiplier.
    std::vector<std::map<int, std::vector<MgEntry>>> comps;
};
// Structural validation: multidegree consistency of entries and d o d = 0
// at atom representatives. Throws InputError on violation.
void mg_validate(const MgComplex& c);

// Unified per-weight cohomology: multigraded route when the complex lifts,
// general weight-piece linear algebra otherwise.
CohomTable complex_cohomology(const FreeComplex& c, int64_t lo, int64_t hi);

// Exact module piece dimension through either engine.
std::optional<int64_t> piece_dim(const ModulePresentation& m, int64_t wt);

// Character via either engine (exact entries wherever certifiable).
WeightCharacter module_character(const ModulePresentation& m, int64_t lo, int64_t hi);

bool mg_transition_iso(const MgComplex& a, const MgComplex& b, const MgChainMap& f, int64_t lo,
                       int64_t hi);

} // namespace gsod
