#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gsod/polynomial.hpp"

namespace gsod {

class GroebnerBasis;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroebnerCaps {
    int64_t max_total_degree = 24;
    std::size_t max_basis = 5000;
    int max_resolution_length = 12;
    int max_torsion_power = 64;
};

// A presented Z-graded ring A = Q[x_1..x_n]/J with one integer weight per
// variable, plus the distinguished ideals I+ (positive weights) and I-
// (negative weights).
class GradedRing {
  public:
    GradedRing(std::vector<std::string> vars, std::vector<int> weights,
               std::vector<Polynomial> relations, std::vector<Polynomial> iplus,
               std::vector<Polynomial> iminus, GroebnerCaps caps = {});

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<Polynomial>& relations() const { return relations_; }
    const std::vector<Polynomial>& iplus() const { return iplus_; }
    const std::vector<Polynomial>& iminus() const { return iminus_; }
    const GroebnerCaps& caps() const { return caps_; }

    bool torus_flag() const { return torus_flag_; }
    bool is_polynomial_ring() const { return relations_.empty(); }

    // Relations as monomials when J is a monomial ideal (torus case).
    const std::vector<Monomial>& monomial_relations() const { return monomial_relations_; }

    // Variable indices of I+/I- generators when those are variables.
    const std::vector<int>& iplus_vars() const { return iplus_vars_; }
    const std::vector<int>& iminus_vars() const { return iminus_vars_; }

    // Reduced Groebner basis of J in the ambient polynomial ring (empty if J=0).
    const std::vector<Polynomial>& relations_gb() const;

    // Rank-1 basis object for J; normal forms of ring elements go through it.
    const GroebnerBasis& relations_basis() const;
    Polynomial reduce(const Polynomial& p) const;
    bool is_std(const Monomial& m) const; // monomial survives in A = S/J

    // Minimal p <= cap with x_v^p in J, or 0 if none found (cap from caps()).
    int pure_power_bound(std::size_t v) const;

    // Minimal generators of the monoid {u >= 0 : w.u = 0} (exponents of the
    // weight-zero subring A_0 of the ambient polynomial ring).
    const std::vector<Monomial>& weight_zero_hilbert_basis() const;

    // Stabilization data: d = lcm of positive variable weights, N0 = their sum
    // (and mirrored values for the negative side).
    int stab_d_plus() const { return stab_d_plus_; }
    int stab_n0_plus() const { return stab_n0_plus_; }

    int64_t weight_of(const Monomial& m) const { return m.weight(weights_); }

    std::string describe() const;

  private:
    std::vector<std::string> vars_;
    std::vector<int> weights_;
    std::vector<Polynomial> relations_;
    std::vector<Polynomial> iplus_, iminus_;
    GroebnerCaps caps_;
    bool torus_flag_ = false;
    std::vector<Monomial> monomial_relations_;
    std::vector<int> iplus_vars_, iminus_vars_;
    int stab_d_plus_ = 1, stab_n0_plus_ = 0;
    mutable std::shared_ptr<std::vector<Polynomial>> relations_gb_;
    mutable std::shared_ptr<std::vector<Monomial>> hilbert_basis_;
    mutable std::shared_ptr<GroebnerBasis> relations_basis_;
    mutable std::shared_ptr<std::vector<int>> pure_powers_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

// Validating constructor. If iplus/iminus are omitted and J is zero or
// monomial, they default to the positive-/negative-weight variables.
RingPtr make_graded_ring(std::vector<std::string> vars, std::vector<int> weights,
                         std::vector<Polynomial> relations = {},
                         std::optional<std::vector<Polynomial>> iplus = std::nullopt,
                         std::optional<std::vector<Polynomial>> iminus = std::nullopt,
                         GroebnerCaps caps = {});

// Quotient of `ring` by additional homogeneous elements (I+ etc.); weights are
// inherited and the distinguished ideals are recomputed from what survives.
RingPtr quotient_ring(const RingPtr& ring, const std::vector<Polynomial>& extra);

int64_t weight_of(const Monomial& m, const std::vector<int>& w);

} // namespace gsod
