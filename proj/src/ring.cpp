#include "gsod/ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "gsod/groebner.hpp"

namespace gsod {

int64_t weight_of(const Monomial& m, const std::vector<int>& w) { return m.weight(w); }

GradedRing::GradedRing(std::vector<std::string> vars, std::vector<int> weights,
                       std::vector<Polynomial> relations, std::vector<Polynomial> iplus,
                       std::vector<Polynomial> iminus, GroebnerCaps caps)
    : vars_(std::move(vars)),
      weights_(std::move(weights)),
      relations_(std::move(relations)),
      iplus_(std::move(iplus)),
      iminus_(std::move(iminus)),
      caps_(caps) {
    if (vars_.size() != weights_.size())
        throw InputError("weight vector length does not match variable count");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw InputError("duplicate variable name " + vars_[i]);

    for (const auto& r : relations_) {
        if (r.is_zero()) throw InputError("zero relation supplied");
        if (!r.homogeneous_weight(weights_))
            throw InputError("inhomogeneous relation: " + to_string(r, vars_));
    }
    for (const auto& f : iplus_) {
        auto w = f.homogeneous_weight(weights_);
        if (!w || *w <= 0 || f.is_zero())
            throw InputError("I+ generator must be homogeneous of positive weight: " +
                             to_string(f, vars_));
    }
    for (const auto& f : iminus_) {
        auto w = f.homogeneous_weight(weights_);
        if (!w || *w >= 0 || f.is_zero())
            throw InputError("I- generator must be homogeneous of negative weight: " +
                             to_string(f, vars_));
    }

    bool monomial_J = true;
    for (const auto& r : relations_) {
        if (r.nterms() != 1) {
            monomial_J = false;
            break;
        }
    }
    if (monomial_J)
        for (const auto& r : relations_) monomial_relations_.push_back(r.lm());

    auto var_index = [&](const Polynomial& p) -> int {
        if (p.nterms() != 1 || p.lc() != 1) return -1;
        const Monomial& m = p.lm();
        int idx = -1;
        for (std::size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            if (m.e[v] != 1 || idx != -1) return -1;
            idx = int(v);
        }
        return idx;
    };
    bool i_vars = true;
    for (const auto& f : iplus_) {
        int v = var_index(f);
        if (v < 0) { i_vars = false; break; }
        iplus_vars_.push_back(v);
    }
    if (i_vars)
        for (const auto& f : iminus_) {
            int v = var_index(f);
            if (v < 0) { i_vars = false; break; }
            iminus_vars_.push_back(v);
        }
    if (!i_vars) {
        iplus_vars_.clear();
        iminus_vars_.clear();
    }
    torus_flag_ = monomial_J && i_vars;

    int64_t lcm_d = 1, sum_d = 0, npos = 0;
    for (std::size_t v = 0; v < weights_.size(); ++v)
        if (weights_[v] > 0) {
            lcm_d = std::lcm(lcm_d, int64_t(weights_[v]));
            sum_d += weights_[v];
            ++npos;
        }
    stab_d_plus_ = int(lcm_d);
    // Safe stabilization bound: above it, every monomial of that weight
    // dominates a pure power of weight exactly d.
    stab_n0_plus_ = int(std::max(sum_d, npos * lcm_d - sum_d + 1));
}

const std::vector<Polynomial>& GradedRing::relations_gb() const {
    if (!relations_gb_) {
        auto out = std::make_shared<std::vector<Polynomial>>();
        if (!relations_.empty()) {
            // A plain basis in the ambient polynomial ring; build a relation-free
            // shadow ring to avoid recursing into this accessor.
            GradedRing ambient(vars_, weights_, {}, {}, {}, caps_);
            std::vector<Vec> gens;
            for (const auto& r : relations_) gens.push_back(Vec{r});
            GroebnerBasis gb(ambient, std::move(gens), 1);
            for (const auto& el : gb.elements()) out->push_back(el[0]);
        }
        relations_gb_ = std::move(out);
    }
    return *relations_gb_;
}

const std::vector<Monomial>& GradedRing::weight_zero_hilbert_basis() const {
    if (hilbert_basis_) return *hilbert_basis_;
    auto out = std::make_shared<std::vector<Monomial>>();
    const std::size_t n = nvars();
    int bound = 1;
    for (int w : weights_) bound = std::max(bound, std::abs(w));
    // Zero-weight variables are themselves minimal generators; exclude them
    // from the search and add them directly.
    std::vector<Monomial> found;
    for (std::size_t v = 0; v < n; ++v)
        if (weights_[v] == 0) {
            Monomial m(n);
            m.e[v] = 1;
            found.push_back(m);
        }
    // Minimal solutions of w.u = 0 over the signed variables have coordinates
    // bounded by max |w_i| (single-equation Hilbert basis bound).
    Monomial cur(n);
    std::function<void(std::size_t, int64_t)> dfs = [&](std::size_t v, int64_t acc) {
        if (found.size() > 20000) throw UnsupportedError("weight-zero monoid too large");
        if (v == n) {
            if (acc == 0 && !cur.is_one()) found.push_back(cur);
            return;
        }
        if (weights_[v] == 0) {
            dfs(v + 1, acc);
            return;
        }
        int64_t rest_min = 0, rest_max = 0;
        for (std::size_t u = v; u < n; ++u) {
            if (weights_[u] > 0) rest_max += int64_t(weights_[u]) * bound;
            if (weights_[u] < 0) rest_min += int64_t(weights_[u]) * bound;
        }
        if (acc + rest_min > 0 || acc + rest_max < 0) return;
        for (int e = 0; e <= bound; ++e) {
            cur.e[v] = e;
            dfs(v + 1, acc + int64_t(e) * weights_[v]);
        }
        cur.e[v] = 0;
    };
    dfs(0, 0);
    // Keep the minimal ones.
    for (const auto& m : found) {
        bool minimal = true;
        for (const auto& o : found)
            if (!(o == m) && o.divides(m)) { minimal = false; break; }
        if (minimal && std::find(out->begin(), out->end(), m) == out->end()) out->push_back(m);
    }
    std::sort(out->begin(), out->end(),
              [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; });
    hilbert_basis_ = std::move(out);
    return *hilbert_basis_;
}

std::string GradedRing::describe() const {
    std::ostringstream os;
    os << "Q[";
    for (std::size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
    os << "], weights (";
    for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
    os << ")";
    if (!relations_.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < relations_.size(); ++i)
            os << (i ? ", " : "") << to_string(relations_[i], vars_);
        os << ")";
    }
    return os.str();
}

RingPtr make_graded_ring(std::vector<std::string> vars, std::vector<int> weights,
                         std::vector<Polynomial> relations,
                         std::optional<std::vector<Polynomial>> iplus,
                         std::optional<std::vector<Polynomial>> iminus, GroebnerCaps caps) {
    std::size_t n = vars.size();
    if (weights.size() != n) throw InputError("weight vector length does not match variable count");
    // Signed variables always generate A_{>0}.A and A_{<0}.A, also over
    // quotients, so they are the default when no generators are supplied.
    std::vector<Polynomial> ip, im;
    if (iplus) {
        ip = *iplus;
    } else {
        for (std::size_t v = 0; v < n; ++v)
            if (weights[v] > 0) {
                Monomial m(n);
                m.e[v] = 1;
                ip.push_back(Polynomial::monomial(m));
            }
    }
    if (iminus) {
        im = *iminus;
    } else {
        for (std::size_t v = 0; v < n; ++v)
            if (weights[v] < 0) {
                Monomial m(n);
                m.e[v] = 1;
                im.push_back(Polynomial::monomial(m));
            }
    }
    return std::make_shared<GradedRing>(std::move(vars), std::move(weights), std::move(relations),
                                        std::move(ip), std::move(im), caps);
}

RingPtr quotient_ring(const RingPtr& ring, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> rel = ring->relations();
    for (const auto& p : extra) {
        if (p.is_zero()) continue;
        rel.push_back(p);
    }
    return make_graded_ring(ring->vars(), ring->weights(), std::move(rel), std::nullopt,
                            std::nullopt, ring->caps());
}

} // namespace gsod
