#include "gsod/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace gsod {

bool vec_is_zero(const Vec& v) {
    for (const auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

Vec vec_zero(std::size_t rank) { return Vec(rank); }

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Vec vec_scaled(const Vec& a, const Rational& c) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].scaled(c);
    return r;
}

Vec vec_term_mul(const Vec& a, const Rational& c, const Monomial& m) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].term_mul(c, m);
    return r;
}

std::optional<int64_t> vec_weight(const Vec& v, const FreeModule& f, const std::vector<int>& w) {
    std::optional<int64_t> wt;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        auto h = v[k].homogeneous_weight(w);
        if (!h) return std::nullopt;
        int64_t total = *h + f.gen_weights[k];
        if (wt && *wt != total) return std::nullopt;
        wt = total;
    }
    return wt ? wt : std::optional<int64_t>(0);
}

GradedMatrix GradedMatrix::zero(FreeModule src_, FreeModule tgt_) {
    GradedMatrix m;
    m.src = std::move(src_);
    m.tgt = std::move(tgt_);
    m.e.assign(m.tgt.rank(), std::vector<Polynomial>(m.src.rank()));
    return m;
}

GradedMatrix GradedMatrix::identity(const FreeModule& f, std::size_t nvars) {
    GradedMatrix m = zero(f, f);
    for (std::size_t i = 0; i < f.rank(); ++i)
        m.e[i][i] = Polynomial::constant(Rational(1), nvars);
    return m;
}

Vec GradedMatrix::column(std::size_t j) const {
    Vec v(tgt.rank());
    for (std::size_t i = 0; i < tgt.rank(); ++i) v[i] = e[i][j];
    return v;
}

Vec GradedMatrix::apply(const Vec& v) const {
    Vec r(tgt.rank());
    for (std::size_t i = 0; i < tgt.rank(); ++i)
        for (std::size_t j = 0; j < src.rank(); ++j)
            if (!e[i][j].is_zero() && !v[j].is_zero()) r[i] += e[i][j] * v[j];
    return r;
}

bool GradedMatrix::is_zero() const {
    for (const auto& row : e)
        for (const auto& p : row)
            if (!p.is_zero()) return false;
    return true;
}

void GradedMatrix::validate(const GradedRing& ring) const {
    if (e.size() != tgt.rank())
        throw InputError("matrix row count does not match target rank");
    for (const auto& row : e)
        if (row.size() != src.rank())
            throw InputError("matrix column count does not match source rank");
    for (std::size_t i = 0; i < tgt.rank(); ++i)
        for (std::size_t j = 0; j < src.rank(); ++j) {
            const Polynomial& p = e[i][j];
            if (p.is_zero()) continue;
            auto w = p.homogeneous_weight(ring.weights());
            if (!w || *w != src.gen_weights[j] - tgt.gen_weights[i]) {
                std::ostringstream os;
                os << "matrix entry (" << i << "," << j << ") = "
                   << to_string(p, ring.vars())
                   << " is not homogeneous of weight " << src.gen_weights[j] - tgt.gen_weights[i];
                throw InputError(os.str());
            }
        }
}

GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.src.rank() != b.tgt.rank()) throw InputError("matrix product shape mismatch");
    GradedMatrix r = GradedMatrix::zero(b.src, a.tgt);
    for (std::size_t i = 0; i < a.tgt.rank(); ++i)
        for (std::size_t k = 0; k < a.src.rank(); ++k) {
            if (a.e[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < b.src.rank(); ++j)
                if (!b.e[k][j].is_zero()) r.e[i][j] += a.e[i][k] * b.e[k][j];
        }
    return r;
}

GradedMatrix mat_sub(const GradedMatrix& a, const GradedMatrix& b) {
    GradedMatrix r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i)
        for (std::size_t j = 0; j < r.e[i].size(); ++j) r.e[i][j] -= b.e[i][j];
    return r;
}

const GroebnerBasis& GradedRing::relations_basis() const {
    if (!relations_basis_)
        relations_basis_ = std::make_shared<GroebnerBasis>(*this, std::vector<Vec>{}, 1);
    return *relations_basis_;
}

Polynomial GradedRing::reduce(const Polynomial& p) const {
    if (relations_.empty()) return p;
    return relations_basis().normal_form(Vec{p})[0];
}

bool GradedRing::is_std(const Monomial& m) const {
    for (const auto& g : relations_gb())
        if (g.lm().divides(m)) return false;
    return true;
}

int GradedRing::pure_power_bound(std::size_t v) const {
    if (!pure_powers_) pure_powers_ = std::make_shared<std::vector<int>>(nvars(), -2);
    auto& pp = *pure_powers_;
    if (pp[v] != -2) return pp[v];
    pp[v] = 0;
    int cap = std::min<int64_t>(caps_.max_total_degree, 16);
    // A pure power may lie in J without a pure-power leading term; probe nf.
    for (int p = 1; p <= cap; ++p) {
        Monomial m(nvars());
        m.e[v] = p;
        if (reduce(Polynomial::monomial(m)).is_zero()) {
            pp[v] = p;
            break;
        }
    }
    return pp[v];
}

int modmono_cmp(const ModMono& a, const ModMono& b) {
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1; // lower position is bigger
    return degrevlex_cmp(a.m, b.m);
}

std::optional<ModMono> vec_lead(const Vec& v) {
    for (std::size_t p = 0; p < v.size(); ++p)
        if (!v[p].is_zero()) return ModMono{p, v[p].lm()};
    return std::nullopt;
}

namespace {

// Leading coefficient at the leading module monomial.
const Rational& lead_coeff(const Vec& v, const ModMono& l) { return v[l.pos].lc(); }

} // namespace

GroebnerBasis::GroebnerBasis(const GradedRing& ring, std::vector<Vec> gens, std::size_t rank,
                             bool track_lifts)
    : ring_(ring), rank_(rank), user_gen_count_(gens.size()), track_(track_lifts) {
    for (const auto& v : gens)
        if (v.size() != rank) throw InputError("generator has wrong rank");
    // Adjoin quotient relations on every position so normal forms are over A.
    for (const auto& rel : ring.relations_gb())
        for (std::size_t p = 0; p < rank; ++p) {
            Vec v(rank);
            v[p] = rel;
            gens.push_back(std::move(v));
        }
    run(std::move(gens));
}

void GroebnerBasis::run(std::vector<Vec> gens) {
    const auto& caps = ring_.caps();
    auto add_elem = [&](Vec v, std::vector<Polynomial> lift) {
        auto l = vec_lead(v);
        assert(l);
        if (l->m.total_degree() > caps.max_total_degree)
            throw CapError("groebner: total degree cap exceeded");
        if (elems_.size() >= caps.max_basis)
            throw CapError("groebner: basis size cap exceeded");
        elems_.push_back(std::move(v));
        leads_.push_back(*l);
        if (track_) lifts_.push_back(std::move(lift));
    };

    // Seed with nonzero generators.
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (vec_is_zero(gens[g])) continue;
        std::vector<Polynomial> lift;
        if (track_) {
            lift.assign(gens.size(), Polynomial());
            lift[g] = Polynomial::constant(Rational(1), ring_.nvars());
        }
        add_elem(gens[g], std::move(lift));
    }

    struct Pair {
        std::size_t i, j;
        int64_t deg;
    };
    std::vector<Pair> pending;
    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            if (leads_[i].pos != leads_[k].pos) continue;
            Monomial l = lcm(leads_[i].m, leads_[k].m);
            // Buchberger's coprime criterion; safe for ideals only.
            if (rank_ == 1 && l.total_degree() ==
                                  leads_[i].m.total_degree() + leads_[k].m.total_degree())
                continue;
            pending.push_back(Pair{i, k, l.total_degree()});
        }
    };
    for (std::size_t k = 0; k < elems_.size(); ++k) push_pairs(k);

    while (!pending.empty()) {
        // Normal strategy: lowest lcm degree, then lexicographic tie-break.
        std::size_t best = 0;
        for (std::size_t t = 1; t < pending.size(); ++t) {
            const Pair &a = pending[t], &b = pending[best];
            if (a.deg != b.deg ? a.deg < b.deg
                               : (a.i != b.i ? a.i < b.i : a.j < b.j))
                best = t;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + best);

        const Vec &f = elems_[pr.i], &g = elems_[pr.j];
        const ModMono &lf = leads_[pr.i], &lg = leads_[pr.j];
        Monomial l = lcm(lf.m, lg.m);
        Rational cf = Rational(1) / lead_coeff(f, lf);
        Rational cg = Rational(1) / lead_coeff(g, lg);
        Vec s = vec_sub(vec_term_mul(f, cf, l / lf.m), vec_term_mul(g, cg, l / lg.m));
        std::vector<Polynomial> lift;
        if (track_) {
            lift.assign(lifts_[pr.i].size(), Polynomial());
            for (std::size_t t = 0; t < lift.size(); ++t)
                lift[t] = lifts_[pr.i][t].term_mul(cf, l / lf.m) -
                          lifts_[pr.j][t].term_mul(cg, l / lg.m);
        }
        std::vector<Polynomial> q;
        Vec r = normal_form(s, track_ ? &q : nullptr);
        if (vec_is_zero(r)) continue;
        if (track_)
            for (std::size_t k = 0; k < q.size(); ++k)
                if (!q[k].is_zero())
                    for (std::size_t t = 0; t < lift.size(); ++t)
                        lift[t] -= q[k] * lifts_[k][t];
        std::size_t k = elems_.size();
        add_elem(std::move(r), std::move(lift));
        push_pairs(k);
    }
    reduce_self();
}

Vec GroebnerBasis::normal_form(const Vec& v) const { return normal_form(v, nullptr); }

Vec GroebnerBasis::normal_form(const Vec& v, std::vector<Polynomial>* quotients) const {
    if (quotients) quotients->assign(elems_.size(), Polynomial());
    Vec rest = v, rem(v.size());
    for (;;) {
        auto l = vec_lead(rest);
        if (!l) break;
        bool reduced_one = false;
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            if (leads_[k].pos != l->pos || !leads_[k].m.divides(l->m)) continue;
            Rational c = lead_coeff(rest, *l) / lead_coeff(elems_[k], leads_[k]);
            Monomial m = l->m / leads_[k].m;
            rest = vec_sub(rest, vec_term_mul(elems_[k], c, m));
            if (quotients) (*quotients)[k] += Polynomial::monomial(m, c);
            reduced_one = true;
            break;
        }
        if (!reduced_one) {
            // Move the irreducible leading term to the remainder.
            Term t{l->m, lead_coeff(rest, *l)};
            rem[l->pos] += Polynomial(t);
            rest[l->pos] -= Polynomial(t);
        }
    }
    return rem;
}

std::optional<std::vector<Polynomial>> GroebnerBasis::lift(const Vec& v) const {
    if (!track_) throw InputError("lift requested from an untracked basis");
    std::vector<Polynomial> q;
    Vec r = normal_form(v, &q);
    if (!vec_is_zero(r)) return std::nullopt;
    std::vector<Polynomial> out(user_gen_count_);
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k].is_zero()) continue;
        for (std::size_t t = 0; t < user_gen_count_; ++t)
            if (!lifts_[k][t].is_zero()) out[t] += q[k] * lifts_[k][t];
    }
    return out;
}

void GroebnerBasis::reduce_self() {
    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < elems_.size() && !redundant; ++j) {
            if (i == j || leads_[j].pos != leads_[i].pos) continue;
            if (!leads_[j].m.divides(leads_[i].m)) continue;
            if (leads_[j].m == leads_[i].m && j > i) continue; // keep first of equals
            redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Vec> kept;
    std::vector<ModMono> kleads;
    std::vector<std::vector<Polynomial>> klifts;
    for (auto i : keep) {
        kept.push_back(std::move(elems_[i]));
        kleads.push_back(leads_[i]);
        if (track_) klifts.push_back(std::move(lifts_[i]));
    }
    elems_ = std::move(kept);
    leads_ = std::move(kleads);
    lifts_ = std::move(klifts);

    // Sort by lead, descending, for deterministic output.
    std::vector<std::size_t> order(elems_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return modmono_cmp(leads_[a], leads_[b]) > 0;
    });
    std::vector<Vec> se;
    std::vector<ModMono> sl;
    std::vector<std::vector<Polynomial>> sf;
    for (auto i : order) {
        se.push_back(std::move(elems_[i]));
        sl.push_back(leads_[i]);
        if (track_) sf.push_back(std::move(lifts_[i]));
    }
    elems_ = std::move(se);
    leads_ = std::move(sl);
    lifts_ = std::move(sf);

    // Tail-reduce each element against the others and scale monic.
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        Vec lead_term(rank_);
        lead_term[leads_[i].pos] =
            Polynomial(Term{leads_[i].m, lead_coeff(elems_[i], leads_[i])});
        Vec tail = vec_sub(elems_[i], lead_term);
        // Reduce the tail against all elements (self excluded by lead logic:
        // the tail's monomials are smaller than our lead, but another element
        // with equal lead was pruned already).
        std::vector<Polynomial> q;
        Vec rest = tail, rem(rank_);
        for (;;) {
            auto l = vec_lead(rest);
            if (!l) break;
            bool hit = false;
            for (std::size_t k = 0; k < elems_.size(); ++k) {
                if (k == i || leads_[k].pos != l->pos || !leads_[k].m.divides(l->m)) continue;
                Rational c = lead_coeff(rest, *l) / lead_coeff(elems_[k], leads_[k]);
                Monomial m = l->m / leads_[k].m;
                rest = vec_sub(rest, vec_term_mul(elems_[k], c, m));
                if (track_)
                    for (std::size_t t = 0; t < lifts_[i].size(); ++t)
                        lifts_[i][t] -= Polynomial::monomial(m, c) * lifts_[k][t];
                hit = true;
                break;
            }
            if (!hit) {
                Term t{l->m, lead_coeff(rest, *l)};
                rem[l->pos] += Polynomial(t);
                rest[l->pos] -= Polynomial(t);
            }
        }
        elems_[i] = vec_add(lead_term, rem);
        Rational inv = Rational(1) / lead_coeff(elems_[i], leads_[i]);
        elems_[i] = vec_scaled(elems_[i], inv);
        if (track_)
            for (auto& p : lifts_[i]) p = p.scaled(inv);
    }
    reduced_ = true;
}

GradedMatrix kernel(const GradedRing& ring, const GradedMatrix& m) {
    m.validate(ring);
    const std::size_t rt = m.tgt.rank(), rs = m.src.rank();
    FreeModule combined;
    combined.gen_weights = m.tgt.gen_weights;
    combined.gen_weights.insert(combined.gen_weights.end(), m.src.gen_weights.begin(),
                                m.src.gen_weights.end());
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < rs; ++j) {
        Vec v(rt + rs);
        for (std::size_t i = 0; i < rt; ++i) v[i] = m.e[i][j];
        v[rt + j] = Polynomial::constant(Rational(1), ring.nvars());
        gens.push_back(std::move(v));
    }
    GroebnerBasis gb(ring, std::move(gens), rt + rs);
    std::vector<Vec> syz;
    for (const auto& el : gb.elements()) {
        bool f_zero = true;
        for (std::size_t i = 0; i < rt; ++i)
            if (!el[i].is_zero()) { f_zero = false; break; }
        if (!f_zero) continue;
        Vec t(rs);
        bool nonzero = false;
        for (std::size_t j = 0; j < rs; ++j) {
            t[j] = el[rt + j];
            nonzero = nonzero || !t[j].is_zero();
        }
        if (nonzero) syz.push_back(std::move(t));
    }
    GradedMatrix out;
    out.tgt = m.src;
    for (const auto& s : syz) {
        auto w = vec_weight(s, m.src, ring.weights());
        if (!w) throw InputError("internal: inhomogeneous syzygy");
        out.src.gen_weights.push_back(*w);
    }
    out.e.assign(rs, std::vector<Polynomial>(syz.size()));
    for (std::size_t j = 0; j < syz.size(); ++j)
        for (std::size_t i = 0; i < rs; ++i) out.e[i][j] = syz[j][i];
    return out;
}

GradedMatrix minimalize_generators(const GradedRing& ring, const GradedMatrix& m) {
    std::vector<std::size_t> live;
    for (std::size_t j = 0; j < m.src.rank(); ++j)
        if (!vec_is_zero(m.column(j))) live.push_back(j);

    // Try to drop columns, largest entries first, so low-degree generators win.
    std::vector<std::size_t> order = live;
    auto col_deg = [&](std::size_t j) {
        int64_t d = -1;
        for (std::size_t i = 0; i < m.tgt.rank(); ++i)
            d = std::max(d, m.e[i][j].total_degree());
        return d;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return col_deg(a) > col_deg(b); });

    for (std::size_t cand : order) {
        std::vector<Vec> others;
        for (std::size_t j : live)
            if (j != cand) others.push_back(m.column(j));
        GroebnerBasis gb(ring, std::move(others), m.tgt.rank());
        if (gb.contains(m.column(cand)))
            live.erase(std::find(live.begin(), live.end(), cand));
    }

    GradedMatrix out;
    out.tgt = m.tgt;
    out.e.assign(m.tgt.rank(), std::vector<Polynomial>(live.size()));
    for (std::size_t t = 0; t < live.size(); ++t) {
        out.src.gen_weights.push_back(m.src.gen_weights[live[t]]);
        for (std::size_t i = 0; i < m.tgt.rank(); ++i) out.e[i][t] = m.e[i][live[t]];
    }
    return out;
}

namespace {

// Detects a unit (nonzero constant) entry.
std::optional<std::pair<std::size_t, std::size_t>> find_unit(const GradedMatrix& m) {
    for (std::size_t i = 0; i < m.tgt.rank(); ++i)
        for (std::size_t j = 0; j < m.src.rank(); ++j) {
            const Polynomial& p = m.e[i][j];
            if (!p.is_zero() && p.lm().is_one()) return std::make_pair(i, j);
        }
    return std::nullopt;
}

GradedMatrix drop_row_col(const GradedMatrix& m, std::size_t row, std::size_t col) {
    GradedMatrix r;
    for (std::size_t i = 0; i < m.tgt.rank(); ++i)
        if (i != row) r.tgt.gen_weights.push_back(m.tgt.gen_weights[i]);
    for (std::size_t j = 0; j < m.src.rank(); ++j)
        if (j != col) r.src.gen_weights.push_back(m.src.gen_weights[j]);
    r.e.assign(r.tgt.rank(), std::vector<Polynomial>(r.src.rank()));
    std::size_t ii = 0;
    for (std::size_t i = 0; i < m.tgt.rank(); ++i) {
        if (i == row) continue;
        std::size_t jj = 0;
        for (std::size_t j = 0; j < m.src.rank(); ++j) {
            if (j == col) continue;
            r.e[ii][jj] = m.e[i][j];
            ++jj;
        }
        ++ii;
    }
    return r;
}

} // namespace

// Gaussian cancellation of unit entries across a chain of composable maps.
// steps[k] : F_{k+1} -> F_k, with steps[k-1] * steps[k] == 0.
void minimize_chain(std::vector<GradedMatrix>& steps) {
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            auto u = find_unit(steps[k]);
            if (!u) continue;
            changed = true;
            auto [i, j] = *u;
            GradedMatrix& d = steps[k];
            Rational uc = d.e[i][j].lc();
            // Clear row i using column j (source basis change on F_{k+1}).
            std::vector<Polynomial> lambda(d.src.rank());
            for (std::size_t j2 = 0; j2 < d.src.rank(); ++j2) {
                if (j2 == j) continue;
                lambda[j2] = d.e[i][j2].scaled(Rational(1) / uc);
                if (lambda[j2].is_zero()) continue;
                for (std::size_t i2 = 0; i2 < d.tgt.rank(); ++i2)
                    d.e[i2][j2] -= lambda[j2] * d.e[i2][j];
            }
            // Same basis change seen by steps[k+1] (rows indexed by F_{k+1}).
            if (k + 1 < steps.size()) {
                GradedMatrix& a = steps[k + 1];
                for (std::size_t j2 = 0; j2 < d.src.rank(); ++j2) {
                    if (j2 == j || lambda[j2].is_zero()) continue;
                    for (std::size_t c = 0; c < a.src.rank(); ++c)
                        a.e[j][c] += lambda[j2] * a.e[j2][c];
                }
            }
            // Clear column j below the unit (target basis change on F_k), and
            // mirror it on the columns of steps[k-1]; b*d = 0 then forces the
            // adjusted column i of b to vanish.
            std::vector<Polynomial> mu(d.tgt.rank());
            for (std::size_t i2 = 0; i2 < d.tgt.rank(); ++i2) {
                if (i2 == i) continue;
                mu[i2] = d.e[i2][j].scaled(Rational(1) / uc);
                if (!mu[i2].is_zero()) d.e[i2][j] = Polynomial();
            }
            if (k > 0) {
                GradedMatrix& b = steps[k - 1];
                for (std::size_t i2 = 0; i2 < d.tgt.rank(); ++i2) {
                    if (i2 == i || mu[i2].is_zero()) continue;
                    for (std::size_t r = 0; r < b.tgt.rank(); ++r)
                        b.e[r][i] += mu[i2] * b.e[r][i2];
                }
            }
            // Drop generator j of F_{k+1} and generator i of F_k.
            steps[k] = drop_row_col(steps[k], i, j);
            if (k + 1 < steps.size()) {
                GradedMatrix& a = steps[k + 1];
                GradedMatrix na;
                na.src = a.src;
                for (std::size_t r = 0; r < a.tgt.rank(); ++r)
                    if (r != j) na.tgt.gen_weights.push_back(a.tgt.gen_weights[r]);
                na.e.assign(na.tgt.rank(), std::vector<Polynomial>(na.src.rank()));
                std::size_t rr = 0;
                for (std::size_t r = 0; r < a.tgt.rank(); ++r) {
                    if (r == j) continue;
                    na.e[rr++] = a.e[r];
                }
                a = std::move(na);
            }
            if (k > 0) {
                GradedMatrix& b = steps[k - 1];
                GradedMatrix nb;
                nb.tgt = b.tgt;
                for (std::size_t c = 0; c < b.src.rank(); ++c)
                    if (c != i) nb.src.gen_weights.push_back(b.src.gen_weights[c]);
                nb.e.assign(nb.tgt.rank(), std::vector<Polynomial>(nb.src.rank()));
                for (std::size_t r = 0; r < b.tgt.rank(); ++r) {
                    std::size_t cc = 0;
                    for (std::size_t c = 0; c < b.src.rank(); ++c) {
                        if (c == i) continue;
                        nb.e[r][cc++] = b.e[r][c];
                    }
                }
                b = std::move(nb);
            }
        }
    }
}

Resolution free_resolution(const GradedRing& ring, const GradedMatrix& pres, int length_cap) {
    pres.validate(ring);
    Resolution res;
    GradedMatrix d = minimalize_generators(ring, pres);
    res.steps.push_back(d);
    minimize_chain(res.steps); // strips unit entries from the presentation itself
    for (int step = 0; step < length_cap; ++step) {
        const GradedMatrix& last = res.steps.back();
        if (last.src.rank() == 0) return res;
        GradedMatrix k = kernel(ring, last);
        if (k.src.rank() == 0) return res;
        k = minimalize_generators(ring, k);
        res.steps.push_back(std::move(k));
        minimize_chain(res.steps);
    }
    res.truncated = true;
    return res;
}

} // namespace gsod
