#include "gsod/complex.hpp"

#include <algorithm>
#include <cassert>

namespace gsod {

GradedMatrix FreeComplex::diff(int p) const {
    auto it = diffs.find(p);
    if (it != diffs.end()) return it->second;
    return GradedMatrix::zero(term(p), term(p + 1));
}

void FreeComplex::drop_zero_terms() {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second.rank() == 0) {
            diffs.erase(it->first);
            if (it->first > lo()) diffs.erase(it->first - 1);
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    for (auto it = diffs.begin(); it != diffs.end();) {
        if (!terms.count(it->first) || !terms.count(it->first + 1))
            it = diffs.erase(it);
        else
            ++it;
    }
}

void FreeComplex::validate() const {
    for (const auto& [p, d] : diffs) {
        if (!(d.src == term(p)) || !(d.tgt == term(p + 1)))
            throw InputError("complex differential shape mismatch at degree " +
                             std::to_string(p));
        d.validate(*ring);
    }
    for (const auto& [p, d] : diffs) {
        auto next = diffs.find(p + 1);
        if (next == diffs.end()) continue;
        if (!mat_mul(next->second, d).is_zero())
            throw InputError("d o d != 0 at degree " + std::to_string(p));
    }
}

GradedMatrix ChainMap::comp(const FreeComplex& src, const FreeComplex& tgt, int p) const {
    auto it = comps.find(p);
    if (it != comps.end()) return it->second;
    return GradedMatrix::zero(src.term(p), tgt.term(p));
}

void validate_chain_map(const FreeComplex& src, const FreeComplex& tgt, const ChainMap& f) {
    for (int p = std::min(src.lo(), tgt.lo()); p <= std::max(src.hi(), tgt.hi()); ++p) {
        GradedMatrix lhs = mat_mul(f.comp(src, tgt, p + 1), src.diff(p));
        GradedMatrix rhs = mat_mul(tgt.diff(p), f.comp(src, tgt, p));
        if (!mat_sub(lhs, rhs).is_zero())
            throw InputError("chain map does not commute at degree " + std::to_string(p));
    }
}

FreeComplex complex_from_resolution(const RingPtr& ring, const Resolution& res) {
    FreeComplex c;
    c.ring = ring;
    c.terms[0] = res.steps.front().tgt;
    for (std::size_t k = 0; k < res.steps.size(); ++k) {
        int p = -int(k) - 1;
        if (res.steps[k].src.rank() == 0) break;
        c.terms[p] = res.steps[k].src;
        c.diffs[p] = res.steps[k];
    }
    c.drop_zero_terms();
    c.validate();
    return c;
}

FreeComplex resolve_to_complex(const ModulePresentation& m, int length_cap) {
    Resolution res = free_resolution(*m.ring, m.pres, length_cap);
    if (res.truncated) throw CapError("resolution length cap reached for " + m.name);
    return complex_from_resolution(m.ring, res);
}

FreeComplex shift(const FreeComplex& c, int k) {
    FreeComplex s;
    s.ring = c.ring;
    for (const auto& [p, t] : c.terms) s.terms[p - k] = t;
    for (const auto& [p, d] : c.diffs) {
        GradedMatrix m = d;
        if (k % 2 != 0)
            for (auto& row : m.e)
                for (auto& q : row) q = -q;
        s.diffs[p - k] = std::move(m);
    }
    return s;
}

FreeComplex twist_complex(const FreeComplex& c, int64_t i) {
    FreeComplex t = c;
    for (auto& [p, f] : t.terms)
        for (auto& w : f.gen_weights) w -= i;
    for (auto& [p, d] : t.diffs) {
        for (auto& w : d.src.gen_weights) w -= i;
        for (auto& w : d.tgt.gen_weights) w -= i;
    }
    return t;
}

FreeComplex dual_complex(const FreeComplex& c) {
    FreeComplex d;
    d.ring = c.ring;
    for (const auto& [p, t] : c.terms) {
        FreeModule f;
        for (auto w : t.gen_weights) f.gen_weights.push_back(-w);
        d.terms[-p] = std::move(f);
    }
    for (const auto& [p, m] : c.diffs) {
        // transpose of d^p : C^p -> C^{p+1} becomes the differential
        // D^{-p-1} -> D^{-p}.
        GradedMatrix t;
        t.src = d.terms.at(-p - 1);
        t.tgt = d.terms.at(-p);
        t.e.assign(t.tgt.rank(), std::vector<Polynomial>(t.src.rank()));
        for (std::size_t i = 0; i < m.tgt.rank(); ++i)
            for (std::size_t j = 0; j < m.src.rank(); ++j) t.e[j][i] = m.e[i][j];
        d.diffs[-p - 1] = std::move(t);
    }
    d.validate();
    return d;
}

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    FreeComplex s;
    s.ring = a.ring;
    for (int p = std::min(a.lo(), b.lo()); p <= std::max(a.hi(), b.hi()); ++p) {
        FreeModule f = a.term(p);
        FreeModule g = b.term(p);
        if (f.rank() + g.rank() == 0) continue;
        FreeModule t = f;
        t.gen_weights.insert(t.gen_weights.end(), g.gen_weights.begin(), g.gen_weights.end());
        s.terms[p] = std::move(t);
    }
    for (int p = s.lo(); p < s.hi(); ++p) {
        GradedMatrix da = a.diff(p), db = b.diff(p);
        GradedMatrix d = GradedMatrix::zero(s.term(p), s.term(p + 1));
        for (std::size_t i = 0; i < da.tgt.rank(); ++i)
            for (std::size_t j = 0; j < da.src.rank(); ++j) d.e[i][j] = da.e[i][j];
        for (std::size_t i = 0; i < db.tgt.rank(); ++i)
            for (std::size_t j = 0; j < db.src.rank(); ++j)
                d.e[da.tgt.rank() + i][da.src.rank() + j] = db.e[i][j];
        s.diffs[p] = std::move(d);
    }
    s.drop_zero_terms();
    s.validate();
    return s;
}

FreeComplex cone(const FreeComplex& x, const FreeComplex& y, const ChainMap& f) {
    validate_chain_map(x, y, f);
    FreeComplex c;
    c.ring = x.ring;
    int lo = std::min(x.lo() - 1, y.lo()), hi = std::max(x.hi() - 1, y.hi());
    for (int p = lo; p <= hi; ++p) {
        FreeModule t = x.term(p + 1);
        FreeModule g = y.term(p);
        t.gen_weights.insert(t.gen_weights.end(), g.gen_weights.begin(), g.gen_weights.end());
        if (t.rank()) c.terms[p] = std::move(t);
    }
    for (int p = lo; p < hi; ++p) {
        if (!c.terms.count(p) || !c.terms.count(p + 1)) continue;
        GradedMatrix d = GradedMatrix::zero(c.terms.at(p), c.terms.at(p + 1));
        GradedMatrix dx = x.diff(p + 1), dy = y.diff(p), fp = f.comp(x, y, p + 1);
        std::size_t xr = x.term(p + 1).rank();
        std::size_t xr2 = x.term(p + 2).rank();
        for (std::size_t i = 0; i < xr2; ++i)
            for (std::size_t j = 0; j < xr; ++j) d.e[i][j] = -dx.e[i][j];
        for (std::size_t i = 0; i < y.term(p + 1).rank(); ++i)
            for (std::size_t j = 0; j < xr; ++j) d.e[xr2 + i][j] = fp.e[i][j];
        for (std::size_t i = 0; i < y.term(p + 1).rank(); ++i)
            for (std::size_t j = 0; j < y.term(p).rank(); ++j) d.e[xr2 + i][xr + j] = dy.e[i][j];
        c.diffs[p] = std::move(d);
    }
    c.drop_zero_terms();
    c.validate();
    return c;
}

FreeComplex total_tensor(const FreeComplex& a, const FreeComplex& b) {
    FreeComplex t;
    t.ring = a.ring;
    // Generator bookkeeping: in degree n, blocks (p, q) with p+q = n, ordered
    // by p ascending; within a block, (i, j) lexicographic.
    auto block_sizes = [&](int n) {
        std::vector<std::tuple<int, int, std::size_t, std::size_t>> blocks;
        for (int p = a.lo(); p <= a.hi(); ++p) {
            int q = n - p;
            std::size_t ra = a.term(p).rank(), rb = b.term(q).rank();
            if (ra && rb) blocks.push_back({p, q, ra, rb});
        }
        return blocks;
    };
    for (int n = a.lo() + b.lo(); n <= a.hi() + b.hi(); ++n) {
        FreeModule f;
        for (auto [p, q, ra, rb] : block_sizes(n)) {
            const auto& wa = a.term(p).gen_weights;
            const auto& wb = b.term(q).gen_weights;
            for (std::size_t i = 0; i < ra; ++i)
                for (std::size_t j = 0; j < rb; ++j) f.gen_weights.push_back(wa[i] + wb[j]);
        }
        if (f.rank()) t.terms[n] = std::move(f);
    }
    for (int n = a.lo() + b.lo(); n < a.hi() + b.hi(); ++n) {
        if (!t.terms.count(n) || !t.terms.count(n + 1)) continue;
        GradedMatrix d = GradedMatrix::zero(t.terms.at(n), t.terms.at(n + 1));
        auto src_blocks = block_sizes(n), tgt_blocks = block_sizes(n + 1);
        auto offset_of = [&](const std::vector<std::tuple<int, int, std::size_t, std::size_t>>& bl,
                             int p) -> std::optional<std::pair<std::size_t, std::size_t>> {
            std::size_t off = 0;
            for (auto [bp, bq, ra, rb] : bl) {
                if (bp == p) return std::make_pair(off, rb);
                off += ra * rb;
            }
            return std::nullopt;
        };
        std::size_t soff = 0;
        for (auto [p, q, ra, rb] : src_blocks) {
            // d_a (x) 1 : block (p,q) -> (p+1, q)
            GradedMatrix da = a.diff(p);
            if (auto tinfo = offset_of(tgt_blocks, p + 1)) {
                auto [toff, trb] = *tinfo;
                (void)trb;
                for (std::size_t i = 0; i < da.tgt.rank(); ++i)
                    for (std::size_t j = 0; j < ra; ++j) {
                        if (da.e[i][j].is_zero()) continue;
                        for (std::size_t u = 0; u < rb; ++u)
                            d.e[toff + i * rb + u][soff + j * rb + u] = da.e[i][j];
                    }
            }
            // (-1)^p 1 (x) d_b : block (p,q) -> (p, q+1)
            GradedMatrix db = b.diff(q);
            if (auto tinfo = offset_of(tgt_blocks, p)) {
                auto [toff, trb] = *tinfo;
                for (std::size_t i = 0; i < db.tgt.rank(); ++i)
                    for (std::size_t j = 0; j < rb; ++j) {
                        if (db.e[i][j].is_zero()) continue;
                        Polynomial v = (p % 2 == 0) ? db.e[i][j] : -db.e[i][j];
                        for (std::size_t u = 0; u < ra; ++u)
                            d.e[toff + u * trb + i][soff + u * rb + j] = v;
                    }
            }
            soff += ra * rb;
        }
        t.diffs[n] = std::move(d);
    }
    t.drop_zero_terms();
    t.validate();
    return t;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int r, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (int(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < r; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

int koszul_sign(const std::vector<int>& s, int v) {
    int cnt = 0;
    for (int x : s)
        if (x < v) ++cnt;
    return cnt % 2 == 0 ? 1 : -1;
}

} // namespace

FreeComplex koszul_cochain(const RingPtr& ring, const std::vector<Polynomial>& f) {
    const int r = int(f.size());
    std::vector<int64_t> dw;
    for (const auto& g : f) {
        auto w = g.homogeneous_weight(ring->weights());
        if (!w || *w <= 0)
            throw InputError("koszul generator must be homogeneous of positive weight");
        dw.push_back(*w);
    }
    FreeComplex c;
    c.ring = ring;
    std::map<int, std::vector<std::vector<int>>> subs;
    for (int p = 0; p <= r; ++p) {
        subs[p] = subsets_of_size(r, p);
        FreeModule t;
        for (const auto& s : subs[p]) {
            int64_t w = 0;
            for (int v : s) w += dw[v];
            t.gen_weights.push_back(-w);
        }
        c.terms[p] = std::move(t);
    }
    for (int p = 0; p < r; ++p) {
        GradedMatrix d = GradedMatrix::zero(c.terms.at(p), c.terms.at(p + 1));
        for (std::size_t j = 0; j < subs[p].size(); ++j) {
            const auto& s = subs[p][j];
            for (int v = 0; v < r; ++v) {
                if (std::find(s.begin(), s.end(), v) != s.end()) continue;
                std::vector<int> s2 = s;
                s2.insert(std::lower_bound(s2.begin(), s2.end(), v), v);
                std::size_t i =
                    std::find(subs[p + 1].begin(), subs[p + 1].end(), s2) - subs[p + 1].begin();
                d.e[i][j] = koszul_sign(s, v) > 0 ? f[v] : -f[v];
            }
        }
        c.diffs[p] = std::move(d);
    }
    c.validate();
    return c;
}

FreeComplex koszul_chain_on_ring(const RingPtr& ring, const std::vector<Polynomial>& f, int j) {
    std::vector<Polynomial> powers;
    for (const auto& g : f) {
        Polynomial p = g;
        for (int t = 1; t < j; ++t) p = p * g;
        powers.push_back(ring->reduce(p));
    }
    return dual_complex(koszul_cochain(ring, powers));
}

FreeComplex koszul_chain(const ModulePresentation& m, const std::vector<Polynomial>& f, int j,
                         int length_cap) {
    FreeComplex res = resolve_to_complex(m, length_cap);
    FreeComplex k = koszul_chain_on_ring(m.ring, f, j);
    return total_tensor(res, k);
}

void minimize(FreeComplex& c) {
    if (c.empty()) return;
    // Repackage as a descending chain for minimize_chain: steps[k] maps
    // F_{k+1} -> F_k corresponds to diffs read from hi to lo.
    std::vector<GradedMatrix> steps;
    int hi = c.hi(), lo = c.lo();
    for (int p = hi - 1; p >= lo; --p) steps.push_back(c.diff(p));
    minimize_chain(steps);
    FreeComplex out;
    out.ring = c.ring;
    if (steps.empty()) {
        out.terms[hi] = c.term(hi);
        out.drop_zero_terms();
        c = std::move(out);
        return;
    }
    out.terms[hi] = steps.front().tgt;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        out.terms[hi - 1 - int(k)] = steps[k].src;
        out.diffs[hi - 1 - int(k)] = steps[k];
    }
    out.drop_zero_terms();
    out.validate();
    c = std::move(out);
}

ChainMap lift_to_resolution(const FreeComplex& x, const FreeComplex& y, GradedMatrix phi0) {
    ChainMap f;
    f.comps[0] = std::move(phi0);
    const GradedRing& ring = *x.ring;
    for (int p = 0; p > x.lo(); --p) {
        if (!x.terms.count(p - 1)) break;
        // Need phi^{p-1} with d_Y phi^{p-1} = phi^p d_X.
        GradedMatrix rhs = mat_mul(f.comps.at(p), x.diff(p - 1));
        GradedMatrix dy = y.diff(p - 1);
        std::vector<Vec> cols;
        for (std::size_t j = 0; j < dy.src.rank(); ++j) cols.push_back(dy.column(j));
        GroebnerBasis gb(ring, cols, dy.tgt.rank(), /*track=*/true);
        GradedMatrix phi = GradedMatrix::zero(x.term(p - 1), y.term(p - 1));
        for (std::size_t j = 0; j < rhs.src.rank(); ++j) {
            Vec v = rhs.column(j);
            if (vec_is_zero(v)) continue;
            auto lift = gb.lift(v);
            if (!lift) throw InputError("chain-map lift failed: target not exact");
            for (std::size_t i = 0; i < phi.tgt.rank(); ++i) phi.e[i][j] = (*lift)[i];
        }
        f.comps[p - 1] = std::move(phi);
    }
    validate_chain_map(x, y, f);
    return f;
}

CohomTable complex_cohomology_general(const FreeComplex& c, int64_t lo, int64_t hi) {
    CohomTable t;
    t.lo = lo;
    t.hi = hi;
    t.engine = "general";
    for (int64_t i = lo; i <= hi; ++i) {
        for (int p = c.lo(); p <= c.hi(); ++p) {
            auto dp = matrix_at_weight(*c.ring, c.diff(p), i);
            auto dprev = matrix_at_weight(*c.ring, c.diff(p - 1), i);
            auto piece = free_piece_basis(*c.ring, c.term(p), i);
            if (!dp || !dprev || !piece) {
                t.set(p, i, CharEntry::infinite("piece not certified finite by general engine"));
                continue;
            }
            std::size_t dim = piece->size();
            std::size_t rk_out = qmat_rank(*dp);
            std::size_t rk_in = qmat_rank(*dprev);
            t.set(p, i, CharEntry::exact(int64_t(dim) - int64_t(rk_out) - int64_t(rk_in)));
        }
    }
    return t;
}

std::optional<std::map<int64_t, int64_t>> euler_characteristic(const FreeComplex& c, int64_t lo,
                                                               int64_t hi) {
    std::map<int64_t, int64_t> chi;
    for (int64_t i = lo; i <= hi; ++i) {
        int64_t s = 0;
        for (int p = c.lo(); p <= c.hi(); ++p) {
            auto piece = free_piece_basis(*c.ring, c.term(p), i);
            if (!piece) return std::nullopt;
            s += (p % 2 == 0 ? 1 : -1) * int64_t(piece->size());
        }
        chi[i] = s;
    }
    return chi;
}

} // namespace gsod
