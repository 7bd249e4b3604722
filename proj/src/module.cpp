#include "gsod/module.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>

namespace gsod {

ModulePresentation ModulePresentation::free_module(RingPtr r, std::vector<int64_t> gen_weights,
                                                   std::string name) {
    ModulePresentation m;
    m.ring = std::move(r);
    m.pres = GradedMatrix::zero(FreeModule{}, FreeModule{std::move(gen_weights)});
    m.name = std::move(name);
    return m;
}

ModulePresentation ModulePresentation::cyclic(RingPtr r, std::vector<Polynomial> gens,
                                              std::string name) {
    ModulePresentation m;
    m.ring = r;
    FreeModule src;
    std::vector<Polynomial> row;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        auto w = g.homogeneous_weight(r->weights());
        if (!w) throw InputError("cyclic module generator must be homogeneous: " +
                                 to_string(g, r->vars()));
        src.gen_weights.push_back(*w);
        row.push_back(std::move(g));
    }
    m.pres.src = std::move(src);
    m.pres.tgt = FreeModule{{0}};
    m.pres.e.assign(1, std::move(row));
    m.pres.validate(*r);
    m.name = std::move(name);
    return m;
}

ModulePresentation ModulePresentation::zero(RingPtr r) {
    ModulePresentation m;
    m.ring = std::move(r);
    m.pres = GradedMatrix::zero(FreeModule{}, FreeModule{});
    return m;
}

ModulePresentation twist(const ModulePresentation& m, int64_t i) {
    ModulePresentation t = m;
    for (auto& w : t.pres.tgt.gen_weights) w -= i;
    for (auto& w : t.pres.src.gen_weights) w -= i;
    if (!t.name.empty()) t.name += "(" + std::to_string(i) + ")";
    return t;
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
    if (a.ring != b.ring) throw InputError("direct sum over different rings");
    ModulePresentation s;
    s.ring = a.ring;
    s.pres.tgt.gen_weights = a.pres.tgt.gen_weights;
    s.pres.tgt.gen_weights.insert(s.pres.tgt.gen_weights.end(), b.pres.tgt.gen_weights.begin(),
                                  b.pres.tgt.gen_weights.end());
    s.pres.src.gen_weights = a.pres.src.gen_weights;
    s.pres.src.gen_weights.insert(s.pres.src.gen_weights.end(), b.pres.src.gen_weights.begin(),
                                  b.pres.src.gen_weights.end());
    std::size_t rt = s.pres.tgt.rank(), rs = s.pres.src.rank();
    s.pres.e.assign(rt, std::vector<Polynomial>(rs));
    for (std::size_t i = 0; i < a.pres.tgt.rank(); ++i)
        for (std::size_t j = 0; j < a.pres.src.rank(); ++j) s.pres.e[i][j] = a.pres.e[i][j];
    for (std::size_t i = 0; i < b.pres.tgt.rank(); ++i)
        for (std::size_t j = 0; j < b.pres.src.rank(); ++j)
            s.pres.e[a.pres.tgt.rank() + i][a.pres.src.rank() + j] = b.pres.e[i][j];
    s.name = a.name + "+" + b.name;
    return s;
}

// ---- weight-piece enumeration ----

namespace {

struct Range {
    int64_t lo = 0;
    std::optional<int64_t> hi; // nullopt = unbounded
};

// Coordinate ranges for {alpha >= 0, alpha_v < purepower_v, w.alpha = wt},
// tightened by interval propagation. Returns nullopt unless all bounded.
std::optional<std::vector<int64_t>> certified_bounds(const GradedRing& ring, int64_t wt) {
    const auto& w = ring.weights();
    std::size_t n = ring.nvars();
    std::vector<Range> r(n);
    for (std::size_t v = 0; v < n; ++v) {
        int pp = ring.pure_power_bound(v);
        if (pp > 0) r[v].hi = pp - 1;
    }
    for (int round = 0; round < 64; ++round) {
        bool changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (w[v] == 0) continue;
            // w_v alpha_v = wt - sum_{u != v} w_u alpha_u
            int64_t rest_min = 0;
            std::optional<int64_t> rest_max = 0;
            bool rest_min_inf = false;
            for (std::size_t u = 0; u < n; ++u) {
                if (u == v || w[u] == 0) continue;
                if (w[u] > 0) {
                    rest_min += w[u] * r[u].lo;
                    if (rest_max) {
                        if (r[u].hi)
                            *rest_max += w[u] * *r[u].hi;
                        else
                            rest_max = std::nullopt;
                    }
                } else {
                    if (r[u].hi)
                        rest_min += w[u] * *r[u].hi;
                    else
                        rest_min_inf = true;
                    if (rest_max) *rest_max += w[u] * r[u].lo;
                }
            }
            // Zero-weight variables contribute nothing to the sum.
            std::optional<int64_t> cand_hi;
            if (w[v] > 0) {
                if (!rest_min_inf) cand_hi = (wt - rest_min) / w[v];
            } else if (rest_max) {
                cand_hi = (*rest_max - wt) / (-w[v]);
            }
            if (cand_hi) {
                int64_t h = std::max<int64_t>(*cand_hi, -1);
                if (!r[v].hi || *r[v].hi > h) {
                    r[v].hi = h;
                    changed = true;
                }
            }
        }
        if (!changed) break;
    }
    std::vector<int64_t> out(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (!r[v].hi) return std::nullopt;
        out[v] = *r[v].hi; // may be -1: certified-empty piece
    }
    return out;
}

void enumerate_weighted(const GradedRing& ring, const std::vector<int64_t>& hi, int64_t wt,
                        const std::function<void(const Monomial&)>& emit) {
    std::size_t n = ring.nvars();
    const auto& w = ring.weights();
    Monomial cur(n);
    std::function<void(std::size_t, int64_t)> rec = [&](std::size_t v, int64_t acc) {
        if (v == n) {
            if (acc == wt && ring.is_std(cur)) emit(cur);
            return;
        }
        int64_t rest_min = 0, rest_max = 0;
        for (std::size_t u = v; u < n; ++u) {
            if (w[u] > 0) rest_max += w[u] * hi[u];
            if (w[u] < 0) rest_min += w[u] * hi[u];
        }
        if (acc + rest_min > wt || acc + rest_max < wt) return;
        for (int64_t e = 0; e <= hi[v]; ++e) {
            cur.e[v] = int32_t(e);
            if (!ring.is_std(cur)) { cur.e[v] = 0; break; } // extensions stay non-std
            rec(v + 1, acc + w[v] * e);
        }
        cur.e[v] = 0;
    };
    rec(0, 0);
}

} // namespace

std::optional<std::vector<Monomial>> ring_piece_basis(const GradedRing& ring, int64_t wt) {
    auto hi = certified_bounds(ring, wt);
    if (!hi) {
        // An empty range is also a certificate (dimension zero).
        // certified_bounds reports nullopt both for "unbounded" and for an
        // empty propagated range; distinguish the trivially-empty case.
        return std::nullopt;
    }
    std::vector<Monomial> out;
    enumerate_weighted(ring, *hi, wt, [&](const Monomial& m) { out.push_back(m); });
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; });
    return out;
}

std::optional<std::vector<PieceBasisElem>> free_piece_basis(const GradedRing& ring,
                                                            const FreeModule& f, int64_t wt) {
    std::vector<PieceBasisElem> out;
    for (std::size_t k = 0; k < f.rank(); ++k) {
        auto part = ring_piece_basis(ring, wt - f.gen_weights[k]);
        if (!part) return std::nullopt;
        for (auto& m : *part) out.push_back(PieceBasisElem{k, m});
    }
    return out;
}

namespace {

std::optional<std::map<std::pair<std::size_t, std::vector<int32_t>>, std::size_t>>
basis_index(const std::vector<PieceBasisElem>& basis) {
    std::map<std::pair<std::size_t, std::vector<int32_t>>, std::size_t> idx;
    for (std::size_t i = 0; i < basis.size(); ++i) idx[{basis[i].gen, basis[i].m.e}] = i;
    return idx;
}

} // namespace

std::optional<QMat> matrix_at_weight(const GradedRing& ring, const GradedMatrix& m, int64_t wt) {
    auto src = free_piece_basis(ring, m.src, wt);
    auto tgt = free_piece_basis(ring, m.tgt, wt);
    if (!src || !tgt) return std::nullopt;
    auto idx = basis_index(*tgt);
    QMat out(tgt->size(), std::vector<Rational>(src->size(), Rational(0)));
    for (std::size_t j = 0; j < src->size(); ++j) {
        const auto& [k, mono] = (*src)[j];
        for (std::size_t i = 0; i < m.tgt.rank(); ++i) {
            if (m.e[i][k].is_zero()) continue;
            Polynomial img = ring.reduce(m.e[i][k].term_mul(Rational(1), mono));
            for (const auto& t : img.terms()) {
                auto it = idx->find({i, t.m.e});
                if (it == idx->end())
                    throw InputError("internal: image term escapes the weight piece");
                out[it->second][j] += t.c;
            }
        }
    }
    return out;
}

std::optional<int64_t> module_piece_dim(const ModulePresentation& m, int64_t wt) {
    const GradedRing& ring = *m.ring;
    auto tgt = free_piece_basis(ring, m.pres.tgt, wt);
    if (!tgt) return std::nullopt;
    if (tgt->empty()) return 0;
    // Image rank: columns are multiples mono * pres-column for std monomials
    // of the complementary weight. If the source piece is certified, use it;
    // otherwise bound multipliers by the target envelope (sound: any product
    // escaping the envelope reduces to zero in the piece or stays divisible).
    auto idx = basis_index(*tgt);
    QMat rows;
    for (std::size_t c = 0; c < m.pres.src.rank(); ++c) {
        int64_t mw = wt - m.pres.src.gen_weights[c];
        auto mults = ring_piece_basis(ring, mw);
        if (!mults) return std::nullopt;
        for (const auto& mono : *mults) {
            std::vector<Rational> row(tgt->size(), Rational(0));
            bool nonzero = false;
            for (std::size_t i = 0; i < m.pres.tgt.rank(); ++i) {
                if (m.pres.e[i][c].is_zero()) continue;
                Polynomial img = ring.reduce(m.pres.e[i][c].term_mul(Rational(1), mono));
                for (const auto& t : img.terms()) {
                    auto it = idx->find({i, t.m.e});
                    if (it == idx->end())
                        throw InputError("internal: image term escapes the weight piece");
                    row[it->second] += t.c;
                    nonzero = true;
                }
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    return int64_t(tgt->size()) - int64_t(qmat_rank(std::move(rows)));
}

// ---- Nakayama candidates ----

std::vector<Monomial> nakayama_candidates(const GradedRing& ring, int64_t wt) {
    const auto& w = ring.weights();
    std::size_t n = ring.nvars();
    const auto& hb = ring.weight_zero_hilbert_basis();
    int maxw = 1;
    for (int x : w) maxw = std::max(maxw, std::abs(x));
    // Sound degree bound for u-free monomials of a fixed weight.
    int64_t bound = int64_t(n) * maxw + int64_t(n) * (int64_t(n) * maxw * maxw + std::abs(wt)) + 4;
    std::vector<int64_t> hi(n);
    for (std::size_t v = 0; v < n; ++v) {
        hi[v] = (w[v] == 0) ? 0 : bound; // weight-0 vars are Hilbert elements
        int pp = ring.pure_power_bound(v);
        if (pp > 0) hi[v] = std::min<int64_t>(hi[v], pp - 1);
    }
    std::vector<Monomial> out;
    Monomial cur(n);
    std::function<void(std::size_t, int64_t)> rec = [&](std::size_t v, int64_t acc) {
        if (v == n) {
            if (acc != wt || !ring.is_std(cur)) return;
            for (const auto& u : hb)
                if (u.divides(cur)) return;
            out.push_back(cur);
            return;
        }
        int64_t rest_min = 0, rest_max = 0;
        for (std::size_t u = v; u < n; ++u) {
            if (w[u] > 0) rest_max += w[u] * hi[u];
            if (w[u] < 0) rest_min += w[u] * hi[u];
        }
        if (acc + rest_min > wt || acc + rest_max < wt) return;
        for (int64_t e = 0; e <= hi[v]; ++e) {
            cur.e[v] = int32_t(e);
            bool dead = false;
            if (e > 0) {
                if (!ring.is_std(cur)) dead = true;
                if (!dead)
                    for (const auto& u : hb)
                        if (u.divides(cur)) { dead = true; break; }
            }
            if (dead) { cur.e[v] = 0; break; } // extensions stay divisible
            rec(v + 1, acc + w[v] * e);
        }
        cur.e[v] = 0;
    };
    rec(0, 0);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) < 0; });
    return out;
}

std::vector<PieceBasisElem> nakayama_candidates(const GradedRing& ring, const FreeModule& f,
                                                int64_t wt) {
    std::vector<PieceBasisElem> out;
    for (std::size_t k = 0; k < f.rank(); ++k)
        for (auto& m : nakayama_candidates(ring, wt - f.gen_weights[k]))
            out.push_back(PieceBasisElem{k, m});
    return out;
}

std::vector<Vec> piece_a0_generators(const ModulePresentation& m, int64_t wt) {
    const GradedRing& ring = *m.ring;
    const auto& hb = ring.weight_zero_hilbert_basis();
    auto cand = nakayama_candidates(ring, m.pres.tgt, wt);
    if (cand.empty()) return {};
    std::map<std::pair<std::size_t, std::vector<int32_t>>, std::size_t> idx;
    for (std::size_t i = 0; i < cand.size(); ++i) idx[{cand[i].gen, cand[i].m.e}] = i;

    auto project_row = [&](std::size_t comp, const Polynomial& p,
                           std::vector<Rational>& row) -> bool {
        bool nonzero = false;
        for (const auto& t : p.terms()) {
            bool ufree = true;
            for (const auto& u : hb)
                if (u.divides(t.m)) { ufree = false; break; }
            if (!ufree) continue;
            auto it = idx.find({comp, t.m.e});
            if (it == idx.end()) continue; // non-std term already reduced away
            row[it->second] += t.c;
            nonzero = true;
        }
        return nonzero;
    };

    QMat rows;
    for (std::size_t c = 0; c < m.pres.src.rank(); ++c) {
        int64_t mw = wt - m.pres.src.gen_weights[c];
        for (const auto& mono : nakayama_candidates(ring, mw)) {
            std::vector<Rational> row(cand.size(), Rational(0));
            bool nonzero = false;
            for (std::size_t i = 0; i < m.pres.tgt.rank(); ++i) {
                if (m.pres.e[i][c].is_zero()) continue;
                Polynomial img = ring.reduce(m.pres.e[i][c].term_mul(Rational(1), mono));
                nonzero |= project_row(i, img, row);
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    auto pivots = qmat_rref(rows);
    std::vector<bool> is_pivot(cand.size(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (is_pivot[i]) continue;
        Vec v(m.pres.tgt.rank());
        v[cand[i].gen] = Polynomial::monomial(cand[i].m);
        gens.push_back(std::move(v));
    }
    return gens;
}

std::vector<WindowGenerator> window_generators(const WindowedModule& w,
                                               std::optional<int64_t> jmax_override) {
    const ModulePresentation& m = w.carrier;
    const GradedRing& ring = *m.ring;
    const auto& hb = ring.weight_zero_hilbert_basis();
    int64_t maxgen = w.cutoff;
    for (auto gw : m.pres.tgt.gen_weights) maxgen = std::max(maxgen, gw);
    int64_t jmax = jmax_override
                       ? *jmax_override
                       : std::max(ring.stab_n0_plus() + maxgen,
                                  w.cutoff + ring.stab_d_plus() - 1);

    // Candidate monomial bases per weight in the window.
    std::map<int64_t, std::vector<PieceBasisElem>> cand;
    for (int64_t j = w.cutoff; j <= jmax; ++j)
        cand[j] = nakayama_candidates(ring, m.pres.tgt, j);

    auto is_ufree = [&](const Monomial& mm) {
        for (const auto& u : hb)
            if (u.divides(mm)) return false;
        return true;
    };

    std::vector<WindowGenerator> out;
    for (int64_t i = w.cutoff; i <= jmax; ++i) {
        const auto& ci = cand[i];
        if (ci.empty()) continue;
        std::map<std::pair<std::size_t, std::vector<int32_t>>, std::size_t> idx;
        for (std::size_t t = 0; t < ci.size(); ++t) idx[{ci[t].gen, ci[t].m.e}] = t;
        auto project = [&](std::size_t comp, const Polynomial& p, std::vector<Rational>& row) {
            bool nz = false;
            for (const auto& t : p.terms()) {
                if (!is_ufree(t.m)) continue;
                auto it = idx.find({comp, t.m.e});
                if (it == idx.end()) continue;
                row[it->second] += t.c;
                nz = true;
            }
            return nz;
        };
        QMat rows;
        // Relations of the presentation at weight i.
        for (std::size_t c = 0; c < m.pres.src.rank(); ++c)
            for (const auto& mono : nakayama_candidates(ring, i - m.pres.src.gen_weights[c])) {
                std::vector<Rational> row(ci.size(), Rational(0));
                bool nz = false;
                for (std::size_t k = 0; k < m.pres.tgt.rank(); ++k) {
                    if (m.pres.e[k][c].is_zero()) continue;
                    nz |= project(k, ring.reduce(m.pres.e[k][c].term_mul(Rational(1), mono)), row);
                }
                if (nz) rows.push_back(std::move(row));
            }
        // Action of the window on the other weight pieces.
        for (int64_t j = w.cutoff; j <= jmax; ++j) {
            if (j == i) continue;
            for (const auto& gamma : nakayama_candidates(ring, i - j))
                for (const auto& cj : cand[j]) {
                    std::vector<Rational> row(ci.size(), Rational(0));
                    Polynomial p = ring.reduce(Polynomial::monomial(gamma * cj.m));
                    if (project(cj.gen, p, row)) rows.push_back(std::move(row));
                }
        }
        auto pivots = qmat_rref(rows);
        std::vector<bool> is_pivot(ci.size(), false);
        for (auto p : pivots) is_pivot[p] = true;
        for (std::size_t t = 0; t < ci.size(); ++t) {
            if (is_pivot[t]) continue;
            Vec v(m.pres.tgt.rank());
            v[ci[t].gen] = Polynomial::monomial(ci[t].m);
            out.push_back(WindowGenerator{i, std::move(v)});
        }
    }
    return out;
}

FgWindowReport is_fg_window(const WindowedModule& w) {
    FgWindowReport rep;
    try {
        rep.generators = window_generators(w);
        rep.is_fg = true;
    } catch (const CapError&) {
        rep.indeterminate = true;
    } catch (const UnsupportedError&) {
        rep.indeterminate = true;
    }
    return rep;
}

namespace {

// Graded Nakayama arguments need the total-degree grading to be honest.
bool total_degree_graded(const ModulePresentation& m) {
    auto homog = [](const Polynomial& p) {
        if (p.is_zero()) return true;
        int64_t d = p.terms().front().m.total_degree();
        for (const auto& t : p.terms())
            if (t.m.total_degree() != d) return false;
        return true;
    };
    for (const auto& r : m.ring->relations())
        if (!homog(r)) return false;
    for (const auto& row : m.pres.e)
        for (const auto& p : row)
            if (!homog(p)) return false;
    return true;
}

} // namespace

WeightCharacter character(const ModulePresentation& m, int64_t lo, int64_t hi) {
    WeightCharacter ch;
    ch.lo = lo;
    ch.hi = hi;
    bool graded = total_degree_graded(m);
    for (int64_t i = lo; i <= hi; ++i) {
        auto d = module_piece_dim(m, i);
        if (d) {
            ch.entries[i] = CharEntry::exact(*d);
        } else {
            auto gens = piece_a0_generators(m, i);
            std::ostringstream os;
            os << "f.g. A0-module on " << gens.size() << " generator(s)";
            if (gens.empty() && graded)
                ch.entries[i] = CharEntry::exact(0);
            else
                ch.entries[i] = CharEntry::infinite(os.str());
        }
    }
    return ch;
}

HomResult hom_weight0(const ModulePresentation& m, const ModulePresentation& n) {
    const GradedRing& ring = *m.ring;
    HomResult res;
    // Unknowns: an element of F0(N) at each generator weight of M.
    std::vector<std::vector<PieceBasisElem>> bases;
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (auto a : m.pres.tgt.gen_weights) {
        auto b = free_piece_basis(ring, n.pres.tgt, a);
        if (!b) {
            auto gens = piece_a0_generators(n, a);
            std::ostringstream os;
            os << "descriptor-only: target piece at weight " << a
               << " is a f.g. A0-module on " << gens.size() << " generator(s)";
            res.descriptor = os.str();
            return res;
        }
        offset.push_back(total);
        total += b->size();
        bases.push_back(std::move(*b));
    }

    // Constraint rows: for each relation column c of M, the combination of
    // images must land in im(pres_N) at weight b_c. Build [T | Im] and demand
    // solvability; equivalently compute ker of T composed with quotient.
    struct Block {
        QMat rows;          // target piece coordinates x unknowns
        QMat image_cols;    // target piece coordinates x image generators
        std::vector<PieceBasisElem> basis;
    };
    std::vector<Block> blocks;
    for (std::size_t c = 0; c < m.pres.src.rank(); ++c) {
        int64_t bw = m.pres.src.gen_weights[c];
        auto tb = free_piece_basis(ring, n.pres.tgt, bw);
        if (!tb) {
            res.descriptor = "descriptor-only: relation-weight piece not finite";
            return res;
        }
        std::map<std::pair<std::size_t, std::vector<int32_t>>, std::size_t> idx;
        for (std::size_t i = 0; i < tb->size(); ++i) idx[{(*tb)[i].gen, (*tb)[i].m.e}] = i;
        Block blk;
        blk.basis = *tb;
        blk.rows.assign(tb->size(), std::vector<Rational>(total, Rational(0)));
        for (std::size_t k = 0; k < m.pres.tgt.rank(); ++k) {
            const Polynomial& coeff = m.pres.e[k][c];
            if (coeff.is_zero()) continue;
            for (std::size_t j = 0; j < bases[k].size(); ++j) {
                // coeff * (basis elem j of unknown k), expanded at weight bw.
                Polynomial img = ring.reduce(coeff.term_mul(Rational(1), bases[k][j].m));
                for (const auto& t : img.terms()) {
                    auto it = idx.find({bases[k][j].gen, t.m.e});
                    if (it == idx.end())
                        throw InputError("internal: hom constraint escapes piece");
                    blk.rows[it->second][offset[k] + j] += t.c;
                }
            }
        }
        // Image columns at weight bw.
        for (std::size_t cc = 0; cc < n.pres.src.rank(); ++cc) {
            int64_t mw = bw - n.pres.src.gen_weights[cc];
            auto mults = ring_piece_basis(ring, mw);
            if (!mults) {
                res.descriptor = "descriptor-only: image piece not finite";
                return res;
            }
            for (const auto& mono : *mults) {
                std::vector<Rational> col(tb->size(), Rational(0));
                bool nz = false;
                for (std::size_t i = 0; i < n.pres.tgt.rank(); ++i) {
                    if (n.pres.e[i][cc].is_zero()) continue;
                    Polynomial img = ring.reduce(n.pres.e[i][cc].term_mul(Rational(1), mono));
                    for (const auto& t : img.terms()) {
                        auto it = idx.find({i, t.m.e});
                        if (it == idx.end())
                            throw InputError("internal: hom image escapes piece");
                        col[it->second] += t.c;
                        nz = true;
                    }
                }
                if (nz) blk.image_cols.push_back(std::move(col));
            }
        }
        blocks.push_back(std::move(blk));
    }

    // Solution space: unknowns v with T_c(v) in Im_c for all c. Stack
    // [T_c | -Im_c] and nullspace over (unknowns + image coefficients).
    std::size_t extra = 0;
    for (const auto& b : blocks) extra += b.image_cols.size();
    QMat big;
    std::size_t eoff = total;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows.size(); ++r) {
            std::vector<Rational> row(total + extra, Rational(0));
            for (std::size_t j = 0; j < total; ++j) row[j] = b.rows[r][j];
            for (std::size_t j = 0; j < b.image_cols.size(); ++j)
                row[eoff + j] = -b.image_cols[j][r];
            big.push_back(std::move(row));
        }
        eoff += b.image_cols.size();
    }
    auto null_basis = qmat_nullspace(big, total + extra);
    // Project to the unknown coordinates and quotient by image tuples:
    // image tuples are elements of ker automatically; their projections are
    // spanned by im(pres_N) at each generator weight.
    QMat proj;
    for (const auto& v : null_basis) proj.push_back({v.begin(), v.begin() + total});
    std::size_t sol_rank = qmat_rank(proj);
    // Rank of the pointwise-image subspace inside the unknown coordinates.
    QMat img_rows;
    for (std::size_t k = 0; k < m.pres.tgt.rank(); ++k) {
        int64_t aw = m.pres.tgt.gen_weights[k];
        std::map<std::pair<std::size_t, std::vector<int32_t>>, std::size_t> idx;
        for (std::size_t i = 0; i < bases[k].size(); ++i)
            idx[{bases[k][i].gen, bases[k][i].m.e}] = i;
        for (std::size_t cc = 0; cc < n.pres.src.rank(); ++cc) {
            int64_t mw = aw - n.pres.src.gen_weights[cc];
            auto mults = ring_piece_basis(ring, mw);
            if (!mults) {
                res.descriptor = "descriptor-only";
                return res;
            }
            for (const auto& mono : *mults) {
                std::vector<Rational> row(total, Rational(0));
                bool nz = false;
                for (std::size_t i = 0; i < n.pres.tgt.rank(); ++i) {
                    if (n.pres.e[i][cc].is_zero()) continue;
                    Polynomial img = ring.reduce(n.pres.e[i][cc].term_mul(Rational(1), mono));
                    for (const auto& t : img.terms()) {
                        auto it = idx.find({i, t.m.e});
                        if (it == idx.end()) continue;
                        row[offset[k] + it->second] += t.c;
                        nz = true;
                    }
                }
                if (nz) img_rows.push_back(std::move(row));
            }
        }
    }
    std::size_t img_rank = qmat_rank(img_rows);
    res.finite = true;
    res.dim = int64_t(sol_rank) - int64_t(img_rank);

    // Return representative maps (coset representatives, not reduced).
    for (const auto& v : null_basis) {
        std::vector<Vec> images;
        for (std::size_t k = 0; k < m.pres.tgt.rank(); ++k) {
            Vec img(n.pres.tgt.rank());
            for (std::size_t j = 0; j < bases[k].size(); ++j) {
                const Rational& cv = v[offset[k] + j];
                if (sgn(cv) != 0)
                    img[bases[k][j].gen] += Polynomial::monomial(bases[k][j].m, cv);
            }
            images.push_back(std::move(img));
        }
        res.maps.push_back(std::move(images));
    }
    return res;
}

} // namespace gsod
