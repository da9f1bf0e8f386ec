#include "seglab/mapspace.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace seglab {

namespace {

const std::vector<Monotone>& monotone_cache(int a, int b) {
    thread_local std::map<std::pair<int, int>, std::vector<Monotone>> cache;
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::make_pair(a, b), all_monotone(a, b)).first;
    return it->second;
}

Idx monotone_index(int a, int b, const Monotone& w) {
    const auto& ws = monotone_cache(a, b);
    return static_cast<Idx>(std::lower_bound(ws.begin(), ws.end(), w) - ws.begin());
}

} // namespace

std::vector<Monotone> rep_words(int m, int k) {
    return monotone_cache(k, m);
}

std::vector<Monotone> boundary_words(int m, int k) {
    std::vector<Monotone> out;
    for (const auto& w : monotone_cache(k, m))
        if (!is_surjective(w, m)) out.push_back(w);
    return out;
}

std::vector<Monotone> spine_level_words(int m, int k) {
    std::vector<Monotone> out;
    for (const auto& w : monotone_cache(k, m))
        if (w.back() - w.front() <= 1) out.push_back(w);
    return out;
}

bool bimaps_exact(const SSp& a, const SSp& x) {
    const int mtop = std::min(a->cat_trunc, x->cat_trunc);
    const int ntop = std::min(a->space_trunc, x->space_trunc);
    bool cat_ok = (a->cat_nondeg_bound && *a->cat_nondeg_bound <= mtop) ||
                  (x->cat_coskeletal_from && *x->cat_coskeletal_from + 1 <= mtop);
    auto level_bounded = [&](const SSp& z) {
        for (const auto& l : z->level)
            if (!l->nondeg_bound || *l->nondeg_bound > ntop) return false;
        return true;
    };
    auto level_cosk = [&](const SSp& z) {
        for (const auto& l : z->level)
            if (!l->coskeletal_from || *l->coskeletal_from + 1 > ntop) return false;
        return true;
    };
    bool space_ok = level_bounded(a) || level_cosk(x);
    return cat_ok && space_ok;
}

namespace {

struct BiSlot {
    int m, n;
    Idx cell;
    std::vector<std::tuple<Monotone, Monotone, Idx>> must;
};

// face-key index of the target, shared across enumerations
struct XFaceIndex {
    std::vector<std::vector<std::unordered_map<std::vector<Idx>, std::vector<Idx>, IdxVecHash>>> at;
    XFaceIndex(const SimplicialSpace& x, int mtop, int ntop) {
        at.assign(static_cast<std::size_t>(mtop) + 1, {});
        std::vector<Idx> key;
        for (int m = 0; m <= mtop; ++m) {
            at[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(ntop) + 1);
            for (int n = 0; n <= ntop; ++n) {
                if (m == 0 && n == 0) continue;
                auto& idx = at[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
                for (Idx s = 0; s < x.card(m, n); ++s) {
                    key.clear();
                    if (m >= 1)
                        for (int i = 0; i <= m; ++i) key.push_back(x.dcat(m, i)(n, s));
                    if (n >= 1)
                        for (int i = 0; i <= n; ++i)
                            key.push_back(x.level[static_cast<std::size_t>(m)]->face_of(n, s, i));
                    idx[key].push_back(s);
                }
            }
        }
    }
};

// assignment bookkeeping for maps out of a fixed source pattern
struct SlotTable {
    SSp a, x;
    int mtop, ntop;
    std::vector<BiSlot> slots;
    std::vector<std::vector<std::vector<Idx>>> slot_of;

    SlotTable(const SSp& a_, const SSp& x_) : a(a_), x(x_) {
        mtop = std::min(a->cat_trunc, x->cat_trunc);
        ntop = std::min(a->space_trunc, x->space_trunc);
        slot_of.assign(static_cast<std::size_t>(mtop) + 1, {});
        for (int m = 0; m <= mtop; ++m) {
            slot_of[static_cast<std::size_t>(m)].assign(static_cast<std::size_t>(ntop) + 1, {});
            for (int n = 0; n <= ntop; ++n) {
                auto& so = slot_of[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
                so.assign(a->card(m, n), static_cast<Idx>(-1));
                for (Idx c : a->binondeg[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]) {
                    so[c] = static_cast<Idx>(slots.size());
                    slots.push_back(BiSlot{m, n, c, {}});
                }
            }
        }
    }

    void add_prescriptions(const std::vector<std::tuple<int, int, Idx, Idx>>& pres) {
        for (const auto& [m, n, cell, value] : pres) {
            if (m > mtop || n > ntop) continue;
            const auto& bc = a->bicore[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)][cell];
            Idx sl = slot_of[static_cast<std::size_t>(bc.m)][static_cast<std::size_t>(bc.n)][bc.idx];
            slots[sl].must.push_back({bc.cat_epi, bc.space_epi, value});
        }
    }

    Idx value_of(const std::vector<Idx>& assigned, int m, int n, Idx cell) const {
        const auto& bc = a->bicore[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)][cell];
        Idx w = assigned[slot_of[static_cast<std::size_t>(bc.m)][static_cast<std::size_t>(bc.n)][bc.idx]];
        if (bc.m == m && bc.n == n) return w;
        return x->apply_bi(bc.m, bc.n, w, bc.cat_epi, bc.space_epi);
    }

    void run(const XFaceIndex& index, Budget& budget, const BiMapConstraints& cons,
             const std::function<bool(const std::vector<Idx>&)>& emit) const {
        std::vector<Idx> assigned(slots.size(), 0);
        std::vector<Idx> key;
        std::function<bool(std::size_t)> dfs = [&](std::size_t pos) -> bool {
            if (pos == slots.size()) return emit(assigned);
            const BiSlot& sl = slots[pos];
            auto try_candidate = [&](Idx y) -> bool {
                if (!budget.spend()) return true;
                for (const auto& [ce, se, v] : sl.must)
                    if (x->apply_bi(sl.m, sl.n, y, ce, se) != v) return false;
                if (cons.p && (*cons.p)(sl.m, sl.n, y) != (*cons.g)(sl.m, sl.n, sl.cell)) return false;
                assigned[pos] = y;
                return dfs(pos + 1);
            };
            if (sl.m == 0 && sl.n == 0) {
                for (Idx y = 0; y < x->card(0, 0); ++y) {
                    if (try_candidate(y)) return true;
                    if (budget.exhausted()) return true;
                }
                return false;
            }
            key.clear();
            if (sl.m >= 1)
                for (int i = 0; i <= sl.m; ++i)
                    key.push_back(value_of(assigned, sl.m - 1, sl.n, a->dcat(sl.m, i)(sl.n, sl.cell)));
            if (sl.n >= 1)
                for (int i = 0; i <= sl.n; ++i)
                    key.push_back(value_of(assigned, sl.m, sl.n - 1,
                                           a->level[static_cast<std::size_t>(sl.m)]->face_of(sl.n, sl.cell, i)));
            auto& idx = index.at[static_cast<std::size_t>(sl.m)][static_cast<std::size_t>(sl.n)];
            auto it = idx.find(key);
            if (it == idx.end()) return false;
            for (Idx y : it->second) {
                if (try_candidate(y)) return true;
                if (budget.exhausted()) return true;
            }
            return false;
        };
        dfs(0);
    }
};

std::vector<std::vector<std::vector<Idx>>> assignment_to_values(const SlotTable& st,
                                                                const std::vector<Idx>& assigned) {
    std::vector<std::vector<std::vector<Idx>>> vals(static_cast<std::size_t>(st.mtop) + 1);
    for (int m = 0; m <= st.mtop; ++m) vals[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(st.ntop) + 1);
    for (std::size_t i = 0; i < st.slots.size(); ++i)
        vals[static_cast<std::size_t>(st.slots[i].m)][static_cast<std::size_t>(st.slots[i].n)].push_back(assigned[i]);
    return vals;
}

} // namespace

BisimplicialMap bimap_from_values(const SSp& a, const SSp& x,
                                  const std::vector<std::vector<std::vector<Idx>>>& vals) {
    const int mtop = std::min(a->cat_trunc, x->cat_trunc);
    const int ntop = std::min(a->space_trunc, x->space_trunc);
    BisimplicialMap f;
    f.source = a;
    f.target = x;
    for (int m = 0; m <= mtop; ++m) {
        SimplicialMap lm;
        lm.source = a->level[static_cast<std::size_t>(m)];
        lm.target = x->level[static_cast<std::size_t>(m)];
        lm.at.resize(static_cast<std::size_t>(ntop) + 1);
        for (int n = 0; n <= ntop; ++n) {
            auto& row = lm.at[static_cast<std::size_t>(n)];
            row.resize(a->card(m, n));
            for (Idx c = 0; c < row.size(); ++c) {
                const auto& bc = a->bicore[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)][c];
                const auto& nd = a->binondeg[static_cast<std::size_t>(bc.m)][static_cast<std::size_t>(bc.n)];
                Idx pos = static_cast<Idx>(std::lower_bound(nd.begin(), nd.end(), bc.idx) - nd.begin());
                Idx w = vals[static_cast<std::size_t>(bc.m)][static_cast<std::size_t>(bc.n)][pos];
                row[c] = (bc.m == m && bc.n == n) ? w : x->apply_bi(bc.m, bc.n, w, bc.cat_epi, bc.space_epi);
            }
        }
        f.level_map.push_back(lm);
    }
    return f;
}

BiMapList enumerate_bimaps(const SSp& a, const SSp& x, Budget& budget, const BiMapConstraints& cons) {
    BiMapList out;
    out.exact = bimaps_exact(a, x);
    SlotTable st(a, x);
    st.add_prescriptions(cons.prescribed);
    XFaceIndex index(*x, st.mtop, st.ntop);
    st.run(index, budget, cons, [&](const std::vector<Idx>& assigned) {
        out.maps.push_back(bimap_from_values(a, x, assignment_to_values(st, assigned)));
        return out.maps.size() >= cons.max_results;
    });
    out.complete = !budget.exhausted();
    if (!out.complete) out.exact = false;
    return out;
}

BiLiftResult solve_bilifting(const BisimplicialMap& i, const BisimplicialMap& p,
                             const BisimplicialMap& f, const BisimplicialMap& g, Budget& budget) {
    if (i.source.get() != f.source.get() || i.target.get() != g.source.get() ||
        p.source.get() != f.target.get() || p.target.get() != g.target.get())
        throw error("solve_bilifting: square ends do not match");
    if (!bimap_equal(compose(p, f), compose(g, i))) throw error("solve_bilifting: square does not commute");
    BiMapConstraints hc;
    const int top = std::min(i.cat_dims(), f.cat_dims());
    for (int m = 0; m <= top; ++m)
        for (int n = 0; n <= std::min(i.source->space_trunc, f.target->space_trunc); ++n)
            for (Idx c = 0; c < i.source->card(m, n); ++c)
                hc.prescribed.push_back({m, n, i(m, n, c), f(m, n, c)});
    hc.p = &p;
    hc.g = &g;
    hc.max_results = 1;
    auto hs = enumerate_bimaps(i.target, p.source, budget, hc);
    if (!hs.complete) return {Verdict::unknown("node budget exhausted"), std::nullopt};
    if (hs.maps.empty()) return {Verdict::no("filler search exhausted"), std::nullopt};
    if (!hs.exact)
        return {Verdict::unknown("filler exists on the truncation, but the objects are not determined there"),
                hs.maps[0]};
    return {Verdict::yes("explicit diagonal filler"), hs.maps[0]};
}

// --- mapping spaces -----------------------------------------------------------

BisimplicialMap MappingSpaceResult::materialize(int n, Idx cell) const {
    const SSp& cyl = cylinder[static_cast<std::size_t>(n)].object;
    SlotTable st(cyl, x);
    return bimap_from_values(cyl, x, assignment_to_values(st, cells[static_cast<std::size_t>(n)][cell]));
}

MappingSpaceResult mapping_space(const SSp& a, const SSp& x, int up_to, Budget& budget) {
    if (up_to > x->space_trunc || up_to > a->space_trunc)
        throw error("mapping_space: requested dimension exceeds the space truncation");
    MappingSpaceResult out;
    out.pattern = a;
    out.x = x;
    out.up_to = up_to;
    out.exact = true;
    XFaceIndex index(*x, std::min(a->cat_trunc, x->cat_trunc), std::min(a->space_trunc, x->space_trunc));
    std::vector<SlotTable> tables;
    for (int n = 0; n <= up_to; ++n) {
        auto dn = make_space_simplex(n, a->cat_trunc, a->space_trunc);
        out.cylinder.push_back(ssp_product(a, dn));
        const SSp& cyl = out.cylinder.back().object;
        if (!bimaps_exact(cyl, x)) out.exact = false;
        tables.emplace_back(cyl, x);
        out.cells.emplace_back();
        out.index.emplace_back();
        tables.back().run(index, budget, {}, [&](const std::vector<Idx>& assigned) {
            out.index.back()[assigned] = static_cast<Idx>(out.cells.back().size());
            out.cells.back().push_back(assigned);
            return false;
        });
        if (budget.exhausted()) {
            out.complete = false;
            out.exact = false;
            return out;
        }
    }

    auto k = std::make_shared<TruncatedSimplicialSet>();
    k->trunc = up_to;
    const auto tu = static_cast<std::size_t>(up_to);
    k->cards.assign(tu + 1, 0);
    k->face.assign(tu + 1, {});
    k->degen.assign(tu + 1, {});
    k->label.assign(tu + 1, {});
    for (int n = 0; n <= up_to; ++n)
        k->cards[static_cast<std::size_t>(n)] = out.cells[static_cast<std::size_t>(n)].size();

    // restriction along id_A x op-hat for op: [to_n] -> [from_n]
    auto transported = [&](int from_n, const std::vector<Idx>& h, int to_n, const Monotone& op) {
        const SlotTable& st_to = tables[static_cast<std::size_t>(to_n)];
        const SlotTable& st_from = tables[static_cast<std::size_t>(from_n)];
        std::vector<Idx> res(st_to.slots.size());
        for (std::size_t i = 0; i < st_to.slots.size(); ++i) {
            const auto& sl = st_to.slots[i];
            const auto& words_to = monotone_cache(sl.n, to_n);
            Idx a_cell = static_cast<Idx>(sl.cell / words_to.size());
            Idx w_cell = static_cast<Idx>(sl.cell % words_to.size());
            Monotone img = compose(op, words_to[w_cell]);
            Idx img_idx = monotone_index(sl.n, from_n, img);
            Idx cell_from = static_cast<Idx>(a_cell * monotone_cache(sl.n, from_n).size() + img_idx);
            res[i] = st_from.value_of(h, sl.m, sl.n, cell_from);
        }
        return res;
    };

    for (int n = 1; n <= up_to; ++n) {
        const auto nu = static_cast<std::size_t>(n);
        k->face[nu].resize(nu + 1);
        for (int i = 0; i <= n; ++i) {
            auto& row = k->face[nu][static_cast<std::size_t>(i)];
            row.resize(k->cards[nu]);
            for (Idx c = 0; c < k->cards[nu]; ++c)
                row[c] = out.index[nu - 1].at(transported(n, out.cells[nu][c], n - 1, coface(n, i)));
        }
    }
    for (int n = 0; n < up_to; ++n) {
        const auto nu = static_cast<std::size_t>(n);
        k->degen[nu].resize(nu + 1);
        for (int i = 0; i <= n; ++i) {
            auto& row = k->degen[nu][static_cast<std::size_t>(i)];
            row.resize(k->cards[nu]);
            for (Idx c = 0; c < k->cards[nu]; ++c)
                row[c] = out.index[nu + 1].at(transported(n, out.cells[nu][c], n + 1, codegeneracy(n, i)));
        }
    }
    {
        bool all = true;
        int c = 0;
        for (const auto& l : x->level) {
            if (!l->coskeletal_from) {
                all = false;
                break;
            }
            c = std::max(c, *l->coskeletal_from);
        }
        if (all) k->coskeletal_from = c;
    }
    k->finalize();
    out.space = k;
    return out;
}

SimplicialMap yoneda_restriction(const MappingSpaceResult& ms, int m,
                                 const std::vector<std::vector<Monotone>>& pattern_words) {
    const SSp& x = ms.x;
    SimplicialMap rho;
    rho.source = x->level[static_cast<std::size_t>(m)];
    rho.target = ms.space;
    rho.at.resize(static_cast<std::size_t>(ms.up_to) + 1);
    for (int n = 0; n <= ms.up_to; ++n) {
        const SSp& cyl = ms.cylinder[static_cast<std::size_t>(n)].object;
        SlotTable st(cyl, x);
        auto& row = rho.at[static_cast<std::size_t>(n)];
        row.resize(x->card(m, n));
        std::vector<Idx> assigned(st.slots.size());
        for (Idx s = 0; s < row.size(); ++s) {
            for (std::size_t i = 0; i < st.slots.size(); ++i) {
                const auto& sl = st.slots[i];
                const auto& words_sp = monotone_cache(sl.n, n);
                Idx a_cell = static_cast<Idx>(sl.cell / words_sp.size());
                Idx w_cell = static_cast<Idx>(sl.cell % words_sp.size());
                assigned[i] = x->apply_bi(m, n, s, pattern_words[static_cast<std::size_t>(sl.m)][a_cell],
                                          words_sp[w_cell]);
            }
            row[s] = ms.index[static_cast<std::size_t>(n)].at(assigned);
        }
    }
    return rho;
}

SimplicialMap postcompose_map(const MappingSpaceResult& mx, const MappingSpaceResult& my,
                              const BisimplicialMap& f) {
    SimplicialMap out;
    out.source = mx.space;
    out.target = my.space;
    out.at.resize(static_cast<std::size_t>(mx.up_to) + 1);
    for (int n = 0; n <= mx.up_to; ++n) {
        const SSp& cyl = mx.cylinder[static_cast<std::size_t>(n)].object;
        SlotTable st(cyl, mx.x);
        auto& row = out.at[static_cast<std::size_t>(n)];
        row.resize(mx.cells[static_cast<std::size_t>(n)].size());
        std::vector<Idx> img(st.slots.size());
        for (Idx c = 0; c < row.size(); ++c) {
            for (std::size_t i = 0; i < st.slots.size(); ++i) {
                const auto& sl = st.slots[i];
                img[i] = f(sl.m, sl.n, mx.cells[static_cast<std::size_t>(n)][c][i]);
            }
            row[c] = my.index[static_cast<std::size_t>(n)].at(img);
        }
    }
    return out;
}

MatchingResult relative_matching_map(const BisimplicialMap& f, int m, Budget& budget) {
    const SSp& x = f.source;
    const SSp& y = f.target;
    MatchingResult out;
    auto pattern = make_cat_boundary(m, x->cat_trunc, x->space_trunc);
    auto mx = mapping_space(pattern, x, x->space_trunc, budget);
    auto my = mapping_space(pattern, y, y->space_trunc, budget);
    if (!mx.complete || !my.complete) {
        out.complete = false;
        return out;
    }
    std::vector<std::vector<Monotone>> words;
    for (int k = 0; k <= x->cat_trunc; ++k) words.push_back(boundary_words(m, k));
    auto rho_x = yoneda_restriction(mx, m, words);
    auto rho_y = yoneda_restriction(my, m, words);
    auto fstar = postcompose_map(mx, my, f);
    out.span = pullback(rho_y, fstar);
    out.map = pullback_mediator(out.span, f.level_map[static_cast<std::size_t>(m)], rho_x);
    out.exact = mx.exact && my.exact;
    return out;
}

namespace {

std::optional<int> cat_conclusive(const SSp& x, const SSp& y) {
    if (x->cat_coskeletal_from && y->cat_coskeletal_from)
        return std::max(*x->cat_coskeletal_from, *y->cat_coskeletal_from) + 1;
    return std::nullopt;
}

} // namespace

Verdict is_reedy_fibration(const BisimplicialMap& f, Budget& budget) {
    auto concl = cat_conclusive(f.source, f.target);
    const int top = concl ? std::min(f.cat_dims(), *concl) : f.cat_dims();
    std::vector<Verdict> vs;
    for (int m = 0; m <= top; ++m) {
        auto mm = relative_matching_map(f, m, budget);
        if (!mm.complete) return Verdict::unknown("node budget exhausted on matching maps");
        auto v = is_fibration(mm.map, std::min(f.source->space_trunc, f.target->space_trunc), budget);
        if (v.is_false())
            return Verdict::no("matching map at categorical degree " + std::to_string(m) + ": " + v.witness);
        vs.push_back(v);
    }
    for (const auto& v : vs)
        if (v.is_unknown()) return v;
    if (!concl || *concl > f.cat_dims())
        return Verdict::unknown("matching maps pass up to the categorical truncation, but no flag makes that conclusive");
    return Verdict::yes("matching maps are fibrations up to the conclusive categorical degree");
}

Verdict is_reedy_fibrant(const SSp& x, Budget& budget) {
    return is_reedy_fibration(terminal_bimap(x), budget);
}

Verdict is_levelwise_we(const BisimplicialMap& f, Budget& budget) {
    bool all_iso = true;
    std::vector<Verdict> vs;
    for (int m = 0; m <= f.cat_dims(); ++m) {
        const auto& lm = f.level_map[static_cast<std::size_t>(m)];
        if (!is_iso(lm)) all_iso = false;
        auto v = weak_equivalence_oracle(lm, budget);
        if (v.is_false()) return Verdict::no("level " + std::to_string(m) + ": " + v.witness);
        vs.push_back(v);
    }
    for (const auto& v : vs)
        if (v.is_unknown()) return v;
    // limits of isomorphisms are isomorphisms, so coskeletality transports the
    // levelwise verdict above the truncation only in the isomorphism case
    auto concl = cat_conclusive(f.source, f.target);
    if (all_iso && concl && *concl <= f.cat_dims() + 1)
        return Verdict::yes("levelwise isomorphism on all determining levels");
    if (f.source->cat_nondeg_bound && f.target->cat_nondeg_bound && all_iso &&
        std::max(*f.source->cat_nondeg_bound, *f.target->cat_nondeg_bound) <= f.cat_dims())
        return Verdict::yes("levelwise isomorphism; no nondegenerate cells above the truncation");
    return Verdict::unknown("levels pass up to the categorical truncation, but that is conclusive only for isomorphisms");
}

BisimplicialMap terminal_bimap(const SSp& x) {
    auto t = make_cat_rep(0, x->cat_trunc, x->space_trunc);
    BisimplicialMap f;
    f.source = x;
    f.target = t;
    for (int m = 0; m <= x->cat_trunc; ++m) {
        SimplicialMap lm;
        lm.source = x->level[static_cast<std::size_t>(m)];
        lm.target = t->level[static_cast<std::size_t>(m)];
        lm.at.resize(static_cast<std::size_t>(x->space_trunc) + 1);
        for (int n = 0; n <= x->space_trunc; ++n)
            lm.at[static_cast<std::size_t>(n)].assign(x->card(m, n), 0);
        f.level_map.push_back(lm);
    }
    return f;
}

InternalHomResult internal_hom(const SSp& x, const SSp& y, int cat_trunc, int space_trunc, Budget& budget) {
    if (x->cat_trunc != y->cat_trunc || x->space_trunc != y->space_trunc)
        throw error("internal_hom: truncation mismatch");
    InternalHomResult out;
    out.exact = true;
    std::vector<SSp> reps;
    std::vector<SSpProduct> bases;
    std::vector<MappingSpaceResult> ms;
    for (int m = 0; m <= cat_trunc; ++m) {
        reps.push_back(make_cat_rep(m, x->cat_trunc, x->space_trunc));
        bases.push_back(ssp_product(x, reps.back()));
        ms.push_back(mapping_space(bases.back().object, y, space_trunc, budget));
        if (!ms.back().complete) {
            out.complete = false;
            return out;
        }
        if (!ms.back().exact) out.exact = false;
    }

    // restriction along id_X x (op-hat) x id for op: [to] -> [from]
    auto restrict_level = [&](int from, int to, const Monotone& op, const std::vector<Idx>& h, int n) {
        SlotTable st_to(ms[static_cast<std::size_t>(to)].cylinder[static_cast<std::size_t>(n)].object, y);
        SlotTable st_from(ms[static_cast<std::size_t>(from)].cylinder[static_cast<std::size_t>(n)].object, y);
        std::vector<Idx> res(st_to.slots.size());
        for (std::size_t i = 0; i < st_to.slots.size(); ++i) {
            const auto& sl = st_to.slots[i];
            const auto& words_sp = monotone_cache(sl.n, n);
            Idx base_cell = static_cast<Idx>(sl.cell / words_sp.size());
            Idx w_cell = static_cast<Idx>(sl.cell % words_sp.size());
            const auto& words_to = monotone_cache(sl.m, to);
            Idx x_cell = static_cast<Idx>(base_cell / words_to.size());
            Idx f_cell = static_cast<Idx>(base_cell % words_to.size());
            Monotone img = compose(op, words_to[f_cell]);
            const auto& words_from = monotone_cache(sl.m, from);
            Idx img_idx = monotone_index(sl.m, from, img);
            Idx base_from = static_cast<Idx>(x_cell * words_from.size() + img_idx);
            Idx cell_from = static_cast<Idx>(base_from * words_sp.size() + w_cell);
            res[i] = st_from.value_of(h, sl.m, sl.n, cell_from);
        }
        return ms[static_cast<std::size_t>(to)].index[static_cast<std::size_t>(n)].at(res);
    };

    auto obj = std::make_shared<SimplicialSpace>();
    obj->cat_trunc = cat_trunc;
    obj->space_trunc = space_trunc;
    for (int m = 0; m <= cat_trunc; ++m) obj->level.push_back(ms[static_cast<std::size_t>(m)].space);
    obj->cat_face.assign(static_cast<std::size_t>(cat_trunc) + 1, {});
    obj->cat_degen.assign(static_cast<std::size_t>(cat_trunc) + 1, {});
    for (int m = 1; m <= cat_trunc; ++m)
        for (int i = 0; i <= m; ++i) {
            SimplicialMap lm;
            lm.source = obj->level[static_cast<std::size_t>(m)];
            lm.target = obj->level[static_cast<std::size_t>(m) - 1];
            lm.at.resize(static_cast<std::size_t>(space_trunc) + 1);
            for (int n = 0; n <= space_trunc; ++n) {
                auto& row = lm.at[static_cast<std::size_t>(n)];
                row.resize(ms[static_cast<std::size_t>(m)].cells[static_cast<std::size_t>(n)].size());
                for (Idx c = 0; c < row.size(); ++c)
                    row[c] = restrict_level(m, m - 1, coface(m, i),
                                            ms[static_cast<std::size_t>(m)].cells[static_cast<std::size_t>(n)][c], n);
            }
            obj->cat_face[static_cast<std::size_t>(m)].push_back(lm);
        }
    for (int m = 0; m < cat_trunc; ++m)
        for (int i = 0; i <= m; ++i) {
            SimplicialMap lm;
            lm.source = obj->level[static_cast<std::size_t>(m)];
            lm.target = obj->level[static_cast<std::size_t>(m) + 1];
            lm.at.resize(static_cast<std::size_t>(space_trunc) + 1);
            for (int n = 0; n <= space_trunc; ++n) {
                auto& row = lm.at[static_cast<std::size_t>(n)];
                row.resize(ms[static_cast<std::size_t>(m)].cells[static_cast<std::size_t>(n)].size());
                for (Idx c = 0; c < row.size(); ++c)
                    row[c] = restrict_level(m, m + 1, codegeneracy(m, i),
                                            ms[static_cast<std::size_t>(m)].cells[static_cast<std::size_t>(n)][c], n);
            }
            obj->cat_degen[static_cast<std::size_t>(m)].push_back(lm);
        }
    obj->cat_coskeletal_from = y->cat_coskeletal_from;
    obj->finalize();
    out.object = obj;
    return out;
}

} // namespace seglab
