#include "seglab/bisimp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace seglab {

void SimplicialSpace::finalize() {
    const auto mu = static_cast<std::size_t>(cat_trunc);
    if (level.size() != mu + 1) throw error("ssp: level count mismatch");
    for (const auto& l : level)
        if (l->trunc != space_trunc) throw error("ssp: space truncation mismatch");
    if (cat_face.size() != mu + 1 || cat_degen.size() != mu + 1)
        throw error("ssp: categorical table size mismatch");
    for (int m = 1; m <= cat_trunc; ++m) {
        if (cat_face[static_cast<std::size_t>(m)].size() != static_cast<std::size_t>(m) + 1)
            throw error("ssp: categorical face count mismatch");
        for (int i = 0; i <= m; ++i) {
            const auto& f = dcat(m, i);
            if (f.source.get() != level[static_cast<std::size_t>(m)].get() ||
                f.target.get() != level[static_cast<std::size_t>(m) - 1].get())
                throw error("ssp: categorical face ends mismatch");
            f.validate();
        }
    }
    for (int m = 0; m < cat_trunc; ++m) {
        if (cat_degen[static_cast<std::size_t>(m)].size() != static_cast<std::size_t>(m) + 1)
            throw error("ssp: categorical degeneracy count mismatch");
        for (int i = 0; i <= m; ++i) {
            const auto& f = scat(m, i);
            if (f.source.get() != level[static_cast<std::size_t>(m)].get() ||
                f.target.get() != level[static_cast<std::size_t>(m) + 1].get())
                throw error("ssp: categorical degeneracy ends mismatch");
            f.validate();
        }
    }
    // categorical simplicial identities
    for (int m = 2; m <= cat_trunc; ++m)
        for (int j = 1; j <= m; ++j)
            for (int i = 0; i < j; ++i)
                if (!smap_equal(compose(dcat(m - 1, i), dcat(m, j)), compose(dcat(m - 1, j - 1), dcat(m, i))))
                    throw error("ssp: categorical face identity violated");
    for (int m = 0; m + 2 <= cat_trunc; ++m)
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= j; ++i)
                if (!smap_equal(compose(scat(m + 1, i), scat(m, j)), compose(scat(m + 1, j + 1), scat(m, i))))
                    throw error("ssp: categorical degeneracy identity violated");
    for (int m = 0; m + 1 <= cat_trunc; ++m)
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= m + 1; ++i) {
                SimplicialMap lhs = compose(dcat(m + 1, i), scat(m, j));
                SimplicialMap rhs;
                if (i == j || i == j + 1) rhs = identity_smap(level[static_cast<std::size_t>(m)]);
                else if (i < j) rhs = compose(scat(m - 1, j - 1), dcat(m, i));
                else rhs = compose(scat(m - 1, j), dcat(m, i - 1));
                if (!smap_equal(lhs, rhs)) throw error("ssp: categorical mixed identity violated");
            }

    // flags and bi-cores
    cat_is_degen.assign(mu + 1, {});
    bicore.assign(mu + 1, {});
    binondeg.assign(mu + 1, {});
    // categorical cores per (m, n)
    std::vector<std::vector<std::vector<std::pair<std::pair<int, Idx>, Monotone>>>> ccore(mu + 1);
    for (int m = 0; m <= cat_trunc; ++m) {
        const auto ms = static_cast<std::size_t>(m);
        const auto& lv = level[ms];
        cat_is_degen[ms].assign(static_cast<std::size_t>(space_trunc) + 1, {});
        ccore[ms].assign(static_cast<std::size_t>(space_trunc) + 1, {});
        bicore[ms].assign(static_cast<std::size_t>(space_trunc) + 1, {});
        binondeg[ms].assign(static_cast<std::size_t>(space_trunc) + 1, {});
        for (int n = 0; n <= space_trunc; ++n) {
            const auto ns = static_cast<std::size_t>(n);
            cat_is_degen[ms][ns].assign(lv->card(n), false);
            ccore[ms][ns].resize(lv->card(n));
            bicore[ms][ns].resize(lv->card(n));
            if (m >= 1)
                for (int i = 0; i < m; ++i)
                    for (Idx t = 0; t < level[ms - 1]->card(n); ++t)
                        cat_is_degen[ms][ns][scat(m - 1, i)(n, t)] = true;
            for (Idx s = 0; s < lv->card(n); ++s) {
                if (!cat_is_degen[ms][ns][s]) {
                    ccore[ms][ns][s] = {{m, s}, identity_map(m)};
                } else {
                    bool found = false;
                    for (int i = 0; i < m && !found; ++i)
                        for (Idx t = 0; t < level[ms - 1]->card(n) && !found; ++t)
                            if (scat(m - 1, i)(n, t) == s) {
                                const auto& c = ccore[ms - 1][ns][t];
                                ccore[ms][ns][s] = {c.first, compose(c.second, codegeneracy(m - 1, i))};
                                found = true;
                            }
                    if (!found) throw error("ssp: categorical degeneracy flag without witness");
                }
                const auto& cc = ccore[ms][ns][s];
                const auto& sc = level[static_cast<std::size_t>(cc.first.first)]->core[ns][cc.first.second];
                BiCore bc;
                bc.m = cc.first.first;
                bc.n = sc.dim;
                bc.idx = sc.idx;
                bc.cat_epi = cc.second;
                bc.space_epi = sc.epi;
                bicore[ms][ns][s] = bc;
                if (bc.m == m && bc.n == n) binondeg[ms][ns].push_back(s);
            }
        }
    }
}

Idx SimplicialSpace::apply_cat(int m, int n, Idx cell, const Monotone& phi) const {
    const int m2 = static_cast<int>(phi.size()) - 1;
    if (m2 > cat_trunc || m > cat_trunc) throw error("apply_cat: dimension out of range");
    Idx cur = cell;
    int dim = m;
    for (int j : mono_missing(phi, m)) {
        cur = dcat(dim, j)(n, cur);
        --dim;
    }
    for (int r : epi_repeats(phi)) {
        cur = scat(dim, r)(n, cur);
        ++dim;
    }
    if (dim != m2) throw error("apply_cat: internal dimension mismatch");
    return cur;
}

Idx SimplicialSpace::apply_bi(int m, int n, Idx cell, const Monotone& phi, const Monotone& psi) const {
    const int m2 = static_cast<int>(phi.size()) - 1;
    Idx mid = apply_cat(m, n, cell, phi);
    return level[static_cast<std::size_t>(m2)]->apply(n, mid, psi);
}

void BisimplicialMap::validate() const {
    if (!source || !target) throw error("bimap: missing ends");
    const int top = cat_dims();
    if (top < 0 || top > std::min(source->cat_trunc, target->cat_trunc))
        throw error("bimap: categorical range invalid");
    for (int m = 0; m <= top; ++m) {
        const auto& f = level_map[static_cast<std::size_t>(m)];
        if (f.source.get() != source->level[static_cast<std::size_t>(m)].get() ||
            f.target.get() != target->level[static_cast<std::size_t>(m)].get())
            throw error("bimap: level ends mismatch");
        f.validate();
    }
    for (int m = 1; m <= top; ++m)
        for (int i = 0; i <= m; ++i)
            if (!smap_equal(compose(target->dcat(m, i), level_map[static_cast<std::size_t>(m)]),
                            compose(level_map[static_cast<std::size_t>(m) - 1], source->dcat(m, i))))
                throw error("bimap: does not commute with categorical faces");
    for (int m = 0; m < top; ++m)
        for (int i = 0; i <= m; ++i)
            if (!smap_equal(compose(target->scat(m, i), level_map[static_cast<std::size_t>(m)]),
                            compose(level_map[static_cast<std::size_t>(m) + 1], source->scat(m, i))))
                throw error("bimap: does not commute with categorical degeneracies");
}

BisimplicialMap identity_bimap(const SSp& x) {
    BisimplicialMap f;
    f.source = f.target = x;
    for (int m = 0; m <= x->cat_trunc; ++m)
        f.level_map.push_back(identity_smap(x->level[static_cast<std::size_t>(m)]));
    return f;
}

BisimplicialMap compose(const BisimplicialMap& g, const BisimplicialMap& f) {
    if (g.source.get() != f.target.get()) throw error("bimap compose: ends do not match");
    BisimplicialMap h;
    h.source = f.source;
    h.target = g.target;
    const int top = std::min(f.cat_dims(), g.cat_dims());
    for (int m = 0; m <= top; ++m)
        h.level_map.push_back(compose(g.level_map[static_cast<std::size_t>(m)], f.level_map[static_cast<std::size_t>(m)]));
    return h;
}

bool bimap_equal(const BisimplicialMap& f, const BisimplicialMap& g) {
    if (f.cat_dims() != g.cat_dims()) return false;
    for (int m = 0; m <= f.cat_dims(); ++m)
        if (!smap_equal(f.level_map[static_cast<std::size_t>(m)], g.level_map[static_cast<std::size_t>(m)]))
            return false;
    return true;
}

bool is_mono(const BisimplicialMap& f) {
    for (const auto& l : f.level_map)
        if (!is_mono(l)) return false;
    return true;
}

bool is_iso(const BisimplicialMap& f) {
    for (const auto& l : f.level_map)
        if (!is_iso(l)) return false;
    return true;
}

// --- generators --------------------------------------------------------------

namespace {

std::string word_label(const Monotone& w, int m) {
    std::ostringstream os;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (m > 9 && p > 0) os << ",";
        os << w[p];
    }
    return os.str();
}

template <typename Pred>
SSp cat_representable_part(int m, int cat_trunc, int space_trunc, Pred keep,
                           std::optional<int> bound, std::optional<int> cosk) {
    auto x = std::make_shared<SimplicialSpace>();
    x->cat_trunc = cat_trunc;
    x->space_trunc = space_trunc;
    std::vector<std::vector<Monotone>> words(static_cast<std::size_t>(cat_trunc) + 1);
    std::vector<std::map<Monotone, Idx>> index(static_cast<std::size_t>(cat_trunc) + 1);
    for (int k = 0; k <= cat_trunc; ++k) {
        const auto ks = static_cast<std::size_t>(k);
        std::vector<std::string> names;
        for (const auto& w : all_monotone(k, m))
            if (keep(w)) {
                index[ks][w] = static_cast<Idx>(words[ks].size());
                words[ks].push_back(w);
                names.push_back(word_label(w, m));
            }
        x->level.push_back(make_discrete(names, space_trunc));
    }
    x->cat_face.assign(static_cast<std::size_t>(cat_trunc) + 1, {});
    x->cat_degen.assign(static_cast<std::size_t>(cat_trunc) + 1, {});
    auto table_map = [&](int from, const Monotone& op) {
        const int to = from + (static_cast<int>(op.size()) - 1 - from);
        SimplicialMap f;
        f.source = x->level[static_cast<std::size_t>(from)];
        f.target = x->level[static_cast<std::size_t>(to)];
        std::vector<Idx> row(words[static_cast<std::size_t>(from)].size());
        for (Idx s = 0; s < row.size(); ++s)
            row[s] = index[static_cast<std::size_t>(to)].at(compose(words[static_cast<std::size_t>(from)][s], op));
        f.at.assign(static_cast<std::size_t>(space_trunc) + 1, row);
        return f;
    };
    for (int k = 1; k <= cat_trunc; ++k)
        for (int i = 0; i <= k; ++i)
            x->cat_face[static_cast<std::size_t>(k)].push_back(table_map(k, coface(k, i)));
    for (int k = 0; k < cat_trunc; ++k)
        for (int i = 0; i <= k; ++i)
            x->cat_degen[static_cast<std::size_t>(k)].push_back(table_map(k, codegeneracy(k, i)));
    x->cat_nondeg_bound = bound;
    x->cat_coskeletal_from = cosk;
    x->finalize();
    return x;
}

bool spine_word(const Monotone& w) {
    return w.back() - w.front() <= 1;
}

} // namespace

SSp make_cat_rep(int m, int cat_trunc, int space_trunc) {
    if (m < 0) throw error("make_cat_rep: negative index");
    return cat_representable_part(m, cat_trunc, space_trunc, [](const Monotone&) { return true; }, m, 1);
}

SSp make_cat_boundary(int m, int cat_trunc, int space_trunc) {
    if (m < 0) throw error("make_cat_boundary: negative index");
    return cat_representable_part(
        m, cat_trunc, space_trunc, [m](const Monotone& w) { return !is_surjective(w, m); },
        m > 0 ? m - 1 : 0, std::nullopt);
}

SSp make_spine(int m, int cat_trunc, int space_trunc) {
    if (m < 0) throw error("make_spine: negative index");
    return cat_representable_part(m, cat_trunc, space_trunc, spine_word, std::min(m, 1), std::nullopt);
}

SSp make_space_const(const SSet& k, int cat_trunc) {
    auto x = std::make_shared<SimplicialSpace>();
    x->cat_trunc = cat_trunc;
    x->space_trunc = k->trunc;
    for (int m = 0; m <= cat_trunc; ++m) x->level.push_back(k);
    x->cat_face.assign(static_cast<std::size_t>(cat_trunc) + 1, {});
    x->cat_degen.assign(static_cast<std::size_t>(cat_trunc) + 1, {});
    for (int m = 1; m <= cat_trunc; ++m)
        for (int i = 0; i <= m; ++i) x->cat_face[static_cast<std::size_t>(m)].push_back(identity_smap(k));
    for (int m = 0; m < cat_trunc; ++m)
        for (int i = 0; i <= m; ++i) x->cat_degen[static_cast<std::size_t>(m)].push_back(identity_smap(k));
    x->cat_nondeg_bound = 0;
    x->cat_coskeletal_from = 1;
    x->finalize();
    return x;
}

SSp make_space_simplex(int n, int cat_trunc, int space_trunc) {
    return make_space_const(make_standard(n, space_trunc), cat_trunc);
}
SSp make_space_boundary(int n, int cat_trunc, int space_trunc) {
    return make_space_const(make_boundary(n, space_trunc), cat_trunc);
}
SSp make_space_horn(int n, int k, int cat_trunc, int space_trunc) {
    return make_space_const(make_horn(n, k, space_trunc), cat_trunc);
}
SSp make_empty_ssp(int cat_trunc, int space_trunc) {
    return make_space_const(make_empty(space_trunc), cat_trunc);
}

namespace {

BisimplicialMap cat_part_inclusion(int m, int cat_trunc, int space_trunc, const SSp& sub, const SSp& amb,
                                   const std::function<bool(const Monotone&)>& keep) {
    BisimplicialMap f;
    f.source = sub;
    f.target = amb;
    for (int k = 0; k <= cat_trunc; ++k) {
        // both level cell orders follow the lex order of all_monotone(k, m)
        auto ws = all_monotone(k, m);
        std::vector<Idx> amb_idx;
        Idx j = 0;
        for (const auto& w : ws) {
            if (keep(w)) amb_idx.push_back(j);
            ++j;
        }
        SimplicialMap lm;
        lm.source = sub->level[static_cast<std::size_t>(k)];
        lm.target = amb->level[static_cast<std::size_t>(k)];
        lm.at.assign(static_cast<std::size_t>(space_trunc) + 1, amb_idx);
        f.level_map.push_back(lm);
    }
    f.validate();
    return f;
}

} // namespace

BisimplicialMap cat_boundary_inclusion(int m, int cat_trunc, int space_trunc) {
    auto amb = make_cat_rep(m, cat_trunc, space_trunc);
    auto sub = make_cat_boundary(m, cat_trunc, space_trunc);
    return cat_part_inclusion(m, cat_trunc, space_trunc, sub, amb,
                              [m](const Monotone& w) { return !is_surjective(w, m); });
}

BisimplicialMap spine_inclusion(int m, int cat_trunc, int space_trunc) {
    auto amb = make_cat_rep(m, cat_trunc, space_trunc);
    auto sub = make_spine(m, cat_trunc, space_trunc);
    return cat_part_inclusion(m, cat_trunc, space_trunc, sub, amb, spine_word);
}

namespace {

BisimplicialMap constify(const SimplicialMap& f, int cat_trunc, const SSp& src, const SSp& tgt) {
    BisimplicialMap g;
    g.source = src;
    g.target = tgt;
    for (int m = 0; m <= cat_trunc; ++m) g.level_map.push_back(f);
    g.validate();
    return g;
}

} // namespace

BisimplicialMap space_boundary_inclusion(int n, int cat_trunc, int space_trunc) {
    SimplicialMap incl = boundary_inclusion(n, space_trunc);
    auto src = make_space_const(incl.source, cat_trunc);
    auto tgt = make_space_const(incl.target, cat_trunc);
    return constify(incl, cat_trunc, src, tgt);
}

BisimplicialMap space_horn_inclusion(int n, int k, int cat_trunc, int space_trunc) {
    SimplicialMap incl = horn_inclusion(n, k, space_trunc);
    auto src = make_space_const(incl.source, cat_trunc);
    auto tgt = make_space_const(incl.target, cat_trunc);
    return constify(incl, cat_trunc, src, tgt);
}

// --- limits and colimits ------------------------------------------------------

SSpProduct ssp_product(const SSp& a, const SSp& b) {
    if (a->cat_trunc != b->cat_trunc || a->space_trunc != b->space_trunc)
        throw error("ssp product: truncation mismatch");
    auto x = std::make_shared<SimplicialSpace>();
    x->cat_trunc = a->cat_trunc;
    x->space_trunc = a->space_trunc;
    std::vector<ProductResult> lv;
    for (int m = 0; m <= a->cat_trunc; ++m) {
        lv.push_back(product(a->level[static_cast<std::size_t>(m)], b->level[static_cast<std::size_t>(m)]));
        x->level.push_back(lv.back().object);
    }
    x->cat_face.assign(static_cast<std::size_t>(a->cat_trunc) + 1, {});
    x->cat_degen.assign(static_cast<std::size_t>(a->cat_trunc) + 1, {});
    for (int m = 1; m <= a->cat_trunc; ++m)
        for (int i = 0; i <= m; ++i)
            x->cat_face[static_cast<std::size_t>(m)].push_back(product_mediator(
                lv[static_cast<std::size_t>(m) - 1],
                compose(a->dcat(m, i), lv[static_cast<std::size_t>(m)].pr1),
                compose(b->dcat(m, i), lv[static_cast<std::size_t>(m)].pr2)));
    for (int m = 0; m < a->cat_trunc; ++m)
        for (int i = 0; i <= m; ++i)
            x->cat_degen[static_cast<std::size_t>(m)].push_back(product_mediator(
                lv[static_cast<std::size_t>(m) + 1],
                compose(a->scat(m, i), lv[static_cast<std::size_t>(m)].pr1),
                compose(b->scat(m, i), lv[static_cast<std::size_t>(m)].pr2)));
    if (a->cat_nondeg_bound && b->cat_nondeg_bound)
        x->cat_nondeg_bound = *a->cat_nondeg_bound + *b->cat_nondeg_bound;
    if (a->cat_coskeletal_from && b->cat_coskeletal_from)
        x->cat_coskeletal_from = std::max(*a->cat_coskeletal_from, *b->cat_coskeletal_from);
    x->finalize();
    SSpProduct out;
    out.object = x;
    out.pr1.source = out.pr2.source = x;
    out.pr1.target = a;
    out.pr2.target = b;
    for (int m = 0; m <= a->cat_trunc; ++m) {
        SimplicialMap p1 = lv[static_cast<std::size_t>(m)].pr1;
        SimplicialMap p2 = lv[static_cast<std::size_t>(m)].pr2;
        p1.source = p2.source = x->level[static_cast<std::size_t>(m)];
        out.pr1.level_map.push_back(p1);
        out.pr2.level_map.push_back(p2);
    }
    return out;
}

SSpPushout ssp_pushout(const BisimplicialMap& f, const BisimplicialMap& g) {
    if (f.source.get() != g.source.get()) throw error("ssp pushout: legs must share their source");
    const SSp& b = f.target;
    const SSp& c = g.target;
    if (b->cat_trunc != c->cat_trunc || b->space_trunc != c->space_trunc)
        throw error("ssp pushout: truncation mismatch");
    auto x = std::make_shared<SimplicialSpace>();
    x->cat_trunc = b->cat_trunc;
    x->space_trunc = b->space_trunc;
    std::vector<PushoutResult> lv;
    for (int m = 0; m <= b->cat_trunc; ++m) {
        lv.push_back(pushout(f.level_map[static_cast<std::size_t>(m)], g.level_map[static_cast<std::size_t>(m)]));
        x->level.push_back(lv.back().object);
    }
    x->cat_face.assign(static_cast<std::size_t>(b->cat_trunc) + 1, {});
    x->cat_degen.assign(static_cast<std::size_t>(b->cat_trunc) + 1, {});
    for (int m = 1; m <= b->cat_trunc; ++m)
        for (int i = 0; i <= m; ++i)
            x->cat_face[static_cast<std::size_t>(m)].push_back(pushout_mediator(
                lv[static_cast<std::size_t>(m)],
                compose(lv[static_cast<std::size_t>(m) - 1].from_b, b->dcat(m, i)),
                compose(lv[static_cast<std::size_t>(m) - 1].from_c, c->dcat(m, i))));
    for (int m = 0; m < b->cat_trunc; ++m)
        for (int i = 0; i <= m; ++i)
            x->cat_degen[static_cast<std::size_t>(m)].push_back(pushout_mediator(
                lv[static_cast<std::size_t>(m)],
                compose(lv[static_cast<std::size_t>(m) + 1].from_b, b->scat(m, i)),
                compose(lv[static_cast<std::size_t>(m) + 1].from_c, c->scat(m, i))));
    if (b->cat_nondeg_bound && c->cat_nondeg_bound)
        x->cat_nondeg_bound = std::max(*b->cat_nondeg_bound, *c->cat_nondeg_bound);
    x->finalize();
    SSpPushout out;
    out.object = x;
    out.from_b.source = b;
    out.from_b.target = x;
    out.from_c.source = c;
    out.from_c.target = x;
    for (int m = 0; m <= b->cat_trunc; ++m) {
        SimplicialMap cb = lv[static_cast<std::size_t>(m)].from_b;
        SimplicialMap cc = lv[static_cast<std::size_t>(m)].from_c;
        cb.target = cc.target = x->level[static_cast<std::size_t>(m)];
        out.from_b.level_map.push_back(cb);
        out.from_c.level_map.push_back(cc);
    }
    return out;
}

SSpPullback ssp_pullback(const BisimplicialMap& f, const BisimplicialMap& g) {
    if (f.target.get() != g.target.get()) throw error("ssp pullback: legs must share their target");
    const SSp& b = f.source;
    const SSp& c = g.source;
    if (b->cat_trunc != c->cat_trunc || b->space_trunc != c->space_trunc)
        throw error("ssp pullback: truncation mismatch");
    auto x = std::make_shared<SimplicialSpace>();
    x->cat_trunc = b->cat_trunc;
    x->space_trunc = b->space_trunc;
    std::vector<PullbackResult> lv;
    for (int m = 0; m <= b->cat_trunc; ++m) {
        lv.push_back(pullback(f.level_map[static_cast<std::size_t>(m)], g.level_map[static_cast<std::size_t>(m)]));
        x->level.push_back(lv.back().object);
    }
    x->cat_face.assign(static_cast<std::size_t>(b->cat_trunc) + 1, {});
    x->cat_degen.assign(static_cast<std::size_t>(b->cat_trunc) + 1, {});
    for (int m = 1; m <= b->cat_trunc; ++m)
        for (int i = 0; i <= m; ++i)
            x->cat_face[static_cast<std::size_t>(m)].push_back(pullback_mediator(
                lv[static_cast<std::size_t>(m) - 1],
                compose(b->dcat(m, i), lv[static_cast<std::size_t>(m)].to_b),
                compose(c->dcat(m, i), lv[static_cast<std::size_t>(m)].to_c)));
    for (int m = 0; m < b->cat_trunc; ++m)
        for (int i = 0; i <= m; ++i)
            x->cat_degen[static_cast<std::size_t>(m)].push_back(pullback_mediator(
                lv[static_cast<std::size_t>(m) + 1],
                compose(b->scat(m, i), lv[static_cast<std::size_t>(m)].to_b),
                compose(c->scat(m, i), lv[static_cast<std::size_t>(m)].to_c)));
    if (b->cat_nondeg_bound && c->cat_nondeg_bound)
        x->cat_nondeg_bound = *b->cat_nondeg_bound + *c->cat_nondeg_bound;
    if (b->cat_coskeletal_from && c->cat_coskeletal_from && f.target->cat_coskeletal_from)
        x->cat_coskeletal_from =
            std::max({*b->cat_coskeletal_from, *c->cat_coskeletal_from, *f.target->cat_coskeletal_from});
    x->finalize();
    SSpPullback out;
    out.object = x;
    out.to_b.source = out.to_c.source = x;
    out.to_b.target = b;
    out.to_c.target = c;
    for (int m = 0; m <= b->cat_trunc; ++m) {
        SimplicialMap pb = lv[static_cast<std::size_t>(m)].to_b;
        SimplicialMap pc = lv[static_cast<std::size_t>(m)].to_c;
        pb.source = pc.source = x->level[static_cast<std::size_t>(m)];
        out.to_b.level_map.push_back(pb);
        out.to_c.level_map.push_back(pc);
    }
    return out;
}

BisimplicialMap ssp_product_mediator(const SSpProduct& p, const BisimplicialMap& za, const BisimplicialMap& zb) {
    if (za.source.get() != zb.source.get()) throw error("ssp mediator: cone legs must share source");
    BisimplicialMap h;
    h.source = za.source;
    h.target = p.object;
    const int top = std::min(za.cat_dims(), zb.cat_dims());
    for (int m = 0; m <= top; ++m) {
        ProductResult pr;
        pr.object = p.object->level[static_cast<std::size_t>(m)];
        pr.pr1 = p.pr1.level_map[static_cast<std::size_t>(m)];
        pr.pr2 = p.pr2.level_map[static_cast<std::size_t>(m)];
        h.level_map.push_back(product_mediator(pr, za.level_map[static_cast<std::size_t>(m)],
                                               zb.level_map[static_cast<std::size_t>(m)]));
        h.level_map.back().target = p.object->level[static_cast<std::size_t>(m)];
    }
    return h;
}

BisimplicialMap ssp_product_map(const SSpProduct& src, const SSpProduct& dst,
                                const BisimplicialMap& f, const BisimplicialMap& g) {
    return ssp_product_mediator(dst, compose(f, src.pr1), compose(g, src.pr2));
}

BisimplicialMap ssp_pushout_mediator(const SSpPushout& p, const BisimplicialMap& bw, const BisimplicialMap& cw) {
    if (bw.target.get() != cw.target.get()) throw error("ssp mediator: cocone legs must share target");
    BisimplicialMap h;
    h.source = p.object;
    h.target = bw.target;
    const int top = std::min(bw.cat_dims(), cw.cat_dims());
    for (int m = 0; m <= top; ++m) {
        PushoutResult pr;
        pr.object = p.object->level[static_cast<std::size_t>(m)];
        pr.from_b = p.from_b.level_map[static_cast<std::size_t>(m)];
        pr.from_c = p.from_c.level_map[static_cast<std::size_t>(m)];
        h.level_map.push_back(pushout_mediator(pr, bw.level_map[static_cast<std::size_t>(m)],
                                               cw.level_map[static_cast<std::size_t>(m)]));
        h.level_map.back().source = p.object->level[static_cast<std::size_t>(m)];
    }
    return h;
}

BisimplicialMap ssp_pullback_mediator(const SSpPullback& p, const BisimplicialMap& zb, const BisimplicialMap& zc) {
    if (zb.source.get() != zc.source.get()) throw error("ssp mediator: cone legs must share source");
    BisimplicialMap h;
    h.source = zb.source;
    h.target = p.object;
    const int top = std::min(zb.cat_dims(), zc.cat_dims());
    for (int m = 0; m <= top; ++m) {
        PullbackResult pr;
        pr.object = p.object->level[static_cast<std::size_t>(m)];
        pr.to_b = p.to_b.level_map[static_cast<std::size_t>(m)];
        pr.to_c = p.to_c.level_map[static_cast<std::size_t>(m)];
        h.level_map.push_back(pullback_mediator(pr, zb.level_map[static_cast<std::size_t>(m)],
                                                zc.level_map[static_cast<std::size_t>(m)]));
        h.level_map.back().target = p.object->level[static_cast<std::size_t>(m)];
    }
    return h;
}

PushoutProductResult pushout_product(const BisimplicialMap& f, const BisimplicialMap& g) {
    const SSp& a = f.source;
    const SSp& b = f.target;
    const SSp& c = g.source;
    const SSp& d = g.target;
    auto ad = ssp_product(a, d);
    auto ac = ssp_product(a, c);
    auto bc = ssp_product(b, c);
    auto bd = ssp_product(b, d);
    BisimplicialMap id_a = identity_bimap(a);
    BisimplicialMap id_b = identity_bimap(b);
    BisimplicialMap id_c = identity_bimap(c);
    BisimplicialMap id_d = identity_bimap(d);
    auto leg_ad = ssp_product_map(ac, ad, id_a, g);
    auto leg_bc = ssp_product_map(ac, bc, f, id_c);
    PushoutProductResult out;
    out.corner = ssp_pushout(leg_ad, leg_bc);
    out.target = bd;
    auto ad_bd = ssp_product_map(ad, bd, f, id_d);
    auto bc_bd = ssp_product_map(bc, bd, id_b, g);
    out.map = ssp_pushout_mediator(out.corner, ad_bd, bc_bd);
    return out;
}

// --- coskeleton and reduction -------------------------------------------------

SSet power_sset(const SSet& k, int p) {
    if (p <= 0) throw error("power_sset: power must be positive");
    if (p == 1) return k;
    auto x = std::make_shared<TruncatedSimplicialSet>();
    x->trunc = k->trunc;
    const auto tu = static_cast<std::size_t>(k->trunc);
    x->cards.assign(tu + 1, 0);
    x->face.assign(tu + 1, {});
    x->degen.assign(tu + 1, {});
    x->label.assign(tu + 1, {});
    for (int d = 1; d <= k->trunc; ++d) x->face[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d) + 1, {});
    for (int d = 0; d < k->trunc; ++d) x->degen[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d) + 1, {});
    auto pw = [](std::size_t base, int e) {
        std::size_t r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    };
    for (int d = 0; d <= k->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        const std::size_t base = k->card(d);
        x->cards[du] = pw(base, p);
        if (x->cards[du] <= 4096) {
            x->label[du].resize(x->cards[du]);
            for (Idx s = 0; s < x->cards[du]; ++s) {
                std::ostringstream os;
                os << "(";
                std::size_t rem = s;
                for (int q = p - 1; q >= 0; --q) {
                    Idx comp = static_cast<Idx>(rem / pw(base, q));
                    rem %= pw(base, q);
                    os << k->name_of(d, comp) << (q ? "," : "");
                }
                os << ")";
                x->label[du][s] = os.str();
            }
        }
    }
    auto component = [&](Idx s, int q, std::size_t base) {
        // q-th coordinate from the left, 0-based
        std::size_t div = 1;
        for (int i = 0; i < p - 1 - q; ++i) div *= base;
        return static_cast<Idx>((static_cast<std::size_t>(s) / div) % base);
    };
    for (int d = 1; d <= k->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        const std::size_t base = k->card(d);
        const std::size_t base2 = k->card(d - 1);
        for (int i = 0; i <= d; ++i) {
            auto& tab = x->face[du][static_cast<std::size_t>(i)];
            tab.resize(x->cards[du]);
            for (std::size_t s = 0; s < x->cards[du]; ++s) {
                std::size_t acc = 0;
                for (int q = 0; q < p; ++q)
                    acc = acc * base2 + k->face_of(d, component(static_cast<Idx>(s), q, base), i);
                tab[s] = static_cast<Idx>(acc);
            }
        }
    }
    for (int d = 0; d < k->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        const std::size_t base = k->card(d);
        const std::size_t base2 = k->card(d + 1);
        for (int i = 0; i <= d; ++i) {
            auto& tab = x->degen[du][static_cast<std::size_t>(i)];
            tab.resize(x->cards[du]);
            for (std::size_t s = 0; s < x->cards[du]; ++s) {
                std::size_t acc = 0;
                for (int q = 0; q < p; ++q)
                    acc = acc * base2 + k->degen_of(d, component(static_cast<Idx>(s), q, base), i);
                tab[s] = static_cast<Idx>(acc);
            }
        }
    }
    if (k->nondeg_bound) x->nondeg_bound = *k->nondeg_bound * p;
    x->coskeletal_from = k->coskeletal_from;
    x->finalize();
    return x;
}

SSp cosk0(const SSet& k, int cat_trunc) {
    auto x = std::make_shared<SimplicialSpace>();
    x->cat_trunc = cat_trunc;
    x->space_trunc = k->trunc;
    for (int m = 0; m <= cat_trunc; ++m) x->level.push_back(power_sset(k, m + 1));
    x->cat_face.assign(static_cast<std::size_t>(cat_trunc) + 1, {});
    x->cat_degen.assign(static_cast<std::size_t>(cat_trunc) + 1, {});
    // face i drops the i-th coordinate, degeneracy i repeats it
    for (int m = 1; m <= cat_trunc; ++m)
        for (int i = 0; i <= m; ++i) {
            SimplicialMap f;
            f.source = x->level[static_cast<std::size_t>(m)];
            f.target = x->level[static_cast<std::size_t>(m) - 1];
            f.at.resize(static_cast<std::size_t>(k->trunc) + 1);
            for (int d = 0; d <= k->trunc; ++d) {
                const std::size_t base = k->card(d);
                auto& row = f.at[static_cast<std::size_t>(d)];
                row.resize(f.source->card(d));
                for (std::size_t s = 0; s < row.size(); ++s) {
                    std::size_t acc = 0, rem = s;
                    std::vector<Idx> comp(static_cast<std::size_t>(m) + 1);
                    for (int q = m; q >= 0; --q) {
                        comp[static_cast<std::size_t>(q)] = base ? static_cast<Idx>(rem % base) : 0;
                        rem = base ? rem / base : 0;
                    }
                    for (int q = 0; q <= m; ++q)
                        if (q != i) acc = acc * base + comp[static_cast<std::size_t>(q)];
                    row[s] = static_cast<Idx>(acc);
                }
            }
            x->cat_face[static_cast<std::size_t>(m)].push_back(f);
        }
    for (int m = 0; m < cat_trunc; ++m)
        for (int i = 0; i <= m; ++i) {
            SimplicialMap f;
            f.source = x->level[static_cast<std::size_t>(m)];
            f.target = x->level[static_cast<std::size_t>(m) + 1];
            f.at.resize(static_cast<std::size_t>(k->trunc) + 1);
            for (int d = 0; d <= k->trunc; ++d) {
                const std::size_t base = k->card(d);
                auto& row = f.at[static_cast<std::size_t>(d)];
                row.resize(f.source->card(d));
                for (std::size_t s = 0; s < row.size(); ++s) {
                    std::size_t acc = 0, rem = s;
                    std::vector<Idx> comp(static_cast<std::size_t>(m) + 1);
                    for (int q = m; q >= 0; --q) {
                        comp[static_cast<std::size_t>(q)] = base ? static_cast<Idx>(rem % base) : 0;
                        rem = base ? rem / base : 0;
                    }
                    for (int q = 0; q <= m; ++q) {
                        acc = acc * base + comp[static_cast<std::size_t>(q)];
                        if (q == i) acc = acc * base + comp[static_cast<std::size_t>(q)];
                    }
                    row[s] = static_cast<Idx>(acc);
                }
            }
            x->cat_degen[static_cast<std::size_t>(m)].push_back(f);
        }
    x->cat_coskeletal_from = 0;
    x->finalize();
    return x;
}

BisimplicialMap cosk0_map(const SimplicialMap& f, int cat_trunc) {
    auto src = cosk0(f.source, cat_trunc);
    auto tgt = cosk0(f.target, cat_trunc);
    BisimplicialMap g;
    g.source = src;
    g.target = tgt;
    for (int m = 0; m <= cat_trunc; ++m) {
        SimplicialMap lm;
        lm.source = src->level[static_cast<std::size_t>(m)];
        lm.target = tgt->level[static_cast<std::size_t>(m)];
        lm.at.resize(static_cast<std::size_t>(f.source->trunc) + 1);
        for (int d = 0; d <= f.source->trunc; ++d) {
            const std::size_t base = f.source->card(d);
            const std::size_t base2 = f.target->card(d);
            auto& row = lm.at[static_cast<std::size_t>(d)];
            row.resize(lm.source->card(d));
            for (std::size_t s = 0; s < row.size(); ++s) {
                std::size_t acc = 0, rem = s;
                std::vector<Idx> comp(static_cast<std::size_t>(m) + 1);
                for (int q = m; q >= 0; --q) {
                    comp[static_cast<std::size_t>(q)] = base ? static_cast<Idx>(rem % base) : 0;
                    rem = base ? rem / base : 0;
                }
                for (int q = 0; q <= m; ++q) acc = acc * base2 + f(d, comp[static_cast<std::size_t>(q)]);
                row[s] = static_cast<Idx>(acc);
            }
        }
        g.level_map.push_back(lm);
    }
    g.validate();
    return g;
}

BisimplicialMap cosk0_unit(const SSp& x) {
    auto tgt = cosk0(x->level[0], x->cat_trunc);
    BisimplicialMap u;
    u.source = x;
    u.target = tgt;
    for (int m = 0; m <= x->cat_trunc; ++m) {
        SimplicialMap lm;
        lm.source = x->level[static_cast<std::size_t>(m)];
        lm.target = tgt->level[static_cast<std::size_t>(m)];
        lm.at.resize(static_cast<std::size_t>(x->space_trunc) + 1);
        for (int n = 0; n <= x->space_trunc; ++n) {
            const std::size_t base = x->level[0]->card(n);
            auto& row = lm.at[static_cast<std::size_t>(n)];
            row.resize(x->card(m, n));
            for (Idx s = 0; s < row.size(); ++s) {
                std::size_t acc = 0;
                for (int q = 0; q <= m; ++q)
                    acc = acc * base + x->apply_cat(m, n, s, Monotone{q});
                row[s] = static_cast<Idx>(acc);
            }
        }
        u.level_map.push_back(lm);
    }
    u.validate();
    return u;
}

ReductionResult reduce_discrete_level0(const SSp& x) {
    const SSet& x0 = x->level[0];
    std::vector<std::string> names;
    for (Idx v = 0; v < x0->card(0); ++v) names.push_back(x0->name_of(0, v));
    auto disc = make_discrete(names, x->space_trunc);
    SimplicialMap incl;
    incl.source = disc;
    incl.target = x0;
    incl.at.resize(static_cast<std::size_t>(x->space_trunc) + 1);
    for (int n = 0; n <= x->space_trunc; ++n) {
        auto& row = incl.at[static_cast<std::size_t>(n)];
        row.resize(disc->card(n));
        for (Idx v = 0; v < row.size(); ++v)
            row[v] = x0->apply(0, v, Monotone(static_cast<std::size_t>(n) + 1, 0));
    }
    incl.validate();
    auto unit = cosk0_unit(x);
    auto ck_incl = cosk0_map(incl, x->cat_trunc);
    // the two cosk0(x0) objects must be the same instance for the pullback
    BisimplicialMap right = ck_incl;
    right.target = unit.target;
    for (int m = 0; m <= x->cat_trunc; ++m)
        right.level_map[static_cast<std::size_t>(m)].target = unit.target->level[static_cast<std::size_t>(m)];
    auto pb = ssp_pullback(unit, right);
    ReductionResult out;
    out.object = pb.object;
    out.counit = pb.to_b;
    return out;
}

SSet underlying_space(const SSp& x) {
    auto k = std::make_shared<TruncatedSimplicialSet>();
    k->trunc = x->cat_trunc;
    const auto tu = static_cast<std::size_t>(x->cat_trunc);
    k->cards.assign(tu + 1, 0);
    k->face.assign(tu + 1, {});
    k->degen.assign(tu + 1, {});
    k->label.assign(tu + 1, {});
    for (int m = 0; m <= x->cat_trunc; ++m) {
        const auto ms = static_cast<std::size_t>(m);
        k->cards[ms] = x->card(m, 0);
        k->label[ms].resize(k->cards[ms]);
        for (Idx s = 0; s < k->cards[ms]; ++s) k->label[ms][s] = x->level[ms]->name_of(0, s);
        if (m >= 1) {
            k->face[ms].resize(ms + 1);
            for (int i = 0; i <= m; ++i) k->face[ms][static_cast<std::size_t>(i)] = x->dcat(m, i).at[0];
        }
        if (m < x->cat_trunc) {
            k->degen[ms].resize(ms + 1);
            for (int i = 0; i <= m; ++i) k->degen[ms][static_cast<std::size_t>(i)] = x->scat(m, i).at[0];
        }
    }
    k->nondeg_bound = x->cat_nondeg_bound;
    k->coskeletal_from = x->cat_coskeletal_from;
    k->finalize();
    return k;
}

SSet levelwise_pi0(const SSp& x) {
    auto k = std::make_shared<TruncatedSimplicialSet>();
    k->trunc = x->cat_trunc;
    const auto tu = static_cast<std::size_t>(x->cat_trunc);
    k->cards.assign(tu + 1, 0);
    k->face.assign(tu + 1, {});
    k->degen.assign(tu + 1, {});
    k->label.assign(tu + 1, {});
    std::vector<Pi0> comps;
    for (int m = 0; m <= x->cat_trunc; ++m) comps.push_back(pi0(x->level[static_cast<std::size_t>(m)]));
    for (int m = 0; m <= x->cat_trunc; ++m) {
        const auto ms = static_cast<std::size_t>(m);
        k->cards[ms] = comps[ms].count;
        k->label[ms].resize(comps[ms].count);
        for (Idx v = 0; v < x->card(m, 0); ++v)
            if (k->label[ms][comps[ms].comp_of[v]].empty())
                k->label[ms][comps[ms].comp_of[v]] = x->level[ms]->name_of(0, v);
        if (m >= 1) {
            k->face[ms].resize(ms + 1);
            for (int i = 0; i <= m; ++i)
                k->face[ms][static_cast<std::size_t>(i)] = pi0_map(x->dcat(m, i), comps[ms], comps[ms - 1]);
        }
        if (m < x->cat_trunc) {
            k->degen[ms].resize(ms + 1);
            for (int i = 0; i <= m; ++i)
                k->degen[ms][static_cast<std::size_t>(i)] = pi0_map(x->scat(m, i), comps[ms], comps[ms + 1]);
        }
    }
    k->nondeg_bound = x->cat_nondeg_bound;
    k->finalize();
    return k;
}

} // namespace seglab
