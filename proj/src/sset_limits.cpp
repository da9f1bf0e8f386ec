#include "seglab/sset_limits.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace seglab {

namespace {

std::shared_ptr<TruncatedSimplicialSet> blank_like(int trunc) {
    auto x = std::make_shared<TruncatedSimplicialSet>();
    x->trunc = trunc;
    const auto tu = static_cast<std::size_t>(trunc);
    x->cards.assign(tu + 1, 0);
    x->face.assign(tu + 1, {});
    x->degen.assign(tu + 1, {});
    x->label.assign(tu + 1, {});
    for (int d = 1; d <= trunc; ++d) x->face[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d) + 1, {});
    for (int d = 0; d < trunc; ++d) x->degen[static_cast<std::size_t>(d)].assign(static_cast<std::size_t>(d) + 1, {});
    return x;
}

struct UnionFind {
    std::vector<Idx> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    Idx find(Idx a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }
    void unite(Idx a, Idx b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

ProductResult product(const SSet& a, const SSet& b) {
    if (a->trunc != b->trunc) throw error("product: truncation mismatch");
    auto x = blank_like(a->trunc);
    for (int d = 0; d <= a->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        x->cards[du] = a->card(d) * b->card(d);
        x->label[du].resize(x->cards[du]);
        for (Idx s = 0; s < a->card(d); ++s)
            for (Idx t = 0; t < b->card(d); ++t)
                x->label[du][s * b->card(d) + t] = "(" + a->name_of(d, s) + "," + b->name_of(d, t) + ")";
    }
    for (int d = 1; d <= a->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& tab = x->face[du][static_cast<std::size_t>(i)];
            tab.resize(x->cards[du]);
            for (Idx s = 0; s < a->card(d); ++s)
                for (Idx t = 0; t < b->card(d); ++t)
                    tab[s * b->card(d) + t] = a->face_of(d, s, i) * b->card(d - 1) + b->face_of(d, t, i);
        }
    }
    for (int d = 0; d < a->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& tab = x->degen[du][static_cast<std::size_t>(i)];
            tab.resize(x->cards[du]);
            for (Idx s = 0; s < a->card(d); ++s)
                for (Idx t = 0; t < b->card(d); ++t)
                    tab[s * b->card(d) + t] = a->degen_of(d, s, i) * b->card(d + 1) + b->degen_of(d, t, i);
        }
    }
    if (a->nondeg_bound && b->nondeg_bound) x->nondeg_bound = *a->nondeg_bound + *b->nondeg_bound;
    if (a->coskeletal_from && b->coskeletal_from)
        x->coskeletal_from = std::max(*a->coskeletal_from, *b->coskeletal_from);
    x->finalize();

    ProductResult out;
    out.object = x;
    out.pr1.source = out.pr2.source = x;
    out.pr1.target = a;
    out.pr2.target = b;
    out.pr1.at.resize(static_cast<std::size_t>(a->trunc) + 1);
    out.pr2.at.resize(static_cast<std::size_t>(a->trunc) + 1);
    for (int d = 0; d <= a->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        out.pr1.at[du].resize(x->cards[du]);
        out.pr2.at[du].resize(x->cards[du]);
        for (Idx s = 0; s < a->card(d); ++s)
            for (Idx t = 0; t < b->card(d); ++t) {
                out.pr1.at[du][s * b->card(d) + t] = s;
                out.pr2.at[du][s * b->card(d) + t] = t;
            }
    }
    return out;
}

PushoutResult coproduct(const SSet& a, const SSet& b) {
    auto ea = make_empty(a->trunc);
    SimplicialMap fa, fb;
    fa.source = fb.source = ea;
    fa.target = a;
    fb.target = b;
    fa.at.assign(static_cast<std::size_t>(a->trunc) + 1, {});
    fb.at.assign(static_cast<std::size_t>(b->trunc) + 1, {});
    return pushout(fa, fb);
}

PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.source.get() != g.source.get()) throw error("pushout: legs must share their source");
    const SSet& b = f.target;
    const SSet& c = g.target;
    if (b->trunc != c->trunc) throw error("pushout: truncation mismatch");
    const int trunc = b->trunc;
    auto x = blank_like(trunc);

    std::vector<std::vector<Idx>> class_b(static_cast<std::size_t>(trunc) + 1);
    std::vector<std::vector<Idx>> class_c(static_cast<std::size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        UnionFind uf(b->card(d) + c->card(d));
        for (Idx a = 0; a < f.source->card(d); ++a)
            uf.unite(f(d, a), static_cast<Idx>(b->card(d)) + g(d, a));
        std::vector<Idx> newid(b->card(d) + c->card(d), static_cast<Idx>(-1));
        Idx next = 0;
        for (Idx s = 0; s < b->card(d) + c->card(d); ++s) {
            Idx r = uf.find(s);
            if (newid[r] == static_cast<Idx>(-1)) newid[r] = next++;
            newid[s] = newid[r];
        }
        class_b[du].resize(b->card(d));
        class_c[du].resize(c->card(d));
        for (Idx s = 0; s < b->card(d); ++s) class_b[du][s] = newid[s];
        for (Idx s = 0; s < c->card(d); ++s) class_c[du][s] = newid[b->card(d) + s];
        x->cards[du] = next;
        x->label[du].assign(next, "");
        for (Idx s = 0; s < c->card(d); ++s)
            if (x->label[du][class_c[du][s]].empty()) x->label[du][class_c[du][s]] = c->name_of(d, s);
        for (Idx s = 0; s < b->card(d); ++s)
            if (x->label[du][class_b[du][s]].empty()) x->label[du][class_b[du][s]] = b->name_of(d, s);
    }
    for (int d = 1; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& tab = x->face[du][static_cast<std::size_t>(i)];
            tab.resize(x->cards[du]);
            for (Idx s = 0; s < b->card(d); ++s)
                tab[class_b[du][s]] = class_b[du - 1][b->face_of(d, s, i)];
            for (Idx s = 0; s < c->card(d); ++s)
                tab[class_c[du][s]] = class_c[du - 1][c->face_of(d, s, i)];
        }
    }
    for (int d = 0; d < trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& tab = x->degen[du][static_cast<std::size_t>(i)];
            tab.resize(x->cards[du]);
            for (Idx s = 0; s < b->card(d); ++s)
                tab[class_b[du][s]] = class_b[du + 1][b->degen_of(d, s, i)];
            for (Idx s = 0; s < c->card(d); ++s)
                tab[class_c[du][s]] = class_c[du + 1][c->degen_of(d, s, i)];
        }
    }
    if (b->nondeg_bound && c->nondeg_bound)
        x->nondeg_bound = std::max(*b->nondeg_bound, *c->nondeg_bound);
    x->finalize();

    PushoutResult out;
    out.object = x;
    out.from_b.source = b;
    out.from_b.target = x;
    out.from_b.at = class_b;
    out.from_c.source = c;
    out.from_c.target = x;
    out.from_c.at = class_c;
    return out;
}

PullbackResult pullback(const SimplicialMap& f, const SimplicialMap& g) {
    if (f.target.get() != g.target.get()) throw error("pullback: legs must share their target");
    const SSet& b = f.source;
    const SSet& c = g.source;
    if (b->trunc != c->trunc) throw error("pullback: truncation mismatch");
    const int trunc = b->trunc;
    auto x = blank_like(trunc);

    std::vector<std::vector<std::pair<Idx, Idx>>> cells(static_cast<std::size_t>(trunc) + 1);
    std::vector<std::map<std::pair<Idx, Idx>, Idx>> index(static_cast<std::size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        // group by image to avoid the full quadratic scan on large levels
        std::vector<std::vector<Idx>> by_img(f.target->card(d));
        for (Idx t = 0; t < c->card(d); ++t) by_img[g(d, t)].push_back(t);
        for (Idx s = 0; s < b->card(d); ++s)
            for (Idx t : by_img[f(d, s)]) {
                index[du][{s, t}] = static_cast<Idx>(cells[du].size());
                cells[du].push_back({s, t});
            }
        x->cards[du] = cells[du].size();
        x->label[du].resize(cells[du].size());
        for (Idx i = 0; i < cells[du].size(); ++i)
            x->label[du][i] = "(" + b->name_of(d, cells[du][i].first) + "," + c->name_of(d, cells[du][i].second) + ")";
    }
    for (int d = 1; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& tab = x->face[du][static_cast<std::size_t>(i)];
            tab.resize(x->cards[du]);
            for (Idx s = 0; s < x->cards[du]; ++s)
                tab[s] = index[du - 1].at({b->face_of(d, cells[du][s].first, i), c->face_of(d, cells[du][s].second, i)});
        }
    }
    for (int d = 0; d < trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& tab = x->degen[du][static_cast<std::size_t>(i)];
            tab.resize(x->cards[du]);
            for (Idx s = 0; s < x->cards[du]; ++s)
                tab[s] = index[du + 1].at({b->degen_of(d, cells[du][s].first, i), c->degen_of(d, cells[du][s].second, i)});
        }
    }
    if (b->nondeg_bound && c->nondeg_bound)
        x->nondeg_bound = *b->nondeg_bound + *c->nondeg_bound;
    if (b->coskeletal_from && c->coskeletal_from && f.target->coskeletal_from)
        x->coskeletal_from = std::max({*b->coskeletal_from, *c->coskeletal_from, *f.target->coskeletal_from});
    x->finalize();

    PullbackResult out;
    out.object = x;
    out.to_b.source = out.to_c.source = x;
    out.to_b.target = b;
    out.to_c.target = c;
    out.to_b.at.resize(static_cast<std::size_t>(trunc) + 1);
    out.to_c.at.resize(static_cast<std::size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        out.to_b.at[du].resize(x->cards[du]);
        out.to_c.at[du].resize(x->cards[du]);
        for (Idx s = 0; s < x->cards[du]; ++s) {
            out.to_b.at[du][s] = cells[du][s].first;
            out.to_c.at[du][s] = cells[du][s].second;
        }
    }
    return out;
}

SimplicialMap product_mediator(const ProductResult& p, const SimplicialMap& za, const SimplicialMap& zb) {
    if (za.source.get() != zb.source.get()) throw error("mediator: cone legs must share their source");
    if (za.target.get() != p.pr1.target.get() || zb.target.get() != p.pr2.target.get())
        throw error("mediator: cone does not match the product");
    SimplicialMap h;
    h.source = za.source;
    h.target = p.object;
    const int top = std::min(za.dims(), zb.dims());
    h.at.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        const auto du = static_cast<std::size_t>(d);
        h.at[du].resize(za.source->card(d));
        for (Idx s = 0; s < za.source->card(d); ++s)
            h.at[du][s] = za(d, s) * p.pr2.target->card(d) + zb(d, s);
    }
    return h;
}

SimplicialMap pushout_mediator(const PushoutResult& p, const SimplicialMap& bw, const SimplicialMap& cw) {
    if (bw.target.get() != cw.target.get()) throw error("mediator: cocone legs must share their target");
    SimplicialMap h;
    h.source = p.object;
    h.target = bw.target;
    const int top = std::min(bw.dims(), cw.dims());
    h.at.assign(static_cast<std::size_t>(top) + 1, {});
    for (int d = 0; d <= top; ++d) {
        const auto du = static_cast<std::size_t>(d);
        h.at[du].assign(p.object->card(d), static_cast<Idx>(-1));
        for (Idx s = 0; s < p.from_b.source->card(d); ++s) h.at[du][p.from_b(d, s)] = bw(d, s);
        for (Idx s = 0; s < p.from_c.source->card(d); ++s) {
            Idx cls = p.from_c(d, s);
            if (h.at[du][cls] != static_cast<Idx>(-1) && h.at[du][cls] != cw(d, s))
                throw error("mediator: cocone does not commute");
            h.at[du][cls] = cw(d, s);
        }
        for (Idx v : h.at[du])
            if (v == static_cast<Idx>(-1)) throw error("mediator: pushout class not covered");
    }
    return h;
}

SimplicialMap pullback_mediator(const PullbackResult& p, const SimplicialMap& zb, const SimplicialMap& zc) {
    if (zb.source.get() != zc.source.get()) throw error("mediator: cone legs must share their source");
    std::vector<std::map<std::pair<Idx, Idx>, Idx>> index(static_cast<std::size_t>(p.object->trunc) + 1);
    for (int d = 0; d <= p.object->trunc; ++d)
        for (Idx s = 0; s < p.object->card(d); ++s)
            index[static_cast<std::size_t>(d)][{p.to_b(d, s), p.to_c(d, s)}] = s;
    SimplicialMap h;
    h.source = zb.source;
    h.target = p.object;
    const int top = std::min(zb.dims(), zc.dims());
    h.at.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        const auto du = static_cast<std::size_t>(d);
        h.at[du].resize(zb.source->card(d));
        for (Idx s = 0; s < zb.source->card(d); ++s) {
            auto it = index[du].find({zb(d, s), zc(d, s)});
            if (it == index[du].end()) throw error("mediator: cone does not commute");
            h.at[du][s] = it->second;
        }
    }
    return h;
}

Pi0 pi0(const SSet& x) {
    UnionFind uf(x->card(0));
    if (x->trunc >= 1)
        for (Idx e = 0; e < x->card(1); ++e) uf.unite(x->face_of(1, e, 0), x->face_of(1, e, 1));
    Pi0 out;
    out.comp_of.assign(x->card(0), 0);
    std::vector<Idx> newid(x->card(0), static_cast<Idx>(-1));
    Idx next = 0;
    for (Idx v = 0; v < x->card(0); ++v) {
        Idx r = uf.find(v);
        if (newid[r] == static_cast<Idx>(-1)) newid[r] = next++;
        out.comp_of[v] = newid[r];
    }
    out.count = next;
    return out;
}

std::vector<Idx> pi0_map(const SimplicialMap& f, const Pi0& src, const Pi0& tgt) {
    std::vector<Idx> out(src.count, 0);
    for (Idx v = 0; v < f.source->card(0); ++v) out[src.comp_of[v]] = tgt.comp_of[f(0, v)];
    return out;
}

SimplicialMap component_subcomplex(const SSet& x, const Pi0& p, Idx comp) {
    // every cell's vertices sit in a single component; pick the 0-th vertex
    std::vector<std::vector<Idx>> seeds(static_cast<std::size_t>(x->trunc) + 1);
    for (int d = 0; d <= x->trunc; ++d) {
        Monotone v0(1, 0);
        for (Idx s = 0; s < x->card(d); ++s)
            if (p.comp_of[x->apply(d, s, v0)] == comp) seeds[static_cast<std::size_t>(d)].push_back(s);
    }
    return subcomplex(x, seeds);
}

Restriction restrict_along(const SimplicialMap& f, const SimplicialMap& sub) {
    if (sub.target.get() != f.target.get()) throw error("restrict: subcomplex lives elsewhere");
    std::vector<std::vector<bool>> in_sub(static_cast<std::size_t>(f.target->trunc) + 1);
    std::vector<std::vector<Idx>> back(static_cast<std::size_t>(f.target->trunc) + 1);
    for (int d = 0; d <= f.target->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        in_sub[du].assign(f.target->card(d), false);
        back[du].assign(f.target->card(d), 0);
        for (Idx s = 0; s < sub.source->card(d); ++s) {
            in_sub[du][sub(d, s)] = true;
            back[du][sub(d, s)] = s;
        }
    }
    std::vector<std::vector<Idx>> seeds(static_cast<std::size_t>(f.source->trunc) + 1);
    for (int d = 0; d <= f.dims(); ++d)
        for (Idx s = 0; s < f.source->card(d); ++s)
            if (in_sub[static_cast<std::size_t>(d)][f(d, s)]) seeds[static_cast<std::size_t>(d)].push_back(s);
    Restriction out;
    out.incl = subcomplex(f.source, seeds);
    out.restricted.source = out.incl.source;
    out.restricted.target = sub.source;
    const int top = std::min(out.incl.source->trunc, sub.source->trunc);
    out.restricted.at.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        const auto du = static_cast<std::size_t>(d);
        out.restricted.at[du].resize(out.incl.source->card(d));
        for (Idx s = 0; s < out.incl.source->card(d); ++s)
            out.restricted.at[du][s] = back[du][f(d, out.incl(d, s))];
    }
    return out;
}

} // namespace seglab
