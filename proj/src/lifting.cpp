#include "seglab/lifting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace seglab {

namespace {

std::vector<std::tuple<int, Idx, Idx>> push_forward(const SimplicialMap& via, const SimplicialMap& values) {
    // prescriptions on via's target: cell via(c) must go to values(c)
    std::vector<std::tuple<int, Idx, Idx>> out;
    const int top = std::min(via.dims(), values.dims());
    for (int d = 0; d <= top; ++d)
        for (Idx c = 0; c < via.source->card(d); ++c)
            out.push_back({d, via(d, c), values(d, c)});
    return out;
}

std::optional<int> conclusive_dim(const SSet& x, const SSet& y, bool horn) {
    if (x->coskeletal_from && y->coskeletal_from)
        return std::max(*x->coskeletal_from, *y->coskeletal_from) + (horn ? 1 : 0);
    return std::nullopt;
}

Verdict lifting_family(const SimplicialMap& p, int max_dim, bool horn, Budget& budget) {
    const SSet& x = p.source;
    const SSet& y = p.target;
    const int trunc = std::min(x->trunc, y->trunc);
    if (max_dim > trunc)
        return Verdict::unknown("requested dimension exceeds truncation");
    auto concl = conclusive_dim(x, y, horn);
    const int check_to = concl ? std::min(max_dim, *concl) : max_dim;

    for (int n = horn ? 1 : 0; n <= check_to; ++n) {
        for (int k = 0; k <= (horn ? n : 0); ++k) {
            SimplicialMap incl = horn ? horn_inclusion(n, k, trunc) : boundary_inclusion(n, trunc);
            auto us = enumerate_maps(incl.source, x, budget);
            if (!us.complete) return Verdict::unknown("node budget exhausted while enumerating squares");
            for (const auto& u : us.maps) {
                MapConstraints vc;
                vc.prescribed = push_forward(incl, compose(p, u));
                auto vs = enumerate_maps(incl.target, y, budget, vc);
                if (!vs.complete) return Verdict::unknown("node budget exhausted while enumerating squares");
                for (const auto& v : vs.maps) {
                    MapConstraints hc;
                    hc.prescribed = push_forward(incl, u);
                    hc.p = &p;
                    hc.g = &v;
                    hc.max_results = 1;
                    auto hs = enumerate_maps(incl.target, x, budget, hc);
                    if (!hs.complete) return Verdict::unknown("node budget exhausted during filler search");
                    if (hs.maps.empty()) {
                        std::ostringstream os;
                        os << "unsolvable square against "
                           << (horn ? "horn(" : "boundary(") << n;
                        if (horn) os << "," << k;
                        os << ")";
                        return Verdict::no(os.str());
                    }
                }
            }
        }
    }
    if (!concl)
        return Verdict::unknown("all checked squares solvable, but no coskeletality flag makes the bound conclusive");
    if (max_dim < *concl)
        return Verdict::unknown("all checked squares solvable; conclusive only from dimension " +
                                std::to_string(*concl));
    return Verdict::yes("all lifting problems up to the conclusive dimension solvable");
}

} // namespace

LiftResult solve_lifting(const SimplicialMap& i, const SimplicialMap& p,
                         const SimplicialMap& f, const SimplicialMap& g, Budget& budget) {
    if (i.source.get() != f.source.get() || i.target.get() != g.source.get() ||
        p.source.get() != f.target.get() || p.target.get() != g.target.get())
        throw error("solve_lifting: square ends do not match");
    if (!smap_equal(compose(p, f), compose(g, i))) throw error("solve_lifting: square does not commute");
    MapConstraints hc;
    hc.prescribed = push_forward(i, f);
    hc.p = &p;
    hc.g = &g;
    hc.max_results = 1;
    auto hs = enumerate_maps(i.target, p.source, budget, hc);
    if (!hs.complete) return {Verdict::unknown("node budget exhausted"), std::nullopt};
    if (hs.maps.empty()) return {Verdict::no("filler search exhausted"), std::nullopt};
    if (!hs.exact)
        return {Verdict::unknown("filler exists on the truncation, but the objects are not determined there"),
                hs.maps[0]};
    return {Verdict::yes("explicit diagonal filler"), hs.maps[0]};
}

Verdict is_fibration(const SimplicialMap& p, int max_dim, Budget& budget) {
    return lifting_family(p, max_dim, true, budget);
}

Verdict is_trivial_fibration(const SimplicialMap& p, int max_dim, Budget& budget) {
    return lifting_family(p, max_dim, false, budget);
}

std::optional<std::vector<std::string>> anodyne_certificate(const SimplicialMap& f, Budget& budget) {
    const SSet& b = f.target;
    const int trunc = std::min(f.source->trunc, b->trunc);
    if (!is_mono(f)) return std::nullopt;
    if (!f.source->nondeg_bound || *f.source->nondeg_bound > trunc) return std::nullopt;
    if (!b->nondeg_bound || *b->nondeg_bound > trunc) return std::nullopt;

    // work on the nondegenerate cells of B; the image of f is a subcomplex
    std::vector<std::vector<bool>> present(static_cast<std::size_t>(trunc) + 1);
    std::size_t missing = 0;
    for (int d = 0; d <= trunc; ++d) {
        present[static_cast<std::size_t>(d)].assign(b->card(d), false);
        for (Idx s = 0; s < f.source->card(d); ++s) present[static_cast<std::size_t>(d)][f(d, s)] = true;
        for (Idx s : b->nondeg[static_cast<std::size_t>(d)])
            if (!present[static_cast<std::size_t>(d)][s]) ++missing;
    }
    auto nondeg_core_present = [&](int d, Idx cell) {
        const auto& c = b->core[static_cast<std::size_t>(d)][cell];
        return present[static_cast<std::size_t>(c.dim)][c.idx];
    };

    std::vector<std::string> log;
    std::function<bool(std::size_t)> dfs = [&](std::size_t still_missing) -> bool {
        if (still_missing == 0) return true;
        if (!budget.spend()) return false;
        for (int j = 1; j <= trunc; ++j)
            for (Idx s : b->nondeg[static_cast<std::size_t>(j)]) {
                if (present[static_cast<std::size_t>(j)][s]) continue;
                int free_k = -1;
                bool ok = true;
                for (int i = 0; i <= j && ok; ++i) {
                    Idx t = b->face_of(j, s, i);
                    if (nondeg_core_present(j - 1, t)) continue;
                    if (b->is_degen[static_cast<std::size_t>(j) - 1][t] || free_k != -1) ok = false;
                    else free_k = i;
                }
                if (!ok || free_k == -1) continue;
                Idx t = b->face_of(j, s, free_k);
                present[static_cast<std::size_t>(j)][s] = true;
                present[static_cast<std::size_t>(j) - 1][t] = true;
                std::ostringstream os;
                os << "fill horn(" << j << "," << free_k << ") at " << b->name_of(j, s);
                log.push_back(os.str());
                if (dfs(still_missing - 2)) return true;
                log.pop_back();
                present[static_cast<std::size_t>(j)][s] = false;
                present[static_cast<std::size_t>(j) - 1][t] = false;
            }
        return false;
    };
    if (missing % 2 != 0) return std::nullopt;
    if (!dfs(missing)) return std::nullopt;
    return log;
}

namespace {

// one-step simplicial homotopy B x Delta[1] -> B between u and w
bool homotopy_exists(const SSet& b, const SimplicialMap& u, const SimplicialMap& w, Budget& budget) {
    auto d1 = make_standard(1, b->trunc);
    auto cyl = product(b, d1);
    // end inclusions: cell s at dim d pairs with the constant vertex words
    MapConstraints hc;
    for (int d = 0; d <= b->trunc; ++d) {
        Idx e0 = d1->apply(0, 0, Monotone(static_cast<std::size_t>(d) + 1, 0));
        Idx e1 = d1->apply(0, 1, Monotone(static_cast<std::size_t>(d) + 1, 0));
        for (Idx s = 0; s < b->card(d); ++s) {
            hc.prescribed.push_back({d, s * static_cast<Idx>(d1->card(d)) + e0, u(d, s)});
            hc.prescribed.push_back({d, s * static_cast<Idx>(d1->card(d)) + e1, w(d, s)});
        }
    }
    hc.max_results = 1;
    auto hs = enumerate_maps(cyl.object, b, budget, hc);
    return hs.complete && hs.exact && !hs.maps.empty();
}

bool deformation_retract_cert(const SimplicialMap& f, Budget& budget) {
    const SSet& a = f.source;
    const SSet& b = f.target;
    // candidates g: B -> A with g.f = id_A, then f.g homotopic to id_B
    {
        MapConstraints gc;
        for (int d = 0; d <= f.dims(); ++d)
            for (Idx s = 0; s < a->card(d); ++s) gc.prescribed.push_back({d, f(d, s), s});
        auto gs = enumerate_maps(b, a, budget, gc);
        if (gs.complete && gs.exact) {
            std::size_t cap = std::min<std::size_t>(gs.maps.size(), 64);
            for (std::size_t i = 0; i < cap; ++i) {
                auto fg = compose(f, gs.maps[i]);
                auto idb = identity_smap(b);
                if (homotopy_exists(b, fg, idb, budget) || homotopy_exists(b, idb, fg, budget)) return true;
            }
        }
    }
    // dual: sections s: B -> A of ... i.e. f.s = id_B with s.f homotopic to id_A
    {
        MapConstraints sc;
        sc.p = &f;
        SimplicialMap idb = identity_smap(b);
        sc.g = &idb;
        auto ss = enumerate_maps(b, a, budget, sc);
        if (ss.complete && ss.exact) {
            std::size_t cap = std::min<std::size_t>(ss.maps.size(), 64);
            for (std::size_t i = 0; i < cap; ++i) {
                auto sf = compose(ss.maps[i], f);
                auto ida = identity_smap(a);
                if (homotopy_exists(a, sf, ida, budget) || homotopy_exists(a, ida, sf, budget)) return true;
            }
        }
    }
    return false;
}

} // namespace

Verdict weakly_contractible(const SSet& z, Budget& budget) {
    if (z->card(0) == 0) return Verdict::no("empty");
    if (pi0(z).count != 1) return Verdict::no("more than one component");
    auto pt = make_standard(0, z->trunc);
    SimplicialMap to_pt;
    to_pt.source = z;
    to_pt.target = pt;
    to_pt.at.resize(static_cast<std::size_t>(z->trunc) + 1);
    for (int d = 0; d <= z->trunc; ++d) to_pt.at[static_cast<std::size_t>(d)].assign(z->card(d), 0);
    auto tf = is_trivial_fibration(to_pt, z->trunc, budget);
    if (tf.is_true()) return Verdict::yes("the map to the point is a trivial fibration");
    // deformation retraction onto a vertex
    std::vector<std::vector<Idx>> seeds(static_cast<std::size_t>(z->trunc) + 1);
    seeds[0] = {0};
    auto vtx = subcomplex(z, seeds);
    if (deformation_retract_cert(vtx, budget))
        return Verdict::yes("deformation retraction onto a vertex");
    return Verdict::unknown("no contractibility certificate found");
}

Verdict weak_equivalence_oracle(const SimplicialMap& f, Budget& budget) {
    if (is_iso(f)) return Verdict::yes("isomorphism");
    auto pa = pi0(f.source);
    auto pb = pi0(f.target);
    {
        std::vector<Idx> img(pa.count, 0);
        for (Idx v = 0; v < f.source->card(0); ++v) img[pa.comp_of[v]] = pb.comp_of[f(0, v)];
        std::vector<bool> hit(pb.count, false);
        bool inj = true;
        for (Idx c = 0; c < pa.count; ++c) {
            if (hit[img[c]]) inj = false;
            hit[img[c]] = true;
        }
        bool surj = std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
        if (!inj || !surj) return Verdict::no("pi0 mismatch");
    }
    {
        auto tf = is_trivial_fibration(f, std::min(f.source->trunc, f.target->trunc), budget);
        if (tf.is_true()) return Verdict::yes("trivial fibration certificate");
    }
    if (auto cert = anodyne_certificate(f, budget))
        return Verdict::yes("horn-filling decomposition (" + std::to_string(cert->size()) + " cells)");
    if (deformation_retract_cert(f, budget))
        return Verdict::yes("deformation retract with explicit homotopy");
    {
        auto ca = weakly_contractible(f.source, budget);
        if (ca.is_true()) {
            auto cb = weakly_contractible(f.target, budget);
            if (cb.is_true()) return Verdict::yes("both ends weakly contractible");
        }
    }
    return Verdict::unknown("no tier of the oracle was conclusive");
}

} // namespace seglab
