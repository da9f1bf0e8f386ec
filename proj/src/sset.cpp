#include "seglab/sset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace seglab {

std::string TruncatedSimplicialSet::name_of(int d, Idx s) const {
    const auto du = static_cast<std::size_t>(d);
    if (du < label.size() && s < label[du].size() && !label[du][s].empty())
        return label[du][s];
    std::ostringstream os;
    os << d << "#" << s;
    return os.str();
}

std::size_t TruncatedSimplicialSet::total_cells() const {
    std::size_t n = 0;
    for (auto c : cards) n += c;
    return n;
}

void TruncatedSimplicialSet::finalize() {
    const auto tu = static_cast<std::size_t>(trunc);
    if (cards.size() != tu + 1) throw error("finalize: cards size mismatch");
    if (face.size() != tu + 1 || degen.size() != tu + 1)
        throw error("finalize: table size mismatch");

    auto check_table = [&](const std::vector<Idx>& t, std::size_t dom, std::size_t cod, const char* what) {
        if (t.size() != dom) throw error(std::string("finalize: partial ") + what + " table");
        for (Idx v : t)
            if (v >= cod) throw error(std::string("finalize: ") + what + " value out of range");
    };
    for (int d = 1; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        if (face[du].size() != du + 1) throw error("finalize: face table count mismatch");
        for (int i = 0; i <= d; ++i)
            check_table(face[du][static_cast<std::size_t>(i)], cards[du], cards[du - 1], "face");
    }
    for (int d = 0; d < trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        if (degen[du].size() != du + 1) throw error("finalize: degeneracy table count mismatch");
        for (int i = 0; i <= d; ++i)
            check_table(degen[du][static_cast<std::size_t>(i)], cards[du], cards[du + 1], "degeneracy");
    }

    // Simplicial identities, wherever both sides are defined.
    for (int d = 2; d <= trunc; ++d)
        for (int j = 1; j <= d; ++j)
            for (int i = 0; i < j; ++i)
                for (Idx s = 0; s < cards[static_cast<std::size_t>(d)]; ++s)
                    if (face_of(d - 1, face_of(d, s, j), i) != face_of(d - 1, face_of(d, s, i), j - 1))
                        throw error("finalize: face identity d_i d_j violated");
    for (int d = 0; d + 2 <= trunc; ++d)
        for (int j = 0; j <= d; ++j)
            for (int i = 0; i <= j; ++i)
                for (Idx s = 0; s < cards[static_cast<std::size_t>(d)]; ++s)
                    if (degen_of(d + 1, degen_of(d, s, j), i) != degen_of(d + 1, degen_of(d, s, i), j + 1))
                        throw error("finalize: degeneracy identity s_i s_j violated");
    for (int d = 0; d + 1 <= trunc; ++d)
        for (int j = 0; j <= d; ++j)
            for (int i = 0; i <= d + 1; ++i)
                for (Idx s = 0; s < cards[static_cast<std::size_t>(d)]; ++s) {
                    // d_i s_j on X_d (s_j lands in dim d+1, d_i comes back to d)
                    Idx lhs = face_of(d + 1, degen_of(d, s, j), i);
                    Idx rhs;
                    if (i == j || i == j + 1) rhs = s;
                    else if (i < j) rhs = degen_of(d - 1, face_of(d, s, i), j - 1);
                    else rhs = degen_of(d - 1, face_of(d, s, i - 1), j);
                    if (lhs != rhs) throw error("finalize: mixed identity d_i s_j violated");
                }

    // Degeneracy injectivity.
    for (int d = 0; d < trunc; ++d)
        for (int i = 0; i <= d; ++i) {
            std::vector<bool> seen(cards[static_cast<std::size_t>(d) + 1], false);
            for (Idx v : degen[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]) {
                if (seen[v]) throw error("finalize: degeneracy not injective");
                seen[v] = true;
            }
        }

    // Eilenberg-Zilber flags and cores, bottom-up.
    is_degen.assign(tu + 1, {});
    core.assign(tu + 1, {});
    nondeg.assign(tu + 1, {});
    for (int d = 0; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        is_degen[du].assign(cards[du], false);
        core[du].resize(cards[du]);
        if (d >= 1) {
            for (int i = 0; i < d; ++i)
                for (Idx t = 0; t < cards[du - 1]; ++t)
                    is_degen[du][degen_of(d - 1, t, i)] = true;
        }
        for (Idx s = 0; s < cards[du]; ++s) {
            if (!is_degen[du][s]) {
                core[du][s] = Core{d, s, identity_map(d)};
                nondeg[du].push_back(s);
                continue;
            }
            bool found = false;
            for (int i = 0; i < d && !found; ++i)
                for (Idx t = 0; t < cards[du - 1] && !found; ++t)
                    if (degen_of(d - 1, t, i) == s) {
                        const Core& c = core[du - 1][t];
                        core[du][s] = Core{c.dim, c.idx, compose(c.epi, codegeneracy(d - 1, i))};
                        found = true;
                    }
            if (!found) throw error("finalize: degenerate flag without witness");
        }
    }
}

Idx TruncatedSimplicialSet::apply(int d, Idx s, const Monotone& phi) const {
    const int a = static_cast<int>(phi.size()) - 1;
    if (a < 0 || a > trunc || d > trunc) throw error("apply: dimension out of range");
    if (!is_monotone(phi, d)) throw error("apply: operator not monotone");
    Idx cur = s;
    int dim = d;
    for (int j : mono_missing(phi, d)) {
        cur = face_of(dim, cur, j);
        --dim;
    }
    for (int r : epi_repeats(phi)) {
        cur = degen_of(dim, cur, r);
        ++dim;
    }
    if (dim != a) throw error("apply: internal dimension mismatch");
    return cur;
}

// --- maps -------------------------------------------------------------------

void SimplicialMap::validate() const {
    if (!source || !target) throw error("map: missing ends");
    const int top = dims();
    if (top < 0 || top > std::min(source->trunc, target->trunc))
        throw error("map: dimension range invalid");
    for (int d = 0; d <= top; ++d) {
        if (at[static_cast<std::size_t>(d)].size() != source->card(d))
            throw error("map: partial assignment");
        for (Idx v : at[static_cast<std::size_t>(d)])
            if (v >= target->card(d)) throw error("map: value out of range");
    }
    for (int d = 1; d <= top; ++d)
        for (int i = 0; i <= d; ++i)
            for (Idx s = 0; s < source->card(d); ++s)
                if (target->face_of(d, (*this)(d, s), i) != (*this)(d - 1, source->face_of(d, s, i)))
                    throw error("map: does not commute with faces");
    for (int d = 0; d < top; ++d)
        for (int i = 0; i <= d; ++i)
            for (Idx s = 0; s < source->card(d); ++s)
                if (target->degen_of(d, (*this)(d, s), i) != (*this)(d + 1, source->degen_of(d, s, i)))
                    throw error("map: does not commute with degeneracies");
}

SimplicialMap identity_smap(const SSet& x) {
    SimplicialMap f;
    f.source = f.target = x;
    f.at.resize(static_cast<std::size_t>(x->trunc) + 1);
    for (int d = 0; d <= x->trunc; ++d) {
        f.at[static_cast<std::size_t>(d)].resize(x->card(d));
        for (Idx s = 0; s < x->card(d); ++s) f.at[static_cast<std::size_t>(d)][s] = s;
    }
    return f;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (g.source.get() != f.target.get()) throw error("compose: ends do not match");
    SimplicialMap h;
    h.source = f.source;
    h.target = g.target;
    const int top = std::min(f.dims(), g.dims());
    h.at.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        h.at[static_cast<std::size_t>(d)].resize(f.source->card(d));
        for (Idx s = 0; s < f.source->card(d); ++s)
            h.at[static_cast<std::size_t>(d)][s] = g(d, f(d, s));
    }
    return h;
}

bool smap_equal(const SimplicialMap& f, const SimplicialMap& g) {
    return f.at == g.at;
}

bool is_mono(const SimplicialMap& f) {
    for (int d = 0; d <= f.dims(); ++d) {
        std::vector<bool> seen(f.target->card(d), false);
        for (Idx s = 0; s < f.source->card(d); ++s) {
            Idx v = f(d, s);
            if (seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

bool is_iso(const SimplicialMap& f) {
    for (int d = 0; d <= f.dims(); ++d)
        if (f.source->card(d) != f.target->card(d)) return false;
    return is_mono(f);
}

// --- constructors -----------------------------------------------------------

namespace {

std::shared_ptr<TruncatedSimplicialSet> blank(int trunc) {
    if (trunc < 0) throw error("truncation must be non-negative");
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

// Simplicial subsets of Delta[n]: all monotone words [d] -> [n] satisfying a
// predicate closed under composition with cofaces and codegeneracies.
template <typename Pred>
SSet representable_part(int n, int trunc, Pred keep, std::optional<int> nondeg_bound) {
    auto x = blank(trunc);
    std::vector<std::vector<Monotone>> words(static_cast<std::size_t>(trunc) + 1);
    std::vector<std::map<Monotone, Idx>> index(static_cast<std::size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (const auto& w : all_monotone(d, n))
            if (keep(w)) {
                index[du][w] = static_cast<Idx>(words[du].size());
                words[du].push_back(w);
            }
        x->cards[du] = words[du].size();
        x->label[du].resize(words[du].size());
        for (Idx s = 0; s < words[du].size(); ++s) {
            std::ostringstream os;
            for (std::size_t p = 0; p < words[du][s].size(); ++p) {
                if (n > 9 && p > 0) os << ",";
                os << words[du][s][p];
            }
            x->label[du][s] = os.str();
        }
    }
    for (int d = 1; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& t = x->face[du][static_cast<std::size_t>(i)];
            t.resize(words[du].size());
            for (Idx s = 0; s < words[du].size(); ++s)
                t[s] = index[du - 1].at(compose(words[du][s], coface(d, i)));
        }
    }
    for (int d = 0; d < trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& t = x->degen[du][static_cast<std::size_t>(i)];
            t.resize(words[du].size());
            for (Idx s = 0; s < words[du].size(); ++s)
                t[s] = index[du + 1].at(compose(words[du][s], codegeneracy(d, i)));
        }
    }
    x->nondeg_bound = nondeg_bound;
    x->finalize();
    return x;
}

} // namespace

SSet make_empty(int trunc) {
    auto x = blank(trunc);
    x->nondeg_bound = 0;
    x->coskeletal_from = std::nullopt;
    x->finalize();
    return x;
}

SSet make_discrete(const std::vector<std::string>& points, int trunc) {
    auto x = blank(trunc);
    for (int d = 0; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        x->cards[du] = points.size();
        x->label[du].resize(points.size());
        for (Idx s = 0; s < points.size(); ++s) x->label[du][s] = points[s];
        if (d >= 1)
            for (int i = 0; i <= d; ++i) {
                auto& t = x->face[du][static_cast<std::size_t>(i)];
                t.resize(points.size());
                for (Idx s = 0; s < points.size(); ++s) t[s] = s;
            }
        if (d < trunc)
            for (int i = 0; i <= d; ++i) {
                auto& t = x->degen[du][static_cast<std::size_t>(i)];
                t.resize(points.size());
                for (Idx s = 0; s < points.size(); ++s) t[s] = s;
            }
    }
    x->nondeg_bound = 0;
    x->coskeletal_from = 1;
    x->finalize();
    return x;
}

SSet make_standard(int n, int trunc) {
    if (n < 0) throw error("make_standard: negative dimension");
    auto x = representable_part(n, trunc, [](const Monotone&) { return true; }, n);
    auto y = std::const_pointer_cast<TruncatedSimplicialSet>(x);
    y->coskeletal_from = 1; // nerve of a linear order
    return x;
}

SSet make_boundary(int n, int trunc) {
    if (n < 0) throw error("make_boundary: negative dimension");
    return representable_part(
        n, trunc, [n](const Monotone& w) { return !is_surjective(w, n); },
        n > 0 ? n - 1 : 0);
}

SSet make_horn(int n, int k, int trunc) {
    if (n < 0 || k < 0 || k > n) throw error("make_horn: index out of range");
    return representable_part(
        n, trunc,
        [n, k](const Monotone& w) {
            // misses some face other than the k-th
            std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
            for (int v : w) hit[static_cast<std::size_t>(v)] = true;
            for (int j = 0; j <= n; ++j)
                if (j != k && !hit[static_cast<std::size_t>(j)]) return true;
            return false;
        },
        n > 0 ? n - 1 : 0);
}

SSet make_from_tables(int top, int trunc,
                      const std::vector<std::size_t>& cards,
                      const std::vector<std::vector<std::vector<Idx>>>& faces,
                      const std::vector<std::vector<std::vector<Idx>>>& degens,
                      const std::vector<std::vector<std::string>>& labels,
                      std::optional<int> nondeg_bound,
                      std::optional<int> coskeletal_from) {
    if (top > trunc) throw error("make_from_tables: explicit part exceeds truncation");
    // Validate the explicit part on its own first.
    auto base = blank(top);
    for (int d = 0; d <= top; ++d) {
        const auto du = static_cast<std::size_t>(d);
        base->cards[du] = cards[du];
        if (du < labels.size()) base->label[du] = labels[du];
        base->label[du].resize(cards[du]);
        if (d >= 1) base->face[du] = faces[du];
        if (d < top) base->degen[du] = degens[du];
    }
    base->finalize();
    if (top == trunc) {
        base->nondeg_bound = nondeg_bound;
        base->coskeletal_from = coskeletal_from;
        return base;
    }

    // Formal degeneracies above the explicit part: a cell of dimension d > top
    // is a pair (nondegenerate core z of dim k, epi [d] ->> [k]).
    auto x = blank(trunc);
    for (int d = 0; d <= top; ++d) {
        const auto du = static_cast<std::size_t>(d);
        x->cards[du] = base->cards[du];
        x->label[du] = base->label[du];
        if (d >= 1) x->face[du] = base->face[du];
        if (d < top) x->degen[du] = base->degen[du];
    }
    struct PairKey {
        int k;
        Idx z;
        Monotone epi;
        bool operator<(const PairKey& o) const {
            if (k != o.k) return k < o.k;
            if (z != o.z) return z < o.z;
            return epi < o.epi;
        }
    };
    std::vector<std::map<PairKey, Idx>> pidx(static_cast<std::size_t>(trunc) + 1);
    std::vector<std::vector<PairKey>> pcell(static_cast<std::size_t>(trunc) + 1);
    for (int d = top + 1; d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int k = 0; k <= top; ++k)
            for (Idx z : base->nondeg[static_cast<std::size_t>(k)])
                for (const auto& e : all_monotone(d, k))
                    if (is_surjective(e, k)) {
                        PairKey key{k, z, e};
                        pidx[du][key] = static_cast<Idx>(pcell[du].size());
                        pcell[du].push_back(key);
                    }
        x->cards[du] = pcell[du].size();
        x->label[du].resize(pcell[du].size());
    }
    // Resolve (core, operator) to a cell index at any dimension.
    auto locate = [&](int k, Idx z, const Monotone& op) -> Idx {
        const int d = static_cast<int>(op.size()) - 1;
        if (d <= top) return base->apply(k, z, op);
        // op = mono . epi with the mono applied to z inside the explicit part
        std::vector<int> missing = mono_missing(op, k);
        Idx zz = z;
        int kk = k;
        for (int j : missing) {
            zz = base->face_of(kk, zz, j);
            --kk;
        }
        const auto& c = base->core[static_cast<std::size_t>(kk)][zz];
        // epi part of op, as a map [d] ->> [kk]
        Monotone epi_part(static_cast<std::size_t>(d) + 1);
        {
            // strip missing values from op to get the epi onto the image
            std::vector<int> rank(static_cast<std::size_t>(k) + 1, -1);
            int r = 0;
            std::vector<bool> miss(static_cast<std::size_t>(k) + 1, false);
            for (int j : missing) miss[static_cast<std::size_t>(j)] = true;
            for (int v = 0; v <= k; ++v)
                if (!miss[static_cast<std::size_t>(v)]) rank[static_cast<std::size_t>(v)] = r++;
            for (std::size_t i = 0; i < op.size(); ++i)
                epi_part[i] = rank[static_cast<std::size_t>(op[i])];
        }
        return pidx[static_cast<std::size_t>(d)].at(PairKey{c.dim, c.idx, compose(c.epi, epi_part)});
    };
    for (int d = std::max(1, top + 1); d <= trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& t = x->face[du][static_cast<std::size_t>(i)];
            t.resize(x->cards[du]);
            for (Idx s = 0; s < x->cards[du]; ++s) {
                const auto& p = pcell[du][s];
                t[s] = locate(p.k, p.z, compose(p.epi, coface(d, i)));
            }
        }
    }
    for (int d = std::max(0, top); d < trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& t = x->degen[du][static_cast<std::size_t>(i)];
            t.resize(x->cards[du]);
            for (Idx s = 0; s < x->cards[du]; ++s) {
                if (d <= top) {
                    const auto& c = base->core[du][s];
                    t[s] = locate(c.dim, c.idx, compose(c.epi, codegeneracy(d, i)));
                } else {
                    const auto& p = pcell[du][s];
                    t[s] = locate(p.k, p.z, compose(p.epi, codegeneracy(d, i)));
                }
            }
        }
    }
    x->nondeg_bound = nondeg_bound ? nondeg_bound : std::optional<int>(top);
    x->coskeletal_from = coskeletal_from;
    x->finalize();
    return x;
}

SimplicialMap subcomplex(const SSet& x, const std::vector<std::vector<Idx>>& seeds) {
    const auto tu = static_cast<std::size_t>(x->trunc);
    std::vector<std::vector<bool>> in(tu + 1);
    for (int d = 0; d <= x->trunc; ++d) in[static_cast<std::size_t>(d)].assign(x->card(d), false);
    for (std::size_t d = 0; d < seeds.size() && d <= tu; ++d)
        for (Idx s : seeds[d]) {
            if (s >= x->card(static_cast<int>(d))) throw error("subcomplex: seed out of range");
            in[d][s] = true;
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int d = 1; d <= x->trunc; ++d)
            for (Idx s = 0; s < x->card(d); ++s)
                if (in[static_cast<std::size_t>(d)][s])
                    for (int i = 0; i <= d; ++i) {
                        Idx t = x->face_of(d, s, i);
                        if (!in[static_cast<std::size_t>(d) - 1][t]) {
                            in[static_cast<std::size_t>(d) - 1][t] = true;
                            changed = true;
                        }
                    }
        for (int d = 0; d < x->trunc; ++d)
            for (Idx s = 0; s < x->card(d); ++s)
                if (in[static_cast<std::size_t>(d)][s])
                    for (int i = 0; i <= d; ++i) {
                        Idx t = x->degen_of(d, s, i);
                        if (!in[static_cast<std::size_t>(d) + 1][t]) {
                            in[static_cast<std::size_t>(d) + 1][t] = true;
                            changed = true;
                        }
                    }
    }
    auto sub = blank(x->trunc);
    std::vector<std::vector<Idx>> old_of(tu + 1), new_of(tu + 1);
    for (int d = 0; d <= x->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        new_of[du].assign(x->card(d), 0);
        for (Idx s = 0; s < x->card(d); ++s)
            if (in[du][s]) {
                new_of[du][s] = static_cast<Idx>(old_of[du].size());
                old_of[du].push_back(s);
            }
        sub->cards[du] = old_of[du].size();
        sub->label[du].resize(old_of[du].size());
        for (Idx s = 0; s < old_of[du].size(); ++s)
            sub->label[du][s] = x->name_of(d, old_of[du][s]);
    }
    for (int d = 1; d <= x->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& t = sub->face[du][static_cast<std::size_t>(i)];
            t.resize(sub->cards[du]);
            for (Idx s = 0; s < sub->cards[du]; ++s)
                t[s] = new_of[du - 1][x->face_of(d, old_of[du][s], i)];
        }
    }
    for (int d = 0; d < x->trunc; ++d) {
        const auto du = static_cast<std::size_t>(d);
        for (int i = 0; i <= d; ++i) {
            auto& t = sub->degen[du][static_cast<std::size_t>(i)];
            t.resize(sub->cards[du]);
            for (Idx s = 0; s < sub->cards[du]; ++s)
                t[s] = new_of[du + 1][x->degen_of(d, old_of[du][s], i)];
        }
    }
    sub->nondeg_bound = x->nondeg_bound;
    sub->finalize();
    SimplicialMap incl;
    incl.source = sub;
    incl.target = x;
    incl.at = old_of;
    return incl;
}

SimplicialMap map_from_nondeg_values(const SSet& x, const SSet& y,
                                     const std::vector<std::vector<Idx>>& nondeg_values) {
    const int top = std::min(x->trunc, y->trunc);
    SimplicialMap f;
    f.source = x;
    f.target = y;
    f.at.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        const auto du = static_cast<std::size_t>(d);
        f.at[du].resize(x->card(d));
        for (Idx s = 0; s < x->card(d); ++s) {
            const auto& c = x->core[du][s];
            Idx pos = 0;
            {
                const auto& nd = x->nondeg[static_cast<std::size_t>(c.dim)];
                pos = static_cast<Idx>(std::lower_bound(nd.begin(), nd.end(), c.idx) - nd.begin());
            }
            Idx v = nondeg_values[static_cast<std::size_t>(c.dim)][pos];
            f.at[du][s] = y->apply(c.dim, v, c.epi);
        }
    }
    return f;
}

} // namespace seglab
