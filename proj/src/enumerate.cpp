#include "seglab/enumerate.hpp"

#include <algorithm>
#include <unordered_map>

namespace seglab {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<Idx>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Idx x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// index of cells of X at each dim by their full face tuple
struct FaceIndex {
    std::vector<std::unordered_map<std::vector<Idx>, std::vector<Idx>, VecHash>> at;
    explicit FaceIndex(const TruncatedSimplicialSet& x) {
        at.resize(static_cast<std::size_t>(x.trunc) + 1);
        for (int d = 1; d <= x.trunc; ++d) {
            auto& m = at[static_cast<std::size_t>(d)];
            std::vector<Idx> key(static_cast<std::size_t>(d) + 1);
            for (Idx s = 0; s < x.card(d); ++s) {
                for (int i = 0; i <= d; ++i) key[static_cast<std::size_t>(i)] = x.face_of(d, s, i);
                m[key].push_back(s);
            }
        }
    }
};

} // namespace

bool maps_exact(const SSet& a, const SSet& x) {
    const int top = std::min(a->trunc, x->trunc);
    if (a->nondeg_bound && *a->nondeg_bound <= top) return true;
    if (x->coskeletal_from && *x->coskeletal_from + 1 <= top) return true;
    return false;
}

MapList enumerate_maps(const SSet& a, const SSet& x, Budget& budget, const MapConstraints& cons) {
    const int top = std::min(a->trunc, x->trunc);
    MapList out;
    out.exact = maps_exact(a, x);

    // flat list of nondegenerate cells of A up to top, dimension-ascending
    struct Slot {
        int dim;
        Idx cell;
        std::vector<std::pair<Monotone, Idx>> must; // apply(epi) == value
    };
    std::vector<Slot> slots;
    std::vector<std::vector<Idx>> slot_of(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        slot_of[static_cast<std::size_t>(d)].assign(a->card(d), static_cast<Idx>(-1));
        for (Idx s : a->nondeg[static_cast<std::size_t>(d)]) {
            slot_of[static_cast<std::size_t>(d)][s] = static_cast<Idx>(slots.size());
            slots.push_back(Slot{d, s, {}});
        }
    }
    for (const auto& [d, cell, value] : cons.prescribed) {
        if (d > top) continue;
        const auto& c = a->core[static_cast<std::size_t>(d)][cell];
        if (c.dim > top) throw error("enumerate: prescription core above truncation");
        slots[slot_of[static_cast<std::size_t>(c.dim)][c.idx]].must.push_back({c.epi, value});
    }

    FaceIndex index(*x);
    std::vector<Idx> assigned(slots.size(), 0);

    auto value_of = [&](int d, Idx cell) -> Idx {
        const auto& c = a->core[static_cast<std::size_t>(d)][cell];
        Idx w = assigned[slot_of[static_cast<std::size_t>(c.dim)][c.idx]];
        if (c.dim == d) return w;
        return x->apply(c.dim, w, c.epi);
    };

    std::vector<Idx> key;
    std::function<bool(std::size_t)> dfs = [&](std::size_t pos) -> bool {
        if (pos == slots.size()) {
            std::vector<std::vector<Idx>> vals(static_cast<std::size_t>(top) + 1);
            for (std::size_t i = 0; i < slots.size(); ++i)
                vals[static_cast<std::size_t>(slots[i].dim)].push_back(assigned[i]);
            out.maps.push_back(map_from_nondeg_values(a, x, vals));
            return out.maps.size() >= cons.max_results;
        }
        const Slot& sl = slots[pos];
        const int d = sl.dim;
        auto try_candidate = [&](Idx y) -> bool {
            if (!budget.spend()) return true; // abort whole search
            for (const auto& [epi, v] : sl.must)
                if (x->apply(d, y, epi) != v) return false;
            if (cons.p && (*cons.p)(d, y) != (*cons.g)(d, sl.cell)) return false;
            assigned[pos] = y;
            return dfs(pos + 1);
        };
        if (d == 0) {
            for (Idx y = 0; y < x->card(0); ++y) {
                if (try_candidate(y)) return true;
                if (budget.exhausted()) return true;
            }
            return false;
        }
        key.assign(static_cast<std::size_t>(d) + 1, 0);
        for (int i = 0; i <= d; ++i)
            key[static_cast<std::size_t>(i)] = value_of(d - 1, a->face_of(d, sl.cell, i));
        auto it = index.at[static_cast<std::size_t>(d)].find(key);
        if (it == index.at[static_cast<std::size_t>(d)].end()) return false;
        for (Idx y : it->second) {
            if (try_candidate(y)) return true;
            if (budget.exhausted()) return true;
        }
        return false;
    };
    dfs(0);
    out.complete = !budget.exhausted();
    if (budget.exhausted()) out.exact = false;
    return out;
}

SimplicialMap boundary_inclusion(int n, int trunc) {
    auto delta = make_standard(n, trunc);
    std::vector<std::vector<Idx>> seeds(static_cast<std::size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d) {
        auto ws = all_monotone(d, n);
        for (Idx s = 0; s < ws.size(); ++s)
            if (!is_surjective(ws[s], n)) seeds[static_cast<std::size_t>(d)].push_back(s);
    }
    return subcomplex(delta, seeds);
}

SimplicialMap horn_inclusion(int n, int k, int trunc) {
    if (k < 0 || k > n) throw error("horn_inclusion: index out of range");
    auto delta = make_standard(n, trunc);
    std::vector<std::vector<Idx>> seeds(static_cast<std::size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d) {
        auto ws = all_monotone(d, n);
        for (Idx s = 0; s < ws.size(); ++s) {
            std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
            for (int v : ws[s]) hit[static_cast<std::size_t>(v)] = true;
            for (int j = 0; j <= n; ++j)
                if (j != k && !hit[static_cast<std::size_t>(j)]) {
                    seeds[static_cast<std::size_t>(d)].push_back(s);
                    break;
                }
        }
    }
    return subcomplex(delta, seeds);
}

} // namespace seglab
