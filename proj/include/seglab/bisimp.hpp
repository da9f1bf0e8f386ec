#pragma once

#include "seglab/lifting.hpp"

namespace seglab {

// Finite bi-truncated bisimplicial set: a categorical degree worth of levels,
// each level a simplicial set in the space direction with a common space
// truncation, plus categorical face/degeneracy maps satisfying the simplicial
// identities. Immutable after construction.
struct SimplicialSpace {
    int cat_trunc = 0;
    int space_trunc = 0;
    std::vector<SSet> level;                           // level[m], 0 <= m <= cat_trunc
    std::vector<std::vector<SimplicialMap>> cat_face;  // [m][i]: X_m -> X_{m-1}
    std::vector<std::vector<SimplicialMap>> cat_degen; // [m][i]: X_m -> X_{m+1}
    std::optional<int> cat_nondeg_bound;
    std::optional<int> cat_coskeletal_from;

    // filled by finalize(): flags and bi-cores (strip categorical degeneracies
    // first, then space degeneracies inside the core's level)
    struct BiCore {
        int m = 0, n = 0;
        Idx idx = 0;
        Monotone cat_epi, space_epi;
    };
    std::vector<std::vector<std::vector<bool>>> cat_is_degen; // [m][n][cell]
    std::vector<std::vector<std::vector<BiCore>>> bicore;     // [m][n][cell]
    std::vector<std::vector<std::vector<Idx>>> binondeg;      // [m][n] -> cells

    std::size_t card(int m, int n) const {
        if (m < 0 || m > cat_trunc) return 0;
        return level[static_cast<std::size_t>(m)]->card(n);
    }
    const SimplicialMap& dcat(int m, int i) const { return cat_face[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)]; }
    const SimplicialMap& scat(int m, int i) const { return cat_degen[static_cast<std::size_t>(m)][static_cast<std::size_t>(i)]; }

    void finalize(); // validates and computes the bi-core tables

    // phi: [m'] -> [m] acting in the categorical direction at space dim n
    Idx apply_cat(int m, int n, Idx cell, const Monotone& phi) const;
    // combined action: categorical phi and space psi
    Idx apply_bi(int m, int n, Idx cell, const Monotone& phi, const Monotone& psi) const;
};

using SSp = std::shared_ptr<const SimplicialSpace>;

struct BisimplicialMap {
    SSp source, target;
    std::vector<SimplicialMap> level_map; // up to min of the categorical truncations

    int cat_dims() const { return static_cast<int>(level_map.size()) - 1; }
    Idx operator()(int m, int n, Idx cell) const { return level_map[static_cast<std::size_t>(m)](n, cell); }
    void validate() const;
};

BisimplicialMap identity_bimap(const SSp& x);
BisimplicialMap compose(const BisimplicialMap& g, const BisimplicialMap& f);
bool bimap_equal(const BisimplicialMap& f, const BisimplicialMap& g);
bool is_mono(const BisimplicialMap& f);
bool is_iso(const BisimplicialMap& f);

// --- generators --------------------------------------------------------------

// representable in the categorical direction and its parts
SSp make_cat_rep(int m, int cat_trunc, int space_trunc);      // F[m]
SSp make_cat_boundary(int m, int cat_trunc, int space_trunc); // dF[m]
SSp make_spine(int m, int cat_trunc, int space_trunc);        // Sp[m]
// constant in the categorical direction
SSp make_space_const(const SSet& k, int cat_trunc);
SSp make_space_simplex(int n, int cat_trunc, int space_trunc);
SSp make_space_boundary(int n, int cat_trunc, int space_trunc);
SSp make_space_horn(int n, int k, int cat_trunc, int space_trunc);
SSp make_empty_ssp(int cat_trunc, int space_trunc);

// inclusions sharing their ambient objects
BisimplicialMap cat_boundary_inclusion(int m, int cat_trunc, int space_trunc); // dF[m] -> F[m]
BisimplicialMap spine_inclusion(int m, int cat_trunc, int space_trunc);        // Sp[m] -> F[m]
BisimplicialMap space_boundary_inclusion(int n, int cat_trunc, int space_trunc);
BisimplicialMap space_horn_inclusion(int n, int k, int cat_trunc, int space_trunc);

// --- limits and colimits ------------------------------------------------------

struct SSpProduct {
    SSp object;
    BisimplicialMap pr1, pr2;
};
struct SSpPushout {
    SSp object;
    BisimplicialMap from_b, from_c;
};
struct SSpPullback {
    SSp object;
    BisimplicialMap to_b, to_c;
};

SSpProduct ssp_product(const SSp& a, const SSp& b);
SSpPushout ssp_pushout(const BisimplicialMap& f, const BisimplicialMap& g);
SSpPullback ssp_pullback(const BisimplicialMap& f, const BisimplicialMap& g);
BisimplicialMap ssp_product_map(const SSpProduct& src, const SSpProduct& dst,
                                const BisimplicialMap& f, const BisimplicialMap& g);
BisimplicialMap ssp_product_mediator(const SSpProduct& p, const BisimplicialMap& za, const BisimplicialMap& zb);
BisimplicialMap ssp_pushout_mediator(const SSpPushout& p, const BisimplicialMap& bw, const BisimplicialMap& cw);
BisimplicialMap ssp_pullback_mediator(const SSpPullback& p, const BisimplicialMap& zb, const BisimplicialMap& zc);

// the map from the pushout corner of (f x id, id x g) into the product of the
// targets; the shape every generating-set member is built from
struct PushoutProductResult {
    SSpPushout corner;
    SSpProduct target;
    BisimplicialMap map; // corner.object -> target.object
};
PushoutProductResult pushout_product(const BisimplicialMap& f, const BisimplicialMap& g);

// --- coskeleton and reduction -------------------------------------------------

SSet power_sset(const SSet& k, int p); // k^p with tuple cells
SSp cosk0(const SSet& k, int cat_trunc);
BisimplicialMap cosk0_map(const SimplicialMap& f, int cat_trunc);
// unit X -> cosk0(X_0)
BisimplicialMap cosk0_unit(const SSp& x);
// the reduction: pullback X x_{cosk0(X_0)} cosk0(discrete X_{0,0}), with its
// inclusion into X
struct ReductionResult {
    SSp object;
    BisimplicialMap counit; // RX -> X
};
ReductionResult reduce_discrete_level0(const SSp& x);

// underlying simplicial set m |-> X_{m,0}
SSet underlying_space(const SSp& x);
// levelwise components m |-> pi0(X_m)
SSet levelwise_pi0(const SSp& x);

} // namespace seglab
