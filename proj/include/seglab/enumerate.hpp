#pragma once

#include "seglab/sset.hpp"

#include <functional>
#include <tuple>

namespace seglab {

// Result of enumerating simplicial maps A -> X on the stored truncation.
//   exact    - the listed maps are in bijection with maps of the represented
//              (untruncated) objects: either A has no nondegenerate simplices
//              above the truncation, or X is coskeletal low enough that
//              truncation maps extend uniquely.
//   complete - the search space was exhausted within the node budget.
struct MapList {
    std::vector<SimplicialMap> maps;
    bool exact = false;
    bool complete = true;
};

struct MapConstraints {
    // (dim, cell of A, required value in X); cells may be degenerate
    std::vector<std::tuple<int, Idx, Idx>> prescribed;
    // require p . h = g for the fiber constraint (both or neither)
    const SimplicialMap* p = nullptr;
    const SimplicialMap* g = nullptr;
    std::size_t max_results = static_cast<std::size_t>(-1);
};

MapList enumerate_maps(const SSet& a, const SSet& x, Budget& budget,
                       const MapConstraints& cons = {});

bool maps_exact(const SSet& a, const SSet& x);

// Inclusions of the standard subobjects, sharing the ambient simplex object.
SimplicialMap boundary_inclusion(int n, int trunc);
SimplicialMap horn_inclusion(int n, int k, int trunc);

} // namespace seglab
