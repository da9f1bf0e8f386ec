#pragma once

#include "seglab/sset.hpp"

namespace seglab {

struct ProductResult {
    SSet object;
    SimplicialMap pr1, pr2;
};

struct PushoutResult {
    SSet object;
    SimplicialMap from_b, from_c; // coprojections of the span B <- A -> C
};

struct PullbackResult {
    SSet object;
    SimplicialMap to_b, to_c; // projections of the cospan B -> D <- C
};

ProductResult product(const SSet& a, const SSet& b);
PushoutResult coproduct(const SSet& a, const SSet& b);
PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g);
PullbackResult pullback(const SimplicialMap& f, const SimplicialMap& g);

SimplicialMap product_mediator(const ProductResult& p, const SimplicialMap& za, const SimplicialMap& zb);
SimplicialMap pushout_mediator(const PushoutResult& p, const SimplicialMap& bw, const SimplicialMap& cw);
SimplicialMap pullback_mediator(const PullbackResult& p, const SimplicialMap& zb, const SimplicialMap& zc);

struct Pi0 {
    std::vector<Idx> comp_of; // component id per 0-simplex
    std::size_t count = 0;
};

Pi0 pi0(const SSet& x);
// induced map on components
std::vector<Idx> pi0_map(const SimplicialMap& f, const Pi0& src, const Pi0& tgt);
// inclusion of the full subcomplex on one component's cells
SimplicialMap component_subcomplex(const SSet& x, const Pi0& p, Idx comp);
// preimage of a subcomplex inclusion under f, with the restricted map
struct Restriction {
    SimplicialMap incl;       // P -> X
    SimplicialMap restricted; // P -> S
};
Restriction restrict_along(const SimplicialMap& f, const SimplicialMap& sub);

} // namespace seglab
