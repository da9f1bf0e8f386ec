#pragma once

#include "seglab/enumerate.hpp"
#include "seglab/sset_limits.hpp"

namespace seglab {

struct LiftResult {
    Verdict verdict;
    std::optional<SimplicialMap> lift;
};

// Diagonal filler for the square f . i^-1 ... i.e. h: B -> X with h.i = f and
// p.h = g, for i: A -> B, p: X -> Y, f: A -> X, g: B -> Y with p.f = g.i.
LiftResult solve_lifting(const SimplicialMap& i, const SimplicialMap& p,
                         const SimplicialMap& f, const SimplicialMap& g, Budget& budget);

// Lifting against all horn (resp. boundary) inclusions up to max_dim. True is
// returned only when the flags of the ends make the bounded check conclusive;
// a failed square is always a conclusive False.
Verdict is_fibration(const SimplicialMap& p, int max_dim, Budget& budget);
Verdict is_trivial_fibration(const SimplicialMap& p, int max_dim, Budget& budget);

// Exhibits the target as the source plus a sequence of horn fillings
// (each step a pushout of some Lambda^k[j] -> Delta[j]); a sound witness that
// a monomorphism is a weak equivalence.
std::optional<std::vector<std::string>> anodyne_certificate(const SimplicialMap& f, Budget& budget);

Verdict weakly_contractible(const SSet& z, Budget& budget);

// Tiered, sound and deliberately partial:
//   isomorphism / trivial-fibration certificate / horn-filling decomposition /
//   deformation-retract homotopy => True; pi0 mismatch => False;
// anything else => Unknown.
Verdict weak_equivalence_oracle(const SimplicialMap& f, Budget& budget);

} // namespace seglab
