#pragma once

#include "seglab/bisimp.hpp"

#include <unordered_map>

namespace seglab {

// word lists matching the deterministic cell order of the categorical
// generators (lex order of monotone maps, filtered)
std::vector<Monotone> rep_words(int m, int k);
std::vector<Monotone> boundary_words(int m, int k);
std::vector<Monotone> spine_level_words(int m, int k);

struct BiMapList {
    std::vector<BisimplicialMap> maps;
    bool exact = false;
    bool complete = true;
};

struct BiMapConstraints {
    std::vector<std::tuple<int, int, Idx, Idx>> prescribed; // (m, n, cell, value)
    const BisimplicialMap* p = nullptr;
    const BisimplicialMap* g = nullptr;
    std::size_t max_results = static_cast<std::size_t>(-1);
};

bool bimaps_exact(const SSp& a, const SSp& x);
BiMapList enumerate_bimaps(const SSp& a, const SSp& x, Budget& budget, const BiMapConstraints& cons = {});

BisimplicialMap bimap_from_values(const SSp& a, const SSp& x,
                                  const std::vector<std::vector<std::vector<Idx>>>& binondeg_values);

struct BiLiftResult {
    Verdict verdict;
    std::optional<BisimplicialMap> lift;
};
BiLiftResult solve_bilifting(const BisimplicialMap& i, const BisimplicialMap& p,
                             const BisimplicialMap& f, const BisimplicialMap& g, Budget& budget);

// Map(A, X): n-simplices are the bisimplicial maps A x Delta[n] -> X, stored
// as compact assignments on the bi-nondegenerate cells of the cylinder.
struct MappingSpaceResult {
    SSp pattern;
    SSp x;
    int up_to = 0;
    std::vector<SSpProduct> cylinder;                 // A x Delta[n]
    std::vector<std::vector<std::vector<Idx>>> cells; // [n][cell] -> slot assignment
    std::vector<std::unordered_map<std::vector<Idx>, Idx, IdxVecHash>> index;
    SSet space;
    bool exact = false;
    bool complete = true;

    // provenance: the n-simplex as an explicit bisimplicial map
    BisimplicialMap materialize(int n, Idx cell) const;
};

MappingSpaceResult mapping_space(const SSp& a, const SSp& x, int up_to, Budget& budget);

// the canonical map X_m -> Map(A, X) restricting a Yoneda cell along phi-words
// of the pattern A (pattern must be one of the categorical parts of F[m])
SimplicialMap yoneda_restriction(const MappingSpaceResult& ms, int m,
                                 const std::vector<std::vector<Monotone>>& pattern_words);
// Map(A, X) -> Map(A, Y) induced by postcomposition with f (same pattern)
SimplicialMap postcompose_map(const MappingSpaceResult& mx, const MappingSpaceResult& my,
                              const BisimplicialMap& f);

struct MatchingResult {
    SimplicialMap map;  // X_m -> Y_m x_{Map(dF[m],Y)} Map(dF[m],X)
    PullbackResult span;
    bool exact = false;
    bool complete = true;
};
MatchingResult relative_matching_map(const BisimplicialMap& f, int m, Budget& budget);

Verdict is_reedy_fibration(const BisimplicialMap& f, Budget& budget);
Verdict is_reedy_fibrant(const SSp& x, Budget& budget);
Verdict is_levelwise_we(const BisimplicialMap& f, Budget& budget);

BisimplicialMap terminal_bimap(const SSp& x); // X -> F[0]-like terminal object

// internal hom (Y^X)_{m,n} = Hom(X x F[m] x Delta[n], Y), enumerated; exact on
// the coskeletal locus (nerve-shaped inputs)
struct InternalHomResult {
    SSp object;
    bool exact = false;
    bool complete = true;
};
InternalHomResult internal_hom(const SSp& x, const SSp& y, int cat_trunc, int space_trunc, Budget& budget);

} // namespace seglab
