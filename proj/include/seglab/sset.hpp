#pragma once

#include "seglab/ops.hpp"

#include <memory>

namespace seglab {

// Finite simplicial set stored up to a dimension bound. Every simplex
// (degenerate ones included) is stored explicitly, with total face and
// degeneracy tables, so products, fibers and mapping-space enumeration stay
// table-driven.
//
// Two optional flags record what the stored truncation determines about the
// full object:
//   nondeg_bound   - the represented object has no nondegenerate simplices
//                    above this dimension (so the tables determine it),
//   coskeletal_from- the object is c-coskeletal; simplices above c are
//                    uniquely determined by their boundaries, which makes
//                    bounded fibration/lifting checks conclusive at dim c+1.
// Operations that would need data beyond what the flags guarantee answer
// Unknown instead of guessing.
struct TruncatedSimplicialSet {
    int trunc = 0;
    std::vector<std::vector<std::string>> label; // label[d][s], may be empty
    // face[d][i][s]: i-th face of s, d >= 1, 0 <= i <= d
    std::vector<std::vector<std::vector<Idx>>> face;
    // degen[d][i][s]: i-th degeneracy of s, d + 1 <= trunc, 0 <= i <= d
    std::vector<std::vector<std::vector<Idx>>> degen;
    std::vector<std::size_t> cards; // cards[d]

    std::optional<int> nondeg_bound;
    std::optional<int> coskeletal_from;

    // Eilenberg-Zilber data, filled in by finalize(): every simplex is a
    // unique epi-degeneracy of a nondegenerate core.
    struct Core {
        int dim = 0;
        Idx idx = 0;
        Monotone epi; // [d] ->> [dim], identity when nondegenerate
    };
    std::vector<std::vector<bool>> is_degen;
    std::vector<std::vector<Core>> core;
    std::vector<std::vector<Idx>> nondeg; // indices of nondegenerate simplices per dim

    std::size_t card(int d) const {
        return (d >= 0 && d <= trunc) ? cards[static_cast<std::size_t>(d)] : 0;
    }
    Idx face_of(int d, Idx s, int i) const { return face[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)][s]; }
    Idx degen_of(int d, Idx s, int i) const { return degen[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)][s]; }

    std::string name_of(int d, Idx s) const;

    std::size_t total_cells() const;
    std::size_t nondeg_count(int d) const {
        return (d >= 0 && d <= trunc) ? nondeg[static_cast<std::size_t>(d)].size() : 0;
    }

    // Checks totality, simplicial identities, degeneracy injectivity, then
    // computes the Eilenberg-Zilber flags and cores. Throws on violation.
    void finalize();

    // phi: [a] -> [d] acting on a d-simplex, giving an a-simplex. Both
    // dimensions must be <= trunc.
    Idx apply(int d, Idx s, const Monotone& phi) const;
};

using SSet = std::shared_ptr<const TruncatedSimplicialSet>;

// Level-respecting simplex assignment between two simplicial sets, defined up
// to the smaller truncation of the two ends.
struct SimplicialMap {
    SSet source;
    SSet target;
    std::vector<std::vector<Idx>> at; // at[d][s]

    int dims() const { return static_cast<int>(at.size()) - 1; }
    Idx operator()(int d, Idx s) const { return at[static_cast<std::size_t>(d)][s]; }

    void validate() const; // commutes with faces and degeneracies
};

SimplicialMap identity_smap(const SSet& x);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
bool smap_equal(const SimplicialMap& f, const SimplicialMap& g);
bool is_mono(const SimplicialMap& f);
bool is_iso(const SimplicialMap& f);

// --- constructors -----------------------------------------------------------

SSet make_empty(int trunc);
SSet make_discrete(const std::vector<std::string>& points, int trunc);
SSet make_standard(int n, int trunc);                 // Delta[n]
SSet make_boundary(int n, int trunc);                 // dDelta[n]
SSet make_horn(int n, int k, int trunc);              // Lambda^k[n]; Lambda^0[0] is empty
// Simplicial set built from explicit low-dimensional tables, completed with
// formal degeneracies up to trunc. cards/face/degen describe dims 0..top.
SSet make_from_tables(int top, int trunc,
                      const std::vector<std::size_t>& cards,
                      const std::vector<std::vector<std::vector<Idx>>>& faces,
                      const std::vector<std::vector<std::vector<Idx>>>& degens,
                      const std::vector<std::vector<std::string>>& labels,
                      std::optional<int> nondeg_bound,
                      std::optional<int> coskeletal_from);

// Inclusion of the simplicial subset spanned by the given seed cells (closed
// under faces and degeneracies).
SimplicialMap subcomplex(const SSet& x, const std::vector<std::vector<Idx>>& seeds);

// Map into y determined by values on the nondegenerate simplices of x.
SimplicialMap map_from_nondeg_values(const SSet& x, const SSet& y,
                                     const std::vector<std::vector<Idx>>& nondeg_values);

} // namespace seglab
