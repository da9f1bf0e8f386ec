#pragma once

#include "seglab/mapspace.hpp"

namespace seglab {

// Finite category presented by objects, morphisms with endpoints, identities
// and a full composition table. Validated exhaustively on construction.
struct FinCategory {
    std::vector<std::string> ob_name;
    std::vector<std::string> mor_name;
    std::vector<Idx> mor_src, mor_tgt;
    std::vector<Idx> id_of;                  // object -> identity morphism
    std::vector<std::vector<Idx>> comp;      // comp[g][f] = g . f (when tgt f = src g)

    std::size_t obs() const { return ob_name.size(); }
    std::size_t mors() const { return mor_name.size(); }
    Idx compose_at(Idx g, Idx f) const;
    bool composable(Idx g, Idx f) const { return mor_tgt[f] == mor_src[g]; }

    std::vector<Idx> hom(Idx x, Idx y) const;
    bool is_identity(Idx f) const { return id_of[mor_src[f]] == f && mor_src[f] == mor_tgt[f]; }
    std::optional<Idx> inverse(Idx f) const;
    bool is_cat_iso_mor(Idx f) const { return inverse(f).has_value(); }

    void validate() const;
};

using Cat = std::shared_ptr<const FinCategory>;

struct Functor {
    Cat source, target;
    std::vector<Idx> ob_map;
    std::vector<Idx> mor_map;
    void validate() const;
};

Functor identity_functor(const Cat& c);
Functor compose(const Functor& g, const Functor& f);
bool functor_equal(const Functor& f, const Functor& g);

// builders
struct CatBuilder {
    std::vector<std::string> obs;
    struct Arrow {
        std::string name, src, tgt;
    };
    std::vector<Arrow> arrows; // non-identity generating morphisms with relations given by the table
    // composition entries "g.f = h" by names; identities implicit
    std::vector<std::array<std::string, 3>> comps;
    Cat build() const;
};

Cat make_poset_chain(int n);                       // the linear order [n]
Cat make_terminal_cat();                           // [0]
Cat make_I_groupoid(int m);                        // contractible groupoid on m+1 objects
Cat make_group_cat(const std::vector<std::vector<Idx>>& mult, const std::string& name); // one object
Cat make_discrete_cat(const std::vector<std::string>& obs);
Cat product_cat(const Cat& a, const Cat& b);

// classifiers
Verdict is_isofibration_cat(const Functor& f);
Verdict is_fully_faithful_cat(const Functor& f);
Verdict is_ess_surjective_cat(const Functor& f);
Verdict is_equivalence_cat(const Functor& f);

// exhaustive functor/natural-transformation enumeration (desk scale)
std::vector<Functor> all_functors(const Cat& d, const Cat& c, std::size_t cap = 2'000'000);
// C^D: objects are functors D -> C, morphisms natural transformations
struct FunctorCategory {
    Cat object;                      // the functor category itself
    std::vector<Functor> functors;   // object index -> functor
    std::vector<std::vector<Idx>> components; // morphism index -> per-object component in C
};
FunctorCategory functor_category(const Cat& c, const Cat& d);

std::optional<Functor> find_isomorphism(const Cat& a, const Cat& b);

// nerve as a (levelwise discrete) simplicial space; 2-coskeletal flags set
struct NerveResult {
    SSp space;
    // chains[m] lists the length-m composable chains in cell order
    std::vector<std::vector<std::vector<Idx>>> chains;
};
NerveResult nerve(const Cat& c, int cat_trunc, int space_trunc);
BisimplicialMap nerve_map(const Functor& f, const NerveResult& nc, const NerveResult& nd);
SSp nerve_I(int m, int cat_trunc, int space_trunc);

// categorification of a 2-truncated simplicial set: objects are the vertices,
// morphisms free composites of nondegenerate edges modulo the relations the
// 2-simplices impose; congruence closure with a budget
struct CategorifyResult {
    Cat category;
    std::vector<Idx> edge_class; // class of each edge of the input
    bool complete = true;        // budget not exhausted
};
CategorifyResult categorify(const SSet& k, std::uint64_t pair_budget);
CategorifyResult categorify_space(const SSp& x, std::uint64_t pair_budget);

// slices and comma constructions
Cat slice_category(const Cat& c, Idx over, std::vector<std::pair<Idx, Idx>>* arrows_out = nullptr);
struct IsoComma {
    Cat object;
    // object index -> (c, d, iso Fc -> Gd)
    std::vector<std::array<Idx, 3>> triples;
};
IsoComma iso_comma(const Functor& f, const Functor& g);

} // namespace seglab
