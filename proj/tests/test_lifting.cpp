#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seglab/lifting.hpp"

using namespace seglab;

namespace {

SimplicialMap to_point(const SSet& x) {
    auto pt = make_standard(0, x->trunc);
    SimplicialMap f;
    f.source = x;
    f.target = pt;
    f.at.resize(static_cast<std::size_t>(x->trunc) + 1);
    for (int d = 0; d <= x->trunc; ++d) f.at[static_cast<std::size_t>(d)].assign(x->card(d), 0);
    return f;
}

SimplicialMap constant_map(const SSet& x, const SSet& y, Idx vertex) {
    SimplicialMap f;
    f.source = x;
    f.target = y;
    const int top = std::min(x->trunc, y->trunc);
    f.at.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        Idx c = y->apply(0, vertex, Monotone(static_cast<std::size_t>(d) + 1, 0));
        f.at[static_cast<std::size_t>(d)].assign(x->card(d), c);
    }
    return f;
}

} // namespace

TEST_CASE("horn filler against the point target is unique") {
    Budget budget;
    auto incl = horn_inclusion(2, 1, 3);
    auto pt = make_standard(0, 3);
    auto p = identity_smap(pt);
    auto f = constant_map(incl.source, pt, 0);
    auto g = constant_map(incl.target, pt, 0);
    auto r = solve_lifting(incl, p, f, g, budget);
    CHECK(r.verdict.is_true());
    REQUIRE(r.lift.has_value());
    CHECK(smap_equal(*r.lift, g));
}

TEST_CASE("no edge between distinct components") {
    Budget budget;
    auto incl = boundary_inclusion(1, 3);
    auto two = make_discrete({"a", "b"}, 3);
    // endpoints land in distinct components; no edge of the target joins them
    std::vector<std::vector<Idx>> vals(4);
    vals[0] = {0, 1};
    auto f = map_from_nondeg_values(incl.source, two, vals);
    f.validate();
    auto p = to_point(two);
    auto g = constant_map(incl.target, p.target, 0);
    auto r = solve_lifting(incl, p, f, g, budget);
    CHECK(r.verdict.is_false());
}

TEST_CASE("fibration and trivial fibration basics") {
    Budget budget{10'000'000, 0};
    auto two = make_discrete({"a", "b"}, 3);
    auto p = to_point(two);
    CHECK(is_fibration(p, 2, budget).is_true());
    CHECK(is_trivial_fibration(p, 2, budget).is_false()); // two points are not contractible
    auto d1 = make_standard(1, 3);
    auto idmap = identity_smap(d1);
    CHECK(is_fibration(idmap, 2, budget).is_true());
    CHECK(is_trivial_fibration(idmap, 2, budget).is_true());
    // Delta[2] -> pt is not even a fibration: its nerve order cannot be reversed
    CHECK(is_trivial_fibration(to_point(make_standard(2, 3)), 3, budget).is_false());
    CHECK(is_fibration(to_point(make_standard(2, 3)), 3, budget).is_false());
}

TEST_CASE("conclusiveness gating yields unknown without flags") {
    Budget budget;
    // a point with its flags stripped: every checkable square is solvable but
    // nothing makes the bound conclusive
    auto pt = make_standard(0, 2);
    auto copy = std::make_shared<TruncatedSimplicialSet>(*pt);
    copy->nondeg_bound.reset();
    copy->coskeletal_from.reset();
    copy->finalize();
    SSet stripped = copy;
    SimplicialMap p = identity_smap(stripped);
    CHECK(is_trivial_fibration(p, 2, budget).is_unknown());
}

TEST_CASE("horn inclusions carry a horn-filling certificate") {
    Budget budget;
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= n; ++k) {
            auto incl = horn_inclusion(n, k, 3);
            auto cert = anodyne_certificate(incl, budget);
            REQUIRE(cert.has_value());
            CHECK(cert->size() == 1);
        }
    // boundaries are not anodyne
    CHECK_FALSE(anodyne_certificate(boundary_inclusion(2, 3), budget).has_value());
}

TEST_CASE("oracle tiers") {
    Budget budget{50'000'000, 0};
    // T1: isomorphism
    auto d1 = make_standard(1, 3);
    CHECK(weak_equivalence_oracle(identity_smap(d1), budget).is_true());
    // T2: trivial fibration
    CHECK(weak_equivalence_oracle(to_point(make_standard(3, 3)), budget).is_true());
    // T4: pi0 mismatch
    CHECK(weak_equivalence_oracle(to_point(make_boundary(1, 3)), budget).is_false());
    // anodyne: horn inclusion
    CHECK(weak_equivalence_oracle(horn_inclusion(2, 0, 3), budget).is_true());
    // deformation retract: endpoint of the interval
    std::vector<std::vector<Idx>> seeds(4);
    seeds[0] = {0};
    auto v0 = subcomplex(d1, seeds);
    CHECK(weak_equivalence_oracle(v0, budget).is_true());
    // boundary into the 2-simplex: inconclusive at this truncation
    CHECK(weak_equivalence_oracle(boundary_inclusion(2, 3), budget).is_unknown());
}

TEST_CASE("pushout-product corner of two horns is certified") {
    Budget budget{50'000'000, 0};
    // corner of horn(1,0) x horn(1,0) inside the square
    auto i1 = horn_inclusion(1, 0, 3);
    auto amb = product(i1.target, i1.target);
    std::vector<std::vector<Idx>> seeds(4);
    for (int d = 0; d <= 3; ++d)
        for (Idx s = 0; s < amb.object->card(d); ++s) {
            Idx b1 = amb.pr1(d, s), b2 = amb.pr2(d, s);
            auto in_img = [&](const SimplicialMap& m, Idx c) {
                for (Idx t = 0; t < m.source->card(d); ++t)
                    if (m(d, t) == c) return true;
                return false;
            };
            if (in_img(i1, b1) || in_img(i1, b2)) seeds[static_cast<std::size_t>(d)].push_back(s);
        }
    auto corner = subcomplex(amb.object, seeds);
    auto v = weak_equivalence_oracle(corner, budget);
    CHECK(v.is_true());
}

TEST_CASE("weak contractibility") {
    Budget budget{50'000'000, 0};
    CHECK(weakly_contractible(make_standard(2, 3), budget).is_true());
    CHECK(weakly_contractible(make_boundary(1, 3), budget).is_false());
    CHECK(weakly_contractible(make_empty(3), budget).is_false());
}
