#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seglab/sset.hpp"
#include "seglab/sset_limits.hpp"

#include <random>

using namespace seglab;

namespace {

// Independent oracle for products of standard simplices: count pairs of
// monotone words and flag (w1,w2) nondegenerate iff no common repeated
// position.
std::vector<std::size_t> product_nondeg_counts_oracle(int n1, int n2, int up_to) {
    std::vector<std::size_t> out;
    for (int d = 0; d <= up_to; ++d) {
        std::size_t c = 0;
        for (const auto& w1 : all_monotone(d, n1))
            for (const auto& w2 : all_monotone(d, n2)) {
                bool degen = false;
                for (int i = 0; i < d && !degen; ++i)
                    if (w1[static_cast<std::size_t>(i)] == w1[static_cast<std::size_t>(i) + 1] &&
                        w2[static_cast<std::size_t>(i)] == w2[static_cast<std::size_t>(i) + 1])
                        degen = true;
                if (!degen) ++c;
            }
        out.push_back(c);
    }
    return out;
}

} // namespace

TEST_CASE("standard simplices and their parts") {
    auto d1 = make_standard(1, 3);
    CHECK(d1->nondeg_count(0) == 2);
    CHECK(d1->nondeg_count(1) == 1);
    CHECK(d1->nondeg_count(2) == 0);

    auto h10 = make_horn(1, 0, 3);
    auto pt = make_standard(0, 3);
    CHECK(h10->card(0) == pt->card(0));
    CHECK(h10->card(3) == pt->card(3));
    CHECK(h10->nondeg_count(0) == 1);

    auto b2 = make_boundary(2, 3);
    CHECK(b2->nondeg_count(0) == 3);
    CHECK(b2->nondeg_count(1) == 3);
    CHECK(b2->nondeg_count(2) == 0);

    CHECK(make_horn(0, 0, 2)->card(0) == 0); // the 0-horn of a point is empty
    CHECK_THROWS_AS(make_horn(2, 3, 3), error);
}

TEST_CASE("operator calculus agrees with word composition on Delta[n]") {
    auto d3 = make_standard(3, 3);
    std::vector<std::vector<Monotone>> words(4);
    for (int d = 0; d <= 3; ++d) words[static_cast<std::size_t>(d)] = all_monotone(d, 3);
    for (int d = 0; d <= 3; ++d)
        for (Idx s = 0; s < d3->card(d); ++s)
            for (int a = 0; a <= 3; ++a)
                for (const auto& phi : all_monotone(a, d)) {
                    Idx got = d3->apply(d, s, phi);
                    Monotone expect = compose(words[static_cast<std::size_t>(d)][s], phi);
                    CHECK(words[static_cast<std::size_t>(a)][got] == expect);
                }
}

TEST_CASE("product of intervals") {
    auto d1 = make_standard(1, 3);
    auto p = product(d1, d1);
    // frozen from the monotone-pair oracle
    auto oracle = product_nondeg_counts_oracle(1, 1, 3);
    CHECK(oracle == std::vector<std::size_t>{4, 5, 2, 0});
    CHECK(p.object->nondeg_count(0) == 4);
    CHECK(p.object->nondeg_count(1) == 5);
    CHECK(p.object->nondeg_count(2) == 2);
    CHECK(p.object->nondeg_count(3) == 0);
    CHECK(p.object->nondeg_bound == 2);
    p.pr1.validate();
    p.pr2.validate();
}

TEST_CASE("collapsing an interval's boundary gives a circle") {
    auto d1 = make_standard(1, 3);
    auto b1 = make_boundary(1, 3);
    auto pt = make_standard(0, 3);
    // inclusion dDelta[1] -> Delta[1] and the collapse dDelta[1] -> pt
    SimplicialMap incl = subcomplex(d1, {{0, 1}, {}, {}, {}});
    REQUIRE(incl.source->card(0) == 2);
    SimplicialMap collapse;
    collapse.source = incl.source;
    collapse.target = pt;
    collapse.at.assign(4, {});
    for (int d = 0; d <= 3; ++d) collapse.at[static_cast<std::size_t>(d)].assign(incl.source->card(d), 0);
    collapse.validate();
    auto circle = pushout(collapse, incl);
    CHECK(circle.object->nondeg_count(0) == 1);
    CHECK(circle.object->nondeg_count(1) == 1);
    CHECK(pi0(circle.object).count == 1);
    (void)b1;
}

TEST_CASE("pullback along identities recovers the object") {
    auto b2 = make_boundary(2, 3);
    auto id = identity_smap(b2);
    auto pb = pullback(id, id);
    for (int d = 0; d <= 3; ++d) CHECK(pb.object->card(d) == b2->card(d));
    pb.to_b.validate();
}

TEST_CASE("pi0") {
    CHECK(pi0(make_boundary(1, 3)).count == 2);
    CHECK(pi0(make_standard(4, 3)).count == 1);
    CHECK(pi0(make_empty(3)).count == 0);
    CHECK(pi0(make_boundary(2, 3)).count == 1);
}

TEST_CASE("universal properties against sampled cones") {
    std::mt19937 rng(20240811);
    auto d1 = make_standard(1, 3);
    auto d2 = make_standard(2, 3);
    auto p = product(d1, d2);
    // cones from Delta[0] and Delta[1]: a map Delta[k] -> X is a k-simplex
    for (int rep = 0; rep < 10; ++rep) {
        auto za_cell = static_cast<Idx>(rng() % d1->card(1));
        auto zb_cell = static_cast<Idx>(rng() % d2->card(1));
        auto dom = make_standard(1, 3);
        auto mk = [&](const SSet& tgt, Idx top_cell) {
            std::vector<std::vector<Idx>> vals(4);
            // values on the nondegenerate cells of Delta[1]: two vertices, one edge
            vals[0] = {tgt->apply(1, top_cell, Monotone{0}), tgt->apply(1, top_cell, Monotone{1})};
            vals[1] = {top_cell};
            return map_from_nondeg_values(dom, tgt, vals);
        };
        auto za = mk(d1, za_cell);
        auto zb = mk(d2, zb_cell);
        za.validate();
        zb.validate();
        auto h = product_mediator(p, za, zb);
        h.validate();
        CHECK(smap_equal(compose(p.pr1, h), za));
        CHECK(smap_equal(compose(p.pr2, h), zb));
        // uniqueness: any map with the same projections equals h
        for (Idx cand = 0; cand < p.object->card(1); ++cand) {
            if (p.pr1(1, cand) == za_cell && p.pr2(1, cand) == zb_cell) {
                CHECK(cand == h(1, 1)); // the unique matching product cell
            }
        }
    }
}

TEST_CASE("tables with formal degenerate completion validate") {
    // one object, one nonidentity loop edge
    std::vector<std::size_t> cards{1, 2};
    std::vector<std::vector<std::vector<Idx>>> faces(2);
    faces[1] = {{0, 0}, {0, 0}};
    std::vector<std::vector<std::vector<Idx>>> degens(2);
    degens[0] = {{0}};
    auto x = make_from_tables(1, 3, cards, faces, degens, {{"x"}, {"idx", "a"}}, 1, std::nullopt);
    CHECK(x->card(0) == 1);
    CHECK(x->card(1) == 2);
    CHECK(x->nondeg_count(2) == 0);
    CHECK(x->card(2) == 3); // s0 a, s1 a, s0 s0 x
    CHECK(x->card(3) == 4);
}
