#include <catch2/catch_amalgamated.hpp>

#include "quadgenus/census.hpp"
#include "quadgenus/faces.hpp"
#include "quadgenus/formulas.hpp"
#include "quadgenus/quad_rule.hpp"
#include "quadgenus/verify.hpp"
#include "support/builders.hpp"

using namespace qg;
using testutil::translated_rows;
using testutil::translated_scheme;

namespace {

RotationScheme triangle_scheme() {
    SimpleGraph g({Label::word("a"), Label::word("b"), Label::word("c")});
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return RotationScheme(std::move(g), {{1, 2}, {2, 0}, {0, 1}});
}

} // namespace

TEST_CASE("planar triangle traces to two 3-gons") {
    auto s = triangle_scheme();
    auto faces = trace_faces(s);
    REQUIRE(faces.count() == 2);
    CHECK(faces.faces()[0].size() == 3);
    CHECK(faces.faces()[1].size() == 3);
    auto c = census_of(faces, s);
    CHECK(c.genus == 0);
    CHECK(c.by_length == std::map<int, int>{{3, 2}});
}

TEST_CASE("K5 translation rows give faces 5,10,5 and genus 2") {
    auto s = translated_scheme(5, {1, 2, 3, 4});
    auto faces = trace_faces(s);
    REQUIRE(faces.count() == 3);
    CHECK(faces.faces()[0].size() == 5);
    CHECK(faces.faces()[1].size() == 10);
    CHECK(faces.faces()[2].size() == 5);
    auto c = census_of(faces, s);
    CHECK(c.genus == 2);

    auto lens = oracle::face_lengths(translated_rows(5, {1, 2, 3, 4}));
    CHECK(lens == std::multiset<int>{5, 5, 10});
    CHECK(oracle::euler_genus(5, 10, 3) == 2);
}

TEST_CASE("K7 classical triangular rows give 14 triangles, genus 1") {
    auto s = translated_scheme(7, {1, 3, 2, 6, 4, 5});
    auto c = census_of(s);
    CHECK(c.by_length == std::map<int, int>{{3, 14}});
    CHECK(c.genus == 1);

    auto lens = oracle::face_lengths(translated_rows(7, {1, 3, 2, 6, 4, 5}));
    CHECK(lens.size() == 14);
    CHECK(*lens.begin() == 3);
    CHECK(*lens.rbegin() == 3);
}

TEST_CASE("every dart lies in exactly one face") {
    for (auto row0 : {std::vector<int>{1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}}) {
        auto s = translated_scheme(5, row0);
        auto faces = trace_faces(s);
        CHECK(faces.total_darts() == 2 * s.q());
        std::set<std::pair<int, int>> seen;
        for (auto& f : faces.faces())
            for (auto& d : f) CHECK(seen.insert({d.from, d.to}).second);
        CHECK((int)seen.size() == 2 * s.q());
    }
}

TEST_CASE("face census invariants and Euler parity") {
    auto s = translated_scheme(7, {1, 3, 2, 6, 4, 5});
    auto c = census_of(s);
    int sum_r = 0, sum_ir = 0;
    for (auto [len, n] : c.by_length) {
        sum_r += n;
        sum_ir += len * n;
    }
    CHECK(sum_r == c.r);
    CHECK(sum_ir == 2 * c.q);
    CHECK((c.p - c.q + c.r) % 2 == 0);
}

TEST_CASE("translation symmetry: census invariant under v -> v+1") {
    auto s = translated_scheme(7, {1, 3, 2, 6, 4, 5});
    std::vector<Vertex> shift(7);
    for (int v = 0; v < 7; ++v) shift[v] = (v + 1) % 7;
    auto t = s.relabeled(shift);
    CHECK(census_of(s).by_length == census_of(t).by_length);
}

TEST_CASE("disconnected graph is rejected by trace_faces") {
    SimpleGraph g({Label::number(0), Label::number(1), Label::number(2), Label::number(3)});
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    RotationScheme s(std::move(g), {{1}, {0}, {3}, {2}});
    CHECK_THROWS_AS(trace_faces(s), ValidationError);
}

TEST_CASE("invalid rotations are rejected") {
    SimpleGraph g = SimpleGraph::complete(4);
    // neighbor repeated
    CHECK_THROWS_AS(RotationScheme(g, {{1, 2, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}),
                    ValidationError);
    // neighbor missing
    CHECK_THROWS_AS(RotationScheme(g, {{1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}), ValidationError);
    // non-neighbor listed
    SimpleGraph h({Label::number(0), Label::number(1), Label::number(2)});
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    CHECK_THROWS_AS(RotationScheme(h, {{1, 2}, {0, 2}, {1, 0}}), ValidationError);
}

TEST_CASE("census arithmetic examples") {
    // p=5, q=10, all faces length 4 -> r=5, genus 1
    auto s = translated_scheme(5, {1, 2, 4, 3});
    auto c = census_of(s);
    CHECK(c.by_length == std::map<int, int>{{4, 5}});
    CHECK(c.r == 5);
    CHECK(c.genus == 1);
}

TEST_CASE("min_face_length picks the smallest populated length") {
    FaceCensus c;
    c.by_length = {{3, 6}, {4, 12}};
    CHECK(min_face_length(c) == 3);
    c.by_length = {{4, 5}};
    CHECK(min_face_length(c) == 4);
    c.by_length = {{5, 1}, {4, 4}, {3, 5}};
    CHECK(min_face_length(c) == 3);
    c.by_length = {};
    CHECK_THROWS_AS(min_face_length(c), ValidationError);
}

TEST_CASE("gamma4 closed form") {
    CHECK(gamma4(5) == 1);
    CHECK(gamma4(9) == 6);
    CHECK(gamma4(12) == 12);
    CHECK_THROWS_AS(gamma4(4), ValidationError);
    for (int p = 5; p < 40; ++p) CHECK(gamma4(p + 1) >= gamma4(p));
}

TEST_CASE("gamma4_nonorientable closed form") {
    CHECK(gamma4_nonorientable(5) == 2);
    CHECK(gamma4_nonorientable(7) == 6);
    CHECK(gamma4_nonorientable(9) == 11);
    CHECK_THROWS_AS(gamma4_nonorientable(3), ValidationError);
}

TEST_CASE("genus identity for complete-graph embeddings with min face >= 4") {
    // all-quadrilateral K5 in the torus: excess term 0
    auto k5 = translated_scheme(5, {1, 2, 4, 3});
    auto c5 = census_of(k5);
    CHECK(genus_identity_check(c5) == 0);

    // synthetic K6 census {4:6, 6:1} at genus 2: excess 2
    FaceCensus c6;
    c6.p = 6;
    c6.q = 15;
    c6.r = 7;
    c6.by_length = {{4, 6}, {6, 1}};
    c6.genus = 2;
    CHECK(genus_identity_check(c6) == 2 * 15 - 4 * 7);
    CHECK(genus_identity_check(c6) == 2);

    // K8 quadrangular census: p=8, q=28, r=14, genus 4, excess 0
    FaceCensus c8;
    c8.p = 8;
    c8.q = 28;
    c8.r = 14;
    c8.by_length = {{4, 14}};
    c8.genus = 4;
    CHECK(genus_identity_check(c8) == 0);

    // min face below 4 is a precondition error
    FaceCensus bad;
    bad.p = 5;
    bad.q = 10;
    bad.r = 7;
    bad.by_length = {{3, 6}, {4, 1}};
    bad.genus = 0;
    CHECK_THROWS_AS(genus_identity_check(bad), ValidationError);
}

TEST_CASE("verify_scheme reports census, min face and quad rule") {
    auto quad = verify_scheme(translated_scheme(5, {1, 2, 4, 3}), 4);
    CHECK(quad.pass);
    CHECK(quad.min_face_len == 4);
    REQUIRE(quad.quad_rule.has_value());
    CHECK(quad.quad_rule->pass);

    auto tri = verify_scheme(translated_scheme(7, {1, 3, 2, 6, 4, 5}), 4);
    CHECK_FALSE(tri.pass);
    CHECK(tri.min_face_len == 3);
    REQUIRE(tri.quad_rule.has_value());
    CHECK_FALSE(tri.quad_rule->pass);
    CHECK_FALSE(tri.quad_rule->witness.empty());
}

TEST_CASE("quadrangular rule matches the census test") {
    for (auto row0 : {std::vector<int>{1, 2, 3, 4}, {1, 2, 4, 3}, {2, 1, 3, 4}, {1, 4, 2, 3}}) {
        auto s = translated_scheme(5, row0);
        auto c = census_of(s);
        bool all_quads = c.by_length == std::map<int, int>{{4, c.q / 2}};
        CHECK(quadrangular_rule_check(s).pass == all_quads);
    }
}
