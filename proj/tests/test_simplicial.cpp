// Simplicial complexes and mod-2 homology: boundary-of-boundary vanishing,
// known homology values, and invariance under barycentric subdivision.
#include <catch2/catch_amalgamated.hpp>

#include "omwb/rainbow.hpp" // chain_boundary, used as an independent boundary route
#include "omwb/simplicial.hpp"

#include <set>
#include <vector>

using namespace omwb;

namespace {

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_faces({{0, 1}, {1, 2}, {0, 2}});
}

SimplicialComplex solid_triangle() { return SimplicialComplex::from_faces({{0, 1, 2}}); }

SimplicialComplex tetra_shell() {
    return skeleton(SimplicialComplex::from_faces({{0, 1, 2, 3}}), 2);
}

std::vector<std::size_t> betti_row(const SimplicialComplex& k) {
    std::vector<std::size_t> out;
    for (int q = -1; q <= std::max(k.dim(), 0); ++q) out.push_back(betti_z2(k, q));
    return out;
}

} // namespace

TEST_CASE("faces close downward", "[simplicial]") {
    const SimplicialComplex k = solid_triangle();
    REQUIRE(k.dim() == 2);
    REQUIRE(k.face_count() == 7);
    REQUIRE(k.contains({0, 1}));
    REQUIRE(k.contains({2}));
    REQUIRE_FALSE(k.contains({0, 3}));
    REQUIRE(k.facets() == std::vector<Face>{{0, 1, 2}});
    REQUIRE(SimplicialComplex().empty());
}

TEST_CASE("skeleton truncates dimension", "[simplicial]") {
    const SimplicialComplex shell = tetra_shell();
    REQUIRE(shell.dim() == 2);
    REQUIRE(shell.face_count() == 14); // 4 vertices + 6 edges + 4 triangles
    REQUIRE(skeleton(shell, 1).face_count() == 10);
}

TEST_CASE("boundary of a boundary vanishes", "[simplicial]") {
    for (const SimplicialComplex& k :
         {tetra_shell(), barycentric_subdivision(solid_triangle())}) {
        for (int d = 1; d <= k.dim(); ++d)
            for (const Face& f : k.faces(d))
                REQUIRE(chain_boundary(chain_boundary(Z2Chain{f})).empty());
    }
}

TEST_CASE("known reduced homology values", "[simplicial]") {
    REQUIRE(betti_row(hollow_triangle()) == std::vector<std::size_t>{0, 0, 1});
    REQUIRE(betti_row(solid_triangle()) == std::vector<std::size_t>{0, 0, 0, 0});
    REQUIRE(betti_row(tetra_shell()) == std::vector<std::size_t>{0, 0, 0, 1});
    REQUIRE(betti_z2(SimplicialComplex(), -1) == 1); // empty complex
    REQUIRE(betti_row(SimplicialComplex::from_faces({{0}})) == std::vector<std::size_t>{0, 0});
    REQUIRE(betti_row(SimplicialComplex::from_faces({{0}, {1}})) ==
            std::vector<std::size_t>{0, 1});
    REQUIRE(reduced_homology_trivial_up_to(solid_triangle(), 2));
    REQUIRE(reduced_homology_trivial_up_to(hollow_triangle(), 0));
    REQUIRE_FALSE(reduced_homology_trivial_up_to(hollow_triangle(), 1));
}

TEST_CASE("homology is invariant under barycentric subdivision", "[simplicial]") {
    const std::vector<SimplicialComplex> fixtures = {
        hollow_triangle(), solid_triangle(), tetra_shell(),
        SimplicialComplex::from_faces({{0, 1}, {2, 3}}),
        barycentric_subdivision(hollow_triangle())};
    for (const auto& k : fixtures) {
        const SimplicialComplex sd = barycentric_subdivision(k);
        REQUIRE(sd.dim() == k.dim());
        for (int q = -1; q <= k.dim(); ++q) REQUIRE(betti_z2(sd, q) == betti_z2(k, q));
    }
}

TEST_CASE("subdivision registry tracks original faces", "[simplicial]") {
    const SimplicialComplex tri = solid_triangle();
    const auto sd = barycentric_subdivision_with_registry(tri);
    REQUIRE(sd.vertex_face.size() == 7);          // one new vertex per face
    REQUIRE(sd.complex.faces(2).size() == 6);     // one cell per vertex<edge<triangle chain
    std::set<Face> originals;
    for (const auto& f : sd.vertex_face) {
        REQUIRE(tri.contains(f));
        originals.insert(f);
    }
    REQUIRE(originals.size() == 7);
    // every top cell is a chain of strictly nested original faces
    for (const Face& cell : sd.complex.faces(2)) {
        std::vector<Face> fs;
        for (int v : cell) fs.push_back(sd.vertex_face[static_cast<std::size_t>(v)]);
        std::sort(fs.begin(), fs.end(),
                  [](const Face& a, const Face& b) { return a.size() < b.size(); });
        for (std::size_t i = 1; i < fs.size(); ++i)
            REQUIRE(std::includes(fs[i].begin(), fs[i].end(), fs[i - 1].begin(), fs[i - 1].end()));
    }
}

TEST_CASE("order complexes of basic posets", "[simplicial]") {
    const auto never = [](int, int) { return false; };
    const SimplicialComplex antichain = order_complex(4, never);
    REQUIRE(antichain.dim() == 0);
    REQUIRE(antichain.face_count() == 4);

    const auto lt = [](int a, int b) { return a < b; };
    const SimplicialComplex chain = order_complex(4, lt);
    REQUIRE(chain.dim() == 3);
    REQUIRE(chain.face_count() == 15);
    REQUIRE(reduced_homology_trivial_up_to(chain, 3));
}

TEST_CASE("complex text round-trip", "[simplicial]") {
    const SimplicialComplex k = tetra_shell();
    const SimplicialComplex back = parse_cpx(write_cpx(k));
    REQUIRE(back.face_count() == k.face_count());
    for (int d = 0; d <= k.dim(); ++d) REQUIRE(back.faces(d) == k.faces(d));

    const SimplicialComplex commented = parse_cpx("# top cell\n0 1 2\n\n# isolated\n5\n");
    REQUIRE(commented.face_count() == 8);
    REQUIRE(commented.contains({5}));
    REQUIRE(commented.contains({0, 2}));
    REQUIRE_THROWS_AS(parse_cpx("0 x 2\n"), parse_error);
    REQUIRE_THROWS_AS(parse_cpx("0 1 1\n"), parse_error);
}
