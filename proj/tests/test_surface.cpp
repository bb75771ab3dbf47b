#include "gentle/surface.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace gentle;

namespace {

std::map<std::string, std::string> double_dual_names(const Dissection& D)
{
    std::map<std::string, std::string> r;
    for (const auto& [e, ends] : D.edges)
        r["l_l_" + e] = e;
    return r;
}

} // namespace

TEST(Dissection, DiskModelInvariants)
{
    for (int n = 1; n <= 10; ++n) {
        auto D = disk_model(n);
        EXPECT_EQ(D.marked_points, n + 1);
        EXPECT_EQ(D.num_edges(), n);
        EXPECT_EQ(D.euler, 1);
        EXPECT_EQ(D.genus, 0);
        EXPECT_EQ(D.boundary_components, 1);
        EXPECT_TRUE(D.punctureless());
        EXPECT_TRUE(is_disk(D));
    }
    EXPECT_THROW(disk_model(0), DomainError);
}

TEST(Dissection, RoundTrip)
{
    auto D = disk_model(3);
    auto E = parse_dissection(serialize_dissection(D));
    EXPECT_EQ(E.polygons, D.polygons);
    EXPECT_EQ(E.corner, D.corner);
    EXPECT_EQ(serialize_dissection(E), serialize_dissection(D));
    auto F = parse_dissection(fixture("disk3.diss"));
    EXPECT_EQ(F.polygons, D.polygons);
}

TEST(Dissection, Annulus)
{
    auto D = parse_dissection(fixture("annulus.diss"));
    EXPECT_EQ(D.euler, 0);
    EXPECT_EQ(D.genus, 0);
    EXPECT_EQ(D.boundary_components, 2);
    EXPECT_FALSE(is_disk(D));
    auto A = algebra_from_dissection(D);
    // Kronecker quiver
    EXPECT_EQ(A.num_vertices(), 2);
    EXPECT_EQ(A.num_arrows(), 2);
    EXPECT_EQ(A.arrow(0).src, A.arrow(1).src);
    EXPECT_EQ(A.arrow(0).tgt, A.arrow(1).tgt);
    EXPECT_TRUE(is_gentle(A).gentle);
}

TEST(Dissection, PuncturedDisk)
{
    auto D = parse_dissection(fixture("punctured.diss"));
    EXPECT_EQ(D.punctures, 1);
    EXPECT_FALSE(is_disk(D));
    auto A = algebra_from_dissection(D);
    ASSERT_EQ(A.num_arrows(), 1);
    EXPECT_EQ(A.arrow(0).src, A.arrow(0).tgt);
    EXPECT_TRUE(A.is_relation(0, 0));
    EXPECT_TRUE(is_gentle(A).gentle);
    auto G = dual_graph(D);
    EXPECT_FALSE(G.punctureless);
    EXPECT_EQ(std::count_if(G.vertices.begin(), G.vertices.end(), [](const DualVertex& v) { return v.puncture; }), 1);
    EXPECT_THROW(dual_dissection(D), DomainError);
}

TEST(Dissection, Rejections)
{
    auto bad = [](const char* text) { EXPECT_THROW(parse_dissection(text), ParseError) << text; };
    bad("polygon A: B1 B2 e+\npolygon B: B3 B4 e-\n");
    bad("polygon A: B1\n");
    bad("polygon A: B1 e+\n");
    bad("polygon A: B1 e+\npolygon B: B2 e+\n");
    bad("polygon A: B1 e+\npolygon A: B2 e-\n");
    bad("polygon A: B1 e+\npolygon B: B1 e-\n");
    bad("polygon A: B1 e+\npolygon B: B2 e-\npolygon C: B3 f+\npolygon D: B4 f-\n");
    bad("polygon A: B1 e+ e-\n");
    bad("garbage\n");
}

TEST(Algebra, SingleEdgeGivesField)
{
    auto A = algebra_from_dissection(disk_model(1));
    EXPECT_EQ(A.num_vertices(), 1);
    EXPECT_EQ(A.num_arrows(), 0);
}

TEST(Algebra, ConsecutiveEdgesGiveOneArrow)
{
    auto A = algebra_from_dissection(parse_dissection("polygon X: B1 1-\npolygon Y: B2 2-\npolygon C: 1+ 2+ B3\n"));
    EXPECT_EQ(A.num_arrows(), 1);
    EXPECT_TRUE(A.relations().empty());
}

TEST(Algebra, DiskModelIsRadicalSquareZeroLinear)
{
    for (int n = 1; n <= 10; ++n) {
        auto A = algebra_from_dissection(disk_model(n));
        EXPECT_TRUE(same_up_to_arrow_names(A, make_a_n_mod_j2(n))) << n;
    }
}

TEST(Dual, DiskModelIsStar)
{
    auto G = dual_graph(disk_model(3));
    ASSERT_EQ(G.edges.size(), 3u);
    EXPECT_EQ(G.edges[0].name, "l_1");
    for (const auto& e : G.edges)
        EXPECT_TRUE(G.vertices[e.from].polygon == "C" || G.vertices[e.to].polygon == "C");
    EXPECT_TRUE(G.punctureless);
}

TEST(Dual, DualIsAdmissibleAndInvolutive)
{
    for (int n = 1; n <= 8; ++n) {
        auto D = disk_model(n);
        auto L = dual_dissection(D);
        EXPECT_EQ(L.num_edges(), n);
        EXPECT_EQ(L.marked_points, D.num_edges() + 1);
        EXPECT_TRUE(same_incidence(D, dual_dissection(L), double_dual_names(D)));
    }
    auto annulus = parse_dissection(fixture("annulus.diss"));
    EXPECT_TRUE(same_incidence(annulus, dual_dissection(dual_dissection(annulus)), double_dual_names(annulus)));
}

TEST(Fuzz, RandomDissectionsGiveGentleAlgebras)
{
    std::mt19937 rng(2024);
    int punctured = 0;
    for (int k = 0; k < 200; ++k) {
        auto D = random_dissection(rng);
        EXPECT_LE(D.polygons.size(), 8u);
        auto A = algebra_from_dissection(D);
        EXPECT_TRUE(is_gentle(A).gentle) << serialize_dissection(D);
        EXPECT_EQ(parse_dissection(serialize_dissection(D)).polygons, D.polygons);
        EXPECT_EQ(D.euler, 2 - 2 * D.genus - D.boundary_components - D.punctures);
        if (D.punctureless())
            EXPECT_TRUE(same_incidence(D, dual_dissection(dual_dissection(D)), double_dual_names(D)));
        else
            ++punctured;
    }
    EXPECT_GT(punctured, 0);
}

TEST(Render, DiskPictures)
{
    auto D = disk_model(3);
    auto tikz = render_tikz(D);
    EXPECT_NE(tikz.find("tikzpicture"), std::string::npos);
    EXPECT_EQ(tikz, render_tikz(D));
    auto svg = render_svg(D);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}
