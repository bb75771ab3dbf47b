#include "gentle/corpus.hpp"
#include "gentle/representation.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace gentle;

namespace {

struct A3 {
    Algebra A = make_a_n_mod_j2(3);
    int v1 = A.vertex("1"), v2 = A.vertex("2"), v3 = A.vertex("3");
    Representation S(int x) const { return simple_rep(A, x); }
    Representation P(int x) const { return projective_rep(A, x); }
    Representation I(int x) const { return injective_rep(A, x); }
};

} // namespace

TEST(StringModule, DimensionVectors)
{
    A3 a;
    EXPECT_EQ(a.S(a.v2).dim, (std::vector<int>{0, 1, 0}));
    auto M = string_module(a.A, parse_string(a.A, "a1"));
    EXPECT_EQ(M.dim, (std::vector<int>{1, 1, 0}));
    EXPECT_TRUE(satisfies_relations(a.A, M));
    EXPECT_TRUE(isomorphic_to_indecomposable(a.A, M, a.P(a.v1)));
    EXPECT_EQ(string_module(make_a_n_mod_j2(1), trivial_string(0)).total_dim(), 1);
    EXPECT_THROW(string_module(a.A, parse_string(a.A, "a1 a2")), DomainError);
}

TEST(Projectives, ThreeVertexExample)
{
    A3 a;
    EXPECT_EQ(a.P(a.v1).dim, (std::vector<int>{1, 1, 0}));
    EXPECT_EQ(a.P(a.v3).dim, (std::vector<int>{0, 0, 1}));
    EXPECT_EQ(a.I(a.v1).dim, (std::vector<int>{1, 0, 0}));
    EXPECT_EQ(a.I(a.v3).dim, (std::vector<int>{0, 1, 1}));
}

TEST(Hom, ThreeVertexExample)
{
    A3 a;
    EXPECT_EQ(hom_dim(a.A, a.S(a.v2), a.S(a.v2)), 1);
    EXPECT_EQ(hom_dim(a.A, a.P(a.v1), a.S(a.v2)), 0);
    EXPECT_EQ(hom_dim(a.A, a.P(a.v2), a.P(a.v1)), 1);
    EXPECT_EQ(hom_dim(a.A, a.P(a.v3), a.P(a.v1)), 0);
}

TEST(Hom, BasisElementsAreMorphisms)
{
    auto A = make_a_n(3);
    auto M = projective_rep(A, 0), N = injective_rep(A, 2);
    for (const auto& f : hom_basis(A, M, N))
        for (int a = 0; a < A.num_arrows(); ++a) {
            const auto& arr = A.arrow(a);
            EXPECT_EQ(multiply(M.F, N.map[a], f[arr.src]), multiply(M.F, f[arr.tgt], M.map[a]));
        }
}

TEST(Syzygy, ThreeVertexExample)
{
    A3 a;
    EXPECT_TRUE(isomorphic_to_indecomposable(a.A, syzygy(a.A, a.S(a.v1)), a.S(a.v2)));
    EXPECT_TRUE(isomorphic_to_indecomposable(a.A, syzygy(a.A, a.S(a.v2)), a.S(a.v3)));
    for (int x = 0; x < 3; ++x)
        EXPECT_TRUE(syzygy(a.A, a.P(x)).is_zero());
}

TEST(Ext, ThreeVertexExample)
{
    A3 a;
    EXPECT_EQ(ext_dim(a.A, a.S(a.v1), a.S(a.v2), 1), 1);
    EXPECT_EQ(ext_dim(a.A, a.S(a.v1), a.S(a.v3), 2), 1);
    EXPECT_EQ(ext_dim(a.A, a.I(a.v1), a.P(a.v1), 1), 0);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int i = 1; i <= 3; ++i)
                EXPECT_EQ(ext_dim(a.A, a.P(x), a.S(y), i), 0);
    EXPECT_THROW(ext_dim(a.A, a.S(0), a.S(0), 0), DomainError);
}

TEST(GlobalDimension, Examples)
{
    EXPECT_EQ(global_dimension(make_a_n_mod_j2(3), 10), (GlobalDimension{GlDimKind::Finite, 2}));
    EXPECT_EQ(global_dimension(make_a_n_mod_j2(5), 10).value, 4);
    EXPECT_EQ(global_dimension(make_tilde_a_n_mod_j2(3), 10).kind, GlDimKind::Infinite);
    EXPECT_EQ(global_dimension(make_a_n(4), 10), (GlobalDimension{GlDimKind::Finite, 1}));
    EXPECT_EQ(global_dimension(make_a_n_mod_j2(1), 10).value, 0);
    EXPECT_EQ(global_dimension(make_a_n_mod_j2(6), 3).kind, GlDimKind::AboveCap);
}

TEST(GlobalDimension, NonPlanarExample)
{
    auto A = parse_algebra(fixture("k33.quiver"));
    EXPECT_EQ(global_dimension(A, 20), (GlobalDimension{GlDimKind::Finite, 2}));
}

TEST(Indecomposable, StringModulesAreIndecomposable)
{
    auto A = make_tilde_a_n_mod_j2(2);
    for (const auto& w : enumerate_strings(A, 3).strings)
        EXPECT_TRUE(is_indecomposable(A, string_module(A, w)));
    auto S = simple_rep(A, 0);
    auto T = simple_rep(A, 1);
    Representation sum = zero_rep(A, S.F);
    for (int v = 0; v < A.num_vertices(); ++v)
        sum.dim[v] = S.dim[v] + T.dim[v];
    for (int a = 0; a < A.num_arrows(); ++a)
        sum.map[a] = Matrix(sum.dim[A.arrow(a).tgt], sum.dim[A.arrow(a).src]);
    EXPECT_FALSE(is_indecomposable(A, sum));
}

// Dimensions are combinatorial on string modules, so the characteristic
// must not matter.
TEST(FieldIndependence, HomAndExtOverSmallPrimes)
{
    for (const auto& A : gentle_corpus(3, 3)) {
        auto strings = enumerate_strings(A, 4).strings;
        if (strings.size() > 12)
            strings.resize(12);
        for (const auto& u : strings)
            for (const auto& w : strings) {
                int h2 = hom_dim(A, string_module(A, u, Field{2}), string_module(A, w, Field{2}));
                int e2 = ext1_dim(A, string_module(A, u, Field{2}), string_module(A, w, Field{2}));
                for (std::uint32_t p : {3u, 5u}) {
                    Field F{p};
                    EXPECT_EQ(hom_dim(A, string_module(A, u, F), string_module(A, w, F)), h2);
                    EXPECT_EQ(ext1_dim(A, string_module(A, u, F), string_module(A, w, F)), e2);
                }
            }
        for (std::uint32_t p : {3u, 5u})
            EXPECT_EQ(global_dimension(A, 8, Field{p}), global_dimension(A, 8));
    }
}
