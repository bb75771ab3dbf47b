#include "gentle/complex.hpp"

#include <gtest/gtest.h>

using namespace gentle;

namespace {

// The complex P_3 -> P_2 -> P_1 in degrees -2, -1, 0 over KA_3/J^2.
const char* example_complex = "deg -2: P_3\n"
                              "deg -1: P_2\n"
                              "deg 0: P_1\n"
                              "d -2: [a2]\n"
                              "d -1: [a1]\n";

} // namespace

TEST(Complex, ParseSerializeRoundTrip)
{
    auto A = make_a_n_mod_j2(3);
    auto X = parse_complex(A, example_complex);
    validate_complex(A, Field{}, X);
    EXPECT_EQ(serialize_complex(A, parse_complex(A, serialize_complex(A, X))), serialize_complex(A, X));
}

TEST(Complex, RejectsNonComplex)
{
    auto A = make_a_n(3);
    EXPECT_THROW(parse_complex(A, example_complex), Error);
}

TEST(Homotopy, StalkExamples)
{
    auto A = make_a_n_mod_j2(3);
    int p1 = A.vertex("1"), p3 = A.vertex("3");
    EXPECT_EQ(homotopy_hom_dim(A, stalk(p1, 0), stalk(p1, 0), 0), 1);
    EXPECT_EQ(homotopy_hom_dim(A, stalk(p1, 0), stalk(p3, 0), 0), 0);
    EXPECT_EQ(homotopy_hom_dim(A, stalk(p3, 0), stalk(p1, 0), 0), 0);
    EXPECT_EQ(homotopy_hom_dim(A, stalk(p3, 0), stalk(A.vertex("2"), 0), 0), 1);
}

TEST(Homotopy, ExampleComplexMapsToShiftedProjective)
{
    auto A = make_a_n_mod_j2(3);
    auto X = parse_complex(A, example_complex);
    EXPECT_EQ(homotopy_hom_dim(A, X, stalk(A.vertex("3"), -2), 0), 1);
    EXPECT_EQ(homotopy_hom_dim(A, X, X, 0), 1);
    EXPECT_EQ(homotopy_hom_dim(A, X, shift(Field{}, stalk(A.vertex("3"), 0), 2), 0), 1);
}

TEST(Homotopy, ShiftInvariance)
{
    auto A = make_a_n_mod_j2(3);
    auto X = parse_complex(A, example_complex);
    Field F;
    for (int v = 0; v < 3; ++v)
        for (int i = -3; i <= 3; ++i)
            for (int s = -2; s <= 2; ++s) {
                auto Y = stalk(v, 0);
                EXPECT_EQ(homotopy_hom_dim(A, X, Y, i), homotopy_hom_dim(A, shift(F, X, s), shift(F, Y, s), i));
                EXPECT_EQ(homotopy_hom_dim(A, X, Y, i + s), homotopy_hom_dim(A, X, shift(F, Y, s), i));
            }
}

// Hom in the homotopy category between projective resolutions equals Ext.
TEST(Homotopy, ResolutionsComputeExt)
{
    for (auto A : {make_a_n_mod_j2(3), make_a_n_mod_j2(4), make_a_n(3)}) {
        std::vector<Representation> mods;
        for (const auto& w : enumerate_strings(A, 4).strings)
            mods.push_back(string_module(A, w));
        for (const auto& M : mods)
            for (const auto& N : mods) {
                auto PM = projective_resolution(A, M, 6), PN = projective_resolution(A, N, 6);
                EXPECT_EQ(homotopy_hom_dim(A, PM, PN, 0), hom_dim(A, M, N));
                EXPECT_EQ(homotopy_hom_dim(A, PM, PN, 1), ext_dim(A, M, N, 1));
                EXPECT_EQ(homotopy_hom_dim(A, PM, PN, 2), ext_dim(A, M, N, 2));
            }
    }
}

TEST(Resolution, SimpleOfThreeVertexExample)
{
    auto A = make_a_n_mod_j2(3);
    auto R = projective_resolution(A, simple_rep(A, A.vertex("1")), 5);
    EXPECT_EQ(serialize_complex(A, R), serialize_complex(A, parse_complex(A, example_complex)));
}
