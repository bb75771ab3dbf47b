#include "gentle/json_io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

using namespace gentle;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(GENTLE_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fx(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

Json run_json(const std::string& args, int expected_code = 0)
{
    auto r = run(args + " --format json");
    EXPECT_EQ(r.code, expected_code) << args;
    return Json::parse(r.out);
}

} // namespace

TEST(Cli, CheckExample)
{
    auto j = run_json("check " + fx("a3j2.quiver"));
    EXPECT_EQ(j["gentle"], true);
    EXPECT_EQ(j["shape"], "LinearNakayama(3)");
    EXPECT_EQ(j["global_dimension"], 2);
    EXPECT_EQ(j["radical_square_zero"], true);
}

TEST(Cli, CheckNonPlanar)
{
    auto j = run_json("check " + fx("k33.quiver"));
    EXPECT_EQ(j["gentle"], true);
    EXPECT_EQ(j["shape"], "Other");
    EXPECT_EQ(j["global_dimension"], 2);
}

TEST(Cli, CheckNotGentle)
{
    std::string path = testing::TempDir() + "/three_out.quiver";
    std::ofstream(path) << "vertex 1\nvertex 2\narrow a 1 2\narrow b 1 2\narrow c 1 2\n";
    auto j = run_json("check " + path, 1);
    EXPECT_EQ(j["gentle"], false);
    EXPECT_EQ(j["clause"], 2);
}

TEST(Cli, InputErrors)
{
    EXPECT_EQ(run("check " + fx("bad_relation.quiver")).code, 2);
    EXPECT_EQ(run("check /nonexistent.quiver").code, 2);
    EXPECT_EQ(run("model algebra " + fx("a3j2.quiver")).code, 2);
    EXPECT_EQ(run("der hom " + fx("annulus.diss") + " --X 'arc(1,2)@0' --Y 'arc(1,2)@0'").code, 2);
    EXPECT_EQ(run("der hom --n 3 --X 'arc(1,9)@0' --Y 'arc(1,2)@0'").code, 2);
    EXPECT_EQ(run("check " + fx("a3j2.quiver") + " --field 4").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, ClassifyMatchesLibrary)
{
    for (auto [file, code] : std::vector<std::pair<const char*, int>>{
             {"a5j2.quiver", 0}, {"tilde_a3j2.quiver", 0}, {"a3.quiver", 1}, {"a4j2.quiver", 0}}) {
        auto A = parse_algebra(fixture(file));
        auto j = run_json(std::string("classify ") + fx(file), code);
        EXPECT_EQ(j["weakly_d_representation_finite"], to_json(classify_weakly_drf(A)));
        auto h = classify_drf_hereditary(A);
        EXPECT_EQ(j["d_representation_finite_d_hereditary"], h ? Json(*h) : Json(nullptr));
        auto ob = find_obstruction_vertex(A);
        if (ob) {
            auto expected = to_json(A, *ob);
            expected["ext1_injective_projective"] =
                ext1_dim(A, injective_rep(A, ob->vertex), projective_rep(A, ob->vertex));
            EXPECT_EQ(j["obstruction"], expected);
            EXPECT_GE(j["obstruction"]["ext1_injective_projective"].get<int>(), 1);
        } else {
            EXPECT_TRUE(j["obstruction"].is_null());
        }
    }
    auto j = run_json("classify " + fx("a5j2.quiver"));
    EXPECT_EQ(j["weakly_d_representation_finite"], Json({2, 4}));
    EXPECT_EQ(j["d_representation_finite_d_hereditary"], 4);
}

TEST(Cli, DctModMatchesLibrary)
{
    auto C = indecomposables(parse_algebra(fixture("a3j2.quiver")));
    auto found = search_dct_module(C, 2);
    auto j = run_json("dct-mod " + fx("a3j2.quiver") + " --d 2");
    ASSERT_EQ(j["subcategories"].size(), 1u);
    EXPECT_EQ(j["subcategories"][0], subcat_json(C, found[0]));
    EXPECT_EQ(j["indecomposables"].size(), 5u);
    run_json("dct-mod " + fx("a3j2.quiver") + " --d 3", 1);
    auto t = run_json("dct-mod " + fx("tilde_a3j2.quiver") + " --d 2");
    EXPECT_FALSE(t["subcategories"].empty());
}

TEST(Cli, ArModMatchesLibrary)
{
    auto C = indecomposables(parse_algebra(fixture("a3j2.quiver")));
    auto j = run_json("ar-mod " + fx("a3j2.quiver"));
    EXPECT_EQ(j, to_json(C, ar_quiver_module(C)));
    auto dot = run("ar-mod " + fx("a3j2.quiver") + " --d 2 --format dot");
    EXPECT_EQ(dot.code, 0);
    EXPECT_EQ(dot.out, to_dot(picture(C, ar_quiver_module(C), &search_dct_module(C, 2).front())));
    auto field = run_json("ar-mod " + fx("field.quiver"));
    EXPECT_EQ(field["nodes"].size(), 1u);
    EXPECT_TRUE(field["arrows"].empty());
}

TEST(Cli, ArModRefusesBands)
{
    std::string path = testing::TempDir() + "/kronecker.quiver";
    std::ofstream(path) << "vertex 1\nvertex 2\narrow a 1 2\narrow b 1 2\n";
    EXPECT_EQ(run("ar-mod " + path).code, 3);
}

TEST(Cli, ModelMatchesLibrary)
{
    EXPECT_EQ(run_json("model build-disk --n 3"), to_json(disk_model(3)));
    EXPECT_EQ(run("model build-disk --n 3").out, serialize_dissection(disk_model(3)));
    auto alg = run_json("model algebra " + fx("annulus.diss"));
    auto D = parse_dissection(fixture("annulus.diss"));
    auto expected = to_json(algebra_from_dissection(D));
    expected["gentle"] = true;
    EXPECT_EQ(alg, expected);
    auto dual = run_json("model dual --n 3");
    EXPECT_EQ(dual["edges"].size(), 3u);
    EXPECT_EQ(dual["dual_dissection"], to_json(dual_dissection(disk_model(3))));
    EXPECT_EQ(run("model dual " + fx("punctured.diss") + " --format json").code, 0);
    EXPECT_EQ(run("model render --n 3 --format tikz").out, render_tikz(disk_model(3)));
    EXPECT_EQ(run("model render --n 3 --format svg").out, render_svg(disk_model(3)));
}

TEST(Cli, DerivedHomExample)
{
    auto j = run_json("der hom --n 3 --X 'arc(1,4)@0' --Y 'arc(3,4)@-2' --oracle");
    EXPECT_EQ(j["dim"], 1);
    EXPECT_EQ(j["homotopy_dim"], 1);
    auto f = run_json("der hom " + fx("disk3.diss") + " --X 'arc(1,4)@0' --Y 'arc(3,4)@-2'");
    EXPECT_EQ(f["dim"], 1);
}

TEST(Cli, DerivedTauAndAr)
{
    auto G = disk_geometry(disk_model(3));
    auto j = run_json("der tau --n 3 --X 'arc(2,3)@0'");
    EXPECT_EQ(j["tau"], to_string(tau_geometric(G, arc(G, 2, 3, 0))));
    EXPECT_EQ(j["hom_tau_self"], 0);
    EXPECT_EQ(run_json("der ar --n 3 --window 2"), to_json(ar_quiver_derived(G, 2)));
    EXPECT_NE(run("der ar --n 3 --d 2 --format dot").out.find("shape=box"), std::string::npos);
}

TEST(Cli, DerivedSearchMatchesLibrary)
{
    auto G = disk_geometry(disk_model(3));
    auto found = search_dct_derived(G, 2, default_window(G, 2));
    auto j = run_json("der search --n 3 --d 2");
    ASSERT_EQ(j["subcategories"].size(), 2u);
    for (std::size_t k = 0; k < found.size(); ++k)
        EXPECT_EQ(j["subcategories"][k], to_json(found[k]));
    run_json("der search --n 4 --d 2", 1);
    EXPECT_EQ(run_json("der search --n 1 --d 3")["field_case"], true);
}

TEST(Cli, DerivedWindowRefusal)
{
    auto r = run("der search --n 3 --d 2 --window 3");
    EXPECT_EQ(r.code, 3);
    std::string cmd = std::string(GENTLE_BIN) + " der search --n 3 --d 2 --window 3 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    char buf[512] = {0};
    std::size_t got = fread(buf, 1, sizeof buf - 1, p);
    pclose(p);
    EXPECT_NE(std::string(buf, got).find("need at least 5"), std::string::npos);
}

TEST(Cli, DerivedDct)
{
    auto ok = run_json("der dct --n 3 --d 2");
    EXPECT_EQ(ok["cluster_tilting"], true);
    auto no = run_json("der dct --n 4 --d 2", 1);
    EXPECT_EQ(no["cluster_tilting"], false);
    EXPECT_TRUE(no["witness"].is_string());
}

TEST(Cli, Deterministic)
{
    auto a = run("der ar --n 3 --format tikz"), b = run("der ar --n 3 --format tikz");
    EXPECT_EQ(a.out, b.out);
    auto c = run("dct-mod " + fx("a5j2.quiver") + " --d 2 --jobs 4"), d = run("dct-mod " + fx("a5j2.quiver") + " --d 2");
    EXPECT_EQ(c.out, d.out);
}
