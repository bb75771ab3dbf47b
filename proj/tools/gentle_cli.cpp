// Command-line front end. Exit codes: 0 success, 1 negative verdict,
// 2 input error, 3 guard (band, truncated catalog, window too small).
#include "gentle/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gentle;

namespace {

struct InputError : Error {
    using Error::Error;
};

struct Options {
    std::string format = "text";
    unsigned field = 2;
    int jobs = 1;
    int max_len = -1;
    int d = 2;
    int window = -1;
    std::string file;
    int n = 0;
    std::string X, Y;
    int i = 0;
    bool oracle = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Field field_of(const Options& o)
{
    return Field::prime(o.field);
}

void require_format(const Options& o, std::initializer_list<const char*> allowed)
{
    for (auto* f : allowed)
        if (o.format == f)
            return;
    std::string list;
    for (auto* f : allowed)
        list += std::string(list.empty() ? "" : ", ") + f;
    throw InputError("format " + o.format + " not available here; use one of " + list);
}

Algebra load_algebra(const Options& o) { return parse_algebra(read_file(o.file)); }

Dissection load_dissection(const Options& o)
{
    if (!o.file.empty())
        return parse_dissection(read_file(o.file));
    if (o.n < 1)
        throw InputError("give a dissection file or --n");
    return disk_model(o.n);
}

int emit(const Options& o, const Json& j, const std::string& text, int code = 0)
{
    if (o.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    return code;
}

int cmd_check(const Options& o)
{
    require_format(o, {"text", "json"});
    Algebra A = load_algebra(o);
    auto r = is_gentle(A);
    Json j = to_json(r);
    j["shape"] = to_string(shape(A));
    j["radical_square_zero"] = is_radical_square_zero(A);
    std::ostringstream t;
    t << (r.gentle ? "gentle" : "not gentle (clause " + std::to_string(r.clause) + "): " + r.detail) << "\n";
    t << "shape: " << to_string(shape(A)) << "\n";
    t << "radical square zero: " << (is_radical_square_zero(A) ? "yes" : "no") << "\n";
    if (A.admissible()) {
        auto g = global_dimension(A, A.num_vertices() + A.num_arrows() + 1, field_of(o));
        j["global_dimension"] = to_json(g);
        t << "global dimension: " << to_string(g) << "\n";
    } else {
        j["global_dimension"] = nullptr;
    }
    return emit(o, j, t.str(), r.gentle ? 0 : 1);
}

int cmd_classify(const Options& o)
{
    require_format(o, {"text", "json"});
    Algebra A = load_algebra(o);
    require_gentle(A);
    auto w = classify_weakly_drf(A);
    auto h = classify_drf_hereditary(A);
    auto ob = find_obstruction_vertex(A);
    Json j;
    j["weakly_d_representation_finite"] = to_json(w);
    j["d_representation_finite_d_hereditary"] = h ? Json(*h) : Json(nullptr);
    std::ostringstream t;
    t << "weakly d-representation finite for d in " << to_string(w) << "\n";
    t << "d-representation finite d-hereditary: " << (h ? "d = " + std::to_string(*h) : "none") << "\n";
    if (ob) {
        int e = ext1_dim(A, injective_rep(A, ob->vertex, field_of(o)), projective_rep(A, ob->vertex, field_of(o)));
        Json oj = to_json(A, *ob);
        oj["ext1_injective_projective"] = e;
        j["obstruction"] = oj;
        t << "obstruction at vertex " << A.vertex_name(ob->vertex) << ": " << to_string(A, ob->projective) << " -> "
          << to_string(A, ob->middle_first) << " + " << to_string(A, ob->middle_second) << " -> "
          << to_string(A, ob->injective) << ", dim Ext^1(I,P) = " << e << "\n";
    } else {
        j["obstruction"] = nullptr;
        t << "no obstruction vertex\n";
    }
    return emit(o, j, t.str(), w.empty() ? 1 : 0);
}

IndecCatalog load_catalog(const Options& o)
{
    Algebra A = load_algebra(o);
    return indecomposables(A, o.max_len, field_of(o), o.jobs);
}

int cmd_dct_mod(const Options& o)
{
    require_format(o, {"text", "json"});
    auto C = load_catalog(o);
    auto found = search_dct_module(C, o.d, o.jobs);
    Json j;
    j["d"] = o.d;
    Subcat all(C.size());
    std::iota(all.begin(), all.end(), 0);
    j["indecomposables"] = subcat_json(C, all);
    j["subcategories"] = Json::array();
    std::ostringstream t;
    t << C.size() << " indecomposables; " << found.size() << " " << o.d << "-cluster tilting subcategories\n";
    for (const auto& U : found) {
        j["subcategories"].push_back(subcat_json(C, U));
        t << "  {";
        for (std::size_t k = 0; k < U.size(); ++k)
            t << (k ? ", " : "") << to_string(C.alg, C.words[U[k]]);
        t << "}\n";
    }
    return emit(o, j, t.str(), found.empty() ? 1 : 0);
}

int cmd_ar_mod(const Options& o, bool box)
{
    require_format(o, {"text", "json", "dot", "tikz"});
    auto C = load_catalog(o);
    auto Q = ar_quiver_module(C, o.jobs);
    std::optional<Subcat> U;
    if (box) {
        auto found = search_dct_module(C, o.d, o.jobs);
        if (!found.empty())
            U = found.front();
    }
    auto pic = picture(C, Q, U ? &*U : nullptr);
    if (o.format == "dot") {
        std::cout << to_dot(pic);
        return 0;
    }
    if (o.format == "tikz") {
        std::cout << to_tikz(pic);
        return 0;
    }
    std::ostringstream t;
    t << "nodes:";
    for (std::size_t x = 0; x < pic.labels.size(); ++x)
        t << " " << (pic.boxed[x] ? "[" + pic.labels[x] + "]" : pic.labels[x]);
    t << "\n";
    for (auto [u, v, m] : pic.arrows)
        t << pic.labels[u] << " -> " << pic.labels[v] << (m > 1 ? " (x" + std::to_string(m) + ")" : "") << "\n";
    for (auto [u, v] : pic.dashed)
        t << "tau " << pic.labels[u] << " = " << pic.labels[v] << "\n";
    return emit(o, to_json(C, Q), t.str());
}

int cmd_model_build(const Options& o)
{
    require_format(o, {"text", "json"});
    auto D = disk_model(o.n);
    return emit(o, to_json(D), serialize_dissection(D));
}

int cmd_model_algebra(const Options& o)
{
    require_format(o, {"text", "json"});
    auto D = load_dissection(o);
    auto A = algebra_from_dissection(D);
    Json j = to_json(A);
    j["gentle"] = is_gentle(A).gentle;
    std::string t = serialize_algebra(A);
    if (!D.punctureless())
        t += "# surface has punctures\n";
    return emit(o, j, t);
}

int cmd_model_dual(const Options& o)
{
    require_format(o, {"text", "json"});
    auto D = load_dissection(o);
    auto G = dual_graph(D);
    Json j = to_json(G);
    std::ostringstream t;
    for (const auto& e : G.edges)
        t << e.name << ": " << G.vertices[e.from].polygon << " -> " << G.vertices[e.to].polygon << " crossing "
          << e.crosses << "\n";
    for (const auto& v : G.vertices)
        if (v.puncture)
            t << "puncture in " << v.polygon << "\n";
    if (G.punctureless) {
        auto L = dual_dissection(D);
        j["dual_dissection"] = to_json(L);
        t << serialize_dissection(L);
    }
    return emit(o, j, t.str());
}

int cmd_model_render(const Options& o)
{
    require_format(o, {"tikz", "svg"});
    auto D = load_dissection(o);
    std::cout << (o.format == "svg" ? render_svg(D) : render_tikz(D));
    return 0;
}

DiskGeometry load_disk(const Options& o) { return disk_geometry(load_dissection(o)); }

int cmd_der_hom(const Options& o)
{
    require_format(o, {"text", "json"});
    auto G = load_disk(o);
    auto X = parse_arc(G, o.X), Y = parse_arc(G, o.Y);
    int dim = hom_dim_geometric(G, X, Y, o.i);
    Json j{{"X", to_string(X)}, {"Y", to_string(Y)}, {"i", o.i}, {"dim", dim}};
    std::ostringstream t;
    t << "dim Hom(" << to_string(X) << ", " << to_string(Y) << "[" << o.i << "]) = " << dim << "\n";
    if (o.oracle) {
        int h = homotopy_hom_dim(G.algebra(), arc_to_complex(G, X), arc_to_complex(G, Y), o.i, field_of(o));
        j["homotopy_dim"] = h;
        t << "homotopy category: " << h << "\n";
    }
    return emit(o, j, t.str());
}

int cmd_der_tau(const Options& o)
{
    require_format(o, {"text", "json"});
    auto G = load_disk(o);
    auto X = parse_arc(G, o.X);
    auto T = ar_triangle(G, X);
    Json mid = Json::array();
    std::string ms;
    for (const auto& Y : T.middle) {
        mid.push_back(to_string(Y));
        ms += (ms.empty() ? "" : " + ") + to_string(Y);
    }
    Json j{{"X", to_string(X)}, {"tau", to_string(T.tau)}, {"middle", mid}, {"hom_tau_self", hom_tau_self(G, X)}};
    std::ostringstream t;
    t << to_string(T.tau) << " -> " << (ms.empty() ? "0" : ms) << " -> " << to_string(X) << "\n";
    t << "dim Hom(tau X, X) = " << hom_tau_self(G, X) << "\n";
    return emit(o, j, t.str());
}

int window_for(const Options& o, const DiskGeometry& G) { return o.window < 0 ? default_window(G, o.d) : o.window; }

int cmd_der_dct(const Options& o)
{
    require_format(o, {"text", "json"});
    auto G = load_disk(o);
    auto X = parse_arc(G, o.X.empty() ? "arc(1,2)@0" : o.X);
    int w = window_for(o, G);
    auto U = v_x_d(G, X, o.d);
    auto v = is_dct_derived(G, U, o.d, w);
    Json j{{"seed", to_string(X)}, {"window", w}, {"subcategory", to_json(U)}, {"cluster_tilting", v.ok},
           {"witness", v.ok ? Json(nullptr) : Json(v.witness)}};
    std::ostringstream t;
    t << to_string(U) << "\n" << (v.ok ? "is" : "is not") << " " << o.d << "-cluster tilting";
    t << (v.ok ? "" : ": " + v.witness) << "\n";
    return emit(o, j, t.str(), v.ok ? 0 : 1);
}

int cmd_der_search(const Options& o)
{
    require_format(o, {"text", "json"});
    auto G = load_disk(o);
    int w = window_for(o, G);
    auto found = search_dct_derived(G, o.d, w, o.jobs);
    Json j{{"d", o.d}, {"window", w}, {"subcategories", Json::array()}};
    std::ostringstream t;
    t << found.size() << " " << o.d << "-cluster tilting subcategories closed under [" << o.d << "]\n";
    if (G.t == 2) {
        j["field_case"] = true;
        t << "the algebra is the field: each is add{K[" << o.d << "i]} up to shift\n";
    }
    for (const auto& U : found) {
        j["subcategories"].push_back(to_json(U));
        t << "  " << to_string(U) << "\n";
    }
    return emit(o, j, t.str(), found.empty() ? 1 : 0);
}

int cmd_der_ar(const Options& o, bool box)
{
    require_format(o, {"text", "json", "dot", "tikz"});
    auto G = load_disk(o);
    int w = o.window < 0 ? G.n + 1 : o.window;
    auto Q = ar_quiver_derived(G, w);
    std::optional<DerivedSubcat> U;
    if (box) {
        auto found = search_dct_derived(G, o.d, default_window(G, o.d), o.jobs);
        if (!found.empty())
            U = found.front();
    }
    auto pic = picture(Q, U ? &*U : nullptr);
    if (o.format == "dot") {
        std::cout << to_dot(pic);
        return 0;
    }
    if (o.format == "tikz") {
        std::cout << to_tikz(pic);
        return 0;
    }
    std::ostringstream t;
    for (auto [u, v, m] : pic.arrows)
        t << pic.labels[u] << " -> " << pic.labels[v] << "\n";
    for (auto [u, v] : pic.dashed)
        t << "tau " << pic.labels[u] << " = " << pic.labels[v] << "\n";
    return emit(o, to_json(Q), t.str());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"gentle: gentle algebras, cluster tilting and disk models"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text | json | dot | tikz | svg");
        c->add_option("--field", o.field, "prime characteristic of the ground field");
        c->add_option("--jobs", o.jobs, "worker threads");
    };
    auto quiver_cmd = [&](const char* name, const char* help) {
        auto c = app.add_subcommand(name, help);
        c->add_option("file", o.file, "quiver file")->required();
        c->add_option("--max-len", o.max_len, "string length bound for the module catalog");
        common(c);
        return c;
    };
    auto check = quiver_cmd("check", "gentleness, shape, radical square zero, global dimension");
    auto classify = quiver_cmd("classify", "weakly d-representation-finite values and obstruction");
    auto dct_mod = quiver_cmd("dct-mod", "d-cluster tilting subcategories of the module category");
    dct_mod->add_option("--d", o.d, "d >= 2");
    auto ar_mod = quiver_cmd("ar-mod", "Auslander-Reiten quiver of the module category");
    auto ar_mod_d = ar_mod->add_option("--d", o.d, "box the members of a d-cluster tilting subcategory");

    auto model = app.add_subcommand("model", "dissections of marked surfaces");
    model->require_subcommand(1);
    auto surface_cmd = [&](CLI::App* parent, const char* name, const char* help) {
        auto c = parent->add_subcommand(name, help);
        c->add_option("file", o.file, "dissection file");
        c->add_option("--n", o.n, "use the disk model with n edges");
        common(c);
        return c;
    };
    auto build = model->add_subcommand("build-disk", "dissection of the disk for KA_n/J^2");
    build->add_option("--n", o.n, "n >= 1")->required();
    common(build);
    auto malg = surface_cmd(model, "algebra", "gentle algebra of a dissection");
    auto mdual = surface_cmd(model, "dual", "dual graph and dual dissection");
    auto mrender = surface_cmd(model, "render", "TikZ or SVG picture");

    auto der = app.add_subcommand("der", "derived category of a disk model");
    der->require_subcommand(1);
    auto hom = surface_cmd(der, "hom", "dim Hom(X, Y[i]) from graded intersections");
    hom->add_option("--X", o.X, "arc(a,b)@base")->required();
    hom->add_option("--Y", o.Y, "arc(a,b)@base")->required();
    hom->add_option("--i", o.i, "shift");
    hom->add_flag("--oracle", o.oracle, "also compute in the homotopy category");
    auto tau = surface_cmd(der, "tau", "AR translate and AR triangle");
    tau->add_option("--X", o.X, "arc(a,b)@base")->required();
    auto dct = surface_cmd(der, "dct", "test the boundary-walk subcategory of a minimal arc");
    dct->add_option("--X", o.X, "minimal seed arc, default arc(1,2)@0");
    dct->add_option("--d", o.d, "d >= 2");
    dct->add_option("--window", o.window, "grading window for candidate arcs");
    auto search = surface_cmd(der, "search", "all d-cluster tilting subcategories closed under [d]");
    search->add_option("--d", o.d, "d >= 2");
    search->add_option("--window", o.window, "grading window for candidate arcs");
    auto dar = surface_cmd(der, "ar", "AR quiver of graded arcs in a window");
    dar->add_option("--window", o.window, "grading window, default n+1");
    auto dar_d = dar->add_option("--d", o.d, "box the members of a d-cluster tilting subcategory");
    auto drender = surface_cmd(der, "render", "picture of the disk with both dissections");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (check->parsed())
            return cmd_check(o);
        if (classify->parsed())
            return cmd_classify(o);
        if (dct_mod->parsed())
            return cmd_dct_mod(o);
        if (ar_mod->parsed())
            return cmd_ar_mod(o, ar_mod_d->count() > 0);
        if (build->parsed())
            return cmd_model_build(o);
        if (malg->parsed())
            return cmd_model_algebra(o);
        if (mdual->parsed())
            return cmd_model_dual(o);
        if (mrender->parsed() || drender->parsed()) {
            if (o.format == "text")
                o.format = "tikz";
            return cmd_model_render(o);
        }
        if (hom->parsed())
            return cmd_der_hom(o);
        if (tau->parsed())
            return cmd_der_tau(o);
        if (dct->parsed())
            return cmd_der_dct(o);
        if (search->parsed())
            return cmd_der_search(o);
        if (dar->parsed())
            return cmd_der_ar(o, dar_d->count() > 0);
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
