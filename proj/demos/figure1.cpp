// Module category of KA_3/J^2: indecomposables, the 2-cluster tilting
// subcategory, and its AR quiver in DOT with the members boxed.
#include "gentle/module_dct.hpp"

#include <iostream>

using namespace gentle;

int main()
{
    auto A = make_a_n_mod_j2(3);
    auto C = indecomposables(A);
    std::cout << "// " << C.size() << " indecomposables:";
    for (int x = 0; x < C.size(); ++x)
        std::cout << " " << to_string(A, C.words[x]);
    std::cout << "\n";

    auto found = search_dct_module(C, 2);
    for (const auto& U : found) {
        std::cout << "// 2-cluster tilting:";
        for (int x : U)
            std::cout << " " << to_string(A, C.words[x]);
        std::cout << "\n";
    }
    auto Q = ar_quiver_module(C);
    std::cout << to_dot(picture(C, Q, found.empty() ? nullptr : &found.front()), "KA3_J2");
}
