// Number of d-cluster tilting subcategories of D^b(KA_n/J^2) closed under [d],
// computed on the disk model.
#include "gentle/derived_disk.hpp"

#include <cstdio>
#include <cstdlib>

using namespace gentle;

int main(int argc, char** argv)
{
    int max_n = argc > 1 ? std::atoi(argv[1]) : 6;
    int max_d = argc > 2 ? std::atoi(argv[2]) : 6;
    std::printf("%4s", "n\\d");
    for (int d = 2; d <= max_d; ++d)
        std::printf("%4d", d);
    std::printf("\n");
    for (int n = 1; n <= max_n; ++n) {
        auto G = disk_geometry(disk_model(n));
        std::printf("%4d", n);
        for (int d = 2; d <= max_d; ++d)
            std::printf("%4zu", search_dct_derived(G, d, default_window(G, d)).size());
        std::printf("\n");
    }
}
