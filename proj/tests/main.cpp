#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstring>
#include <vector>

#include "test_support.hpp"

int main(int argc, char** argv) {
    std::vector<char*> filtered;
    for (int i = 0; i < argc; ++i) {
        if (std::strncmp(argv[i], "--cli=", 6) == 0)
            test_support::cli_path = argv[i] + 6;
        else
            filtered.push_back(argv[i]);
    }
    if (test_support::cli_path.empty())
        if (const char* env = std::getenv("BRANCHWORK_CLI"))
            test_support::cli_path = env;

    doctest::Context context;
    context.applyCommandLine(static_cast<int>(filtered.size()), filtered.data());
    return context.run();
}
