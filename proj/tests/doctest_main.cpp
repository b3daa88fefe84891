#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <string>
#include <vector>

#include "support/cli_path.hpp"

namespace testsupport {
std::string cli_path; // from --rdp-cli=, consumed before doctest sees argv
}

int main(int argc, char** argv) {
    std::vector<const char*> args;
    for (int i = 0; i < argc; ++i) {
        const std::string_view a = argv[i];
        if (a.rfind("--rdp-cli=", 0) == 0) {
            testsupport::cli_path = std::string(a.substr(10));
            continue;
        }
        args.push_back(argv[i]);
    }
    doctest::Context ctx(static_cast<int>(args.size()), args.data());
    return ctx.run();
}
