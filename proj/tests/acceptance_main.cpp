// Prints one line per acceptance criterion; exits nonzero if any fails.

#include <cstdio>
#include <string>

#include "homcx/acceptance.hpp"

int main() {
    auto results = homcx::run_acceptance();
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::string limit;
        if (r.limit_seconds > 0) limit = ", limit " + std::to_string(static_cast<int>(r.limit_seconds)) + " s";
        std::printf("%s criterion %d [PRIMARY] %s (%.3f s%s): %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, limit.c_str(), r.detail.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%zu/%zu criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}
