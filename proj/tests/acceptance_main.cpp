#include <iostream>
#include "condlab/acceptance.hpp"
int main() {
    condlab::AcceptanceOptions opts;
    const auto results = condlab::run_acceptance(opts, std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    return failed;
}
