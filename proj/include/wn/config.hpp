#pragma once

#include <cstdint>

namespace wn {

/// Runtime knobs shared by the library entry points and the CLI.
struct Config {
    unsigned long long cutoff = 1'000'000;  // largest group order enumerated
    int workers = 1;
    std::uint64_t seed = 20240801;
    int property_cases = 10000;
};

}  // namespace wn
