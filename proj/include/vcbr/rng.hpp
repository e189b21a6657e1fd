#pragma once

#include <cstdint>
#include <random>

namespace vcbr {

/// mt19937_64 with hand-rolled bounded draws so identical seeds give
/// identical streams on every platform (std distributions do not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace vcbr
