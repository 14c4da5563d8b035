#pragma once

#include <cstdint>

#include "cxh/graph.hpp"

namespace cxh {

// SplitMix64 (Steele/Lea/Flood).  Fixed algorithm and constants so that every
// seeded artifact (random trees, harness instance streams) is reproducible
// across platforms and releases.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound) via 128-bit multiply-shift; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitMix64::below: zero bound");
        return std::uint64_t((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    int below_int(int bound) { return int(below(std::uint64_t(bound))); }

    // Bernoulli(num/den) draw.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t s_;
};

// Mixes a stream tag into a seed so independent consumers of one user-facing
// seed see unrelated streams.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    SplitMix64 rng(seed ^ (0x6a09e667f3bcc909ull + tag * 0x9e3779b97f4a7c15ull));
    return rng.next();
}

enum class Family { Path, Cycle, Complete, Star, Tree, Grid };

// Parametric graph family request.  `rows`/`cols` are used by Grid; `seed`
// only by Tree.  Single-parameter families read `n`.
struct FamilySpec {
    Family family = Family::Path;
    int n = 0;
    int rows = 0, cols = 0;
    std::uint64_t seed = 0;
};

Graph path_graph(int n);      // n >= 1
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 1
Graph star_graph(int n);      // n >= 1, center 0
// Uniform labeled tree decoded from a PRNG-drawn Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);
// rows x cols grid; vertex (i,j) has index i*cols + j, matching the
// row-major pair encoding of the Cartesian product of two paths.
Graph grid_graph(int rows, int cols);

Graph generate(const FamilySpec& spec);

}  // namespace cxh
