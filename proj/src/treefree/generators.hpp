#pragma once

#include "treefree/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace treefree {

// xorshift64* seeded through one splitmix64 step:
//   splitmix64: z += 0x9E3779B97F4A7C15; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
//               z = (z ^ z>>27) * 0x94D049BB133111EB; z ^= z>>31
//   xorshift64*: x ^= x>>12; x ^= x<<25; x ^= x>>27; return x * 0x2545F4914F6CDD1D
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next();
    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);
    // True with probability num/den, decided on integers.
    bool chance(std::uint64_t num, std::uint64_t den);

private:
    std::uint64_t state_;
};

Graph cycle_graph(int n);
Graph path_graph(int n);
// n/2 disjoint edges; n must be even.
Graph matching_graph(int n);
// Vertices are the k-subsets of {0..n-1} in lexicographic order, adjacent
// when disjoint.
Graph kneser_graph(int n, int k);
// depth 1 is K2; each level applies the Mycielski construction.
Graph mycielski_graph(int depth);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
// Edge probability num/den.
Graph random_gnp(int n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);
// Bipartite halves of sizes a and b with edge probability num/den.
Graph random_bipartite(int a, int b, std::uint64_t num, std::uint64_t den, std::uint64_t seed);
// G(n, p) with p = target_degree/(n-1), then edges on cycles shorter than
// `girth` are deleted until none remain.
Graph random_girth(int n, int target_degree, int girth, std::uint64_t seed);

// Shortest cycle length, or 0 for a forest.
int girth_of(const Graph& g);

// Generator name plus integer parameters and a seed, e.g. "cycle:7",
// "kneser:5,2", "random_gnp:40,1,10@17".
struct InstanceSpec {
    std::string name;
    std::vector<long> params;
    std::uint64_t seed = 0;

    std::string text() const;
};

InstanceSpec parse_instance(const std::string& text);
Graph generate(const InstanceSpec& spec);

} // namespace treefree
