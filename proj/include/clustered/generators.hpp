#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clustered/graph.hpp"
#include "clustered/layering.hpp"

namespace clustered {

/// mt19937_64 with a hand-rolled bounded draw, so sequences do not depend on
/// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound), by rejection. bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    bool coin() { return (next() >> 63) != 0; }

    template <class T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 mix of (seed, stream): independent sub-seeds from one seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct GeneratorSpec {
    std::string family;               // grid, trigrid, sp, banded
    std::vector<std::uint64_t> params;
    std::uint64_t seed = 0;
};

Graph gen_grid(std::size_t rows, std::size_t cols);

/// Grid plus the diagonal (r, c)-(r+1, c+1) in every cell.
Graph gen_triangulated_grid(std::size_t rows, std::size_t cols);

/// Grows K_2 by repeatedly subdividing a random edge or adding a vertex
/// adjacent to both ends of one.
Graph gen_series_parallel(std::size_t n, std::uint64_t seed);

struct BandedInstance {
    Graph graph;
    Layering layering;
    std::vector<int> band_widths;   // heuristic width of every 7-layer window
};

/// `layers` layers of `per_layer` vertices. Each layer is a random partial
/// k-tree; each vertex gets at most delta_cap random neighbours in each
/// adjacent layer.
BandedInstance gen_banded(std::size_t layers, std::size_t per_layer, std::size_t k, std::size_t delta_cap,
                          std::uint64_t seed);

struct ApexedInstance {
    Graph graph;
    VertexSet apexes;   // ids n_base .. n_base + apex_count - 1
};

/// Base graph plus apex_count new vertices, each joined to exactly
/// apex_degree distinct random base vertices.
ApexedInstance gen_apexed(const GeneratorSpec& base, std::size_t apex_count, std::size_t apex_degree,
                          std::uint64_t seed);

struct Generated {
    Graph graph;
    Layering layering;   // filled for banded only
    bool has_layering = false;
};

/// Dispatches on spec.family. Throws InvalidInput on unknown family or wrong arity.
Generated generate(const GeneratorSpec& spec);

/// "grid:5,5" style description of a spec.
std::string to_string(const GeneratorSpec& spec);
GeneratorSpec parse_generator_spec(const std::string& text, std::uint64_t seed);

} // namespace clustered
