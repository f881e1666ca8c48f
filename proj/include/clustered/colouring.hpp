#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clustered/graph.hpp"
#include "clustered/layering.hpp"
#include "clustered/treewidth.hpp"

namespace clustered {

struct Colouring {
    std::size_t palette = 0;
    std::vector<int> colours;   // one entry per vertex, each < palette

    friend bool operator==(const Colouring&, const Colouring&) = default;
};

struct MonochromaticComponent {
    int colour = 0;
    VertexSet vertices;
};

/// Realized quantities behind a banded 3-colouring's clustering bound.
struct BoundChain {
    std::size_t k = 0;                    // 1 + max band decomposition width
    std::size_t delta = 0;                // max(1, max degree)
    std::size_t budget = 0;               // 8000 k^3 delta^2
    std::size_t two_colour_budget = 0;    // 20 k delta
    std::vector<int> band_widths;         // width of every decomposition used
    std::size_t outer_factor = 0;         // max clustering of the first-stage 2-colourings
    std::size_t inner_factor = 0;         // max clustering of the contracted-graph 2-colourings
    std::size_t product = 0;              // inner * outer
    std::size_t tree_partition_width = 0; // widest tree-partition built
};

/// Per-component sizes of a colouring, plus the checks asked of it.
struct ClusterCertificate {
    std::vector<MonochromaticComponent> components;  // ordered by colour, then smallest vertex
    std::size_t palette = 0;
    std::size_t max_component = 0;
    std::vector<std::size_t> per_colour_max;
    std::size_t max_colours = 0;
    std::size_t bound = 0;
    bool ok = false;
    std::string failure;
    std::optional<MonochromaticComponent> offending;
};

std::vector<MonochromaticComponent> monochromatic_components(const Graph& g, const Colouring& c);

/// Succeeds iff c.palette <= max_colours and every monochromatic component has
/// at most `bound` vertices. Measured maxima are always filled in.
ClusterCertificate verify_clustering(const Graph& g, const Colouring& c, std::size_t max_colours,
                                     std::size_t bound);

struct TwoColourResult {
    Colouring colouring;
    ClusterCertificate certificate;   // verified against width(tp)
};

/// Colours each vertex by the side of its part's tree node in a proper
/// 2-colouring of the tree (each tree component rooted at its smallest node).
TwoColourResult two_colour_bounded(const Graph& g, const TreePartition& tp);

enum class Variant { Main, Appendix };

struct LargeComponent {
    int colour = 0;
    std::size_t size = 0;
    std::size_t first_layer = 0;   // shifted layer indices
    std::size_t last_layer = 0;
    bool inside_band = false;      // within 8i-3..8i+3 for some i >= 1
};

struct ThreeColourResult {
    Colouring colouring;
    ClusterCertificate certificate;   // verified against chain.budget with 3 colours
    BoundChain chain;
    Variant variant = Variant::Main;
    std::size_t layer_shift = 5;

    /// Main: every monochromatic component lies in a single Y_i.
    bool components_within_bands = true;
    /// Appendix: largest blue component, and every component larger than the
    /// first-stage clustering (outer_factor).
    std::size_t blue_max = 0;
    std::vector<LargeComponent> large_components;
    bool band_containment = true;

    /// verification passed, clustering <= product, and the variant's structural check holds
    bool ok() const;
};

inline constexpr int kBlue = 0;
inline constexpr int kRed = 1;
inline constexpr int kGreen = 2;

/// Main construction: 5-layer bands G_i coloured from {i mod 3, i+1 mod 3},
/// then contraction graphs Z_i on the bands Y_i coloured from {i mod 3, i-1 mod 3}.
/// Colours are residues mod 3.
ThreeColourResult three_colour_main(const Graph& g, const Layering& l, const Decomposer& decomposer);

/// Seven-layer construction: blue/yellow 2-colouring of the layers not
/// divisible by 8, yellow recoloured red/green around every multiple of 8.
/// blue = 0, red = 1, green = 2.
ThreeColourResult three_colour_appendix(const Graph& g, const Layering& l, const Decomposer& decomposer);

/// BFS layering of every component plus the heuristic decomposer per band.
ThreeColourResult three_colour_pipeline(const Graph& g, Variant variant,
                                        EliminationStrategy strategy = EliminationStrategy::MinDegree);

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

} // namespace clustered
