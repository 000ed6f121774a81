#pragma once

#include <optional>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

// Hard cap for the exhaustive cut search (2^n candidate sets).
inline constexpr int kMaxCutSearchOrder = 12;

/// A vertex set S together with the orders of the components of G - S.
struct ComponentCut {
    VertexMask s = 0;
    std::vector<int> component_sizes; // ascending

    int size() const;
    int component_count() const { return static_cast<int>(component_sizes.size()); }
    friend bool operator==(const ComponentCut&, const ComponentCut&) = default;
};

struct CutCheck {
    bool valid = false;
    ComponentCut cut;
};

/// Minimum h-extra r-component cut; empty when no set qualifies.
struct CkappaResult {
    std::optional<int> value;
    std::optional<ComponentCut> witness;
};

/// True iff G - s has at least r components, each with at least h+1 vertices.
CutCheck is_valid_cut(const Graph& g, VertexMask s, int r, int h);

/// Exact minimum over all vertex sets, by ascending size and lexicographic
/// order within a size; the first valid set is the witness.
CkappaResult ckappa(const Graph& g, int r, int h);

/// Classic vertex connectivity; n-1 for complete graphs.
int kappa(const Graph& g);

} // namespace dsr
