#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "neatflow/genome.hpp"
#include "neatflow/rng.hpp"

namespace neatflow {

enum class FlowMetric {
    local_efficiency,
    global_efficiency,
    degree_centrality,
    eigenvector_centrality,
    entropy,
};

// One of the eleven fitness configurations: performance only, or
// performance plus a flow metric with the connections cost either as a
// separate lexicographic objective (metric_then_cost) or folded into a
// metric/cost ratio (metric_over_cost).
struct MeasureVariant {
    enum class Kind { performance_only, metric_then_cost, metric_over_cost };

    Kind kind = Kind::performance_only;
    FlowMetric metric = FlowMetric::local_efficiency; // unused for performance_only

    std::string name() const; // CLI token, e.g. "perf", "ec_cost", "le_ratio"
    static std::optional<MeasureVariant> parse(const std::string& token);
    static const std::vector<MeasureVariant>& all(); // the 11 admissible values

    bool operator==(const MeasureVariant& o) const {
        return kind == o.kind &&
               (kind == Kind::performance_only || metric == o.metric);
    }
};

enum class Direction { maximize, minimize };

// Ordered objectives; slot 0 is always performance, maximized.
struct ObjectiveVector {
    struct Slot {
        double value;
        Direction direction;
    };
    std::vector<Slot> slots;
};

struct SelectionConfig {
    double pressure = 0.15;   // probability that secondary objectives apply
    double tie_epsilon = 1e-9;
};

// perf                -> [perf max]
// metric_then_cost(m) -> [perf max, m max, cost min]
// metric_over_cost(m) -> [perf max, m/cost max]   (m/0 := 0)
ObjectiveVector objective_vector(const EvalResult& eval, const MeasureVariant& variant);

// Pareto dominance with tie_epsilon-tolerant slot equality: a is not worse
// than b anywhere and strictly better somewhere. Throws ShapeMismatch.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b,
               double tie_epsilon = 1e-9);

// One uniform draw r per call. r >= pressure: stable sort by slot 0 only;
// r < pressure: stable lexicographic sort over all slots. Slot comparisons
// respect direction and treat values within tie_epsilon as equal (values
// are quantized to the tie_epsilon grid, which keeps the comparator a
// strict weak ordering); input order breaks residual ties. Returns the
// indices best-first — always a permutation of the input.
std::vector<std::size_t> rank_population(const std::vector<ObjectiveVector>& objectives,
                                         const SelectionConfig& cfg, Rng& rng);

} // namespace neatflow
