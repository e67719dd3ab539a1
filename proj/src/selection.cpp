#include "neatflow/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "neatflow/errors.hpp"

namespace neatflow {

namespace {

struct MetricName {
    FlowMetric metric;
    const char* token;
};

constexpr MetricName kMetricNames[] = {
    {FlowMetric::local_efficiency, "le"},
    {FlowMetric::global_efficiency, "ge"},
    {FlowMetric::degree_centrality, "dc"},
    {FlowMetric::eigenvector_centrality, "ec"},
    {FlowMetric::entropy, "ent"},
};

double metric_value(const MetricsReport& m, FlowMetric metric) {
    switch (metric) {
        case FlowMetric::local_efficiency: return m.local_efficiency;
        case FlowMetric::global_efficiency: return m.global_efficiency;
        case FlowMetric::degree_centrality: return m.degree_centrality;
        case FlowMetric::eigenvector_centrality: return m.eigenvector_centrality;
        case FlowMetric::entropy: return m.entropy;
    }
    return 0.0;
}

void check_shapes(const std::vector<ObjectiveVector>& objs) {
    for (std::size_t i = 1; i < objs.size(); ++i) {
        if (objs[i].slots.size() != objs[0].slots.size())
            throw ShapeMismatch("objective vectors differ in length");
        for (std::size_t d = 0; d < objs[i].slots.size(); ++d)
            if (objs[i].slots[d].direction != objs[0].slots[d].direction)
                throw ShapeMismatch("objective vectors differ in direction");
    }
}

// Quantizing to the tie_epsilon grid makes "equal within epsilon" a strict
// weak ordering; direction is folded into the sign so larger keys always
// mean better.
long long slot_key(const ObjectiveVector::Slot& s, double eps) {
    const long long q = std::llround(s.value / eps);
    return s.direction == Direction::maximize ? q : -q;
}

} // namespace

std::string MeasureVariant::name() const {
    if (kind == Kind::performance_only) return "perf";
    for (const auto& mn : kMetricNames)
        if (mn.metric == metric)
            return std::string(mn.token) +
                   (kind == Kind::metric_then_cost ? "_cost" : "_ratio");
    return "perf";
}

std::optional<MeasureVariant> MeasureVariant::parse(const std::string& token) {
    for (const auto& v : all())
        if (v.name() == token) return v;
    return std::nullopt;
}

const std::vector<MeasureVariant>& MeasureVariant::all() {
    static const std::vector<MeasureVariant> variants = [] {
        std::vector<MeasureVariant> v;
        v.push_back({Kind::performance_only, FlowMetric::local_efficiency});
        for (const auto& mn : kMetricNames) {
            v.push_back({Kind::metric_then_cost, mn.metric});
            v.push_back({Kind::metric_over_cost, mn.metric});
        }
        return v;
    }();
    return variants;
}

ObjectiveVector objective_vector(const EvalResult& eval, const MeasureVariant& variant) {
    ObjectiveVector obj;
    obj.slots.push_back({eval.performance, Direction::maximize});
    if (variant.kind == MeasureVariant::Kind::performance_only) return obj;
    const double m = metric_value(eval.metrics, variant.metric);
    const double cost = static_cast<double>(eval.metrics.connections_cost);
    if (variant.kind == MeasureVariant::Kind::metric_then_cost) {
        obj.slots.push_back({m, Direction::maximize});
        obj.slots.push_back({cost, Direction::minimize});
    } else {
        obj.slots.push_back({cost > 0.0 ? m / cost : 0.0, Direction::maximize});
    }
    return obj;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b, double tie_epsilon) {
    if (a.slots.size() != b.slots.size())
        throw ShapeMismatch("objective vectors differ in length");
    bool strictly_better = false;
    for (std::size_t d = 0; d < a.slots.size(); ++d) {
        if (a.slots[d].direction != b.slots[d].direction)
            throw ShapeMismatch("objective vectors differ in direction");
        const double sign = a.slots[d].direction == Direction::maximize ? 1.0 : -1.0;
        const double diff = sign * (a.slots[d].value - b.slots[d].value);
        if (diff > tie_epsilon)
            strictly_better = true;
        else if (diff < -tie_epsilon)
            return false;
    }
    return strictly_better;
}

std::vector<std::size_t> rank_population(const std::vector<ObjectiveVector>& objectives,
                                         const SelectionConfig& cfg, Rng& rng) {
    const double r = rng.uniform();
    std::vector<std::size_t> order(objectives.size());
    std::iota(order.begin(), order.end(), 0);
    if (objectives.empty()) return order;
    check_shapes(objectives);

    const std::size_t depth = r < cfg.pressure ? objectives[0].slots.size() : 1;
    std::vector<std::vector<long long>> keys(objectives.size());
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        keys[i].reserve(depth);
        for (std::size_t d = 0; d < depth; ++d)
            keys[i].push_back(slot_key(objectives[i].slots[d], cfg.tie_epsilon));
    }
    std::stable_sort(order.begin(), order.end(),
                     [&keys](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
    return order;
}

} // namespace neatflow
