#include "neatflow/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "neatflow/errors.hpp"
#include "neatflow/rng.hpp"

namespace neatflow {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_number(const std::string& s, std::size_t row) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        throw ParseError("not a number: '" + s + "'", row);
    return v;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

void min_max_normalize(Dataset& d) {
    const std::size_t cols = d.feature_count();
    d.feature_ranges.assign(cols, {std::numeric_limits<double>::infinity(),
                                   -std::numeric_limits<double>::infinity()});
    for (const auto& row : d.features)
        for (std::size_t c = 0; c < cols; ++c) {
            d.feature_ranges[c].first = std::min(d.feature_ranges[c].first, row[c]);
            d.feature_ranges[c].second = std::max(d.feature_ranges[c].second, row[c]);
        }
    for (auto& row : d.features)
        for (std::size_t c = 0; c < cols; ++c) {
            const auto [lo, hi] = d.feature_ranges[c];
            row[c] = hi > lo ? (row[c] - lo) / (hi - lo) : 0.0;
        }
}

} // namespace

std::vector<std::size_t> Dataset::class_counts() const {
    std::vector<std::size_t> counts(n_classes, 0);
    for (int label : labels) ++counts[label];
    return counts;
}

Dataset load_iris(const std::string& path) {
    Dataset d;
    std::map<std::string, int> class_of;
    std::size_t row = 0;
    for (const auto& line : read_lines(path)) {
        ++row;
        if (line.empty()) continue; // the canonical file ends with a blank line
        const auto fields = split_fields(line);
        if (fields.size() != 5)
            throw WrongArity("expected 5 fields, got " + std::to_string(fields.size()),
                             row);
        std::vector<double> features;
        for (std::size_t c = 0; c < 4; ++c)
            features.push_back(parse_number(fields[c], row));
        const auto [it, inserted] =
            class_of.try_emplace(fields[4], static_cast<int>(class_of.size()));
        d.features.push_back(std::move(features));
        d.labels.push_back(it->second);
    }
    if (d.features.empty()) throw ParseError("no data rows", 0);
    d.n_classes = static_cast<int>(class_of.size());
    min_max_normalize(d);
    return d;
}

Dataset load_wdbc(const std::string& path) {
    Dataset d;
    d.n_classes = 2;
    std::size_t row = 0;
    for (const auto& line : read_lines(path)) {
        ++row;
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 11)
            throw WrongArity("expected 11 fields, got " + std::to_string(fields.size()),
                             row);
        const bool missing = std::any_of(fields.begin() + 1, fields.end() - 1,
                                         [](const std::string& f) { return f == "?"; });
        if (missing) continue; // incomplete rows are dropped, not an error
        std::vector<double> features;
        for (std::size_t c = 1; c <= 9; ++c) {
            const double v = parse_number(fields[c], row);
            if (v < 1.0 || v > 10.0)
                throw ParseError("attribute out of range 1..10: '" + fields[c] + "'",
                                 row);
            features.push_back((v - 1.0) / 9.0);
        }
        const double cls = parse_number(fields[10], row);
        if (cls != 2.0 && cls != 4.0)
            throw ParseError("class must be 2 or 4, got '" + fields[10] + "'", row);
        d.features.push_back(std::move(features));
        d.labels.push_back(cls == 2.0 ? 0 : 1);
    }
    if (d.features.empty()) throw ParseError("no data rows", 0);
    d.feature_ranges.assign(9, {1.0, 10.0});
    return d;
}

std::pair<Dataset, Dataset> split(const Dataset& d, const SplitSpec& spec) {
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0))
        throw DegenerateSplit("train fraction must be in (0,1)");
    Rng rng(mix_seed(spec.seed));

    std::vector<std::vector<std::size_t>> buckets;
    if (spec.stratified) {
        buckets.resize(d.n_classes);
        for (std::size_t i = 0; i < d.size(); ++i) buckets[d.labels[i]].push_back(i);
    } else {
        buckets.emplace_back(d.size());
        std::iota(buckets[0].begin(), buckets[0].end(), 0);
    }

    std::vector<bool> in_train(d.size(), false);
    for (auto& bucket : buckets) {
        // Fisher-Yates with our rng
        for (std::size_t i = bucket.size(); i > 1; --i)
            std::swap(bucket[i - 1], bucket[rng.uniform_index(i)]);
        const auto take = static_cast<std::size_t>(
            std::llround(spec.train_fraction * static_cast<double>(bucket.size())));
        if (!bucket.empty() && take == 0)
            throw DegenerateSplit("a class has no training samples");
        for (std::size_t i = 0; i < take && i < bucket.size(); ++i)
            in_train[bucket[i]] = true;
    }

    Dataset train, test;
    train.n_classes = test.n_classes = d.n_classes;
    train.feature_ranges = test.feature_ranges = d.feature_ranges;
    for (std::size_t i = 0; i < d.size(); ++i) {
        Dataset& dst = in_train[i] ? train : test;
        dst.features.push_back(d.features[i]);
        dst.labels.push_back(d.labels[i]);
    }
    if (spec.stratified) {
        const auto counts = train.class_counts();
        if (std::any_of(counts.begin(), counts.end(),
                        [](std::size_t c) { return c == 0; }))
            throw DegenerateSplit("a class has no training samples");
    } else if (train.features.empty()) {
        throw DegenerateSplit("training split is empty");
    }
    return {std::move(train), std::move(test)};
}

} // namespace neatflow
