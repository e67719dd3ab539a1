#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace neatflow {

struct Dataset {
    std::vector<std::vector<double>> features; // rows, normalized to [0,1]
    std::vector<int> labels;                   // < n_classes
    int n_classes = 0;
    std::vector<std::pair<double, double>> feature_ranges; // pre-normalization (min,max)

    std::size_t size() const { return features.size(); }
    std::size_t feature_count() const {
        return features.empty() ? feature_ranges.size() : features.front().size();
    }
    std::vector<std::size_t> class_counts() const;
};

struct SplitSpec {
    double train_fraction = 0.75;
    std::uint64_t seed = 0;
    bool stratified = true;
};

// UCI iris.data layout: 4 numeric columns plus a class name, classes mapped
// by first appearance. Features min-max normalized per column. Throws
// ParseError (with row number) / WrongArity; an empty file is a ParseError.
Dataset load_iris(const std::string& path);

// UCI breast-cancer-wisconsin.data layout: id, 9 integer attributes in
// 1..10 with missing values written '?', class 2 (benign -> 0) or
// 4 (malignant -> 1). Rows with missing values are dropped; features scaled
// by (v-1)/9.
Dataset load_wdbc(const std::string& path);

// Seeded shuffle split, stratified per class when flagged; per-class train
// counts are round(fraction * class size). Train and test are disjoint and
// cover the input. Throws DegenerateSplit when a class lands empty in train.
std::pair<Dataset, Dataset> split(const Dataset& d, const SplitSpec& spec);

} // namespace neatflow
