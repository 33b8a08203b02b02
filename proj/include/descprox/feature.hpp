#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace descprox {

/// One point description: an exact integer per probe coordinate.
/// Equality is componentwise; ordering is lexicographic.
class FeatureVector {
public:
    FeatureVector() = default;
    explicit FeatureVector(std::vector<std::int64_t> values) : values_(std::move(values)) {}
    FeatureVector(std::initializer_list<std::int64_t> values) : values_(values) {}

    std::size_t arity() const { return values_.size(); }
    std::int64_t operator[](std::size_t i) const { return values_[i]; }
    const std::vector<std::int64_t>& values() const { return values_; }

    /// First m coordinates.
    FeatureVector project(std::size_t m) const;
    /// Arbitrary coordinate selection (zero-based indices).
    FeatureVector project(const std::vector<std::size_t>& coords) const;

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
    friend auto operator<=>(const FeatureVector&, const FeatureVector&) = default;

    std::string to_string() const;  // "(1,2)"

private:
    std::vector<std::int64_t> values_;
};

/// Deduplicated set of feature vectors, stored in lexicographic order so that
/// iteration, printing and report output never depend on insertion order.
class FeatureSet {
public:
    FeatureSet() = default;
    explicit FeatureSet(std::vector<FeatureVector> vectors);
    FeatureSet(std::initializer_list<FeatureVector> vectors);

    void insert(const FeatureVector& v);
    bool contains(const FeatureVector& v) const;
    bool empty() const { return vectors_.empty(); }
    std::size_t size() const { return vectors_.size(); }
    std::size_t arity() const;  // 0 when empty; all members share one arity

    auto begin() const { return vectors_.begin(); }
    auto end() const { return vectors_.end(); }
    const FeatureVector& operator[](std::size_t i) const { return vectors_[i]; }

    bool subset_of(const FeatureSet& other) const;
    friend bool operator==(const FeatureSet&, const FeatureSet&) = default;

    /// Values of one coordinate across the set, as 1-ary vectors.
    FeatureSet coordinate_image(std::size_t coord) const;
    /// Image under projection to the first m coordinates.
    FeatureSet project(std::size_t m) const;
    FeatureSet project(const std::vector<std::size_t>& coords) const;

    std::string to_string() const;  // "{(1,2),(1,3)}"

private:
    std::vector<FeatureVector> vectors_;  // sorted, unique
};

FeatureSet set_intersection(const FeatureSet& a, const FeatureSet& b);
FeatureSet set_union(const FeatureSet& a, const FeatureSet& b);
bool intersects(const FeatureSet& a, const FeatureSet& b);

}  // namespace descprox
