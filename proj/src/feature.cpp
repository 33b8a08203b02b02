#include "descprox/feature.hpp"

#include <algorithm>
#include <stdexcept>

namespace descprox {

FeatureVector FeatureVector::project(std::size_t m) const {
    if (m == 0 || m > values_.size())
        throw std::invalid_argument("projection length " + std::to_string(m) +
                                    " out of range for arity " + std::to_string(values_.size()));
    return FeatureVector(std::vector<std::int64_t>(values_.begin(), values_.begin() + m));
}

FeatureVector FeatureVector::project(const std::vector<std::size_t>& coords) const {
    if (coords.empty()) throw std::invalid_argument("projection needs at least one coordinate");
    std::vector<std::int64_t> out;
    out.reserve(coords.size());
    for (std::size_t c : coords) {
        if (c >= values_.size())
            throw std::invalid_argument("coordinate index " + std::to_string(c) +
                                        " out of range for arity " + std::to_string(values_.size()));
        out.push_back(values_[c]);
    }
    return FeatureVector(std::move(out));
}

std::string FeatureVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values_[i]);
    }
    s += ')';
    return s;
}

FeatureSet::FeatureSet(std::vector<FeatureVector> vectors) : vectors_(std::move(vectors)) {
    std::sort(vectors_.begin(), vectors_.end());
    vectors_.erase(std::unique(vectors_.begin(), vectors_.end()), vectors_.end());
}

FeatureSet::FeatureSet(std::initializer_list<FeatureVector> vectors)
    : FeatureSet(std::vector<FeatureVector>(vectors)) {}

void FeatureSet::insert(const FeatureVector& v) {
    auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v);
    if (it == vectors_.end() || *it != v) vectors_.insert(it, v);
}

bool FeatureSet::contains(const FeatureVector& v) const {
    return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

std::size_t FeatureSet::arity() const { return vectors_.empty() ? 0 : vectors_.front().arity(); }

bool FeatureSet::subset_of(const FeatureSet& other) const {
    return std::includes(other.vectors_.begin(), other.vectors_.end(),
                         vectors_.begin(), vectors_.end());
}

FeatureSet FeatureSet::coordinate_image(std::size_t coord) const {
    FeatureSet out;
    for (const auto& v : vectors_) out.insert(v.project(std::vector<std::size_t>{coord}));
    return out;
}

FeatureSet FeatureSet::project(std::size_t m) const {
    FeatureSet out;
    for (const auto& v : vectors_) out.insert(v.project(m));
    return out;
}

FeatureSet FeatureSet::project(const std::vector<std::size_t>& coords) const {
    FeatureSet out;
    for (const auto& v : vectors_) out.insert(v.project(coords));
    return out;
}

std::string FeatureSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (i) s += ',';
        s += vectors_[i].to_string();
    }
    s += '}';
    return s;
}

FeatureSet set_intersection(const FeatureSet& a, const FeatureSet& b) {
    std::vector<FeatureVector> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FeatureSet(std::move(out));
}

FeatureSet set_union(const FeatureSet& a, const FeatureSet& b) {
    std::vector<FeatureVector> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FeatureSet(std::move(out));
}

bool intersects(const FeatureSet& a, const FeatureSet& b) {
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
    }
    return false;
}

}  // namespace descprox
