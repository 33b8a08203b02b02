#pragma once

#include "descprox/feature.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace descprox {

class DescribedSpace;

/// Subset of a space's points. Bitset-backed value type; every instance is
/// bound to the space object it was created from, and mixing sets from
/// different space objects is an error.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(const DescribedSpace& owner);

    const DescribedSpace& space() const;
    std::size_t universe_size() const { return bits_.size(); }

    bool contains(std::size_t index) const { return bits_.test(index); }
    void add(std::size_t index);
    void remove(std::size_t index);

    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool subset_of(const PointSet& other) const;
    bool intersects(const PointSet& other) const;
    PointSet complement() const;

    friend PointSet operator|(const PointSet& a, const PointSet& b);
    friend PointSet operator&(const PointSet& a, const PointSet& b);
    friend PointSet operator-(const PointSet& a, const PointSet& b);
    friend bool operator==(const PointSet& a, const PointSet& b);

    std::vector<std::size_t> indices() const;    // ascending
    std::vector<std::string> ids() const;        // in index order

    /// Low 64 point indices packed into a word; only valid for |X| <= 64.
    std::uint64_t mask() const;
    static PointSet from_mask(const DescribedSpace& owner, std::uint64_t mask);

    std::string to_string() const;  // "{a,c,d}"

private:
    const DescribedSpace* space_ = nullptr;
    boost::dynamic_bitset<> bits_;

    void require_bound() const;
    void require_same_space(const PointSet& other) const;
    friend class DescribedSpace;
};

/// The partition of a space induced by description equality. Classes are kept
/// in order of first appearance of their description.
struct Partition {
    std::vector<PointSet> classes;
    std::vector<FeatureVector> descriptions;  // one per class, same order
    std::size_t class_of(std::size_t point_index) const;
};

struct SpaceRow {
    std::string id;
    FeatureVector description;
};

/// Finite set of points with a total description map. Immutable once built;
/// point order is the build order and every derived order follows it.
class DescribedSpace {
public:
    struct Grid {
        std::size_t width = 0;
        std::size_t height = 0;
    };

    /// Validates ids and arities; throws std::invalid_argument naming the
    /// offending row on duplicate id, arity mismatch or empty input.
    static DescribedSpace build(std::vector<SpaceRow> rows,
                                std::optional<Grid> grid = std::nullopt);

    std::size_t size() const { return ids_.size(); }
    std::size_t arity() const { return arity_; }

    const std::string& id_of(std::size_t index) const { return ids_[index]; }
    const FeatureVector& description_of(std::size_t index) const { return descriptions_[index]; }
    std::optional<std::size_t> index_of(const std::string& id) const;
    std::size_t require_index(const std::string& id) const;  // throws on unknown id

    /// Distinct descriptions in order of first appearance.
    std::size_t distinct_count() const { return distinct_.size(); }
    const FeatureVector& distinct_description(std::size_t d) const { return distinct_[d]; }
    std::size_t description_index(std::size_t point_index) const { return desc_index_[point_index]; }

    PointSet empty_set() const;
    PointSet full_set() const;
    PointSet singleton(std::size_t index) const;
    PointSet set_of(const std::vector<std::string>& ids) const;  // throws on foreign id

    /// Pixel-grid provenance, present when the space was loaded from an image.
    const std::optional<Grid>& grid() const { return grid_; }

private:
    std::vector<std::string> ids_;
    std::vector<FeatureVector> descriptions_;
    std::size_t arity_ = 0;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> desc_index_;
    std::vector<FeatureVector> distinct_;
    std::optional<Grid> grid_;
};

/// Phi(A): descriptions realized inside A. Phi(empty) = empty.
FeatureSet phi_image(const DescribedSpace& space, const PointSet& A);

/// A cap_Phi B = { x in A u B : Phi(x) in Phi(A) and Phi(x) in Phi(B) }.
PointSet descriptive_intersection(const DescribedSpace& space, const PointSet& A, const PointSet& B);

/// Phi^-1(Phi(A)): every point whose description is realized in A.
PointSet saturation(const DescribedSpace& space, const PointSet& A);

/// Classes of the description-equality partition.
Partition phi_classes(const DescribedSpace& space);

}  // namespace descprox
