#include "descprox/space.hpp"

#include <map>
#include <stdexcept>

namespace descprox {

PointSet::PointSet(const DescribedSpace& owner) : space_(&owner), bits_(owner.size()) {}

const DescribedSpace& PointSet::space() const {
    require_bound();
    return *space_;
}

void PointSet::require_bound() const {
    if (!space_) throw std::logic_error("operation on an unbound PointSet");
}

void PointSet::require_same_space(const PointSet& other) const {
    require_bound();
    other.require_bound();
    if (space_ != other.space_)
        throw std::invalid_argument("point sets belong to different spaces");
}

void PointSet::add(std::size_t index) {
    require_bound();
    if (index >= bits_.size()) throw std::out_of_range("point index out of range");
    bits_.set(index);
}

void PointSet::remove(std::size_t index) {
    require_bound();
    if (index >= bits_.size()) throw std::out_of_range("point index out of range");
    bits_.reset(index);
}

bool PointSet::subset_of(const PointSet& other) const {
    require_same_space(other);
    return bits_.is_subset_of(other.bits_);
}

bool PointSet::intersects(const PointSet& other) const {
    require_same_space(other);
    return bits_.intersects(other.bits_);
}

PointSet PointSet::complement() const {
    require_bound();
    PointSet out(*space_);
    out.bits_ = ~bits_;
    return out;
}

PointSet operator|(const PointSet& a, const PointSet& b) {
    a.require_same_space(b);
    PointSet out(*a.space_);
    out.bits_ = a.bits_ | b.bits_;
    return out;
}

PointSet operator&(const PointSet& a, const PointSet& b) {
    a.require_same_space(b);
    PointSet out(*a.space_);
    out.bits_ = a.bits_ & b.bits_;
    return out;
}

PointSet operator-(const PointSet& a, const PointSet& b) {
    a.require_same_space(b);
    PointSet out(*a.space_);
    out.bits_ = a.bits_ - b.bits_;
    return out;
}

bool operator==(const PointSet& a, const PointSet& b) {
    a.require_same_space(b);
    return a.bits_ == b.bits_;
}

std::vector<std::size_t> PointSet::indices() const {
    std::vector<std::size_t> out;
    out.reserve(bits_.count());
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i))
        out.push_back(i);
    return out;
}

std::vector<std::string> PointSet::ids() const {
    require_bound();
    std::vector<std::string> out;
    out.reserve(bits_.count());
    for (std::size_t i : indices()) out.push_back(space_->id_of(i));
    return out;
}

std::uint64_t PointSet::mask() const {
    require_bound();
    if (bits_.size() > 64) throw std::logic_error("mask() needs a space with at most 64 points");
    std::uint64_t m = 0;
    for (std::size_t i : indices()) m |= std::uint64_t{1} << i;
    return m;
}

PointSet PointSet::from_mask(const DescribedSpace& owner, std::uint64_t mask) {
    if (owner.size() > 64) throw std::logic_error("from_mask() needs a space with at most 64 points");
    PointSet out(owner);
    for (std::size_t i = 0; i < owner.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) out.bits_.set(i);
    return out;
}

std::string PointSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& id : ids()) {
        if (!first) s += ',';
        first = false;
        s += id;
    }
    s += '}';
    return s;
}

std::size_t Partition::class_of(std::size_t point_index) const {
    for (std::size_t k = 0; k < classes.size(); ++k)
        if (classes[k].contains(point_index)) return k;
    throw std::out_of_range("point index not covered by partition");
}

DescribedSpace DescribedSpace::build(std::vector<SpaceRow> rows, std::optional<Grid> grid) {
    if (rows.empty()) throw std::invalid_argument("cannot build a space from zero rows");

    DescribedSpace space;
    space.arity_ = rows.front().description.arity();
    if (space.arity_ == 0)
        throw std::invalid_argument("row \"" + rows.front().id + "\": description has arity 0");

    std::map<FeatureVector, std::size_t> seen;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto& row = rows[r];
        if (row.description.arity() != space.arity_)
            throw std::invalid_argument(
                "row " + std::to_string(r + 1) + " (id \"" + row.id + "\"): arity " +
                std::to_string(row.description.arity()) + " does not match arity " +
                std::to_string(space.arity_) + " of the first row");
        if (!space.index_.emplace(row.id, r).second)
            throw std::invalid_argument("row " + std::to_string(r + 1) + ": duplicate point id \"" +
                                        row.id + "\"");
        auto [it, inserted] = seen.emplace(row.description, space.distinct_.size());
        if (inserted) space.distinct_.push_back(row.description);
        space.desc_index_.push_back(it->second);
        space.ids_.push_back(std::move(row.id));
        space.descriptions_.push_back(std::move(row.description));
    }
    space.grid_ = grid;
    return space;
}

std::optional<std::size_t> DescribedSpace::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t DescribedSpace::require_index(const std::string& id) const {
    auto idx = index_of(id);
    if (!idx) throw std::invalid_argument("unknown point id \"" + id + "\"");
    return *idx;
}

PointSet DescribedSpace::empty_set() const { return PointSet(*this); }

PointSet DescribedSpace::full_set() const {
    PointSet out(*this);
    out.bits_.set();
    return out;
}

PointSet DescribedSpace::singleton(std::size_t index) const {
    PointSet out(*this);
    out.add(index);
    return out;
}

PointSet DescribedSpace::set_of(const std::vector<std::string>& ids) const {
    PointSet out(*this);
    for (const auto& id : ids) out.add(require_index(id));
    return out;
}

FeatureSet phi_image(const DescribedSpace& space, const PointSet& A) {
    FeatureSet out;
    for (std::size_t i : A.indices()) out.insert(space.description_of(i));
    return out;
}

PointSet descriptive_intersection(const DescribedSpace& space, const PointSet& A, const PointSet& B) {
    FeatureSet common = set_intersection(phi_image(space, A), phi_image(space, B));
    PointSet out(space);
    for (std::size_t i : (A | B).indices())
        if (common.contains(space.description_of(i))) out.add(i);
    return out;
}

PointSet saturation(const DescribedSpace& space, const PointSet& A) {
    FeatureSet image = phi_image(space, A);
    PointSet out(space);
    for (std::size_t i = 0; i < space.size(); ++i)
        if (image.contains(space.description_of(i))) out.add(i);
    return out;
}

Partition phi_classes(const DescribedSpace& space) {
    Partition p;
    p.descriptions.reserve(space.distinct_count());
    for (std::size_t d = 0; d < space.distinct_count(); ++d) {
        p.descriptions.push_back(space.distinct_description(d));
        p.classes.emplace_back(space);
    }
    for (std::size_t i = 0; i < space.size(); ++i)
        p.classes[space.description_index(i)].add(i);
    return p;
}

}  // namespace descprox
