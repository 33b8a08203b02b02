#include "descprox/topology.hpp"

#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

namespace descprox {
namespace {

constexpr std::size_t kHardCap = 14;

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 14695981039346656037ull;
    for (int i = 0; i < 8; ++i) {
        h ^= (seed >> (8 * i)) & 0xffull;
        h *= 1099511628211ull;
    }
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

PointSet draw_subset(const DescribedSpace& space, std::mt19937_64& rng) {
    PointSet s = space.empty_set();
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (i % 64 == 0) word = rng();
        if ((word >> (i % 64)) & 1u) s.add(i);
    }
    return s;
}

void require_same_space(const DescribedSpace& space, const PointSet& set) {
    if (&set.space() != &space)
        throw std::invalid_argument("point set is bound to a different space");
}

Witness set_witness(std::vector<std::pair<std::string, std::vector<std::string>>> sets,
                    std::string detail) {
    Witness w;
    w.sets = std::move(sets);
    w.detail = std::move(detail);
    return w;
}

AxiomEntry pass_entry(std::string axiom, std::uint64_t checked, std::string note = "") {
    AxiomEntry e;
    e.axiom = std::move(axiom);
    e.status = CheckStatus::pass;
    e.pairs_checked = checked;
    e.note = std::move(note);
    return e;
}

AxiomEntry fail_entry(std::string axiom, std::uint64_t checked, Witness w) {
    AxiomEntry e;
    e.axiom = std::move(axiom);
    e.status = CheckStatus::fail;
    e.pairs_checked = checked;
    e.witness = std::move(w);
    return e;
}

AxiomEntry skip_entry(std::string axiom, std::string note) {
    AxiomEntry e;
    e.axiom = std::move(axiom);
    e.status = CheckStatus::skipped;
    e.pairs_checked = 0;
    e.note = std::move(note);
    return e;
}

AxiomReport base_report(std::string suite, std::string relation, const DescribedSpace& space,
                        const CheckBudget& budget) {
    AxiomReport rep;
    rep.suite = std::move(suite);
    rep.relation = std::move(relation);
    rep.budget = budget;
    rep.points = space.size();
    rep.arity = space.arity();
    rep.classes = space.distinct_count();
    return rep;
}

}  // namespace

PointSet closure(const RelationSpec& rel, const DescribedSpace& space, const PointSet& set) {
    require_same_space(space, set);
    PointSet out = space.empty_set();
    if (set.empty()) return out;
    if (rel.kind == RelationKind::discrete) return set;
    const FeatureSet image = phi_image(space, set);
    std::vector<signed char> verdict(space.distinct_count(), -1);
    for (std::size_t i = 0; i < space.size(); ++i) {
        const std::size_t d = space.description_index(i);
        if (verdict[d] < 0) {
            const FeatureSet fd({space.description_of(i)});
            verdict[d] = near_features(rel, space, fd, image) ? 1 : 0;
        }
        if (verdict[d]) out.add(i);
    }
    return out;
}

PointSet interior(const RelationSpec& rel, const DescribedSpace& space, const PointSet& set) {
    require_same_space(space, set);
    return closure(rel, space, set.complement()).complement();
}

bool is_closed(const RelationSpec& rel, const DescribedSpace& space, const PointSet& set) {
    return closure(rel, space, set) == set;
}

bool is_open(const RelationSpec& rel, const DescribedSpace& space, const PointSet& set) {
    return is_closed(rel, space, set.complement());
}

AxiomReport verify_closed_iff_saturated(const DescribedSpace& space, const CheckBudget& budget) {
    if (budget.subset_cap == 0 || budget.subset_cap > kHardCap)
        throw std::invalid_argument("subset cap must be between 1 and " +
                                    std::to_string(kHardCap));
    if (!budget.is_exhaustive() && budget.sample_count == 0)
        throw std::invalid_argument("sampled mode requires a positive sample count");

    const RelationSpec rel = RelationSpec::peters();
    AxiomReport rep = base_report("topology", rel.name(), space, budget);
    const std::size_t n = space.size();
    const Partition part = phi_classes(space);
    const bool sweep = budget.is_exhaustive() && n <= budget.subset_cap;

    std::vector<PointSet> closed_sets;
    {
        AxiomEntry e = pass_entry("closed-iff-saturated", 0);
        if (sweep) {
            const std::uint64_t nsub = std::uint64_t{1} << n;
            e.pairs_checked = nsub;
            e.note = "full subset sweep";
            for (std::uint64_t m = 0; m < nsub; ++m) {
                const PointSet a = PointSet::from_mask(space, m);
                const bool closed = is_closed(rel, space, a);
                const bool saturated = saturation(space, a) == a;
                if (closed) closed_sets.push_back(a);
                if (closed != saturated) {
                    e = fail_entry(
                        "closed-iff-saturated", m + 1,
                        set_witness({{"A", a.ids()}},
                                    closed ? "a closed set that is not a union of "
                                             "description classes"
                                           : "a union of description classes that is not "
                                             "closed"));
                    break;
                }
            }
        } else if (!budget.is_exhaustive()) {
            std::mt19937_64 rng(mix_seed(budget.seed, "closed-iff-saturated"));
            e.pairs_checked = budget.sample_count;
            e.note = "sampled";
            for (std::uint32_t k = 0; k < budget.sample_count; ++k) {
                const PointSet a = draw_subset(space, rng);
                const bool closed = is_closed(rel, space, a);
                const bool saturated = saturation(space, a) == a;
                if (closed != saturated) {
                    e = fail_entry(
                        "closed-iff-saturated", k + 1,
                        set_witness({{"A", a.ids()}},
                                    closed ? "a closed set that is not a union of "
                                             "description classes"
                                           : "a union of description classes that is not "
                                             "closed"));
                    break;
                }
            }
        } else {
            e.pairs_checked = n;
            e.note = "space exceeds the subset cap; decided through per-class structure: "
                     "singleton closures coincide with description classes, and the closure "
                     "of any set is the union of the classes its points realize";
            for (std::size_t i = 0; i < n; ++i) {
                const PointSet cl = closure(rel, space, space.singleton(i));
                const PointSet& k = part.classes[part.class_of(i)];
                if (cl == k) continue;
                if (!is_closed(rel, space, k)) {
                    e = fail_entry("closed-iff-saturated", i + 1,
                                   set_witness({{"A", k.ids()}},
                                               "a union of description classes that is not "
                                               "closed"));
                } else if (is_closed(rel, space, cl) && !(saturation(space, cl) == cl)) {
                    e = fail_entry("closed-iff-saturated", i + 1,
                                   set_witness({{"A", cl.ids()}},
                                               "a closed set that is not a union of "
                                               "description classes"));
                } else {
                    e = fail_entry("closed-iff-saturated", i + 1,
                                   set_witness({{"A", space.singleton(i).ids()}},
                                               "the closure of a singleton differs from its "
                                               "description class"));
                }
                break;
            }
        }
        rep.entries.push_back(std::move(e));
    }

    {
        AxiomEntry e = pass_entry("classes-clopen", part.classes.size(),
                                  "every description class is closed and open");
        for (const PointSet& k : part.classes) {
            if (is_closed(rel, space, k) && is_open(rel, space, k)) continue;
            e = fail_entry("classes-clopen", part.classes.size(),
                           set_witness({{"A", k.ids()}},
                                       "a description class is not clopen"));
            break;
        }
        rep.entries.push_back(std::move(e));
    }

    {
        const std::string alexandroff =
            "arbitrary meets are finite meets on a finite space";
        AxiomEntry e = pass_entry("closed-under-intersection", 0);
        if (sweep && closed_sets.size() <= 512) {
            e.pairs_checked = std::uint64_t{closed_sets.size()} * closed_sets.size();
            e.note = "pairwise meets of every closed set found by the sweep; " + alexandroff;
            bool done = false;
            for (std::size_t i = 0; i < closed_sets.size() && !done; ++i)
                for (std::size_t j = 0; j < closed_sets.size(); ++j) {
                    if (is_closed(rel, space, closed_sets[i] & closed_sets[j])) continue;
                    e = fail_entry(
                        "closed-under-intersection", i * closed_sets.size() + j + 1,
                        set_witness({{"A", closed_sets[i].ids()}, {"B", closed_sets[j].ids()}},
                                    "two closed sets with a non-closed intersection"));
                    done = true;
                    break;
                }
        } else if (!budget.is_exhaustive()) {
            std::mt19937_64 rng(mix_seed(budget.seed, "closed-under-intersection"));
            e.pairs_checked = budget.sample_count;
            e.note = "sampled meets of closures; " + alexandroff;
            for (std::uint32_t k = 0; k < budget.sample_count; ++k) {
                const PointSet a = closure(rel, space, draw_subset(space, rng));
                const PointSet b = closure(rel, space, draw_subset(space, rng));
                if (is_closed(rel, space, a & b)) continue;
                e = fail_entry("closed-under-intersection", k + 1,
                               set_witness({{"A", a.ids()}, {"B", b.ids()}},
                                           "two closed sets with a non-closed intersection"));
                break;
            }
        } else {
            const std::size_t classes = part.classes.size();
            e.pairs_checked = std::uint64_t{classes} * classes;
            e.note = "classes are pairwise disjoint, so meets of class unions are class "
                     "unions; " + alexandroff;
            bool done = false;
            for (std::size_t d = 0; d < classes && !done; ++d)
                for (std::size_t g = d + 1; g < classes; ++g) {
                    if ((part.classes[d] & part.classes[g]).empty()) continue;
                    e = fail_entry(
                        "closed-under-intersection", d * classes + g + 1,
                        set_witness({{"A", part.classes[d].ids()},
                                     {"B", part.classes[g].ids()}},
                                    "two description classes overlap"));
                    done = true;
                    break;
                }
        }
        rep.entries.push_back(std::move(e));
    }

    {
        if (part.classes.size() < 2) {
            rep.entries.push_back(skip_entry(
                "disconnected",
                "single description class; no proper clopen split exists"));
        } else {
            const PointSet& k = part.classes.front();
            if (is_closed(rel, space, k) && is_open(rel, space, k))
                rep.entries.push_back(pass_entry(
                    "disconnected", 1,
                    "a description class and its complement split the space into proper "
                    "clopen parts"));
            else
                rep.entries.push_back(fail_entry(
                    "disconnected", 1,
                    set_witness({{"A", k.ids()}},
                                "the candidate description class is not clopen")));
        }
    }
    return rep;
}

AxiomReport separation_checks(const RelationSpec& rel, const DescribedSpace& space) {
    AxiomReport rep = base_report("separation", rel.name(), space, CheckBudget{});
    const std::size_t n = space.size();
    const std::uint64_t point_pairs = std::uint64_t{n} * n;
    const std::uint64_t unordered_pairs = std::uint64_t{n} * (n - 1) / 2;
    bool t0 = true;

    if (rel.kind == RelationKind::discrete) {
        rep.entries.push_back(pass_entry(
            "R0", point_pairs, "singleton closures are the singletons themselves"));
        rep.entries.push_back(pass_entry(
            "T0", unordered_pairs, "distinct points keep distinct singleton closures"));
    } else {
        const std::size_t classes = space.distinct_count();
        std::vector<std::size_t> rep_point(classes, n);
        std::vector<std::size_t> second_point(classes, n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t d = space.description_index(i);
            if (rep_point[d] == n)
                rep_point[d] = i;
            else if (second_point[d] == n)
                second_point[d] = i;
        }
        std::vector<std::vector<bool>> m(classes, std::vector<bool>(classes, false));
        for (std::size_t d = 0; d < classes; ++d) {
            const FeatureSet fd({space.distinct_description(d)});
            for (std::size_t g = 0; g < classes; ++g) {
                const FeatureSet fg({space.distinct_description(g)});
                m[d][g] = near_features(rel, space, fd, fg);
            }
        }

        AxiomEntry r0 = pass_entry(
            "R0", point_pairs,
            "decided through " + std::to_string(classes) + " description classes");
        for (std::size_t d = 0; d < classes && r0.status == CheckStatus::pass; ++d)
            for (std::size_t g = 0; g < classes; ++g)
                if (m[d][g] != m[g][d]) {
                    r0 = fail_entry(
                        "R0", point_pairs,
                        set_witness({{"A", {space.id_of(rep_point[d])}},
                                     {"B", {space.id_of(rep_point[g])}}},
                                    "one point lies in the closure of the other's "
                                    "singleton, but not conversely"));
                    break;
                }
        rep.entries.push_back(std::move(r0));

        AxiomEntry t0_entry = pass_entry(
            "T0", unordered_pairs,
            "decided through " + std::to_string(classes) + " description classes");
        for (std::size_t d = 0; d < classes && t0; ++d)
            if (second_point[d] != n) {
                t0 = false;
                t0_entry = fail_entry(
                    "T0", unordered_pairs,
                    set_witness({{"A", {space.id_of(rep_point[d])}},
                                 {"B", {space.id_of(second_point[d])}}},
                                "distinct points with identical singleton closures"));
            }
        for (std::size_t d = 0; d < classes && t0; ++d)
            for (std::size_t g = d + 1; g < classes && t0; ++g) {
                bool same = true;
                for (std::size_t r = 0; r < classes && same; ++r) same = m[r][d] == m[r][g];
                if (same) {
                    t0 = false;
                    t0_entry = fail_entry(
                        "T0", unordered_pairs,
                        set_witness({{"A", {space.id_of(rep_point[d])}},
                                     {"B", {space.id_of(rep_point[g])}}},
                                    "distinct points with identical singleton closures"));
                }
            }
        rep.entries.push_back(std::move(t0_entry));
    }

    const bool injective = space.distinct_count() == space.size();
    if (t0 == injective) {
        rep.entries.push_back(pass_entry(
            "T0-iff-injective", 1,
            "the T0 verdict matches injectivity of the description map; on a finite R0 "
            "space T0 already implies T2"));
    } else {
        Witness w;
        w.detail = "the T0 verdict does not match injectivity of the description map";
        w.extra = nlohmann::json{{"t0", t0}, {"injective", injective}};
        rep.entries.push_back(fail_entry("T0-iff-injective", 1, std::move(w)));
    }
    return rep;
}

}  // namespace descprox
