#include "descprox/axioms.hpp"

#include "descprox/topology.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace descprox {
namespace {

using Mask = std::uint32_t;
using nlohmann::json;

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

std::vector<std::string> mask_ids(const DescribedSpace& space, Mask m) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < space.size(); ++i)
        if ((m >> i) & 1u) ids.push_back(space.id_of(i));
    return ids;
}

Witness witness(std::vector<std::pair<std::string, std::vector<std::string>>> sets,
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

// Subset-mask evaluator: every relation in the catalogue except the discrete
// one factors through description sets, so nearness of all 4^|X| subset pairs
// collapses to a (2^D)^2 table over distinct-description subsets. D1 is still
// scanned over the full matrix; symmetry is a verdict here, not an assumption.
class MaskEngine {
public:
    MaskEngine(const RelationSpec& rel, const DescribedSpace& space)
        : space_(space), n_(space.size()), nsub_(Mask{1} << n_) {
        const std::size_t classes = space.distinct_count();
        descmask_.assign(nsub_, 0);
        for (Mask m = 1; m < nsub_; ++m) {
            const auto low = static_cast<std::size_t>(std::countr_zero(m));
            descmask_[m] =
                descmask_[m & (m - 1)] | (Mask{1} << space.description_index(low));
        }
        classmask_.assign(classes, 0);
        for (std::size_t i = 0; i < n_; ++i)
            classmask_[space.description_index(i)] |= Mask{1} << i;
        const Mask dsub = Mask{1} << classes;
        saturated_.reserve(dsub);
        for (Mask dm = 0; dm < dsub; ++dm) {
            Mask m = 0;
            for (std::size_t d = 0; d < classes; ++d)
                if ((dm >> d) & 1u) m |= classmask_[d];
            saturated_.push_back(m);
        }
        std::sort(saturated_.begin(), saturated_.end());
        near_.assign(std::size_t{nsub_} << n_, false);
        if (rel.kind == RelationKind::discrete) {
            for (Mask a = 0; a < nsub_; ++a)
                for (Mask b = 0; b < nsub_; ++b) near_[index(a, b)] = (a & b) != 0;
        } else {
            std::vector<FeatureSet> image(dsub);
            for (Mask dm = 1; dm < dsub; ++dm) {
                FeatureSet f = image[dm & (dm - 1)];
                f.insert(space.distinct_description(
                    static_cast<std::size_t>(std::countr_zero(dm))));
                image[dm] = std::move(f);
            }
            std::vector<bool> by_desc(std::size_t{dsub} << classes, false);
            for (Mask p = 0; p < dsub; ++p)
                for (Mask q = 0; q < dsub; ++q)
                    by_desc[(std::size_t{p} << classes) | q] =
                        near_features(rel, space_, image[p], image[q]);
            for (Mask a = 0; a < nsub_; ++a) {
                const std::size_t row = std::size_t{descmask_[a]} << classes;
                for (Mask b = 0; b < nsub_; ++b)
                    near_[index(a, b)] = by_desc[row | descmask_[b]];
            }
        }
        nearpts_.assign(nsub_, 0);
        for (Mask c = 0; c < nsub_; ++c) {
            Mask pts = 0;
            for (std::size_t x = 0; x < n_; ++x)
                if (near_[index(Mask{1} << x, c)]) pts |= Mask{1} << x;
            nearpts_[c] = pts;
        }
    }

    const DescribedSpace& space() const { return space_; }
    std::size_t points() const { return n_; }
    Mask subset_count() const { return nsub_; }
    Mask full() const { return nsub_ - 1; }
    bool near(Mask a, Mask b) const { return near_[index(a, b)]; }
    Mask near_points(Mask c) const { return nearpts_[c]; }
    Mask desc_mask(Mask a) const { return descmask_[a]; }
    const std::vector<Mask>& saturated() const { return saturated_; }
    bool strongly_included(Mask a, Mask b) const { return !near(a, full() & ~b); }
    Mask saturation_of(Mask a) const {
        Mask m = 0;
        Mask dm = descmask_[a];
        while (dm) {
            m |= classmask_[static_cast<std::size_t>(std::countr_zero(dm))];
            dm &= dm - 1;
        }
        return m;
    }
    std::vector<std::string> ids(Mask m) const { return mask_ids(space_, m); }

private:
    std::size_t index(Mask a, Mask b) const { return (std::size_t{a} << n_) | b; }

    const DescribedSpace& space_;
    std::size_t n_;
    Mask nsub_;
    std::vector<Mask> descmask_;
    std::vector<Mask> classmask_;
    std::vector<Mask> saturated_;
    std::vector<bool> near_;
    std::vector<Mask> nearpts_;
};

AxiomEntry d0_entry(const MaskEngine& eng, std::string id) {
    const Mask nsub = eng.subset_count();
    for (Mask a = 0; a < nsub; ++a) {
        if (eng.near(0, a))
            return fail_entry(std::move(id), a + 1,
                              witness({{"A", {}}, {"B", eng.ids(a)}},
                                      "the empty set is reported near B"));
        if (eng.near(a, 0))
            return fail_entry(std::move(id), a + 1,
                              witness({{"A", eng.ids(a)}, {"B", {}}},
                                      "A is reported near the empty set"));
    }
    return pass_entry(std::move(id), nsub, "near pairs never involve the empty set");
}

AxiomEntry d1_entry(const MaskEngine& eng, std::string id) {
    const Mask nsub = eng.subset_count();
    std::uint64_t checked = 0;
    for (Mask a = 0; a < nsub; ++a)
        for (Mask b = 0; b < nsub; ++b) {
            ++checked;
            if (eng.near(a, b) != eng.near(b, a))
                return fail_entry(
                    std::move(id), checked,
                    witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}},
                            eng.near(a, b) ? "A is near B but B is not near A"
                                           : "B is near A but A is not near B"));
        }
    return pass_entry(std::move(id), checked);
}

AxiomEntry d2_entry(const MaskEngine& eng, const RelationSpec& rel, std::string id) {
    const Mask nsub = eng.subset_count();
    const bool set_premise = rel.kind == RelationKind::discrete;
    std::uint64_t checked = 0;
    for (Mask a = 0; a < nsub; ++a)
        for (Mask b = 0; b < nsub; ++b) {
            ++checked;
            const bool premise =
                set_premise ? (a & b) != 0 : (eng.desc_mask(a) & eng.desc_mask(b)) != 0;
            if (premise && !eng.near(a, b))
                return fail_entry(std::move(id), checked,
                                  witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}},
                                          set_premise
                                              ? "A and B share a point yet are reported far"
                                              : "A and B share a description yet are "
                                                "reported far"));
        }
    return pass_entry(std::move(id), checked,
                      set_premise ? "set-intersection premise (the relation does not factor "
                                    "through descriptions)"
                                  : "descriptive-intersection premise");
}

AxiomEntry d3_entry(const MaskEngine& eng, std::string id, bool parts_to_union) {
    const Mask nsub = eng.subset_count();
    std::uint64_t checked = 0;
    for (Mask a = 0; a < nsub; ++a)
        for (Mask b = 0; b < nsub; ++b)
            for (Mask c = 0; c < nsub; ++c) {
                ++checked;
                if (parts_to_union) {
                    if ((eng.near(a, b) || eng.near(a, c)) && !eng.near(a, b | c))
                        return fail_entry(
                            std::move(id), checked,
                            witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}, {"C", eng.ids(c)}},
                                    "A is near one part yet far from the union"));
                } else {
                    if (eng.near(a, b | c) && !eng.near(a, b) && !eng.near(a, c))
                        return fail_entry(
                            std::move(id), checked,
                            witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}, {"C", eng.ids(c)}},
                                    "A is near the union yet far from both parts"));
                }
            }
    return pass_entry(std::move(id), checked);
}

AxiomEntry d4_entry(const MaskEngine& eng, std::string id) {
    const Mask nsub = eng.subset_count();
    std::uint64_t checked = 0;
    for (Mask a = 0; a < nsub; ++a)
        for (Mask b = 0; b < nsub; ++b) {
            if (!eng.near(a, b)) {
                checked += nsub;
                continue;
            }
            for (Mask c = 0; c < nsub; ++c) {
                ++checked;
                if ((eng.near_points(c) & b) == b && !eng.near(a, c))
                    return fail_entry(
                        std::move(id), checked,
                        witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}, {"C", eng.ids(c)}},
                                "A is near B and every point of B is near C, yet A is far "
                                "from C"));
            }
        }
    return pass_entry(std::move(id), checked);
}

AxiomEntry ef_entry(const MaskEngine& eng) {
    const Mask nsub = eng.subset_count();
    std::uint64_t checked = 0, far_pairs = 0, via_saturated = 0, via_general = 0;
    for (Mask a = 0; a < nsub; ++a)
        for (Mask b = 0; b < nsub; ++b) {
            ++checked;
            if (eng.near(a, b)) continue;
            ++far_pairs;
            bool found = false;
            for (Mask e : eng.saturated())
                if (!eng.near(a, e) && !eng.near(eng.full() & ~e, b)) {
                    found = true;
                    ++via_saturated;
                    break;
                }
            if (!found)
                for (Mask e = 0; e < nsub; ++e)
                    if (!eng.near(a, e) && !eng.near(eng.full() & ~e, b)) {
                        found = true;
                        ++via_general;
                        break;
                    }
            if (!found)
                return fail_entry("EF", checked,
                                  witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}},
                                          "far pair admits no subset E with A far from E "
                                          "and the complement of E far from B"));
        }
    return pass_entry("EF", checked,
                      "far pairs: " + std::to_string(far_pairs) +
                          "; separators among class unions: " + std::to_string(via_saturated) +
                          ", elsewhere: " + std::to_string(via_general));
}

AxiomEntry ef2_entry(const MaskEngine& eng) {
    const Mask nsub = eng.subset_count();
    std::uint64_t checked = 0, included = 0, via_sat = 0, via_unions = 0, via_general = 0;
    for (Mask a = 0; a < nsub; ++a)
        for (Mask b = 0; b < nsub; ++b) {
            ++checked;
            if (!eng.strongly_included(a, b)) continue;
            ++included;
            const Mask sat = eng.saturation_of(a);
            bool found = false;
            if (eng.strongly_included(a, sat) && eng.strongly_included(sat, b)) {
                found = true;
                ++via_sat;
            }
            if (!found)
                for (Mask c : eng.saturated())
                    if (eng.strongly_included(a, c) && eng.strongly_included(c, b)) {
                        found = true;
                        ++via_unions;
                        break;
                    }
            if (!found)
                for (Mask c = 0; c < nsub; ++c)
                    if (eng.strongly_included(a, c) && eng.strongly_included(c, b)) {
                        found = true;
                        ++via_general;
                        break;
                    }
            if (!found)
                return fail_entry("EF2", checked,
                                  witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}},
                                          "no interpolating C with A strongly included in C "
                                          "and C strongly included in B"));
        }
    return pass_entry("EF2", checked,
                      "strongly included pairs: " + std::to_string(included) +
                          "; interpolants via saturation(A): " + std::to_string(via_sat) +
                          ", other class unions: " + std::to_string(via_unions) +
                          ", elsewhere: " + std::to_string(via_general));
}

AxiomEntry s2_entry(const MaskEngine& eng) {
    const DescribedSpace& space = eng.space();
    const Mask nsub = eng.subset_count();
    std::uint64_t checked = 0;
    for (Mask a = 0; a < nsub; ++a)
        for (Mask b = 0; b < nsub; ++b) {
            ++checked;
            if (!eng.near(a, b)) continue;
            const PointSet A = PointSet::from_mask(space, a);
            const PointSet B = PointSet::from_mask(space, b);
            if (descriptive_intersection(space, A, B).empty())
                return fail_entry("S2", checked,
                                  witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}},
                                          "A is near B yet the descriptive intersection is "
                                          "empty"));
        }
    return pass_entry("S2", checked, "oracle: descriptive_intersection");
}

void kuratowski_entries(const MaskEngine& eng, const RelationSpec& rel,
                        std::vector<AxiomEntry>& out) {
    const Mask nsub = eng.subset_count();
    if (eng.near_points(0) == 0)
        out.push_back(pass_entry("K1.empty", 1, "cl(empty) = empty"));
    else
        out.push_back(fail_entry("K1.empty", 1,
                                 witness({{"A", {}}}, "closure of the empty set is nonempty")));

    const AxiomEntry d2 = d2_entry(eng, rel, "D2");
    if (d2.status != CheckStatus::pass) {
        out.push_back(skip_entry("K2.extensive",
                                 "conditional: extensivity presupposes the "
                                 "descriptive-intersection lower bound, which this relation "
                                 "does not satisfy"));
    } else {
        AxiomEntry k2 = pass_entry("K2.extensive", nsub);
        for (Mask a = 0; a < nsub; ++a)
            if ((a & ~eng.near_points(a)) != 0) {
                k2 = fail_entry("K2.extensive", a + 1,
                                witness({{"A", eng.ids(a)}}, "A is not contained in cl(A)"));
                break;
            }
        out.push_back(std::move(k2));
    }

    {
        std::uint64_t checked = 0;
        AxiomEntry k3 = pass_entry("K3.additive", std::uint64_t{nsub} * nsub);
        bool failed = false;
        for (Mask a = 0; a < nsub && !failed; ++a)
            for (Mask b = 0; b < nsub; ++b) {
                ++checked;
                if (eng.near_points(a | b) != (eng.near_points(a) | eng.near_points(b))) {
                    k3 = fail_entry("K3.additive", checked,
                                    witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}},
                                            "cl(A union B) differs from cl(A) union cl(B)"));
                    failed = true;
                    break;
                }
            }
        out.push_back(std::move(k3));
    }

    {
        AxiomEntry k4 = pass_entry("K4.idempotent", nsub);
        for (Mask a = 0; a < nsub; ++a)
            if (eng.near_points(eng.near_points(a)) != eng.near_points(a)) {
                k4 = fail_entry("K4.idempotent", a + 1,
                                witness({{"A", eng.ids(a)}}, "cl(cl(A)) differs from cl(A)"));
                break;
            }
        out.push_back(std::move(k4));
    }
}

void classify_entries(const MaskEngine& eng, AxiomReport& rep) {
    const Mask nsub = eng.subset_count();
    std::uint64_t checked = 0;
    AxiomEntry contains = pass_entry("contains-peters", std::uint64_t{nsub} * nsub,
                                     "every pair with intersecting descriptions is near");
    bool done = false;
    for (Mask a = 0; a < nsub && !done; ++a)
        for (Mask b = 0; b < nsub; ++b) {
            ++checked;
            if ((eng.desc_mask(a) & eng.desc_mask(b)) != 0 && !eng.near(a, b)) {
                contains = fail_entry("contains-peters", checked,
                                      witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}},
                                              "descriptions intersect yet the relation "
                                              "reports far"));
                done = true;
                break;
            }
        }
    checked = 0;
    AxiomEntry within = pass_entry("within-peters", std::uint64_t{nsub} * nsub,
                                   "every near pair has intersecting descriptions");
    done = false;
    for (Mask a = 0; a < nsub && !done; ++a)
        for (Mask b = 0; b < nsub; ++b) {
            ++checked;
            if (eng.near(a, b) && (eng.desc_mask(a) & eng.desc_mask(b)) == 0) {
                within = fail_entry("within-peters", checked,
                                    witness({{"A", eng.ids(a)}, {"B", eng.ids(b)}},
                                            "the relation reports near though no "
                                            "description is shared"));
                done = true;
                break;
            }
        }
    const bool sup = contains.status == CheckStatus::pass;
    const bool sub = within.status == CheckStatus::pass;
    rep.classification = sup ? (sub ? "equivalent" : "weaker") : (sub ? "stronger" : "incomparable");
    rep.entries.push_back(std::move(contains));
    rep.entries.push_back(std::move(within));
}

void cech_entries(const MaskEngine& eng, const RelationSpec& rel,
                  std::vector<AxiomEntry>& out) {
    out.push_back(d0_entry(eng, "D0"));
    out.push_back(d1_entry(eng, "D1"));
    out.push_back(d2_entry(eng, rel, "D2"));
    out.push_back(d3_entry(eng, "D3.parts-to-union", true));
    out.push_back(d3_entry(eng, "D3.union-to-parts", false));
}

// ---------------------------------------------------------------------------
// Sampled mode: deterministic pseudo-random tuples; each entry draws from its
// own seed stream so reports are stable under reordering.

struct SampledCheck {
    const RelationSpec& rel;
    const DescribedSpace& space;
    const CheckBudget& budget;

    std::mt19937_64 rng_for(std::string_view id) const {
        return std::mt19937_64(mix_seed(budget.seed, id));
    }
    bool near(const PointSet& a, const PointSet& b) const {
        return descprox::near(rel, space, a, b);
    }
    bool strongly_included(const PointSet& a, const PointSet& b) const {
        return !near(a, b.complement());
    }
};

PointSet draw_subset(const DescribedSpace& space, std::mt19937_64& rng) {
    PointSet s = space.empty_set();
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (i % 64 == 0) word = rng();
        if ((word >> (i % 64)) & 1u) s.add(i);
    }
    return s;
}

std::string pair_tag(std::string_view prefix, const PointSet& a, const PointSet& b) {
    std::string key(prefix);
    key += ':';
    for (const auto& id : a.ids()) {
        key += id;
        key += ',';
    }
    key += '|';
    for (const auto& id : b.ids()) {
        key += id;
        key += ',';
    }
    return key;
}

constexpr std::size_t kCanonicalCandidates = 6;
constexpr std::size_t kRandomCandidates = 64;

// Candidate family for separator/interpolant searches on sampled budgets. The
// family is a deterministic function of the pair and the seed, so a recorded
// failure replays to the same exhausted search.
std::vector<PointSet> separator_candidates(const DescribedSpace& space, const PointSet& a,
                                           const PointSet& b, std::uint64_t seed,
                                           std::string_view tag) {
    const PointSet sat_a = saturation(space, a);
    const PointSet sat_b = saturation(space, b);
    std::vector<PointSet> out;
    out.reserve(kCanonicalCandidates + kRandomCandidates);
    out.push_back(sat_a.complement());
    out.push_back(sat_a);
    out.push_back(sat_b.complement());
    out.push_back(sat_b);
    out.push_back(space.empty_set());
    out.push_back(space.full_set());
    std::mt19937_64 rng(mix_seed(seed, pair_tag(tag, a, b)));
    for (std::size_t k = 0; k < kRandomCandidates; ++k) out.push_back(draw_subset(space, rng));
    return out;
}

std::vector<PointSet> interpolant_candidates(const DescribedSpace& space, const PointSet& a,
                                             const PointSet& b, std::uint64_t seed) {
    const PointSet sat_a = saturation(space, a);
    std::vector<PointSet> out;
    out.reserve(kCanonicalCandidates + kRandomCandidates);
    out.push_back(sat_a);
    out.push_back(a);
    out.push_back(b);
    out.push_back(saturation(space, b));
    out.push_back(space.empty_set());
    out.push_back(space.full_set());
    std::mt19937_64 rng(mix_seed(seed, pair_tag("EF2", a, b)));
    for (std::size_t k = 0; k < kRandomCandidates; ++k) out.push_back(draw_subset(space, rng));
    return out;
}

AxiomEntry sampled_d0(const SampledCheck& ctx, std::string id) {
    auto rng = ctx.rng_for(id);
    const PointSet empty = ctx.space.empty_set();
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng);
        if (ctx.near(empty, a))
            return fail_entry(std::move(id), k + 1,
                              witness({{"A", {}}, {"B", a.ids()}},
                                      "the empty set is reported near B"));
        if (ctx.near(a, empty))
            return fail_entry(std::move(id), k + 1,
                              witness({{"A", a.ids()}, {"B", {}}},
                                      "A is reported near the empty set"));
    }
    return pass_entry(std::move(id), ctx.budget.sample_count, "sampled");
}

AxiomEntry sampled_d1(const SampledCheck& ctx, std::string id) {
    auto rng = ctx.rng_for(id);
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng);
        const PointSet b = draw_subset(ctx.space, rng);
        if (ctx.near(a, b) != ctx.near(b, a))
            return fail_entry(std::move(id), k + 1,
                              witness({{"A", a.ids()}, {"B", b.ids()}},
                                      "nearness of A and B is not symmetric"));
    }
    return pass_entry(std::move(id), ctx.budget.sample_count, "sampled");
}

AxiomEntry sampled_d2(const SampledCheck& ctx, std::string id) {
    auto rng = ctx.rng_for(id);
    const bool set_premise = ctx.rel.kind == RelationKind::discrete;
    std::uint64_t premise_hits = 0;
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng);
        const PointSet b = draw_subset(ctx.space, rng);
        const bool premise = set_premise
                                 ? a.intersects(b)
                                 : !descriptive_intersection(ctx.space, a, b).empty();
        if (!premise) continue;
        ++premise_hits;
        if (!ctx.near(a, b))
            return fail_entry(std::move(id), k + 1,
                              witness({{"A", a.ids()}, {"B", b.ids()}},
                                      set_premise
                                          ? "A and B share a point yet are reported far"
                                          : "A and B share a description yet are reported "
                                            "far"));
    }
    return pass_entry(std::move(id), ctx.budget.sample_count,
                      "sampled; premise held in " + std::to_string(premise_hits) + " of " +
                          std::to_string(ctx.budget.sample_count) + " draws");
}

AxiomEntry sampled_d3(const SampledCheck& ctx, std::string id, bool parts_to_union) {
    auto rng = ctx.rng_for(id);
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng);
        const PointSet b = draw_subset(ctx.space, rng);
        const PointSet c = draw_subset(ctx.space, rng);
        if (parts_to_union) {
            if ((ctx.near(a, b) || ctx.near(a, c)) && !ctx.near(a, b | c))
                return fail_entry(std::move(id), k + 1,
                                  witness({{"A", a.ids()}, {"B", b.ids()}, {"C", c.ids()}},
                                          "A is near one part yet far from the union"));
        } else {
            if (ctx.near(a, b | c) && !ctx.near(a, b) && !ctx.near(a, c))
                return fail_entry(std::move(id), k + 1,
                                  witness({{"A", a.ids()}, {"B", b.ids()}, {"C", c.ids()}},
                                          "A is near the union yet far from both parts"));
        }
    }
    return pass_entry(std::move(id), ctx.budget.sample_count, "sampled");
}

bool every_point_near(const SampledCheck& ctx, const PointSet& b, const PointSet& c) {
    if (b.empty()) return true;
    if (ctx.rel.kind == RelationKind::discrete) return b.subset_of(c);
    const FeatureSet fc = phi_image(ctx.space, c);
    for (std::size_t i : b.indices()) {
        const FeatureSet fb({ctx.space.description_of(i)});
        if (!near_features(ctx.rel, ctx.space, fb, fc)) return false;
    }
    return true;
}

AxiomEntry sampled_d4(const SampledCheck& ctx, std::string id) {
    auto rng = ctx.rng_for(id);
    std::uint64_t premise_hits = 0;
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng);
        const PointSet b = draw_subset(ctx.space, rng);
        const PointSet c = draw_subset(ctx.space, rng);
        if (b.empty() || c.empty() || !ctx.near(a, b)) continue;
        if (!every_point_near(ctx, b, c)) continue;
        ++premise_hits;
        if (!ctx.near(a, c))
            return fail_entry(std::move(id), k + 1,
                              witness({{"A", a.ids()}, {"B", b.ids()}, {"C", c.ids()}},
                                      "A is near B and every point of B is near C, yet A "
                                      "is far from C"));
    }
    return pass_entry(std::move(id), ctx.budget.sample_count,
                      "sampled; premise held in " + std::to_string(premise_hits) + " of " +
                          std::to_string(ctx.budget.sample_count) + " draws");
}

AxiomEntry sampled_ef(const SampledCheck& ctx) {
    auto rng = ctx.rng_for("EF");
    std::uint64_t far_pairs = 0, via_canonical = 0, via_random = 0;
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng);
        const PointSet b = draw_subset(ctx.space, rng);
        if (ctx.near(a, b)) continue;
        ++far_pairs;
        bool found = false;
        std::size_t idx = 0;
        for (const PointSet& e :
             separator_candidates(ctx.space, a, b, ctx.budget.seed, "EF")) {
            if (!ctx.near(a, e) && !ctx.near(e.complement(), b)) {
                found = true;
                (idx < kCanonicalCandidates ? via_canonical : via_random) += 1;
                break;
            }
            ++idx;
        }
        if (!found)
            return fail_entry("EF", k + 1,
                              witness({{"A", a.ids()}, {"B", b.ids()}},
                                      "no separator within the searched candidate family"));
    }
    return pass_entry("EF", ctx.budget.sample_count,
                      "sampled; far pairs: " + std::to_string(far_pairs) +
                          "; separators via canonical candidates: " +
                          std::to_string(via_canonical) +
                          ", random candidates: " + std::to_string(via_random));
}

AxiomEntry sampled_ef2(const SampledCheck& ctx) {
    auto rng = ctx.rng_for("EF2");
    std::uint64_t included = 0, via_canonical = 0, via_random = 0;
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng);
        const PointSet b = draw_subset(ctx.space, rng);
        if (!ctx.strongly_included(a, b)) continue;
        ++included;
        bool found = false;
        std::size_t idx = 0;
        for (const PointSet& c : interpolant_candidates(ctx.space, a, b, ctx.budget.seed)) {
            if (ctx.strongly_included(a, c) && ctx.strongly_included(c, b)) {
                found = true;
                (idx < kCanonicalCandidates ? via_canonical : via_random) += 1;
                break;
            }
            ++idx;
        }
        if (!found)
            return fail_entry("EF2", k + 1,
                              witness({{"A", a.ids()}, {"B", b.ids()}},
                                      "no interpolant within the searched candidate family"));
    }
    return pass_entry("EF2", ctx.budget.sample_count,
                      "sampled; strongly included pairs: " + std::to_string(included) +
                          "; interpolants via canonical candidates: " +
                          std::to_string(via_canonical) +
                          ", random candidates: " + std::to_string(via_random));
}

AxiomEntry sampled_s2(const SampledCheck& ctx) {
    auto rng = ctx.rng_for("S2");
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng);
        const PointSet b = draw_subset(ctx.space, rng);
        if (!ctx.near(a, b)) continue;
        if (descriptive_intersection(ctx.space, a, b).empty())
            return fail_entry("S2", k + 1,
                              witness({{"A", a.ids()}, {"B", b.ids()}},
                                      "A is near B yet the descriptive intersection is "
                                      "empty"));
    }
    return pass_entry("S2", ctx.budget.sample_count,
                      "sampled; oracle: descriptive_intersection");
}

void sampled_kuratowski(const SampledCheck& ctx, std::vector<AxiomEntry>& out) {
    const PointSet empty_cl = closure(ctx.rel, ctx.space, ctx.space.empty_set());
    if (empty_cl.empty())
        out.push_back(pass_entry("K1.empty", 1, "cl(empty) = empty"));
    else
        out.push_back(fail_entry("K1.empty", 1,
                                 witness({{"A", {}}}, "closure of the empty set is nonempty")));

    const AxiomEntry d2 = sampled_d2(ctx, "K2.gate");
    if (d2.status != CheckStatus::pass) {
        out.push_back(skip_entry("K2.extensive",
                                 "conditional: extensivity presupposes the "
                                 "descriptive-intersection lower bound, which this relation "
                                 "does not satisfy"));
    } else {
        auto rng = ctx.rng_for("K2.extensive");
        AxiomEntry k2 = pass_entry("K2.extensive", ctx.budget.sample_count, "sampled");
        for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
            const PointSet a = draw_subset(ctx.space, rng);
            if (!a.subset_of(closure(ctx.rel, ctx.space, a))) {
                k2 = fail_entry("K2.extensive", k + 1,
                                witness({{"A", a.ids()}}, "A is not contained in cl(A)"));
                break;
            }
        }
        out.push_back(std::move(k2));
    }

    {
        auto rng = ctx.rng_for("K3.additive");
        AxiomEntry k3 = pass_entry("K3.additive", ctx.budget.sample_count, "sampled");
        for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
            const PointSet a = draw_subset(ctx.space, rng);
            const PointSet b = draw_subset(ctx.space, rng);
            if (closure(ctx.rel, ctx.space, a | b) !=
                (closure(ctx.rel, ctx.space, a) | closure(ctx.rel, ctx.space, b))) {
                k3 = fail_entry("K3.additive", k + 1,
                                witness({{"A", a.ids()}, {"B", b.ids()}},
                                        "cl(A union B) differs from cl(A) union cl(B)"));
                break;
            }
        }
        out.push_back(std::move(k3));
    }

    {
        auto rng = ctx.rng_for("K4.idempotent");
        AxiomEntry k4 = pass_entry("K4.idempotent", ctx.budget.sample_count, "sampled");
        for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
            const PointSet a = draw_subset(ctx.space, rng);
            const PointSet cl = closure(ctx.rel, ctx.space, a);
            if (closure(ctx.rel, ctx.space, cl) != cl) {
                k4 = fail_entry("K4.idempotent", k + 1,
                                witness({{"A", a.ids()}}, "cl(cl(A)) differs from cl(A)"));
                break;
            }
        }
        out.push_back(std::move(k4));
    }
}

void sampled_classify(const SampledCheck& ctx, AxiomReport& rep) {
    const RelationSpec peters = RelationSpec::peters();
    auto rng_contains = ctx.rng_for("contains-peters");
    AxiomEntry contains = pass_entry("contains-peters", ctx.budget.sample_count,
                                     "sampled; no missed descriptive overlap found");
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng_contains);
        const PointSet b = draw_subset(ctx.space, rng_contains);
        if (descprox::near(peters, ctx.space, a, b) && !ctx.near(a, b)) {
            contains = fail_entry("contains-peters", k + 1,
                                  witness({{"A", a.ids()}, {"B", b.ids()}},
                                          "descriptions intersect yet the relation reports "
                                          "far"));
            break;
        }
    }
    auto rng_within = ctx.rng_for("within-peters");
    AxiomEntry within = pass_entry("within-peters", ctx.budget.sample_count,
                                   "sampled; no near pair without shared descriptions found");
    for (std::uint32_t k = 0; k < ctx.budget.sample_count; ++k) {
        const PointSet a = draw_subset(ctx.space, rng_within);
        const PointSet b = draw_subset(ctx.space, rng_within);
        if (ctx.near(a, b) && !descprox::near(peters, ctx.space, a, b)) {
            within = fail_entry("within-peters", k + 1,
                                witness({{"A", a.ids()}, {"B", b.ids()}},
                                        "the relation reports near though no description is "
                                        "shared"));
            break;
        }
    }
    const bool sup = contains.status == CheckStatus::pass;
    const bool sub = within.status == CheckStatus::pass;
    rep.classification = sup ? (sub ? "equivalent" : "weaker") : (sub ? "stronger" : "incomparable");
    rep.entries.push_back(std::move(contains));
    rep.entries.push_back(std::move(within));
}

void sampled_cech(const SampledCheck& ctx, std::vector<AxiomEntry>& out) {
    out.push_back(sampled_d0(ctx, "D0"));
    out.push_back(sampled_d1(ctx, "D1"));
    out.push_back(sampled_d2(ctx, "D2"));
    out.push_back(sampled_d3(ctx, "D3.parts-to-union", true));
    out.push_back(sampled_d3(ctx, "D3.union-to-parts", false));
}

PointSet role_set(const DescribedSpace& space, const Witness& w, const std::string& name) {
    const std::vector<std::string>* ids = w.role(name);
    if (!ids)
        throw std::invalid_argument("witness has no recorded set for role " + name);
    return space.set_of(*ids);
}

}  // namespace

Witness& Witness::with(std::string role, std::vector<std::string> ids) {
    sets.emplace_back(std::move(role), std::move(ids));
    return *this;
}

const std::vector<std::string>* Witness::role(const std::string& name) const {
    for (const auto& [role_name, ids] : sets)
        if (role_name == name) return &ids;
    return nullptr;
}

CheckBudget CheckBudget::exhaustive(std::size_t cap) {
    CheckBudget b;
    b.mode = Mode::exhaustive;
    b.subset_cap = cap;
    return b;
}

CheckBudget CheckBudget::sampled(std::uint32_t count, std::uint64_t seed, std::size_t cap) {
    CheckBudget b;
    b.mode = Mode::sampled;
    b.sample_count = count;
    b.seed = seed;
    b.subset_cap = cap;
    return b;
}

void CheckBudget::validate(const DescribedSpace& space) const {
    if (subset_cap == 0 || subset_cap > kHardCap)
        throw std::invalid_argument("subset cap must be between 1 and " +
                                    std::to_string(kHardCap));
    if (is_exhaustive() && space.size() > subset_cap)
        throw std::invalid_argument(
            "space has " + std::to_string(space.size()) +
            " points but exhaustive checking is capped at " + std::to_string(subset_cap) +
            " (raise the subset cap or switch to sampled mode)");
    if (!is_exhaustive() && sample_count == 0)
        throw std::invalid_argument("sampled mode requires a positive sample count");
}

bool AxiomReport::all_pass() const {
    return std::none_of(entries.begin(), entries.end(),
                        [](const AxiomEntry& e) { return e.status == CheckStatus::fail; });
}

const AxiomEntry& AxiomReport::entry(const std::string& axiom) const {
    for (const AxiomEntry& e : entries)
        if (e.axiom == axiom) return e;
    throw std::out_of_range("report has no entry for axiom " + axiom);
}

namespace {

const char* status_text(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "unknown";
}

json witness_to_json(const Witness& w) {
    json sets = json::object();
    for (const auto& [role, ids] : w.sets) sets[role] = ids;
    json out;
    out["detail"] = w.detail;
    out["sets"] = std::move(sets);
    if (!w.extra.is_null()) out["extra"] = w.extra;
    return out;
}

}  // namespace

json AxiomReport::to_json() const {
    json entries_json = json::array();
    for (const AxiomEntry& e : entries) {
        json je;
        je["axiom"] = e.axiom;
        je["status"] = status_text(e.status);
        je["pairs_checked"] = e.pairs_checked;
        je["note"] = e.note;
        if (e.witness) je["witness"] = witness_to_json(*e.witness);
        entries_json.push_back(std::move(je));
    }
    json out;
    out["version"] = "axiom-report/1";
    out["suite"] = suite;
    out["relation"] = relation;
    out["budget"] = {{"mode", budget.is_exhaustive() ? "exhaustive" : "sampled"},
                     {"sample_count", budget.sample_count},
                     {"seed", budget.seed},
                     {"subset_cap", budget.subset_cap}};
    out["space"] = {{"points", points}, {"arity", arity}, {"classes", classes}};
    if (!classification.empty()) out["classification"] = classification;
    out["all_pass"] = all_pass();
    out["entries"] = std::move(entries_json);
    return out;
}

std::string AxiomReport::canonical_text() const { return to_json().dump(2) + "\n"; }

AxiomReport check_cech(const RelationSpec& rel, const DescribedSpace& space,
                       const CheckBudget& budget) {
    budget.validate(space);
    AxiomReport rep = base_report("cech", rel.name(), space, budget);
    if (budget.is_exhaustive()) {
        const MaskEngine eng(rel, space);
        cech_entries(eng, rel, rep.entries);
    } else {
        const SampledCheck ctx{rel, space, budget};
        sampled_cech(ctx, rep.entries);
    }
    return rep;
}

AxiomReport check_lodato(const RelationSpec& rel, const DescribedSpace& space,
                         const CheckBudget& budget) {
    budget.validate(space);
    AxiomReport rep = base_report("lodato", rel.name(), space, budget);
    if (budget.is_exhaustive()) {
        const MaskEngine eng(rel, space);
        cech_entries(eng, rel, rep.entries);
        rep.entries.push_back(d4_entry(eng, "D4"));
    } else {
        const SampledCheck ctx{rel, space, budget};
        sampled_cech(ctx, rep.entries);
        rep.entries.push_back(sampled_d4(ctx, "D4"));
    }
    return rep;
}

AxiomReport check_ef(const RelationSpec& rel, const DescribedSpace& space,
                     const CheckBudget& budget) {
    budget.validate(space);
    AxiomReport rep = base_report("ef", rel.name(), space, budget);
    if (budget.is_exhaustive()) {
        const MaskEngine eng(rel, space);
        rep.entries.push_back(ef_entry(eng));
    } else {
        const SampledCheck ctx{rel, space, budget};
        rep.entries.push_back(sampled_ef(ctx));
    }
    return rep;
}

AxiomReport check_separated(const RelationSpec& rel, const DescribedSpace& space) {
    AxiomReport rep = base_report("separated", rel.name(), space, CheckBudget{});
    const std::size_t n = space.size();
    const std::size_t classes = space.distinct_count();
    const std::uint64_t checked = std::uint64_t{n} * n;
    if (rel.kind == RelationKind::discrete) {
        rep.entries.push_back(
            pass_entry("P5", checked, "distinct singletons never share a point"));
        return rep;
    }
    std::vector<std::size_t> rep_point(classes, n);
    std::vector<std::size_t> second_point(classes, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t d = space.description_index(i);
        if (rep_point[d] == n)
            rep_point[d] = i;
        else if (second_point[d] == n)
            second_point[d] = i;
    }
    for (std::size_t d = 0; d < classes; ++d) {
        const FeatureSet fd({space.distinct_description(d)});
        for (std::size_t e = 0; e < classes; ++e) {
            if (d == e && second_point[d] == n) continue;
            const FeatureSet fe({space.distinct_description(e)});
            if (!near_features(rel, space, fd, fe)) continue;
            const std::size_t x = rep_point[d];
            const std::size_t y = d == e ? second_point[d] : rep_point[e];
            rep.entries.push_back(fail_entry(
                "P5", checked,
                witness({{"A", {space.id_of(x)}}, {"B", {space.id_of(y)}}},
                        "distinct points are reported near")));
            return rep;
        }
    }
    rep.entries.push_back(pass_entry(
        "P5", checked,
        "decided through " + std::to_string(classes) + " description classes"));
    return rep;
}

AxiomReport check_strong(const RelationSpec& rel, const DescribedSpace& space,
                         const CheckBudget& budget) {
    budget.validate(space);
    AxiomReport rep = base_report("strong", rel.name(), space, budget);
    if (budget.is_exhaustive()) {
        const MaskEngine eng(rel, space);
        rep.entries.push_back(d0_entry(eng, "S0"));
        rep.entries.push_back(d1_entry(eng, "S1"));
        rep.entries.push_back(s2_entry(eng));
        rep.entries.push_back(d3_entry(eng, "S3.parts-to-union", true));
        rep.entries.push_back(d3_entry(eng, "S3.union-to-parts", false));
        rep.entries.push_back(d4_entry(eng, "S4"));
    } else {
        const SampledCheck ctx{rel, space, budget};
        rep.entries.push_back(sampled_d0(ctx, "S0"));
        rep.entries.push_back(sampled_d1(ctx, "S1"));
        rep.entries.push_back(sampled_s2(ctx));
        rep.entries.push_back(sampled_d3(ctx, "S3.parts-to-union", true));
        rep.entries.push_back(sampled_d3(ctx, "S3.union-to-parts", false));
        rep.entries.push_back(sampled_d4(ctx, "S4"));
    }
    return rep;
}

AxiomReport check_kuratowski(const RelationSpec& rel, const DescribedSpace& space,
                             const CheckBudget& budget) {
    budget.validate(space);
    AxiomReport rep = base_report("kuratowski", rel.name(), space, budget);
    if (budget.is_exhaustive()) {
        const MaskEngine eng(rel, space);
        kuratowski_entries(eng, rel, rep.entries);
    } else {
        const SampledCheck ctx{rel, space, budget};
        sampled_kuratowski(ctx, rep.entries);
    }
    return rep;
}

AxiomReport check_ef_betweenness(const RelationSpec& rel, const DescribedSpace& space,
                                 const CheckBudget& budget) {
    budget.validate(space);
    AxiomReport rep = base_report("betweenness", rel.name(), space, budget);
    if (budget.is_exhaustive()) {
        const MaskEngine eng(rel, space);
        rep.entries.push_back(ef2_entry(eng));
    } else {
        const SampledCheck ctx{rel, space, budget};
        rep.entries.push_back(sampled_ef2(ctx));
    }
    return rep;
}

AxiomReport classify_vs_peters(const RelationSpec& rel, const DescribedSpace& space,
                               const CheckBudget& budget) {
    budget.validate(space);
    AxiomReport rep = base_report("classify", rel.name(), space, budget);
    if (budget.is_exhaustive()) {
        const MaskEngine eng(rel, space);
        classify_entries(eng, rep);
    } else {
        const SampledCheck ctx{rel, space, budget};
        sampled_classify(ctx, rep);
    }
    return rep;
}

namespace {

std::vector<RationalPoint> enlargement_probes(const EnlargementOperator& op,
                                              const std::vector<FeatureVector>& descriptions) {
    std::vector<RationalPoint> probes;
    const std::size_t arity = descriptions.empty() ? 0 : descriptions.front().arity();
    auto as_point = [&](const FeatureVector& v) {
        RationalPoint p(arity);
        for (std::size_t k = 0; k < arity; ++k) p[k] = Rational(BigInt(v[k]));
        return p;
    };
    for (const FeatureVector& v : descriptions) probes.push_back(as_point(v));
    for (std::size_t i = 0; i < descriptions.size(); ++i)
        for (std::size_t j = i + 1; j < descriptions.size(); ++j) {
            RationalPoint mid(arity);
            for (std::size_t k = 0; k < arity; ++k)
                mid[k] = (Rational(BigInt(descriptions[i][k])) +
                          Rational(BigInt(descriptions[j][k]))) /
                         Rational(BigInt(2));
            probes.push_back(std::move(mid));
        }
    if (op.radius.numerator() != 0) {
        const Rational offsets[2] = {op.radius, op.radius / Rational(BigInt(2))};
        for (const FeatureVector& v : descriptions)
            for (std::size_t k = 0; k < arity; ++k)
                for (const Rational& off : offsets) {
                    RationalPoint p = as_point(v);
                    p[k] += off;
                    probes.push_back(p);
                    p[k] -= off + off;
                    probes.push_back(std::move(p));
                }
    }
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
    return probes;
}

json feature_set_json(const FeatureSet& s) {
    json arr = json::array();
    for (const FeatureVector& v : s) arr.push_back(v.values());
    return arr;
}

json probe_json(const RationalPoint& z) {
    json arr = json::array();
    for (const Rational& q : z) arr.push_back(rational_to_string(q));
    return arr;
}

FeatureSet feature_set_from_json(const json& arr) {
    std::vector<FeatureVector> vecs;
    for (const json& jv : arr) vecs.emplace_back(jv.get<std::vector<std::int64_t>>());
    return FeatureSet(std::move(vecs));
}

RationalPoint probe_from_json(const json& arr) {
    RationalPoint z;
    for (const json& jq : arr) z.push_back(parse_rational(jq.get<std::string>()));
    return z;
}

Witness enlargement_witness(const FeatureSet& p, const FeatureSet& q, const RationalPoint& z,
                            std::string detail) {
    Witness w;
    w.detail = std::move(detail);
    w.extra = json{{"P", feature_set_json(p)}, {"Q", feature_set_json(q)}, {"probe", probe_json(z)}};
    return w;
}

}  // namespace

AxiomReport check_enlargement(const EnlargementOperator& op, const DescribedSpace& space,
                              const CheckBudget& budget) {
    if (budget.subset_cap == 0 || budget.subset_cap > kHardCap)
        throw std::invalid_argument("subset cap must be between 1 and " +
                                    std::to_string(kHardCap));
    AxiomReport rep = base_report("enlargement", op.name, space, budget);
    if (!op.contains) {
        const std::string reason =
            "operator exposes no exact membership test; region equality is undecidable here";
        rep.entries.push_back(skip_entry("additivity", reason));
        rep.entries.push_back(skip_entry("extensionality", reason));
        return rep;
    }
    const std::size_t classes = space.distinct_count();
    std::vector<FeatureVector> descriptions;
    descriptions.reserve(classes);
    for (std::size_t d = 0; d < classes; ++d)
        descriptions.push_back(space.distinct_description(d));

    if (budget.is_exhaustive()) {
        if (classes > budget.subset_cap)
            throw std::invalid_argument(
                "space realizes " + std::to_string(classes) +
                " distinct descriptions but exhaustive enlargement checking is capped at " +
                std::to_string(budget.subset_cap) +
                " (raise the subset cap or switch to sampled mode)");
        const std::vector<RationalPoint> probes = enlargement_probes(op, descriptions);
        const Mask dsub = Mask{1} << classes;
        std::vector<FeatureSet> fsets(dsub);
        for (Mask dm = 1; dm < dsub; ++dm) {
            FeatureSet f = fsets[dm & (dm - 1)];
            f.insert(descriptions[static_cast<std::size_t>(std::countr_zero(dm))]);
            fsets[dm] = std::move(f);
        }
        std::vector<bool> member(std::size_t{dsub} * probes.size(), false);
        for (Mask dm = 0; dm < dsub; ++dm)
            for (std::size_t z = 0; z < probes.size(); ++z)
                member[std::size_t{dm} * probes.size() + z] = op.contains(fsets[dm], probes[z]);
        auto in = [&](Mask dm, std::size_t z) {
            return static_cast<bool>(member[std::size_t{dm} * probes.size() + z]);
        };

        std::uint64_t checked = 0;
        AxiomEntry additivity =
            pass_entry("additivity", std::uint64_t{dsub} * dsub,
                       "decided on " + std::to_string(probes.size()) + " probe points");
        bool done = false;
        for (Mask p = 0; p < dsub && !done; ++p)
            for (Mask q = 0; q < dsub && !done; ++q) {
                ++checked;
                for (std::size_t z = 0; z < probes.size(); ++z)
                    if (in(p | q, z) != (in(p, z) || in(q, z))) {
                        additivity = fail_entry(
                            "additivity", checked,
                            enlargement_witness(fsets[p], fsets[q], probes[z],
                                                "e(P union Q) and e(P) union e(Q) disagree "
                                                "at a probe point"));
                        done = true;
                        break;
                    }
            }
        rep.entries.push_back(std::move(additivity));

        checked = 0;
        AxiomEntry extensionality =
            pass_entry("extensionality", std::uint64_t{dsub} * dsub,
                       "decided on " + std::to_string(probes.size()) + " probe points");
        done = false;
        for (Mask p = 0; p < dsub && !done; ++p)
            for (Mask q = 0; q < dsub && !done; ++q) {
                ++checked;
                if ((p & q) != p) continue;
                for (std::size_t z = 0; z < probes.size(); ++z)
                    if (in(p, z) && !in(q, z)) {
                        extensionality = fail_entry(
                            "extensionality", checked,
                            enlargement_witness(fsets[p], fsets[q], probes[z],
                                                "P is contained in Q but e(P) is not "
                                                "contained in e(Q)"));
                        done = true;
                        break;
                    }
            }
        rep.entries.push_back(std::move(extensionality));
        return rep;
    }

    if (budget.sample_count == 0)
        throw std::invalid_argument("sampled mode requires a positive sample count");
    auto draw_descriptions = [&](std::mt19937_64& rng) {
        std::vector<FeatureVector> chosen;
        std::uint64_t word = 0;
        for (std::size_t d = 0; d < classes; ++d) {
            if (d % 64 == 0) word = rng();
            if ((word >> (d % 64)) & 1u) chosen.push_back(descriptions[d]);
        }
        return FeatureSet(std::move(chosen));
    };
    {
        std::mt19937_64 rng(mix_seed(budget.seed, "additivity"));
        AxiomEntry additivity = pass_entry("additivity", budget.sample_count, "sampled");
        for (std::uint32_t k = 0; k < budget.sample_count; ++k) {
            const FeatureSet p = draw_descriptions(rng);
            const FeatureSet q = draw_descriptions(rng);
            const FeatureSet pu = set_union(p, q);
            std::vector<FeatureVector> pool(pu.begin(), pu.end());
            bool violated = false;
            for (const RationalPoint& z : enlargement_probes(op, pool)) {
                if (op.contains(pu, z) != (op.contains(p, z) || op.contains(q, z))) {
                    additivity = fail_entry(
                        "additivity", k + 1,
                        enlargement_witness(p, q, z,
                                            "e(P union Q) and e(P) union e(Q) disagree at a "
                                            "probe point"));
                    violated = true;
                    break;
                }
            }
            if (violated) break;
        }
        rep.entries.push_back(std::move(additivity));
    }
    {
        std::mt19937_64 rng(mix_seed(budget.seed, "extensionality"));
        AxiomEntry extensionality = pass_entry("extensionality", budget.sample_count, "sampled");
        for (std::uint32_t k = 0; k < budget.sample_count; ++k) {
            const FeatureSet p = draw_descriptions(rng);
            const FeatureSet q = set_union(p, draw_descriptions(rng));
            std::vector<FeatureVector> pool(q.begin(), q.end());
            bool violated = false;
            for (const RationalPoint& z : enlargement_probes(op, pool)) {
                if (op.contains(p, z) && !op.contains(q, z)) {
                    extensionality = fail_entry(
                        "extensionality", k + 1,
                        enlargement_witness(p, q, z,
                                            "P is contained in Q but e(P) is not contained "
                                            "in e(Q)"));
                    violated = true;
                    break;
                }
            }
            if (violated) break;
        }
        rep.entries.push_back(std::move(extensionality));
    }
    return rep;
}

AxiomReport run_suite(const std::string& suite, const RelationSpec& rel,
                      const DescribedSpace& space, const CheckBudget& budget) {
    if (suite == "cech") return check_cech(rel, space, budget);
    if (suite == "lodato") return check_lodato(rel, space, budget);
    if (suite == "ef") return check_ef(rel, space, budget);
    if (suite == "separated") return check_separated(rel, space);
    if (suite == "strong") return check_strong(rel, space, budget);
    if (suite == "kuratowski") return check_kuratowski(rel, space, budget);
    if (suite == "betweenness") return check_ef_betweenness(rel, space, budget);
    if (suite == "classify") return classify_vs_peters(rel, space, budget);
    throw std::invalid_argument(
        "unknown suite \"" + suite +
        "\" (expected cech, lodato, ef, separated, strong, kuratowski, betweenness or "
        "classify)");
}

namespace {

bool replay_ef(const RelationSpec& rel, const DescribedSpace& space, const PointSet& a,
               const PointSet& b, const CheckBudget& budget) {
    if (near(rel, space, a, b)) return false;
    if (budget.is_exhaustive()) {
        const std::uint64_t nsub = std::uint64_t{1} << space.size();
        for (std::uint64_t e = 0; e < nsub; ++e) {
            const PointSet sep = PointSet::from_mask(space, e);
            if (!near(rel, space, a, sep) && !near(rel, space, sep.complement(), b))
                return false;
        }
        return true;
    }
    for (const PointSet& e : separator_candidates(space, a, b, budget.seed, "EF"))
        if (!near(rel, space, a, e) && !near(rel, space, e.complement(), b)) return false;
    return true;
}

bool replay_ef2(const RelationSpec& rel, const DescribedSpace& space, const PointSet& a,
                const PointSet& b, const CheckBudget& budget) {
    if (!strong_inclusion(rel, space, a, b)) return false;
    auto interpolates = [&](const PointSet& c) {
        return strong_inclusion(rel, space, a, c) && strong_inclusion(rel, space, c, b);
    };
    if (budget.is_exhaustive()) {
        const std::uint64_t nsub = std::uint64_t{1} << space.size();
        for (std::uint64_t c = 0; c < nsub; ++c)
            if (interpolates(PointSet::from_mask(space, c))) return false;
        return true;
    }
    for (const PointSet& c : interpolant_candidates(space, a, b, budget.seed))
        if (interpolates(c)) return false;
    return true;
}

}  // namespace

bool replay_witness(const AxiomEntry& entry, const RelationSpec& rel,
                    const DescribedSpace& space, const CheckBudget& budget) {
    if (!entry.witness) return false;
    const Witness& w = *entry.witness;
    const std::string& axiom = entry.axiom;
    auto get = [&](const char* role) { return role_set(space, w, role); };

    if (axiom == "D0" || axiom == "S0") {
        const PointSet a = get("A"), b = get("B");
        return (a.empty() || b.empty()) && near(rel, space, a, b);
    }
    if (axiom == "D1" || axiom == "S1") {
        const PointSet a = get("A"), b = get("B");
        return near(rel, space, a, b) != near(rel, space, b, a);
    }
    if (axiom == "D2") {
        const PointSet a = get("A"), b = get("B");
        const bool premise = rel.kind == RelationKind::discrete
                                 ? a.intersects(b)
                                 : !descriptive_intersection(space, a, b).empty();
        return premise && !near(rel, space, a, b);
    }
    if (axiom == "S2") {
        const PointSet a = get("A"), b = get("B");
        return near(rel, space, a, b) && descriptive_intersection(space, a, b).empty();
    }
    if (axiom == "D3.parts-to-union" || axiom == "S3.parts-to-union") {
        const PointSet a = get("A"), b = get("B"), c = get("C");
        return (near(rel, space, a, b) || near(rel, space, a, c)) &&
               !near(rel, space, a, b | c);
    }
    if (axiom == "D3.union-to-parts" || axiom == "S3.union-to-parts") {
        const PointSet a = get("A"), b = get("B"), c = get("C");
        return near(rel, space, a, b | c) && !near(rel, space, a, b) &&
               !near(rel, space, a, c);
    }
    if (axiom == "D4" || axiom == "S4") {
        const PointSet a = get("A"), b = get("B"), c = get("C");
        if (b.empty() || !near(rel, space, a, b) || near(rel, space, a, c)) return false;
        for (std::size_t i : b.indices())
            if (!near(rel, space, space.singleton(i), c)) return false;
        return true;
    }
    if (axiom == "EF") return replay_ef(rel, space, get("A"), get("B"), budget);
    if (axiom == "EF2") return replay_ef2(rel, space, get("A"), get("B"), budget);
    if (axiom == "P5") {
        const PointSet a = get("A"), b = get("B");
        return a.size() == 1 && b.size() == 1 && !(a == b) && near(rel, space, a, b);
    }
    if (axiom == "K1.empty") return !closure(rel, space, space.empty_set()).empty();
    if (axiom == "K2.extensive") {
        const PointSet a = get("A");
        return !a.subset_of(closure(rel, space, a));
    }
    if (axiom == "K3.additive") {
        const PointSet a = get("A"), b = get("B");
        return closure(rel, space, a | b) !=
               (closure(rel, space, a) | closure(rel, space, b));
    }
    if (axiom == "K4.idempotent") {
        const PointSet a = get("A");
        const PointSet cl = closure(rel, space, a);
        return closure(rel, space, cl) != cl;
    }
    if (axiom == "contains-peters") {
        const PointSet a = get("A"), b = get("B");
        return near(RelationSpec::peters(), space, a, b) && !near(rel, space, a, b);
    }
    if (axiom == "within-peters") {
        const PointSet a = get("A"), b = get("B");
        return near(rel, space, a, b) && !near(RelationSpec::peters(), space, a, b);
    }
    if (axiom == "R0") {
        const PointSet a = get("A"), b = get("B");
        return near(rel, space, a, b) != near(rel, space, b, a);
    }
    if (axiom == "T0") {
        const PointSet a = get("A"), b = get("B");
        return !(a == b) && closure(rel, space, a) == closure(rel, space, b);
    }
    if (axiom == "closed-iff-saturated") {
        const PointSet a = get("A");
        return is_closed(rel, space, a) != (saturation(space, a) == a);
    }
    if (axiom == "classes-clopen") {
        const PointSet a = get("A");
        return !(is_closed(rel, space, a) && is_open(rel, space, a));
    }
    if (axiom == "closed-under-intersection") {
        const PointSet a = get("A"), b = get("B");
        return is_closed(rel, space, a) && is_closed(rel, space, b) &&
               !is_closed(rel, space, a & b);
    }
    throw std::invalid_argument("axiom " + axiom + " has no replayable witness form");
}

bool replay_enlargement_witness(const AxiomEntry& entry, const EnlargementOperator& op,
                                const DescribedSpace&) {
    if (!entry.witness || !op.contains) return false;
    const json& extra = entry.witness->extra;
    const FeatureSet p = feature_set_from_json(extra.at("P"));
    const FeatureSet q = feature_set_from_json(extra.at("Q"));
    const RationalPoint z = probe_from_json(extra.at("probe"));
    if (entry.axiom == "additivity")
        return op.contains(set_union(p, q), z) != (op.contains(p, z) || op.contains(q, z));
    if (entry.axiom == "extensionality")
        return p.subset_of(q) && op.contains(p, z) && !op.contains(q, z);
    throw std::invalid_argument("axiom " + entry.axiom +
                                " is not an enlargement witness form");
}

}  // namespace descprox
