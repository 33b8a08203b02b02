#pragma once

#include "descprox/relations.hpp"
#include "descprox/space.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace descprox {

/// How much of the subset space a checker walks. Exhaustive mode enumerates
/// all 2^|X| subsets and refuses spaces larger than subset_cap; sampled mode
/// draws a fixed number of tuples from a seeded generator and is deterministic
/// given the seed.
struct CheckBudget {
    enum class Mode { exhaustive, sampled };
    Mode mode = Mode::exhaustive;
    std::uint32_t sample_count = 2000;
    std::uint64_t seed = 0;
    std::size_t subset_cap = 8;

    static CheckBudget exhaustive(std::size_t cap = 8);
    static CheckBudget sampled(std::uint32_t count, std::uint64_t seed, std::size_t cap = 8);
    void validate(const DescribedSpace& space) const;
    bool is_exhaustive() const { return mode == Mode::exhaustive; }
};

enum class CheckStatus { pass, fail, skipped };

/// Replayable counterexample. Subsets are recorded as id lists under their
/// role in the axiom ("A", "B", "C", "E"); a recorded empty list means the
/// empty set took part, an absent role means the axiom has no such set.
struct Witness {
    std::vector<std::pair<std::string, std::vector<std::string>>> sets;
    std::string detail;
    nlohmann::json extra;               // structured payload for non-subset witnesses

    Witness& with(std::string role, std::vector<std::string> ids);
    const std::vector<std::string>* role(const std::string& name) const;
};

struct AxiomEntry {
    std::string axiom;
    CheckStatus status = CheckStatus::pass;
    std::uint64_t pairs_checked = 0;
    std::string note;                   // annotation for pass/skipped entries
    std::optional<Witness> witness;     // present exactly when status == fail
};

struct AxiomReport {
    std::string relation;
    std::string suite;
    CheckBudget budget;
    std::size_t points = 0;
    std::size_t arity = 0;
    std::size_t classes = 0;
    std::string classification;         // classify suite only
    std::vector<AxiomEntry> entries;

    bool all_pass() const;
    const AxiomEntry& entry(const std::string& axiom) const;
    nlohmann::json to_json() const;     // sorted keys, version "axiom-report/1"
    std::string canonical_text() const; // to_json().dump(2) + newline
};

AxiomReport check_cech(const RelationSpec&, const DescribedSpace&, const CheckBudget&);
AxiomReport check_lodato(const RelationSpec&, const DescribedSpace&, const CheckBudget&);
AxiomReport check_ef(const RelationSpec&, const DescribedSpace&, const CheckBudget&);
AxiomReport check_separated(const RelationSpec&, const DescribedSpace&);
AxiomReport check_strong(const RelationSpec&, const DescribedSpace&, const CheckBudget&);
AxiomReport check_kuratowski(const RelationSpec&, const DescribedSpace&, const CheckBudget&);
AxiomReport check_ef_betweenness(const RelationSpec&, const DescribedSpace&, const CheckBudget&);
AxiomReport check_enlargement(const EnlargementOperator&, const DescribedSpace&, const CheckBudget&);
AxiomReport classify_vs_peters(const RelationSpec&, const DescribedSpace&, const CheckBudget&);

/// Dispatch by suite name: cech, lodato, ef, separated, strong, kuratowski,
/// betweenness, classify.
AxiomReport run_suite(const std::string& suite, const RelationSpec&, const DescribedSpace&,
                      const CheckBudget&);

/// Re-evaluates a fail witness against the relation; true iff the recorded
/// sets still violate the entry's axiom.
bool replay_witness(const AxiomEntry& entry, const RelationSpec& rel, const DescribedSpace& space,
                    const CheckBudget& budget);

/// Same for entries produced by check_enlargement, whose witnesses record
/// feature tuples rather than point ids.
bool replay_enlargement_witness(const AxiomEntry& entry, const EnlargementOperator& op,
                                const DescribedSpace& space);

}  // namespace descprox
