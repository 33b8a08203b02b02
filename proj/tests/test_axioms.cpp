#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "test_support.hpp"

#include "descprox/axioms.hpp"
#include "descprox/geometry.hpp"
#include "descprox/topology.hpp"

#include <random>
#include <stdexcept>

using namespace descprox;
using testsup::from_mask;
using testsup::make_space;

namespace {

DescribedSpace picture_space() {
    return make_space({{"a", {1, 2}},
                       {"b", {1, 3}},
                       {"c", {2, 4}},
                       {"d", {4, 1}},
                       {"e", {1, 1}},
                       {"f", {2, 4}},
                       {"g", {5, 4}}});
}

bool passed(const AxiomReport& rep, const std::string& id) {
    return rep.entry(id).status == CheckStatus::pass;
}

void require_replay(const AxiomReport& rep, const RelationSpec& rel, const DescribedSpace& space,
                    const CheckBudget& budget) {
    for (const AxiomEntry& e : rep.entries)
        if (e.status == CheckStatus::fail) {
            CAPTURE(e.axiom);
            REQUIRE(e.witness.has_value());
            CHECK(replay_witness(e, rel, space, budget));
        }
}

testsup::NearFn naive_for(const RelationSpec& rel, const DescribedSpace& space) {
    switch (rel.kind) {
        case RelationKind::discrete:
            return [](const PointSet& a, const PointSet& b) {
                return testsup::naive_discrete(a, b);
            };
        case RelationKind::peters:
        case RelationKind::fine_lodato:
            return [&space](const PointSet& a, const PointSet& b) {
                return testsup::naive_peters(space, a, b);
            };
        case RelationKind::beta:
            return [&space](const PointSet& a, const PointSet& b) {
                return testsup::naive_beta(space, a, b);
            };
        case RelationKind::gamma:
            return [&space](const PointSet& a, const PointSet& b) {
                return testsup::naive_gamma(space, a, b);
            };
        case RelationKind::eta:
            return [&space, m = rel.m](const PointSet& a, const PointSet& b) {
                return testsup::naive_eta(space, a, b, m);
            };
        case RelationKind::metric: {
            const std::int64_t eps =
                static_cast<std::int64_t>(rel.epsilon.numerator() / rel.epsilon.denominator());
            return [&space, eps](const PointSet& a, const PointSet& b) {
                return testsup::naive_metric(space, a, b, eps);
            };
        }
        default: throw std::logic_error("no naive oracle for " + rel.name());
    }
}

}  // namespace

TEST_CASE("axiom verdicts agree with brute-force enumeration under naive oracles") {
    std::mt19937_64 rng(211);
    const std::vector<RelationSpec> catalogue = {
        RelationSpec::discrete(), RelationSpec::peters(),   RelationSpec::beta(),
        RelationSpec::gamma(),    RelationSpec::eta(1),     RelationSpec::metric(Rational(BigInt(1))),
    };
    const CheckBudget budget = CheckBudget::exhaustive(8);
    for (int trial = 0; trial < 18; ++trial) {
        auto space = testsup::random_space(rng, 5, 2, 2);
        const RelationSpec& rel = catalogue[trial % catalogue.size()];
        const testsup::NearFn naive = naive_for(rel, space);
        CAPTURE(rel.name());
        CAPTURE(space.size());

        const AxiomReport lodato = check_lodato(rel, space, budget);
        CHECK(passed(lodato, "D0") == testsup::brute_d0(space, naive));
        CHECK(passed(lodato, "D1") == testsup::brute_d1(space, naive));
        CHECK(passed(lodato, "D2") ==
              testsup::brute_d2(space, naive, rel.kind == RelationKind::discrete));
        CHECK(passed(lodato, "D3.parts-to-union") == testsup::brute_d3(space, naive, true));
        CHECK(passed(lodato, "D3.union-to-parts") == testsup::brute_d3(space, naive, false));
        CHECK(passed(lodato, "D4") == testsup::brute_d4(space, naive));
        require_replay(lodato, rel, space, budget);

        const AxiomReport ef = check_ef(rel, space, budget);
        CHECK(passed(ef, "EF") == testsup::brute_ef(space, naive));
        require_replay(ef, rel, space, budget);

        const AxiomReport bt = check_ef_betweenness(rel, space, budget);
        CHECK(passed(bt, "EF2") == testsup::brute_ef2(space, naive));
        require_replay(bt, rel, space, budget);

        const AxiomReport kur = check_kuratowski(rel, space, budget);
        CHECK(passed(kur, "K1.empty"));
        CHECK(passed(kur, "K3.additive") == testsup::brute_k3(space, naive));
        CHECK(passed(kur, "K4.idempotent") == testsup::brute_k4(space, naive));
        require_replay(kur, rel, space, budget);

        // Library closure agrees with a singleton sweep over the naive oracle.
        const std::uint64_t full = (std::uint64_t{1} << space.size()) - 1;
        const PointSet probe = from_mask(space, rng() % (full + 1));
        CHECK(closure(rel, space, probe) == testsup::brute_closure(space, naive, probe));
    }
}

TEST_CASE("pass entries report the full predicted scan size") {
    auto space = make_space({{"p", {0}}, {"q", {0}}, {"r", {1}}, {"s", {2}}});
    const CheckBudget budget = CheckBudget::exhaustive(8);
    const RelationSpec rel = RelationSpec::peters();

    const AxiomReport lodato = check_lodato(rel, space, budget);
    REQUIRE(lodato.all_pass());
    CHECK(lodato.entry("D0").pairs_checked == 16);
    CHECK(lodato.entry("D1").pairs_checked == 256);
    CHECK(lodato.entry("D2").pairs_checked == 256);
    CHECK(lodato.entry("D3.parts-to-union").pairs_checked == 4096);
    CHECK(lodato.entry("D3.union-to-parts").pairs_checked == 4096);
    CHECK(lodato.entry("D4").pairs_checked == 4096);

    const AxiomReport ef = check_ef(rel, space, budget);
    REQUIRE(ef.all_pass());
    CHECK(ef.entry("EF").pairs_checked == 256);

    const AxiomReport bt = check_ef_betweenness(rel, space, budget);
    REQUIRE(bt.all_pass());
    CHECK(bt.entry("EF2").pairs_checked == 256);

    const AxiomReport kur = check_kuratowski(rel, space, budget);
    REQUIRE(kur.all_pass());
    CHECK(kur.entry("K1.empty").pairs_checked == 1);
    CHECK(kur.entry("K2.extensive").pairs_checked == 16);
    CHECK(kur.entry("K3.additive").pairs_checked == 256);
    CHECK(kur.entry("K4.idempotent").pairs_checked == 16);

    const AxiomReport cls = classify_vs_peters(rel, space, budget);
    CHECK(cls.classification == "equivalent");
    CHECK(cls.entry("contains-peters").pairs_checked == 256);
    CHECK(cls.entry("within-peters").pairs_checked == 256);

    const AxiomReport st = check_strong(RelationSpec::strong("img", phi_image(space, space.full_set())),
                                        space, budget);
    REQUIRE(st.all_pass());
    CHECK(st.entry("S0").pairs_checked == 16);
    CHECK(st.entry("S1").pairs_checked == 256);
    CHECK(st.entry("S2").pairs_checked == 256);
    CHECK(st.entry("S3.parts-to-union").pairs_checked == 4096);
    CHECK(st.entry("S3.union-to-parts").pairs_checked == 4096);
    CHECK(st.entry("S4").pairs_checked == 4096);

    // An injective-description space separates points.
    auto inj = make_space({{"p", {0}}, {"q", {1}}, {"r", {2}}});
    const AxiomReport sep = check_separated(rel, inj);
    REQUIRE(sep.all_pass());
    CHECK(sep.entry("P5").pairs_checked == 9);

    // A failing scan stops early, so the count is at most the prediction.
    const AxiomReport gsep = check_separated(RelationSpec::peters(), space);
    CHECK_FALSE(gsep.all_pass());
    const AxiomReport glod = check_lodato(RelationSpec::gamma(), picture_space(), budget);
    const AxiomEntry& d4 = glod.entry("D4");
    REQUIRE(d4.status == CheckStatus::fail);
    CHECK(d4.pairs_checked < std::uint64_t{1} << 21);
    CHECK(d4.pairs_checked > 0);
}

TEST_CASE("coordinatewise nearness fails transitivity-style extension on the picture space") {
    auto space = picture_space();
    const CheckBudget budget = CheckBudget::exhaustive(8);
    const RelationSpec gamma = RelationSpec::gamma();

    const AxiomReport rep = check_lodato(gamma, space, budget);
    CHECK_FALSE(rep.all_pass());
    CHECK(passed(rep, "D0"));
    CHECK(passed(rep, "D1"));
    CHECK(passed(rep, "D2"));
    CHECK(passed(rep, "D3.parts-to-union"));
    CHECK(passed(rep, "D3.union-to-parts"));
    const AxiomEntry& d4 = rep.entry("D4");
    REQUIRE(d4.status == CheckStatus::fail);
    REQUIRE(d4.witness.has_value());
    CHECK(replay_witness(d4, gamma, space, budget));

    // A doctored witness must not replay: choosing C = B voids the far leg.
    AxiomEntry doctored = d4;
    REQUIRE(doctored.witness->role("B") != nullptr);
    for (auto& [role, ids] : doctored.witness->sets)
        if (role == "C") ids = *d4.witness->role("B");
    CHECK_FALSE(replay_witness(doctored, gamma, space, budget));

    // The same relation also breaks closure idempotence here.
    const AxiomReport kur = check_kuratowski(gamma, space, budget);
    CHECK_FALSE(kur.all_pass());
    CHECK(kur.entry("K4.idempotent").status == CheckStatus::fail);
    require_replay(kur, gamma, space, budget);
}

TEST_CASE("coordinatewise-everywhere nearness breaks union decomposition") {
    // Each coordinate of A's image meets the union's image, but neither part
    // alone: the classic three-point configuration.
    auto space = make_space({{"p", {0, 0}}, {"q", {0, 1}}, {"r", {1, 0}}});
    const CheckBudget budget = CheckBudget::exhaustive(8);
    const RelationSpec beta = RelationSpec::beta();

    const AxiomReport rep = check_lodato(beta, space, budget);
    CHECK(passed(rep, "D0"));
    CHECK(passed(rep, "D1"));
    CHECK(passed(rep, "D2"));
    CHECK(passed(rep, "D3.parts-to-union"));
    CHECK(passed(rep, "D4"));
    const AxiomEntry& entry = rep.entry("D3.union-to-parts");
    REQUIRE(entry.status == CheckStatus::fail);
    CHECK(replay_witness(entry, beta, space, budget));

    // The separation property still holds for this relation on such spaces.
    CHECK(check_ef(beta, space, budget).all_pass());

    // And the within-peters direction fails: p is beta-near {q,r} without a
    // shared description, so the relation classifies as weaker.
    const AxiomReport cls = classify_vs_peters(beta, space, budget);
    CHECK(cls.classification == "weaker");
    CHECK(cls.entry("contains-peters").status == CheckStatus::pass);
    CHECK(cls.entry("within-peters").status == CheckStatus::fail);
    require_replay(cls, beta, space, budget);
}

TEST_CASE("doubled-radius ball nearness loses the chaining axiom on a three-point line") {
    auto space = make_space({{"x", {0}}, {"y", {2}}, {"z", {3}}});
    const CheckBudget budget = CheckBudget::exhaustive(8);
    const RelationSpec ball = RelationSpec::enlargement_ball(Rational(BigInt(1)));

    CHECK(check_cech(ball, space, budget).all_pass());
    const AxiomReport rep = check_lodato(ball, space, budget);
    CHECK_FALSE(rep.all_pass());
    const AxiomEntry& d4 = rep.entry("D4");
    REQUIRE(d4.status == CheckStatus::fail);
    CHECK(replay_witness(d4, ball, space, budget));
}

TEST_CASE("kuratowski laws mirror the nearness axioms for pointwise-generated relations") {
    std::mt19937_64 rng(223);
    const std::vector<RelationSpec> pointwise = {
        RelationSpec::discrete(),
        RelationSpec::peters(),
        RelationSpec::gamma(),
        RelationSpec::eta(1),
        RelationSpec::metric(Rational(BigInt(1))),
        RelationSpec::enlargement_ball(Rational(BigInt(1))),
        RelationSpec::fine_lodato(),
    };
    const CheckBudget budget = CheckBudget::exhaustive(8);
    for (int trial = 0; trial < 35; ++trial) {
        auto space = testsup::random_space(rng, 6, 2, 3);
        const RelationSpec& rel = pointwise[trial % pointwise.size()];
        CAPTURE(rel.name());
        CHECK(check_kuratowski(rel, space, budget).all_pass() ==
              check_lodato(rel, space, budget).all_pass());
    }
}

TEST_CASE("hull nearness satisfies the closure laws yet fails union decomposition") {
    // Four descriptions at the corners of a diamond: the segments cross at
    // (1,1), which is not itself a description, so closures never grow.
    auto space =
        make_space({{"a1", {1, 2}}, {"a2", {1, 0}}, {"b", {0, 1}}, {"c", {2, 1}}});
    const CheckBudget budget = CheckBudget::exhaustive(8);
    const RelationSpec hull = RelationSpec::hull();

    const AxiomReport kur = check_kuratowski(hull, space, budget);
    CHECK(kur.all_pass());
    const AxiomReport lod = check_lodato(hull, space, budget);
    CHECK_FALSE(lod.all_pass());
    const AxiomEntry& entry = lod.entry("D3.union-to-parts");
    REQUIRE(entry.status == CheckStatus::fail);
    CHECK(replay_witness(entry, hull, space, budget));
}

TEST_CASE("hull union decomposition splits by direction on a three-point line") {
    auto space = make_space({{"a", {1}}, {"b", {0}}, {"c", {2}}});
    const CheckBudget budget = CheckBudget::exhaustive(8);
    const RelationSpec hull = RelationSpec::hull();

    const AxiomReport rep = check_lodato(hull, space, budget);
    CHECK(passed(rep, "D0"));
    CHECK(passed(rep, "D1"));
    CHECK(passed(rep, "D2"));
    CHECK(passed(rep, "D3.parts-to-union"));
    CHECK(passed(rep, "D4"));
    const AxiomEntry& utp = rep.entry("D3.union-to-parts");
    REQUIRE(utp.status == CheckStatus::fail);
    REQUIRE(utp.witness.has_value());
    // 1 lies between 0 and 2: near the union, far from each part.
    CHECK(*utp.witness->role("A") == std::vector<std::string>{"a"});
    CHECK(replay_witness(utp, hull, space, budget));
}

TEST_CASE("classification covers all four outcomes") {
    const CheckBudget budget = CheckBudget::exhaustive(8);
    auto space = picture_space();

    CHECK(classify_vs_peters(RelationSpec::fine_lodato(), space, budget).classification ==
          "equivalent");
    CHECK(classify_vs_peters(RelationSpec::gamma(), space, budget).classification == "weaker");

    const RelationSpec narrow = RelationSpec::strong("just24", FeatureSet{{2, 4}});
    const AxiomReport st = classify_vs_peters(narrow, space, budget);
    CHECK(st.classification == "stronger");
    CHECK(st.entry("contains-peters").status == CheckStatus::fail);
    CHECK(st.entry("within-peters").status == CheckStatus::pass);
    require_replay(st, narrow, space, budget);

    // A relation that reacts only to descriptions at squared distance one is
    // neither implied by nor implies description overlap.
    EnlargementOperator shell;
    shell.name = "unit-shell";
    shell.overlaps = [](const FeatureSet& P, const FeatureSet& Q) {
        auto g = squared_gap(P, Q);
        return g.has_value() && *g == BigInt(1);
    };
    register_enlargement(shell);
    const RelationSpec shell_rel = RelationSpec::enlargement_op("unit-shell");
    auto line = make_space({{"p", {0}}, {"q", {1}}});
    const AxiomReport sh = classify_vs_peters(shell_rel, line, budget);
    CHECK(sh.classification == "incomparable");
    require_replay(sh, shell_rel, line, budget);

    // Without a membership predicate the region laws are undecidable, which
    // the checker reports as explicit skips.
    const AxiomReport laws =
        check_enlargement(enlargement_by_name("unit-shell"), line, budget);
    REQUIRE(laws.entries.size() == 2);
    for (const AxiomEntry& e : laws.entries) {
        CHECK(e.status == CheckStatus::skipped);
        CHECK(e.note.find("membership") != std::string::npos);
    }
    CHECK(laws.all_pass());  // skips do not count as failures
}

TEST_CASE("separation needs distinct descriptions everywhere") {
    auto space = picture_space();
    const AxiomReport rep = check_separated(RelationSpec::peters(), space);
    const AxiomEntry& p5 = rep.entry("P5");
    REQUIRE(p5.status == CheckStatus::fail);
    REQUIRE(p5.witness.has_value());
    // c and f carry the same description (2,4).
    CHECK(replay_witness(p5, RelationSpec::peters(), space, CheckBudget{}));

    const AxiomReport disc = check_separated(RelationSpec::discrete(), space);
    CHECK(disc.all_pass());

    auto inj = make_space({{"p", {0}}, {"q", {1}}});
    CHECK(check_separated(RelationSpec::peters(), inj).all_pass());
    // gamma can still relate distinct singletons sharing a coordinate.
    auto plane = make_space({{"p", {0, 0}}, {"q", {0, 1}}});
    const AxiomReport g = check_separated(RelationSpec::gamma(), plane);
    CHECK_FALSE(g.all_pass());
    CHECK(replay_witness(g.entry("P5"), RelationSpec::gamma(), plane, CheckBudget{}));
}

TEST_CASE("separation axiom for far pairs on the picture space") {
    auto space = picture_space();
    const CheckBudget budget = CheckBudget::exhaustive(8);
    CHECK(check_ef(RelationSpec::peters(), space, budget).all_pass());
    CHECK(check_ef_betweenness(RelationSpec::peters(), space, budget).all_pass());
    CHECK(check_ef_betweenness(RelationSpec::discrete(), space, budget).all_pass());

    const RelationSpec gamma = RelationSpec::gamma();
    const AxiomReport rep = check_ef(gamma, space, budget);
    const AxiomEntry& ef = rep.entry("EF");
    REQUIRE(ef.status == CheckStatus::fail);
    CHECK(replay_witness(ef, gamma, space, budget));
}

TEST_CASE("strong-containment suites expose the descriptive core directly") {
    auto space = picture_space();
    const CheckBudget budget = CheckBudget::exhaustive(8);
    const FeatureSet everything = phi_image(space, space.full_set());
    const AxiomReport all = check_strong(RelationSpec::strong("img", everything), space, budget);
    CHECK(all.all_pass());

    // Restricting the significant set voids the descriptive lower bound: the
    // pair ({a},{a}) shares (1,2), which the relation no longer sees.
    const RelationSpec narrow = RelationSpec::strong("just24", FeatureSet{{2, 4}});
    const AxiomReport kur = check_kuratowski(narrow, space, budget);
    CHECK(kur.entry("K2.extensive").status == CheckStatus::skipped);
    CHECK(kur.entry("K2.extensive").note.find("descriptive-intersection") != std::string::npos);
    CHECK(kur.entry("K1.empty").status == CheckStatus::pass);

    const AxiomReport lod = check_lodato(narrow, space, budget);
    CHECK(lod.entry("D2").status == CheckStatus::fail);
    require_replay(lod, narrow, space, budget);
}

TEST_CASE("region growth laws: balls obey them, hulls do not") {
    auto line = make_space({{"p", {0}}, {"q", {2}}});
    const CheckBudget budget = CheckBudget::exhaustive(8);

    const AxiomReport ball =
        check_enlargement(ball_enlargement(Rational(BigInt(1))), line, budget);
    CHECK(ball.all_pass());
    CHECK(ball.entry("additivity").pairs_checked == 16);
    CHECK(ball.entry("extensionality").pairs_checked == 16);
    CHECK(ball.entry("additivity").note.find("probe points") != std::string::npos);

    const AxiomReport ident = check_enlargement(identity_enlargement(), line, budget);
    CHECK(ident.all_pass());

    const EnlargementOperator hull = hull_enlargement();
    const AxiomReport h = check_enlargement(hull, line, budget);
    const AxiomEntry& add = h.entry("additivity");
    REQUIRE(add.status == CheckStatus::fail);
    CHECK(h.entry("extensionality").status == CheckStatus::pass);
    REQUIRE(add.witness.has_value());
    CHECK(replay_enlargement_witness(add, hull, line));

    // Doctoring the probe to a hull vertex kills the disagreement.
    AxiomEntry forged = add;
    forged.witness->extra["probe"] = nlohmann::json::array({"0"});
    CHECK_FALSE(replay_enlargement_witness(forged, hull, line));

    // Exhaustive region checking is bounded by distinct descriptions.
    auto wide = testsup::make_space({{"p0", {0}},
                                     {"p1", {1}},
                                     {"p2", {2}},
                                     {"p3", {3}},
                                     {"p4", {4}},
                                     {"p5", {5}},
                                     {"p6", {6}},
                                     {"p7", {7}},
                                     {"p8", {8}}});
    CHECK_THROWS_AS(check_enlargement(hull, wide, CheckBudget::exhaustive(8)),
                    std::invalid_argument);
    const AxiomReport sampled =
        check_enlargement(hull, wide, CheckBudget::sampled(4000, 5, 8));
    CHECK(sampled.entry("additivity").status == CheckStatus::fail);
    CHECK(replay_enlargement_witness(sampled.entry("additivity"), hull, wide));
}

TEST_CASE("budgets validate their inputs") {
    auto small = make_space({{"p", {0}}, {"q", {1}}});
    std::vector<SpaceRow> rows;
    for (int i = 0; i < 10; ++i)
        rows.push_back({"p" + std::to_string(i), FeatureVector{i}});
    auto ten = DescribedSpace::build(rows);

    CHECK_THROWS_AS(CheckBudget::exhaustive(8).validate(ten), std::invalid_argument);
    CHECK_NOTHROW(CheckBudget::exhaustive(10).validate(ten));
    CHECK_THROWS_AS(CheckBudget::exhaustive(0).validate(small), std::invalid_argument);
    CHECK_THROWS_AS(CheckBudget::exhaustive(15).validate(small), std::invalid_argument);
    CHECK_THROWS_AS(CheckBudget::sampled(0, 1).validate(small), std::invalid_argument);
    CHECK_NOTHROW(CheckBudget::sampled(10, 1).validate(ten));

    CHECK_THROWS_WITH_AS(
        run_suite("bogus", RelationSpec::peters(), ten, CheckBudget::sampled(10, 1)),
        doctest::Contains("cech"), std::invalid_argument);
}

TEST_CASE("suite dispatch is stable by name") {
    auto space = make_space({{"p", {0}}, {"q", {1}}});
    const CheckBudget budget = CheckBudget::exhaustive(8);
    const RelationSpec rel = RelationSpec::peters();
    CHECK(run_suite("cech", rel, space, budget).suite == "cech");
    CHECK(run_suite("lodato", rel, space, budget).suite == "lodato");
    CHECK(run_suite("ef", rel, space, budget).suite == "ef");
    CHECK(run_suite("separated", rel, space, budget).suite == "separated");
    CHECK(run_suite("strong", RelationSpec::strong("s", FeatureSet{{0}}), space, budget).suite ==
          "strong");
    CHECK(run_suite("kuratowski", rel, space, budget).suite == "kuratowski");
    CHECK(run_suite("betweenness", rel, space, budget).suite == "betweenness");
    CHECK(run_suite("classify", rel, space, budget).suite == "classify");
}

TEST_CASE("sampled budgets are deterministic and honest") {
    std::vector<SpaceRow> rows;
    for (int i = 0; i < 12; ++i)
        rows.push_back({"p" + std::to_string(i), FeatureVector{i % 3}});
    auto space = DescribedSpace::build(rows);
    const CheckBudget sampled = CheckBudget::sampled(400, 42, 8);
    const RelationSpec rel = RelationSpec::peters();

    const AxiomReport first = check_lodato(rel, space, sampled);
    const AxiomReport second = check_lodato(rel, space, sampled);
    CHECK(first.all_pass());
    CHECK(first.canonical_text() == second.canonical_text());
    for (const AxiomEntry& e : first.entries) {
        CHECK(e.status == CheckStatus::pass);
        CHECK(e.pairs_checked == 400);
    }
    CHECK(check_ef(rel, space, sampled).all_pass());
    CHECK(check_ef_betweenness(rel, space, sampled).all_pass());
    CHECK(check_kuratowski(rel, space, sampled).all_pass());
    CHECK(check_strong(RelationSpec::strong("img", phi_image(space, space.full_set())), space,
                       sampled)
              .all_pass());
    const AxiomReport cls = classify_vs_peters(rel, space, sampled);
    CHECK(cls.classification == "equivalent");

    // A relation blind to every description: sampled scans must find the
    // descriptive-intersection violations and record replayable witnesses.
    const RelationSpec blind = RelationSpec::strong("nothing", FeatureSet{});
    const AxiomReport lod = check_lodato(blind, space, sampled);
    const AxiomEntry& d2 = lod.entry("D2");
    REQUIRE(d2.status == CheckStatus::fail);
    CHECK(replay_witness(d2, blind, space, sampled));
    CHECK(check_lodato(blind, space, sampled).canonical_text() == lod.canonical_text());

    const AxiomReport kur = check_kuratowski(blind, space, sampled);
    CHECK(kur.entry("K2.extensive").status == CheckStatus::skipped);

    // Different seeds may draw different tuples but verdicts stay the same.
    const AxiomReport reseeded =
        check_lodato(rel, space, CheckBudget::sampled(400, 43, 8));
    CHECK(reseeded.all_pass());
}

TEST_CASE("reports serialize with a stable schema") {
    auto space = make_space({{"p", {0}}, {"q", {0}}, {"r", {1}}});
    const CheckBudget budget = CheckBudget::exhaustive(8);
    const AxiomReport rep = check_lodato(RelationSpec::peters(), space, budget);
    const nlohmann::json doc = rep.to_json();

    CHECK(doc.at("version") == "axiom-report/1");
    CHECK(doc.at("suite") == "lodato");
    CHECK(doc.at("relation") == "peters");
    CHECK(doc.at("all_pass") == true);
    CHECK(doc.at("space").at("points") == 3);
    CHECK(doc.at("space").at("arity") == 1);
    CHECK(doc.at("space").at("classes") == 2);
    CHECK(doc.at("budget").at("mode") == "exhaustive");
    CHECK(doc.at("budget").at("subset_cap") == 8);
    CHECK_FALSE(doc.contains("classification"));
    REQUIRE(doc.at("entries").is_array());
    CHECK(doc.at("entries").size() == 6);
    for (const auto& e : doc.at("entries")) {
        CHECK(e.contains("axiom"));
        CHECK(e.at("status") == "pass");
        CHECK_FALSE(e.contains("witness"));
    }
    const std::string text = rep.canonical_text();
    CHECK(text.back() == '\n');
    CHECK(text == doc.dump(2) + "\n");

    const AxiomReport cls =
        classify_vs_peters(RelationSpec::gamma(), picture_space(), budget);
    const nlohmann::json cdoc = cls.to_json();
    CHECK(cdoc.at("classification") == "weaker");
    bool saw_witness = false;
    for (const auto& e : cdoc.at("entries"))
        if (e.contains("witness")) {
            saw_witness = true;
            CHECK(e.at("witness").contains("detail"));
            CHECK(e.at("witness").at("sets").contains("A"));
        }
    CHECK(saw_witness);

    CHECK_THROWS_AS(rep.entry("nope"), std::out_of_range);
}
