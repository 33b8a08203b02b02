#include "descprox/axioms.hpp"
#include "descprox/ingest.hpp"
#include "descprox/relations.hpp"
#include "descprox/space.hpp"
#include "descprox/topology.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using descprox::CheckBudget;
using descprox::DescribedSpace;
using descprox::PointSet;
using descprox::RelationSpec;
using nlohmann::json;

struct CommonArgs {
    std::string csv_path;
    std::string image_path;
    std::string csv_id = "id";
    std::vector<std::string> csv_features;
    std::string probe = "grey";
    std::uint32_t quantize = 1;
    std::string sets_path;
    std::string relation = "peters";
    std::string pair;
    std::string out_path;
    std::uint32_t samples = 0;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::size_t subset_cap = 8;
};

void add_common_flags(CLI::App* cmd, CommonArgs& args, bool with_budget) {
    cmd->add_option("--space", args.csv_path, "CSV feature table");
    cmd->add_option("--image", args.image_path, "PGM or PPM image");
    cmd->add_option("--csv-id", args.csv_id, "id column name (default id)");
    cmd->add_option("--csv-features", args.csv_features, "feature column names")
        ->delimiter(',');
    cmd->add_option("--probe", args.probe, "image probe: grey or rgb");
    cmd->add_option("--quantize", args.quantize, "quantization step (default 1)");
    cmd->add_option("--sets", args.sets_path, "JSON region file");
    cmd->add_option("--pair", args.pair, "set names or inline [id;id] lists");
    cmd->add_option("--relation", args.relation, "relation name");
    cmd->add_option("--out", args.out_path, "also write the JSON to this file");
    if (with_budget) {
        cmd->add_flag("--exhaustive", args.exhaustive, "enumerate every subset");
        cmd->add_option("--samples", args.samples, "sampled mode with this many draws");
        cmd->add_option("--seed", args.seed, "sampled-mode seed (default 0)");
        cmd->add_option("--subset-cap", args.subset_cap,
                        "largest space exhaustive mode accepts (default 8)");
    }
}

DescribedSpace load_space(const CommonArgs& args) {
    if (!args.csv_path.empty() && !args.image_path.empty())
        throw std::invalid_argument("--space and --image are mutually exclusive");
    if (!args.csv_path.empty()) {
        if (args.csv_features.empty())
            throw std::invalid_argument("--space needs --csv-features");
        return descprox::load_csv(args.csv_path, args.csv_id, args.csv_features);
    }
    if (!args.image_path.empty()) {
        descprox::ProbeSpec probe;
        if (args.probe == "grey")
            probe = descprox::ProbeSpec::greyscale(args.quantize);
        else if (args.probe == "rgb")
            probe = descprox::ProbeSpec::rgb(args.quantize);
        else
            throw std::invalid_argument("--probe must be grey or rgb");
        return descprox::load_image(args.image_path, probe);
    }
    throw std::invalid_argument("a space source is required: --space CSV or --image FILE");
}

std::string trim(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return text.substr(begin, end - begin);
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(trim(cur));
            cur.clear();
            continue;
        }
        cur.push_back(c);
    }
    parts.push_back(trim(cur));
    return parts;
}

/// A set argument is either a region name from --sets or an inline id list in
/// brackets: [a;b;c].
PointSet resolve_set(const std::string& token, const DescribedSpace& space,
                     const std::map<std::string, descprox::RegionSpec>& regions) {
    if (!token.empty() && token.front() == '[') {
        if (token.back() != ']')
            throw std::invalid_argument("unterminated inline set: " + token);
        const std::string body = token.substr(1, token.size() - 2);
        std::vector<std::string> ids;
        if (!trim(body).empty())
            for (const std::string& id : split_top_level(body, ';')) ids.push_back(id);
        return space.set_of(ids);
    }
    const auto it = regions.find(token);
    if (it == regions.end())
        throw std::invalid_argument("unknown set '" + token +
                                    "' (define it in --sets or pass an inline [..] list)");
    return descprox::region(space, it->second);
}

CheckBudget make_budget(const CommonArgs& args) {
    if (args.samples > 0 && args.exhaustive)
        throw std::invalid_argument("--exhaustive and --samples are mutually exclusive");
    CheckBudget budget = args.samples > 0
                             ? CheckBudget::sampled(args.samples, args.seed, args.subset_cap)
                             : CheckBudget::exhaustive(args.subset_cap);
    budget.seed = args.seed;
    return budget;
}

json config_json(const CommonArgs& args, const std::string& command,
                 const CheckBudget& budget, const std::string& suite) {
    json source;
    if (!args.csv_path.empty()) {
        source = {{"kind", "csv"},
                  {"path", args.csv_path},
                  {"id_column", args.csv_id},
                  {"feature_columns", args.csv_features}};
    } else {
        source = {{"kind", "image"},
                  {"path", args.image_path},
                  {"probe", args.probe},
                  {"quantize", args.quantize}};
    }
    json out;
    out["command"] = command;
    out["source"] = std::move(source);
    out["sets"] = args.sets_path;
    out["relation"] = args.relation;
    if (!args.pair.empty()) out["pair"] = split_top_level(args.pair, ',');
    if (!suite.empty()) out["suite"] = suite;
    out["budget"] = {{"mode", budget.is_exhaustive() ? "exhaustive" : "sampled"},
                     {"sample_count", budget.sample_count},
                     {"seed", budget.seed},
                     {"subset_cap", budget.subset_cap}};
    return out;
}

void emit(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << text;
    }
}

struct LoadedRun {
    DescribedSpace space;
    std::map<std::string, descprox::RegionSpec> regions;
    RelationSpec relation;
};

LoadedRun load_run(const CommonArgs& args) {
    LoadedRun run{load_space(args), {}, {}};
    if (!args.sets_path.empty()) run.regions = descprox::load_regions(args.sets_path);
    const auto resolver = [&](const std::string& name) {
        const auto it = run.regions.find(name);
        if (it == run.regions.end())
            throw std::invalid_argument("strong relation refers to unknown set '" + name +
                                        "'");
        return descprox::phi_image(run.space, descprox::region(run.space, it->second));
    };
    run.relation = descprox::parse_relation(args.relation, resolver);
    return run;
}

int cmd_eval(const CommonArgs& args) {
    const LoadedRun run = load_run(args);
    const std::vector<std::string> names = split_top_level(args.pair, ',');
    if (args.pair.empty() || names.size() != 2)
        throw std::invalid_argument("eval needs --pair A,B");
    const PointSet a = resolve_set(names[0], run.space, run.regions);
    const PointSet b = resolve_set(names[1], run.space, run.regions);
    const bool verdict = descprox::near(run.relation, run.space, a, b);

    json doc;
    doc["version"] = "eval-report/1";
    doc["relation"] = args.relation;
    doc["pair"] = names;
    doc["near"] = verdict;
    if (verdict && (run.relation.kind == descprox::RelationKind::peters ||
                    run.relation.kind == descprox::RelationKind::strong)) {
        descprox::FeatureSet shared = descprox::set_intersection(
            descprox::phi_image(run.space, a), descprox::phi_image(run.space, b));
        if (run.relation.kind == descprox::RelationKind::strong)
            shared = descprox::set_intersection(shared, run.relation.significant);
        if (!shared.empty()) doc["witness"] = shared[0].values();
    }
    doc["config"] = config_json(args, "eval", make_budget(args), "");
    emit(doc, args.out_path);
    return 0;
}

int cmd_check(const CommonArgs& args, const std::string& suite) {
    if (suite.empty()) throw std::invalid_argument("check needs --suite NAME");
    const LoadedRun run = load_run(args);
    const CheckBudget budget = make_budget(args);
    const descprox::AxiomReport report =
        descprox::run_suite(suite, run.relation, run.space, budget);
    json doc = report.to_json();
    doc["config"] = config_json(args, "check", budget, suite);
    emit(doc, args.out_path);
    return report.all_pass() ? 0 : 1;
}

int cmd_classes(const CommonArgs& args) {
    const DescribedSpace space = load_space(args);
    const descprox::Partition part = descprox::phi_classes(space);
    json classes = json::array();
    for (std::size_t d = 0; d < part.classes.size(); ++d)
        classes.push_back(
            {{"description", part.descriptions[d].values()}, {"ids", part.classes[d].ids()}});
    json doc;
    doc["version"] = "classes-report/1";
    doc["classes"] = std::move(classes);
    doc["config"] = config_json(args, "classes", make_budget(args), "");
    emit(doc, args.out_path);
    return 0;
}

int cmd_closure(const CommonArgs& args) {
    const LoadedRun run = load_run(args);
    if (args.pair.empty()) throw std::invalid_argument("closure needs --pair SET");
    const std::vector<std::string> names = split_top_level(args.pair, ',');
    if (names.size() != 1)
        throw std::invalid_argument("closure takes a single set in --pair");
    const PointSet a = resolve_set(names[0], run.space, run.regions);
    const PointSet cl = descprox::closure(run.relation, run.space, a);

    json doc;
    doc["version"] = "closure-report/1";
    doc["relation"] = args.relation;
    doc["set"] = names[0];
    doc["closure"] = cl.ids();
    doc["config"] = config_json(args, "closure", make_budget(args), "");
    emit(doc, args.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite descriptive proximity: evaluate relations, check axiom suites"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string suite;

    CLI::App* eval = app.add_subcommand("eval", "evaluate a relation on a pair of sets");
    add_common_flags(eval, args, false);

    CLI::App* check = app.add_subcommand("check", "run an axiom suite");
    add_common_flags(check, args, true);
    check->add_option("--suite", suite,
                      "cech, lodato, ef, separated, strong, kuratowski, betweenness or "
                      "classify");

    CLI::App* classes = app.add_subcommand("classes", "list description classes");
    add_common_flags(classes, args, false);

    CLI::App* closure = app.add_subcommand("closure", "closure of a set under a relation");
    add_common_flags(closure, args, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval)) return cmd_eval(args);
        if (app.got_subcommand(check)) return cmd_check(args, suite);
        if (app.got_subcommand(classes)) return cmd_classes(args);
        if (app.got_subcommand(closure)) return cmd_closure(args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
