// hdatool: build, inspect and compare HDA models of transition systems.
//
// Exit codes: 0 success, 1 validation or input failure, 2 hypothesis or
// usage error.

#include "hda/builder.hpp"
#include "hda/homology.hpp"
#include "hda/io.hpp"
#include "hda/relation.hpp"
#include "hda/symmetric.hpp"
#include "hda/theorem.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <string>

namespace {

using namespace hda;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kHypothesis = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string relation_path;
    std::string priority_path;
    std::string coeff = "z";
    std::optional<std::size_t> max_dim;
    std::string out;
    std::optional<std::uint64_t> seed;
};

std::string counts(const PrecubicalSet& P)
{
    std::string out;
    for (auto n : P.sizes()) {
        out += (out.empty() ? "" : "/") + std::to_string(n);
    }
    return out.empty() ? "0" : out;
}

Coefficients coefficients(const Options& o)
{
    return o.coeff == "q" ? Coefficients::rationals : Coefficients::integers;
}

// Loads an HDA and fails with exit code 1 on any unresolved id or violation.
Hda load_valid_hda(const std::string& path)
{
    auto loaded = read_hda_file(path);
    Report report = loaded.unresolved;
    if (report.ok()) {
        report.append(validate_hda(loaded.hda));
    }
    if (!report.ok()) {
        throw std::runtime_error(path + ": invalid HDA\n" + report.to_string());
    }
    return std::move(loaded.hda);
}

Hda load_transition_system(const std::string& path)
{
    Hda T = load_valid_hda(path);
    if (auto report = validate_transition_system(T); !report.ok()) {
        throw std::runtime_error(path + ": not a transition system\n" + report.to_string());
    }
    return T;
}

RelationSpec load_relations(const Options& o, const Alphabet& alphabet)
{
    RelationSpec spec;
    if (!o.relation_path.empty()) {
        spec = read_relation_file(o.relation_path, alphabet);
    }
    if (!o.priority_path.empty()) {
        auto extra = read_relation_file(o.priority_path, alphabet);
        if (!extra.priority) {
            throw UsageError(o.priority_path + ": no \"priority\" field");
        }
        spec.priority = extra.priority;
        if (extra.independence && !spec.independence) {
            spec.independence = extra.independence;
        }
    }
    return spec;
}

// The single relation a build uses.
LabelRelation relation_for_build(const RelationSpec& spec, const Alphabet& alphabet)
{
    const int given = int(spec.acyclic.has_value()) + int(spec.relation.has_value())
                      + int(spec.independence.has_value() && !spec.priority);
    if (spec.priority && spec.independence && given == 0) {
        return acyclic_from_priority(*spec.independence, *spec.priority, alphabet);
    }
    if (given != 1 || (spec.priority && !spec.independence)) {
        throw UsageError("give exactly one of \"acyclic\", \"relation\", \"independence\" or "
                         "\"independence\" with \"priority\"");
    }
    if (spec.acyclic) {
        if (!is_acyclic(*spec.acyclic)) {
            throw HypothesisError("relation not acyclic: " + spec.acyclic->to_string(alphabet));
        }
        return *spec.acyclic;
    }
    if (spec.relation) {
        return *spec.relation;
    }
    return *spec.independence;
}

int cmd_validate(const Options& o)
{
    auto loaded = read_hda_file(o.input);
    Report report = loaded.unresolved;
    if (report.ok()) {
        report.append(validate_hda(loaded.hda));
    }
    const bool as_ts = loaded.hda.cells.max_dim() <= 1;
    if (report.ok() && as_ts) {
        report.append(validate_transition_system(loaded.hda));
    }
    if (!report.ok()) {
        std::cout << "invalid\n" << report.to_string();
        return kInvalid;
    }
    std::cout << "valid " << (as_ts ? "transition system" : "HDA") << ": " << counts(loaded.hda.cells) << "\n";
    return kOk;
}

int cmd_build(const Options& o)
{
    const Hda T = load_transition_system(o.input);
    const auto R = relation_for_build(load_relations(o, T.alphabet), T.alphabet);
    const Hda Q = build_hda_model(T, R, BuildOptions{o.max_dim});
    if (!o.out.empty()) {
        write_text_file(o.out, serialize_hda(Q));
    }
    std::cout << "counts: " << counts(Q.cells) << "\n";
    return kOk;
}

int cmd_symmetrize(const Options& o)
{
    const Hda H = load_valid_hda(o.input);
    const auto SQ = free_symmetric_hda(H);
    const auto text = serialize_hda(SQ.hda);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(o.out, text);
        std::cout << "counts: " << counts(SQ.hda.cells) << "\n";
    }
    return kOk;
}

std::string homology_report(const Hda& H, Coefficients coeff)
{
    std::string out;
    const auto groups = homology(H.cells, coeff);
    for (std::size_t n = 0; n < groups.size(); ++n) {
        out += "H" + std::to_string(n) + ": " + groups[n].to_string(coeff) + "\n";
    }
    return out;
}

int cmd_homology(const Options& o)
{
    std::cout << homology_report(load_valid_hda(o.input), coefficients(o));
    return kOk;
}

int cmd_language(const Options& o)
{
    const Hda H = load_valid_hda(o.input);
    std::cout << homology_report(H, coefficients(o)) << homology_language(H, coefficients(o)).to_string();
    return kOk;
}

int cmd_check_theorem(const Options& o)
{
    const Hda T = load_transition_system(o.input);
    const auto spec = load_relations(o, T.alphabet);
    std::optional<LabelRelation> ltimes = spec.acyclic;
    if (!ltimes && spec.priority) {
        if (!spec.independence) {
            throw UsageError("a priority map needs an \"independence\" relation");
        }
        ltimes = acyclic_from_priority(*spec.independence, *spec.priority, T.alphabet);
    }
    if (!ltimes) {
        throw UsageError("check-theorem needs \"acyclic\" or \"priority\"");
    }
    const auto I = spec.independence ? *spec.independence : symmetric_closure(*ltimes);
    const auto report = check_main_theorem(T, I, *ltimes, coefficients(o), BuildOptions{o.max_dim});
    std::cout << report.to_string();
    return report.holds() ? kOk : kInvalid;
}

int cmd_gen_relation(const Options& o)
{
    const Hda T = load_valid_hda(o.input);
    const auto& alphabet = T.alphabet;
    RelationSpec spec = load_relations(o, alphabet);
    std::mt19937_64 rng(o.seed.value_or(0));
    if (!spec.independence) {
        if (!o.seed) {
            throw UsageError("gen-relation needs an independence relation or --seed");
        }
        LabelRelation I(alphabet.size());
        std::bernoulli_distribution coin(0.5);
        for (LabelIndex a = 0; a < static_cast<LabelIndex>(alphabet.size()); ++a) {
            for (LabelIndex b = a + 1; b < static_cast<LabelIndex>(alphabet.size()); ++b) {
                if (coin(rng)) {
                    I.insert(a, b);
                    I.insert(b, a);
                }
            }
        }
        spec.independence = I;
    }
    if (!spec.priority) {
        if (!o.seed) {
            throw UsageError("gen-relation needs a priority map or --seed");
        }
        PriorityMap f;
        f.rank.resize(alphabet.size());
        std::iota(f.rank.begin(), f.rank.end(), 1);
        std::shuffle(f.rank.begin(), f.rank.end(), rng);
        spec.priority = f;
    }
    spec.acyclic = acyclic_from_priority(*spec.independence, *spec.priority, alphabet);
    spec.relation.reset();
    const auto text = serialize_relation_spec(spec, alphabet);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(o.out, text);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Build and analyse HDA models of transition systems"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* cmd, const std::string& what) {
        cmd->add_option("file", o.input, what)->required()->check(CLI::ExistingFile);
    };
    auto relation = [&](CLI::App* cmd) {
        cmd->add_option("--relation", o.relation_path, "relation file")->check(CLI::ExistingFile);
        cmd->add_option("--priority", o.priority_path, "file with a \"priority\" map")->check(CLI::ExistingFile);
    };
    auto coeff = [&](CLI::App* cmd) {
        cmd->add_option("--coeff", o.coeff, "coefficients: z (integers) or q (rationals)")
            ->check(CLI::IsMember({"z", "q"}));
    };
    auto max_dim = [&](CLI::App* cmd) { cmd->add_option("--max-dim", o.max_dim, "dimension cap for the builder"); };
    auto out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "output file"); };

    auto* validate = app.add_subcommand("validate", "check an HDA or transition system file");
    input(validate, "HDA file");
    auto* build = app.add_subcommand("build", "build the HDA model of a transition system");
    input(build, "transition system file");
    relation(build);
    max_dim(build);
    out(build);
    auto* symmetrize = app.add_subcommand("symmetrize", "write the free symmetric HDA");
    input(symmetrize, "HDA file");
    out(symmetrize);
    auto* hom = app.add_subcommand("homology", "print the cubical homology groups");
    input(hom, "HDA file");
    coeff(hom);
    auto* language = app.add_subcommand("language", "print homology and the homology language");
    input(language, "HDA file");
    coeff(language);
    auto* theorem = app.add_subcommand("check-theorem", "compare the acyclic and independence models");
    input(theorem, "transition system file");
    relation(theorem);
    coeff(theorem);
    max_dim(theorem);
    auto* gen = app.add_subcommand("gen-relation", "derive an acyclic relation from a priority map");
    input(gen, "transition system file (for its alphabet)");
    relation(gen);
    gen->add_option("--seed", o.seed, "random independence relation and priority map");
    out(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kHypothesis;
    }

    try {
        if (*validate) {
            return cmd_validate(o);
        }
        if (*build) {
            return cmd_build(o);
        }
        if (*symmetrize) {
            return cmd_symmetrize(o);
        }
        if (*hom) {
            return cmd_homology(o);
        }
        if (*language) {
            return cmd_language(o);
        }
        if (*theorem) {
            return cmd_check_theorem(o);
        }
        return cmd_gen_relation(o);
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kHypothesis;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kHypothesis;
    } catch (const DimensionCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kHypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
