// wordeq: equational reasoning over the free monoid from the command line.
//
// Exit codes: 0 = pass/true, 1 = fail/false, 2 = inconclusive (a search or
// budget limit decided the outcome), 3 = usage or input error. Identical
// invocations print identical bytes; --timings (which adds wall time) is
// the only exception.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "wordeq/deduction.hpp"
#include "wordeq/families.hpp"
#include "wordeq/identities.hpp"
#include "wordeq/lattices.hpp"
#include "wordeq/match.hpp"
#include "wordeq/monoids.hpp"
#include "wordeq/partitions.hpp"
#include "wordeq/verify.hpp"
#include "wordeq/words.hpp"

namespace {

using nlohmann::ordered_json;
using namespace wordeq;

// A basis argument is either whitespace-separated @directives ("@O @A(3)")
// or the path of a basis file.
IdentitySystem basis_from_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        IdentitySystem out(arg);
        std::istringstream in{arg};
        std::string token;
        while (in >> token) out.add_all(expand_directive(token));
        return out;
    }
    return load_basis_file(arg);
}

void print_json(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_deduce(const std::string& basis_arg, const std::string& goal_arg,
               const SearchLimits& limits, bool json) {
    const IdentitySystem basis = basis_from_arg(basis_arg);
    const Identity goal = parse_identity(goal_arg);
    const DeductionResult res = deducible(goal, basis, resolve_limits(limits, goal));
    if (json) {
        ordered_json doc;
        doc["command"] = "deduce";
        doc["goal"] = format_identity(goal);
        doc["status"] = res.proved() ? "proved" : "unknown";
        if (res.proved()) {
            doc["steps"] = res.trace.length();
            ordered_json steps = ordered_json::array();
            for (const TraceStep& s : res.trace.steps) {
                ordered_json step;
                step["word"] = format_word(s.word);
                step["rule"] = format_identity(s.rule);
                steps.push_back(std::move(step));
            }
            doc["trace"] = std::move(steps);
        }
        print_json(doc);
    } else if (res.proved()) {
        fmt::print("status: proved\nsteps: {}\nstart: {}\n", res.trace.length(),
                   format_word(goal.lhs));
        for (const TraceStep& s : res.trace.steps)
            fmt::print("   ->  {}   [{}]\n", format_word(s.word), format_identity(s.rule));
    } else {
        fmt::print("status: unknown\n");
    }
    return res.proved() ? 0 : 2;
}

int run_isoterm(const std::string& basis_arg, const std::string& word_arg, bool json) {
    const IdentitySystem basis = basis_from_arg(basis_arg);
    const Word w = parse_word(word_arg);
    const std::set<Word> rewrites = one_step_rewrites(w, basis);
    if (json) {
        ordered_json doc;
        doc["command"] = "isoterm";
        doc["word"] = format_word(w);
        doc["basis"] = basis.name();
        doc["isoterm"] = rewrites.empty();
        ordered_json rw = ordered_json::array();
        for (const Word& v : rewrites) rw.push_back(format_word(v));
        doc["rewrites"] = std::move(rw);
        print_json(doc);
    } else {
        fmt::print("{}\n", rewrites.empty() ? "true" : "false");
    }
    return rewrites.empty() ? 0 : 1;
}

int run_closure(const std::string& basis_arg, const std::string& word_arg,
                const SearchLimits& limits, bool json) {
    const IdentitySystem basis = basis_from_arg(basis_arg);
    const Word w = parse_word(word_arg);
    const ClosureResult res = closure(w, basis, resolve_limits(limits, w));
    if (json) {
        ordered_json doc;
        doc["command"] = "closure";
        doc["start"] = format_word(w);
        doc["complete"] = res.complete;
        doc["count"] = res.words.size();
        ordered_json words = ordered_json::array();
        for (const Word& v : res.words) words.push_back(format_word(v));
        doc["words"] = std::move(words);
        print_json(doc);
    } else {
        fmt::print("complete: {}\ncount: {}\n", res.complete, res.words.size());
        for (const Word& v : res.words) fmt::print("{}\n", format_word(v));
    }
    return res.complete ? 0 : 2;
}

int run_factor_monoid(const std::string& word_arg, bool json) {
    const FiniteMonoid M = factor_monoid(parse_word(word_arg));
    if (json) {
        ordered_json doc;
        doc["command"] = "factor-monoid";
        doc["name"] = M.name();
        doc["elements"] = M.elements();
        doc["identity"] = M.identity_index();
        if (M.zero_index()) doc["zero"] = *M.zero_index();
        ordered_json table = ordered_json::array();
        for (std::size_t a = 0; a < M.size(); ++a) {
            ordered_json row = ordered_json::array();
            for (std::size_t b = 0; b < M.size(); ++b) row.push_back(M.mul(a, b));
            table.push_back(std::move(row));
        }
        doc["table"] = std::move(table);
        print_json(doc);
    } else {
        std::cout << dump_monoid(M);
    }
    return 0;
}

std::string assignment_text(const FiniteMonoid& M, const Counterexample& cex) {
    std::string out;
    for (const auto& [var, idx] : cex.assignment)
        out += fmt::format("{}{} := {}", out.empty() ? "" : ", ", var.name, M.label(idx));
    return out;
}

int run_check(const std::string& target_arg, const std::string& basis_arg,
              std::uint64_t budget, bool json) {
    FiniteMonoid M = [&] {
        if (std::filesystem::exists(target_arg)) {
            std::ifstream in(target_arg);
            if (!in) throw std::runtime_error("cannot read " + target_arg);
            std::ostringstream buf;
            buf << in.rdbuf();
            return load_monoid_dump(buf.str(), target_arg);
        }
        return factor_monoid(parse_word(target_arg));
    }();
    const IdentitySystem basis = basis_from_arg(basis_arg);

    bool any_fail = false, any_refusal = false;
    ordered_json entries = ordered_json::array();
    std::string lines;
    for (const Identity& id : basis) {
        const SatisfactionResult res = satisfies(M, id, budget);
        ordered_json entry;
        entry["identity"] = format_identity(id);
        switch (res.status) {
            case SatStatus::Holds:
                lines += fmt::format("ok    {}\n", format_identity(id));
                entry["status"] = "holds";
                break;
            case SatStatus::Fails: {
                any_fail = true;
                const Counterexample& cex = *res.counterexample;
                lines += fmt::format("FAIL  {}  [{}] lhs = {}, rhs = {}\n", format_identity(id),
                                     assignment_text(M, cex), M.label(cex.lhs_value),
                                     M.label(cex.rhs_value));
                entry["status"] = "fails";
                ordered_json assign = ordered_json::array();
                for (const auto& [var, idx] : cex.assignment) {
                    ordered_json one;
                    one["variable"] = var.name;
                    one["element"] = M.label(idx);
                    assign.push_back(std::move(one));
                }
                entry["counterexample"] = {{"assignment", std::move(assign)},
                                           {"lhs", M.label(cex.lhs_value)},
                                           {"rhs", M.label(cex.rhs_value)}};
                break;
            }
            case SatStatus::OverBudget:
                any_refusal = true;
                lines += fmt::format("??    {}  needs {} lookups (budget {})\n",
                                     format_identity(id), res.required_lookups, budget);
                entry["status"] = "over-budget";
                entry["required_lookups"] = res.required_lookups;
                break;
        }
        entries.push_back(std::move(entry));
    }

    if (json) {
        ordered_json doc;
        doc["command"] = "check";
        doc["monoid"] = M.name();
        doc["elements"] = M.size();
        doc["identities"] = std::move(entries);
        doc["satisfies"] = !any_fail && !any_refusal;
        print_json(doc);
    } else {
        fmt::print("monoid: {} ({} elements)\n", M.name(), M.size());
        std::cout << lines;
        fmt::print("satisfies: {}\n", !any_fail && !any_refusal);
    }
    return any_fail ? 1 : any_refusal ? 2 : 0;
}

int run_partitions(std::size_t k, bool json) {
    const FiniteLattice L = partition_lattice(k);
    if (json) {
        ordered_json doc;
        doc["command"] = "partitions";
        doc["k"] = k;
        doc["count"] = L.size();
        ordered_json parts = ordered_json::array();
        for (std::size_t i = 0; i < L.size(); ++i) parts.push_back(L.label(i));
        doc["partitions"] = std::move(parts);
        print_json(doc);
    } else {
        fmt::print("k: {}\ncount: {}\n", k, L.size());
        for (std::size_t i = 0; i < L.size(); ++i) fmt::print("{}\n", L.label(i));
    }
    return 0;
}

int run_embed(const std::string& lattice_path, std::size_t k, bool json) {
    const FiniteLattice L = load_lattice_file(lattice_path);
    const FiniteLattice target = partition_lattice(k);
    const auto image = sublattice_embedding_search(L, k);
    if (json) {
        ordered_json doc;
        doc["command"] = "embed";
        doc["lattice"] = L.name();
        doc["k"] = k;
        doc["found"] = image.has_value();
        if (image) {
            ordered_json map = ordered_json::array();
            for (std::size_t i = 0; i < L.size(); ++i) {
                ordered_json one;
                one["from"] = L.label(i);
                one["to"] = target.label((*image)[i]);
                map.push_back(std::move(one));
            }
            doc["map"] = std::move(map);
        }
        print_json(doc);
    } else {
        fmt::print("lattice: {} ({} elements)\ntarget: Eq({})\nfound: {}\n", L.name(), L.size(),
                   k, image.has_value());
        if (image)
            for (std::size_t i = 0; i < L.size(); ++i)
                fmt::print("{} -> {}\n", L.label(i), target.label((*image)[i]));
    }
    return image ? 0 : 1;
}

int run_families_print(const std::string& name, bool json) {
    if (name.empty()) throw ParseError("empty family name", 0);
    std::vector<Word> words;
    std::optional<IdentitySystem> ids;
    if (name.size() >= 4 && name[0] == 'w' && name[1] == '(') {
        // w(m,r): the single m-free word with r separators.
        const std::size_t comma = name.find(',');
        if (comma == std::string::npos || name.back() != ')')
            throw ParseError("expected w(m,r)", 0);
        const std::size_t m = std::stoul(name.substr(2, comma - 2));
        const std::size_t r = std::stoul(name.substr(comma + 1, name.size() - comma - 2));
        words.push_back(word_w(m, r).to_word());
    } else {
        if ((name[0] == 'B' || name[0] == 'D') && name.size() >= 4 && name[1] == '(') {
            const std::size_t n = std::stoul(name.substr(2, name.size() - 3));
            for (const RigidWord& w : name[0] == 'B' ? words_B(n) : words_D(n))
                words.push_back(w.to_word());
        }
        ids = expand_directive("@" + name);
    }

    if (json) {
        ordered_json doc;
        doc["command"] = "families";
        doc["name"] = name;
        if (!words.empty()) {
            ordered_json ws = ordered_json::array();
            for (const Word& w : words) ws.push_back(format_word(w));
            doc["words"] = std::move(ws);
        }
        if (ids) {
            ordered_json is = ordered_json::array();
            for (const Identity& id : *ids) is.push_back(format_identity(id));
            doc["identities"] = std::move(is);
        }
        print_json(doc);
    } else {
        fmt::print("name: {}\n", name);
        if (!words.empty()) {
            fmt::print("words: {}\n", words.size());
            for (const Word& w : words) fmt::print("{}\n", format_word(w));
        }
        if (ids) {
            fmt::print("identities: {}\n", ids->size());
            for (const Identity& id : *ids) fmt::print("{}\n", format_identity(id));
        }
    }
    return 0;
}

int report_exit(const VerificationReport& rep) {
    switch (rep.overall()) {
        case CaseStatus::Pass: return 0;
        case CaseStatus::Fail: return 1;
        default: return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equational reasoning over the free monoid: bounded deduction, factor\n"
                 "monoids, identity families, partition lattices, verification harnesses."};
    app.require_subcommand(1);

    std::string basis_arg, word_arg, goal_arg, target_arg, path_arg, family_name;
    std::size_t k = 0, n = 0, m = 0, r_max = 0;
    SearchLimits limits{0, 0};
    std::uint64_t budget = kDefaultEvalBudget;
    bool json = false, timings = false;
    std::string isoterm_family = "A";

    const auto add_limit_flags = [&](CLI::App* cmd) {
        cmd->add_option("--max-len", limits.max_word_length,
                        "longest word the search may visit (0 = automatic)");
        cmd->add_option("--max-visited", limits.max_visited_words,
                        "most words the search may visit (0 = default)");
    };
    const auto add_json_flag = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json, "emit JSON instead of text");
    };

    CLI::App* deduce = app.add_subcommand("deduce", "bounded deduction of an identity");
    deduce->add_option("basis", basis_arg, "@directives or basis file")->required();
    deduce->add_option("goal", goal_arg, "identity \"LHS = RHS\"")->required();
    add_limit_flags(deduce);
    add_json_flag(deduce);

    CLI::App* isoterm = app.add_subcommand("isoterm", "is the word an isoterm for the basis?");
    isoterm->add_option("basis", basis_arg, "@directives or basis file")->required();
    isoterm->add_option("word", word_arg, "word to test")->required();
    add_json_flag(isoterm);

    CLI::App* clo = app.add_subcommand("closure", "all words deducibly equal to the start");
    clo->add_option("basis", basis_arg, "@directives or basis file")->required();
    clo->add_option("word", word_arg, "start word")->required();
    add_limit_flags(clo);
    add_json_flag(clo);

    CLI::App* fm = app.add_subcommand("factor-monoid", "multiplication table of M(word)");
    fm->add_option("word", word_arg, "defining word")->required();
    add_json_flag(fm);

    CLI::App* check = app.add_subcommand("check", "does a finite monoid satisfy a basis?");
    check->add_option("target", target_arg, "word (for M(word)) or monoid dump file")
        ->required();
    check->add_option("basis", basis_arg, "@directives or basis file")->required();
    check->add_option("--eval-budget", budget, "table-lookup budget per identity");
    add_json_flag(check);

    CLI::App* parts = app.add_subcommand("partitions", "the partition lattice Eq(k)");
    parts->add_option("k", k, "ground set size (1..6)")->required();
    add_json_flag(parts);

    CLI::App* embed = app.add_subcommand("embed", "search a sublattice embedding into Eq(k)");
    embed->add_option("lattice", path_arg, "lattice JSON file")->required();
    embed->add_option("k", k, "ground set size (1..5)")->required();
    add_json_flag(embed);

    CLI::App* verify = app.add_subcommand("verify", "verification harnesses");
    verify->require_subcommand(1);
    CLI::App* vphi = verify->add_subcommand("phi", "closure fibers over partitions of B_n");
    vphi->add_option("--n", n, "family size (3 or 4)")->required();
    add_limit_flags(vphi);
    CLI::App* vlambda = verify->add_subcommand("lambda", "closure fibers over partitions of D_n");
    vlambda->add_option("--n", n, "family size (2 or 3)")->required();
    add_limit_flags(vlambda);
    CLI::App* vcases = verify->add_subcommand("cases", "case-by-case basis equivalences");
    vcases->add_option("--n", n, "exponent sum + 1 (3, 4 or 5)")->required();
    add_limit_flags(vcases);
    CLI::App* vem = verify->add_subcommand("em-join", "containment side of the E_m join");
    vem->add_option("--m", m, "exponent bound (2 or 3)")->required();
    vem->add_option("--r-max", r_max, "separator bound (default 3)");
    vem->add_option("--eval-budget", budget, "table-lookup budget per identity");
    CLI::App* vtm1 = verify->add_subcommand("tm1", "deletion-closed profile uniqueness");
    vtm1->add_option("--m", m, "profile depth (2 or 3)")->required();
    vtm1->add_option("--r-max", r_max, "separator bound (default 3)");
    CLI::App* viso = verify->add_subcommand("isoterms", "bounded isoterm sweeps");
    viso->add_option("--family", isoterm_family, "A or C")->required();
    viso->add_option("--n", n, "family size")->required();
    viso->add_option("--r-max", r_max, "separator bound (default 4)");
    viso->add_option("--eval-budget", budget, "table-lookup budget per identity");
    for (CLI::App* cmd : {vphi, vlambda, vcases, vem, vtm1, viso}) {
        add_json_flag(cmd);
        cmd->add_flag("--timings", timings, "include wall time in the report");
    }

    CLI::App* fams = app.add_subcommand("families", "bundled word and identity families");
    CLI::App* fprint = fams->add_subcommand("print", "print one family");
    fprint->add_option("name", family_name, "O, A(n), B(n), C(n), D(n), E(m) or w(m,r)")
        ->required();
    add_json_flag(fprint);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (app.got_subcommand(deduce)) return run_deduce(basis_arg, goal_arg, limits, json);
        if (app.got_subcommand(isoterm)) return run_isoterm(basis_arg, word_arg, json);
        if (app.got_subcommand(clo)) return run_closure(basis_arg, word_arg, limits, json);
        if (app.got_subcommand(fm)) return run_factor_monoid(word_arg, json);
        if (app.got_subcommand(check)) return run_check(target_arg, basis_arg, budget, json);
        if (app.got_subcommand(parts)) return run_partitions(k, json);
        if (app.got_subcommand(embed)) return run_embed(path_arg, k, json);
        if (app.got_subcommand(fams)) return run_families_print(family_name, json);
        if (app.got_subcommand(verify)) {
            VerificationReport rep;
            if (verify->got_subcommand(vphi)) rep = verify_phi(n, limits);
            else if (verify->got_subcommand(vlambda)) rep = verify_lambda(n, limits);
            else if (verify->got_subcommand(vcases)) rep = verify_case_equivalences(n, limits);
            else if (verify->got_subcommand(vem))
                rep = verify_em_join(m, r_max == 0 ? 3 : r_max, budget);
            else if (verify->got_subcommand(vtm1)) rep = verify_tm1(m, r_max == 0 ? 3 : r_max);
            else {
                if (isoterm_family != "A" && isoterm_family != "C")
                    throw std::invalid_argument("--family must be A or C");
                rep = verify_isoterm_lemmas(
                    isoterm_family == "A" ? IsotermFamily::A : IsotermFamily::C, n,
                    r_max == 0 ? 4 : r_max, budget);
            }
            std::cout << (json ? rep.to_json(timings) : rep.to_text(timings));
            return report_exit(rep);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
