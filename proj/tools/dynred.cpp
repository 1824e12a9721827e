// dynred: command-line front end for the reduction-theory library.
//
// Every subcommand prints one JSON report on stdout. Exit status: 0 on
// success, 1 on input or domain errors (parse failures, non-morphisms,
// singular matrices, failed verification), 2 on budget errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "dynred/corpus.hpp"
#include "dynred/document.hpp"
#include "dynred/minimality.hpp"
#include "dynred/resultant.hpp"
#include "dynred/semistability.hpp"
#include "dynred/verify.hpp"

using namespace dynred;

namespace {

enum Exit { kOk = 0, kDomain = 1, kBudget = 2 };

std::string read_input(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Json error_json(const char* kind, const std::string& message) {
    Json e;
    e["kind"] = kind;
    e["message"] = message;
    return e;
}

struct Report {
    Json command;
    Json results = Json::array();
    int status = kOk;

    void record_error(int code, const char* kind, const std::string& message, std::optional<std::size_t> index = {}) {
        Json e;
        if (index) e["document"] = *index;
        e["error"] = error_json(kind, message);
        results.push_back(std::move(e));
        status = std::max(status, code);
        std::cerr << "dynred: " << message << "\n";
    }

    int emit() const {
        Json out;
        out["format"] = kFormatVersion;
        out["command"] = command;
        out["results"] = results;
        out["status"] = status;
        std::cout << out.dump(2) << "\n";
        return status;
    }
};

// Runs fn on every document of the input, collecting results and errors.
template <class Fn>
int for_each_document(Report& report, const std::string& input, Fn fn) {
    std::vector<MorphismDocument> docs;
    try {
        docs = parse_documents(read_input(input));
    } catch (const UsageError& e) {
        report.record_error(kDomain, "parse", e.what());
        return report.emit();
    }
    for (std::size_t i = 0; i < docs.size(); ++i) {
        try {
            Json r;
            r["document"] = i;
            if (docs[i].label) r["label"] = *docs[i].label;
            r["result"] = fn(docs[i]);
            report.results.push_back(std::move(r));
        } catch (const BudgetError& e) {
            report.record_error(kBudget, "budget", e.what(), i);
        } catch (const DomainError& e) {
            report.record_error(kDomain, "domain", e.what(), i);
        } catch (const UsageError& e) {
            report.record_error(kDomain, "usage", e.what(), i);
        }
    }
    return report.emit();
}

Json command_echo(const std::string& name, std::initializer_list<std::pair<const char*, Json>> args) {
    Json c;
    c["name"] = name;
    Json a = Json::object();
    for (const auto& [k, v] : args) a[k] = v;
    c["args"] = std::move(a);
    return c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reduction theory of endomorphisms of projective space over Q"};
    app.require_subcommand(1);

    std::string input = "-";
    std::uint64_t prime = 0;
    unsigned bound = 3;
    std::string gamma_text;
    unsigned extension_degree = 1;
    bool strict = false;
    std::uint64_t max_flags = SemistabilityOptions{}.max_flags;
    std::uint64_t max_candidates = MinimalityOptions{}.max_candidates;

    auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "Morphism document (JSON or JSON Lines), - for stdin"); };
    auto add_prime = [&](CLI::App* sub) { sub->add_option("--p", prime, "Prime")->required(); };
    auto add_bound = [&](CLI::App* sub) {
        sub->add_option("--bound", bound, "Candidate search bound B")->capture_default_str();
        sub->add_option("--max-candidates", max_candidates, "Candidate budget")->capture_default_str();
    };
    auto add_ss = [&](CLI::App* sub) {
        sub->add_option("--extension-degree", extension_degree, "Enumerate flags over F_{p^k}")->capture_default_str();
        sub->add_option("--max-flags", max_flags, "Flag enumeration budget")->capture_default_str();
    };

    auto* c_res = app.add_subcommand("resultant", "Exact resultant of the forms");
    add_input(c_res);
    auto* c_val = app.add_subcommand("valuation", "ord_p of the resultant and of the coefficients");
    add_input(c_val);
    add_prime(c_val);
    auto* c_conj = app.add_subcommand("conjugate", "Conjugate by an invertible matrix");
    add_input(c_conj);
    c_conj->add_option("--gamma", gamma_text, "Matrix as JSON, e.g. [[\"1\",\"0\"],[\"0\",\"2\"]]")->required();
    c_conj->add_option("--p", prime, "Also check the conjugation valuation identities at p");
    auto* c_ss = app.add_subcommand("semistable", "Semistability of the reduction at p");
    add_input(c_ss);
    add_prime(c_ss);
    add_ss(c_ss);
    c_ss->add_flag("--strict", strict, "Also classify strictly semistable points");
    auto* c_min = app.add_subcommand("minimize", "Certify or search for a minimal presentation at p");
    add_input(c_min);
    add_prime(c_min);
    add_bound(c_min);
    add_ss(c_min);
    auto* c_div = app.add_subcommand("divisor", "Minimal resultant divisor");
    add_input(c_div);
    add_bound(c_div);
    add_ss(c_div);
    auto* c_glob = app.add_subcommand("globalize", "Presentation minimal at every bad prime");
    add_input(c_glob);
    add_bound(c_glob);
    add_ss(c_glob);
    auto* c_pgr = app.add_subcommand("pgr", "Potential good reduction status at p");
    add_input(c_pgr);
    add_prime(c_pgr);
    add_bound(c_pgr);
    add_ss(c_pgr);

    std::string suite, params_text = "n=1,d=2,p=2,3,5,B=3";
    std::uint64_t seed = 1;
    std::size_t count = 100;
    auto* c_verify = app.add_subcommand("verify", "Run a property suite on a generated corpus");
    c_verify->add_option("--suite", suite, "Suite")->required()->check(CLI::IsMember(suite_names()));
    c_verify->add_option("--seed", seed)->capture_default_str();
    c_verify->add_option("--count", count)->capture_default_str();
    c_verify->add_option("--params", params_text)->capture_default_str();

    std::string kind, out_path = "-", bases_path;
    unsigned corpus_n = 1, corpus_d = 2, corpus_k = 1;
    std::int64_t box = 4;
    auto* c_corpus = app.add_subcommand("corpus", "Write a corpus of morphism documents");
    c_corpus->add_option("--kind", kind)->required()->check(CLI::IsMember({"random", "conjugated-good", "boundary-scan"}));
    c_corpus->add_option("--seed", seed)->capture_default_str();
    c_corpus->add_option("--out", out_path, "Output file, - for stdout")->capture_default_str();
    c_corpus->add_option("--n", corpus_n)->capture_default_str();
    c_corpus->add_option("--d", corpus_d)->capture_default_str();
    c_corpus->add_option("--p", prime, "Prime (conjugated-good, boundary-scan)");
    c_corpus->add_option("--k", corpus_k, "Exponent of p in diag(p^k, 1, ...)")->capture_default_str();
    c_corpus->add_option("--count", count)->capture_default_str();
    c_corpus->add_option("--box", box, "Coefficients drawn from [-box, box]")->capture_default_str();
    c_corpus->add_option("--input", bases_path, "Base maps for conjugated-good");
    c_corpus->add_flag("--strict", strict, "Tag strictly semistable points (boundary-scan)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "dynred: " << e.what() << "\n";
        return kDomain;
    }

    auto ss_opts = [&] {
        SemistabilityOptions o;
        o.extension_degree = extension_degree;
        o.max_flags = max_flags;
        o.classify_strict = strict;
        return o;
    };
    auto min_opts = [&] {
        MinimalityOptions o;
        o.bound = bound;
        o.max_candidates = max_candidates;
        o.semistability = ss_opts();
        return o;
    };

    Report report;
    std::optional<PrimeInt> p;
    try {
        if (prime != 0) p.emplace(prime);
    } catch (const UsageError& e) {
        report.command = command_echo(app.get_subcommands().front()->get_name(), {{"p", prime}});
        report.record_error(kDomain, "usage", e.what());
        return report.emit();
    }

    try {
        if (c_res->parsed()) {
            report.command = command_echo("resultant", {{"input", input}});
            return for_each_document(report, input, [](const MorphismDocument& doc) {
                Json r;
                r["resultant"] = to_string(resultant(doc.presentation));
                r["is_morphism"] = is_morphism(doc.presentation);
                return r;
            });
        }
        if (c_val->parsed()) {
            report.command = command_echo("valuation", {{"input", input}, {"p", prime}});
            return for_each_document(report, input,
                                     [&](const MorphismDocument& doc) { return to_json(valuation_report(doc.presentation, *p)); });
        }
        if (c_conj->parsed()) {
            report.command = command_echo("conjugate", {{"input", input}, {"gamma", gamma_text}, {"p", prime}});
            return for_each_document(report, input, [&](const MorphismDocument& doc) {
                const RationalMatrix g = parse_matrix(gamma_text, doc.presentation.nvars());
                Json r;
                r["conjugate"] = to_json(MorphismDocument{.presentation = conjugate(doc.presentation, g)});
                if (p) r["valuation_check"] = to_json(check_conjugation_valuation(doc.presentation, g, *p));
                return r;
            });
        }
        if (c_ss->parsed()) {
            report.command = command_echo("semistable", {{"input", input}, {"p", prime}, {"extension_degree", extension_degree}});
            return for_each_document(report, input, [&](const MorphismDocument& doc) {
                return to_json(is_semistable_presentation(doc.presentation, *p, ss_opts()));
            });
        }
        if (c_min->parsed()) {
            report.command = command_echo("minimize", {{"input", input}, {"p", prime}, {"bound", bound}});
            return for_each_document(report, input, [&](const MorphismDocument& doc) {
                return to_json(certify_or_search_minimal(doc.presentation, *p, min_opts()));
            });
        }
        if (c_div->parsed()) {
            report.command = command_echo("divisor", {{"input", input}, {"bound", bound}});
            return for_each_document(report, input, [&](const MorphismDocument& doc) {
                return to_json(minimal_resultant_divisor(doc.presentation, min_opts()));
            });
        }
        if (c_glob->parsed()) {
            report.command = command_echo("globalize", {{"input", input}, {"bound", bound}});
            return for_each_document(report, input, [&](const MorphismDocument& doc) {
                return to_json(globalize_over_Q(doc.presentation, min_opts()));
            });
        }
        if (c_pgr->parsed()) {
            report.command = command_echo("pgr", {{"input", input}, {"p", prime}, {"bound", bound}});
            return for_each_document(report, input, [&](const MorphismDocument& doc) {
                return to_json(potential_good_reduction_status(doc.presentation, *p, min_opts()));
            });
        }
        if (c_verify->parsed()) {
            report.command = command_echo("verify", {{"suite", suite}, {"seed", seed}, {"count", count}, {"params", params_text}});
            const SuiteReport s = run_suite(suite, parse_params(params_text), seed, count, workers_from_environment());
            Json r;
            r["suite"] = s.suite;
            r["passed"] = s.passed;
            r["failed"] = s.failed;
            if (s.counterexample) r["first_counterexample"] = print_document(*s.counterexample);
            r["notes"] = s.notes;
            report.results.push_back(std::move(r));
            if (s.failed) {
                report.status = kDomain;
                if (s.counterexample) std::cerr << print_document(*s.counterexample) << "\n";
            }
            return report.emit();
        }
        if (c_corpus->parsed()) {
            report.command = command_echo("corpus", {{"kind", kind}, {"seed", seed}, {"n", corpus_n}, {"d", corpus_d},
                                                     {"p", prime}, {"k", corpus_k}, {"count", count}});
            std::vector<MorphismDocument> docs;
            const CoefficientBox cbox{-box, box};
            if (kind == "random") {
                docs = random_corpus(corpus_n, corpus_d, count, seed, cbox);
            } else {
                if (!p) throw UsageError("--p is required for --kind " + kind);
                if (kind == "conjugated-good") {
                    std::vector<Presentation> bases;
                    if (!bases_path.empty())
                        for (auto& d : parse_documents(read_input(bases_path))) bases.push_back(d.presentation);
                    docs = conjugated_good_corpus(corpus_n, corpus_d, *p, corpus_k, count, seed, bases, cbox);
                } else {
                    docs = boundary_scan(corpus_n, corpus_d, *p, ss_opts());
                }
            }
            const std::string text = print_documents(docs);
            if (out_path == "-") {
                std::cout << text;
                return kOk;
            }
            std::ofstream out(out_path, std::ios::binary);
            if (!out || !(out << text)) throw UsageError("cannot write '" + out_path + "'");
            Json r;
            r["out"] = out_path;
            r["documents"] = docs.size();
            report.results.push_back(std::move(r));
            return report.emit();
        }
    } catch (const BudgetError& e) {
        report.record_error(kBudget, "budget", e.what());
        return report.emit();
    } catch (const DomainError& e) {
        report.record_error(kDomain, "domain", e.what());
        return report.emit();
    } catch (const UsageError& e) {
        report.record_error(kDomain, "usage", e.what());
        return report.emit();
    }
    return kOk;
}
