#include "ecol/configs.hpp"
#include "ecol/discharge.hpp"
#include "ecol/embed.hpp"
#include "ecol/error.hpp"
#include "ecol/listcolor.hpp"
#include "ecol/reduce.hpp"
#include "ecol/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ecol;

constexpr std::uint64_t kDefaultSeed = 42;

int vertex_arg(const EmbeddedGraph& g, int id) {
    const auto v = g.index_of(id);
    if (!v) throw Error(ErrorKind::UnknownElement, "no vertex with id " + std::to_string(id));
    return *v;
}

int exit_for(Status s) { return s == Status::Fail ? 1 : 0; }

void print_verdict_text(const std::string& title, const Verdict& v) {
    std::cout << title << ": " << status_name(v.status) << " (" << v.instances << " instances";
    if (v.rejected > 0) std::cout << ", " << v.rejected << " rejected";
    std::cout << ")\n";
    for (const auto& n : v.notes) std::cout << "  " << n << "\n";
}

void print_witness_text(const ListAssignment& lists, const std::vector<std::string>& labels) {
    std::cout << "  witness:";
    for (std::size_t e = 0; e < lists.size(); ++e) {
        std::cout << " " << (e < labels.size() ? labels[e] : std::to_string(e)) << "={";
        bool first = true;
        for (int c : lists[e].to_vector()) {
            std::cout << (first ? "" : ",") << c;
            first = false;
        }
        std::cout << "}";
    }
    std::cout << "\n";
}

void print_claim_text(const ClaimReport& r) {
    print_verdict_text(r.claim + " [" + r.variant + ", " + r.tier + "]", r.verdict);
    if (r.verdict.witness) print_witness_text(*r.verdict.witness, r.witness_labels);
}

Tier parse_tier(const std::string& s) {
    if (s == "exhaustive") return Tier::Exhaustive;
    if (s == "sampled") return Tier::Sampled;
    if (s == "both") return Tier::Both;
    throw Error(ErrorKind::Parse, "unknown tier " + s);
}

bool exhaustive_by_default(ConfigId id) {
    return id == ConfigId::C1 || id == ConfigId::C2 || id == ConfigId::C8 || id == ConfigId::C11;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Edge list-coloring verification toolkit"};
    app.require_subcommand(1);

    bool json = false;
    int threads = 1;
    std::string file;

    auto* faces = app.add_subcommand("faces", "Trace the faces of an embedded graph");
    faces->add_option("file", file, "Rotation system file")->required();
    faces->add_flag("--json", json, "Machine-readable output");

    int cu = 0, cv = 0;
    auto* classify = app.add_subcommand("classify", "Classify the neighbor v of u");
    classify->add_option("file", file, "Rotation system file")->required();
    classify->add_option("u", cu, "Vertex id")->required();
    classify->add_option("v", cv, "Neighbor id")->required();
    classify->add_flag("--json", json, "Machine-readable output");

    std::string config;
    auto* match = app.add_subcommand("match", "Find configuration occurrences");
    match->add_option("file", file, "Rotation system file")->required();
    match->add_option("--config", config, "Restrict to one configuration, e.g. C5");
    match->add_flag("--json", json, "Machine-readable output");

    bool trace = false, per_component = false;
    auto* discharge = app.add_subcommand("discharge", "Run the discharging audit");
    discharge->add_option("file", file, "Rotation system file")->required();
    discharge->add_flag("--trace", trace, "List every charge transfer");
    discharge->add_flag("--per-component", per_component, "Audit each component of a disconnected graph");
    discharge->add_flag("--json", json, "Machine-readable output");

    std::string lemma;
    int max_len = 8;
    auto* verify_lemma = app.add_subcommand("verify-lemma", "Verify a choosability lemma exhaustively");
    verify_lemma->add_option("lemma", lemma, "evencycle, l2322 or star3")
        ->required()
        ->check(CLI::IsMember({"evencycle", "l2322", "star3"}));
    verify_lemma->add_option("--max-len", max_len, "Longest cycle for evencycle")->check(CLI::Range(4, 12));
    verify_lemma->add_flag("--json", json, "Machine-readable output");

    std::string tier, variant;
    std::uint64_t samples = 10000, seed = kDefaultSeed;
    auto* verify_config = app.add_subcommand("verify-config", "Check reducibility of a configuration's gadgets");
    verify_config->add_option("config", config, "Configuration, e.g. C11")->required();
    verify_config->add_option("--variant", variant, "Single variant instead of all");
    verify_config->add_option("--tier", tier, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify_config->add_option("--samples", samples, "Samples for the sampled tier");
    verify_config->add_option("--seed", seed, "Random seed");
    verify_config->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    verify_config->add_flag("--json", json, "Machine-readable output");

    std::uint64_t recolor_samples = 1000;
    auto* verify_recolor = app.add_subcommand("verify-recolor", "Check the recoloring steps and their controls");
    verify_recolor->add_option("--samples", recolor_samples, "Instances per bound profile");
    verify_recolor->add_option("--seed", seed, "Random seed");
    verify_recolor->add_flag("--json", json, "Machine-readable output");

    std::string run_tier = "both";
    auto* run_all_cmd = app.add_subcommand("run-all", "Run every lemma and configuration check");
    run_all_cmd->add_option("--tier", run_tier, "exhaustive, sampled or both")
        ->check(CLI::IsMember({"exhaustive", "sampled", "both"}));
    run_all_cmd->add_option("--samples", samples, "Samples per sampled gadget");
    run_all_cmd->add_option("--recolor-samples", recolor_samples, "Instances per recoloring claim");
    run_all_cmd->add_option("--seed", seed, "Random seed");
    run_all_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    run_all_cmd->add_flag("--json", json, "Machine-readable output");

    GeneratorOptions gen_opts;
    gen_opts.seed = kDefaultSeed;
    std::string output;
    auto* gen = app.add_subcommand("gen", "Generate a connected planar graph");
    gen->add_option("--n", gen_opts.n, "Number of vertices")->required()->check(CLI::Range(1, 100000));
    gen->add_option("--max-degree", gen_opts.max_degree, "Degree cap")->required()->check(CLI::Range(3, 64));
    gen->add_option("--seed", gen_opts.seed, "Random seed");
    gen->add_option("--delete-fraction", gen_opts.delete_fraction, "Fraction of edges to try deleting")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("-o,--output", output, "Output file instead of standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*faces) {
            const auto g = read_graph_file(file);
            if (json) {
                std::cout << dump(faces_json(g));
            } else {
                std::cout << "V=" << g.num_vertices() << " E=" << g.num_edges() << " F=" << g.num_faces() << "\n";
                for (int f = 0; f < g.num_faces(); ++f) {
                    std::cout << "f" << f << " (degree " << g.face(f).degree() << "):";
                    for (int v : g.face(f).walk) std::cout << " " << g.id(v);
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (*classify) {
            const auto g = read_graph_file(file);
            const int u = vertex_arg(g, cu), v = vertex_arg(g, cv);
            const Json j = classify_json(g, u, v);
            if (json) {
                std::cout << dump(j);
            } else {
                std::cout << cv << " as neighbor of " << cu << ": " << j["base"].get<std::string>() << ", "
                          << j["special"].get<std::string>() << "\n";
            }
            return 0;
        }
        if (*match) {
            const auto g = read_graph_file(file);
            std::map<ConfigId, std::vector<ConfigMatch>> found;
            if (config.empty()) {
                found = match_all(g);
            } else {
                const auto id = parse_config_id(config);
                if (!id) throw Error(ErrorKind::Parse, "unknown configuration " + config);
                found[*id] = match_config(g, *id);
            }
            if (json) {
                std::cout << dump(matches_json(g, found));
            } else {
                std::size_t total = 0;
                for (const auto& [id, list] : found) {
                    total += list.size();
                    for (const auto& m : list) {
                        std::cout << config_name(id) << ":";
                        const auto& roles = config_roles(id);
                        for (std::size_t r = 0; r < m.binding.size(); ++r)
                            std::cout << " " << roles[r] << "=" << g.id(m.binding[r]);
                        std::cout << "\n";
                    }
                }
                std::cout << total << " matches\n";
            }
            return 0;
        }
        if (*discharge) {
            const auto g = read_graph_file(file);
            AuditOptions ao;
            ao.per_component = per_component;
            const AuditReport r = audit(g, ao);
            ChargeLedger ledger;
            if (trace) {
                if (!g.connected() && !per_component)
                    throw Error(ErrorKind::Disconnected, "graph is disconnected");
                ledger = initial_charges(g);
                apply_rules(g, ledger);
            }
            if (json) {
                Json j = audit_json(g, r);
                if (trace) j["transfers"] = transfers_json(g, ledger);
                std::cout << dump(j);
            } else {
                if (trace) {
                    for (const auto& t : ledger.log) {
                        std::cout << "R" << t.rule << " " << element_name(g, t.source) << " -> "
                                  << element_name(g, t.target) << " " << t.amount.str();
                        if (t.multiplicity > 1) std::cout << " x" << t.multiplicity;
                        std::cout << "\n";
                    }
                }
                std::cout << "initial total " << r.initial_total.str() << ", final total " << r.final_total.str()
                          << "\n";
                for (const auto& n : r.negatives)
                    std::cout << "negative " << element_name(g, n.element) << " " << n.charge.str() << "\n";
                for (const auto& [id, count] : r.configs_found)
                    std::cout << config_name(id) << ": " << count << "\n";
                std::cout << "contradiction: " << (r.contradiction ? "yes" : "no") << "\n";
            }
            return r.contradiction ? 1 : 0;
        }
        if (*verify_lemma) {
            Verdict v;
            if (lemma == "evencycle") v = verify_even_cycle(max_len);
            else if (lemma == "l2322") v = verify_l2322();
            else v = verify_star3();
            if (json) {
                Json j{{"lemma", lemma}};
                j.update(verdict_json(v));
                std::cout << dump(j);
            } else {
                print_verdict_text(lemma, v);
            }
            return exit_for(v.status);
        }
        if (*verify_config) {
            const auto id = parse_config_id(config);
            if (!id) throw Error(ErrorKind::Parse, "unknown configuration " + config);
            const bool exhaustive = tier.empty() ? exhaustive_by_default(*id) : tier == "exhaustive";
            std::vector<std::string> variants = variant.empty() ? gadget_variants(*id) : std::vector{variant};
            std::vector<ClaimReport> reports;
            for (const auto& var : variants) {
                const Gadget g = build_gadget(*id, var);
                ClaimReport r{g.config, g.variant, exhaustive ? "exhaustive" : "sampled", {}, {}};
                r.verdict = exhaustive ? check_reducible_exhaustive(g)
                                       : check_reducible_sampled(g, SampleOptions{samples, seed, threads});
                if (r.verdict.witness) r.witness_labels = g.labels(g.working_edges());
                reports.push_back(std::move(r));
            }
            if (json) {
                std::cout << dump(run_all_json(reports));
            } else {
                for (const auto& r : reports) print_claim_text(r);
            }
            if (!all_pass(reports)) return 1;
            for (const auto& r : reports) {
                if (r.verdict.status == Status::Budget) return 2;
            }
            return 0;
        }
        if (*verify_recolor) {
            const auto checks = check_recoloring_claims(recolor_samples, seed);
            bool ok = true;
            Json arr = Json::array();
            for (const auto& c : checks) {
                if (c.disagreements > 0 || (!c.weakened && c.failures > 0)) ok = false;
                arr.push_back(recolor_json(c));
            }
            if (json) {
                std::cout << dump(Json{{"status", ok ? "PASS" : "FAIL"}, {"checks", arr}});
            } else {
                for (const auto& c : checks) {
                    std::cout << c.claim << (c.weakened ? " control" : "") << " bounds";
                    for (int b : c.bounds) std::cout << " " << b;
                    std::cout << ": " << c.failures << "/" << c.instances << " failures, " << c.disagreements
                              << " disagreements\n";
                }
                std::cout << (ok ? "PASS" : "FAIL") << "\n";
            }
            return ok ? 0 : 1;
        }
        if (*run_all_cmd) {
            RunOptions ro;
            ro.tier = parse_tier(run_tier);
            ro.seed = seed;
            ro.samples = samples;
            ro.recolor_samples = recolor_samples;
            ro.threads = threads;
            const auto reports = run_all(ro);
            if (json) {
                std::cout << dump(run_all_json(reports));
            } else {
                for (const auto& r : reports) print_claim_text(r);
                std::cout << (all_pass(reports) ? "PASS" : "FAIL") << "\n";
            }
            return all_pass(reports) ? 0 : 1;
        }
        if (*gen) {
            const auto g = generate_planar(gen_opts);
            const std::string text = serialize_rotation(g);
            if (output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(output);
                if (!out) throw Error(ErrorKind::Parse, "cannot write " + output);
                out << text;
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
