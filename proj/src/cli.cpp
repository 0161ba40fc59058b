#include "locc/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "locc/certify.hpp"
#include "locc/diagram.hpp"
#include "locc/families.hpp"
#include "locc/protocol.hpp"
#include "locc/states.hpp"

namespace locc {

namespace {

constexpr int kPass = 0;
constexpr int kVerdictFail = 1;
constexpr int kParamError = 2;
constexpr int kPreconditionError = 3;

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file " + path);
    f << text;
}

void write_manifest(const std::string& out_path, const std::string& command,
                    const nlohmann::ordered_json& params, const nlohmann::ordered_json& verdicts,
                    long long ms) {
    if (out_path.empty()) return;
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = params;
    j["outputs"] = {out_path};
    j["verdicts"] = verdicts;
    j["timing_ms"] = ms;
    std::ofstream f(out_path + ".manifest.json");
    if (f) f << j.dump(2) << "\n";
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                     t0)
            .count();
    }
};

StateSet build_from_params(int n, int m, const std::string& family) {
    FamilyParams p{n, m};
    Family f = family == "auto" ? auto_family(p) : family_from_name(family);
    return build_family(p, f);
}

int theorem_for(const std::string& family_tag) {
    if (family_tag == "thm1" || family_tag == "thm1_n4") return 4;
    if (family_tag == "thm2") return 5;
    if (family_tag == "thm3") return 6;
    return 0;
}

struct SweepRow {
    int n, m;
    std::string text;
    bool pass;
};

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"construction, certification and discrimination protocols for orthogonal product state families"};
    app.require_subcommand(1);
    app.fallthrough();
    bool seedless = false;
    app.add_flag("--seedless", seedless,
                 "reserved: no randomness is used anywhere, so this flag is rejected");

    int n = 0, m = 0, theorem = 0;
    std::string family = "auto", party = "both", format = "ascii";
    std::string in_path, out_path, tree_out;
    int n_min = 4, n_max = 0, m_min = 4, m_max = 0;
    bool no_simulate = false;

    auto* construct = app.add_subcommand("construct", "build a state family and emit its JSON");
    construct->add_option("--n", n, "A-side dimension")->required();
    construct->add_option("--m", m, "B-side dimension")->required();
    construct->add_option("--family", family, "thm1|thm1_n4|thm2|thm3|auto");
    construct->add_option("--out", out_path, "output path (default stdout)");

    auto* certify = app.add_subcommand("certify", "compute indistinguishability certificates");
    certify->add_option("--in", in_path, "state-set JSON input");
    certify->add_option("--n", n, "A-side dimension");
    certify->add_option("--m", m, "B-side dimension");
    certify->add_option("--family", family, "thm1|thm1_n4|thm2|thm3|auto");
    certify->add_option("--party", party, "A|B|both");
    certify->add_option("--out", out_path, "output path (default stdout)");

    auto* simulate = app.add_subcommand("simulate", "run the discrimination protocol tree");
    simulate->add_option("--n", n, "A-side dimension")->required();
    simulate->add_option("--m", m, "B-side dimension")->required();
    simulate->add_option("--theorem", theorem, "4|5|6 (default from family)");
    simulate->add_option("--out", out_path, "report path (default stdout)");
    simulate->add_option("--tree-out", tree_out, "also write the protocol tree JSON");

    auto* diagram = app.add_subcommand("diagram", "render the tiling diagram");
    diagram->add_option("--n", n, "A-side dimension")->required();
    diagram->add_option("--m", m, "B-side dimension")->required();
    diagram->add_option("--family", family, "thm1|thm1_n4|thm2|thm3|auto");
    diagram->add_option("--format", format, "ascii|svg");
    diagram->add_option("--out", out_path, "output path (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "construct+verify+certify(+simulate) over a grid");
    sweep->add_option("--n-min", n_min, "smallest n (default 4)");
    sweep->add_option("--n-max", n_max, "largest n")->required();
    sweep->add_option("--m-min", m_min, "smallest m (default 4)");
    sweep->add_option("--m-max", m_max, "largest m")->required();
    sweep->add_flag("--no-simulate", no_simulate, "skip the protocol runs");

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kPass;
        }
        err << "error: " << e.what() << "\n";
        return kParamError;
    }
    if (seedless) {
        err << "error: --seedless is reserved; this tool uses no randomness\n";
        return kParamError;
    }

    try {
        if (*construct) {
            Timer t;
            StateSet s = build_from_params(n, m, family);
            auto bad = verify_orthogonality(s);
            if (!bad.empty()) {
                err << "error: constructed set is not orthogonal\n";
                return kVerdictFail;
            }
            write_text(out_path, state_set_to_json(s), out);
            write_manifest(out_path, "construct",
                           {{"n", n}, {"m", m}, {"family", s.family_tag}},
                           {{"states", s.states.size()}, {"orthogonal", true}}, t.ms());
            return kPass;
        }

        if (*certify) {
            Timer t;
            StateSet s;
            if (!in_path.empty()) {
                std::ifstream f(in_path);
                if (!f) {
                    err << "error: cannot read " << in_path << "\n";
                    return kParamError;
                }
                std::stringstream buf;
                buf << f.rdbuf();
                s = state_set_from_json(buf.str());
            } else {
                if (n == 0 || m == 0) {
                    err << "error: certify needs --in or --n/--m\n";
                    return kParamError;
                }
                s = build_from_params(n, m, family);
            }
            if (!verify_orthogonality(s).empty()) {
                err << "error: input set is not mutually orthogonal\n";
                return kPreconditionError;
            }
            if (party != "A" && party != "B" && party != "both") {
                err << "error: --party must be A, B or both\n";
                return kParamError;
            }
            nlohmann::ordered_json j;
            bool all_scalar = true;
            if (party == "A" || party == "both") {
                auto c = certify_party(s, Party::A);
                all_scalar = all_scalar && c.is_scalar_only;
                j["A"] = nlohmann::ordered_json::parse(certificate_to_json(c));
            }
            if (party == "B" || party == "both") {
                auto c = certify_party(s, Party::B);
                all_scalar = all_scalar && c.is_scalar_only;
                j["B"] = nlohmann::ordered_json::parse(certificate_to_json(c));
            }
            write_text(out_path, j.dump(2) + "\n", out);
            write_manifest(out_path, "certify",
                           {{"n", s.n}, {"m", s.m}, {"family", s.family_tag}, {"party", party}},
                           {{"scalar_only", all_scalar}}, t.ms());
            return all_scalar ? kPass : kVerdictFail;
        }

        if (*simulate) {
            Timer t;
            FamilyParams p{n, m};
            Family fam = auto_family(p);
            int thm = theorem != 0 ? theorem : theorem_for(family_name(fam));
            ProtocolTree tree = build_protocol_tree(p, thm);
            StateSet s = build_family(p, fam);
            RunReport rep = run(tree, s);
            write_text(out_path, report_to_json(rep, tree), out);
            if (!tree_out.empty()) write_text(tree_out, tree_to_json(tree), out);
            write_manifest(out_path, "simulate", {{"n", n}, {"m", m}, {"theorem", thm}},
                           {{"perfect", rep.perfect}}, t.ms());
            return rep.perfect ? kPass : kVerdictFail;
        }

        if (*diagram) {
            if (format != "ascii" && format != "svg") {
                err << "error: --format must be ascii or svg\n";
                return kParamError;
            }
            StateSet s = build_from_params(n, m, family);
            Diagram d = layout(s);
            write_text(out_path, render(d, format == "ascii" ? DiagramFormat::ascii : DiagramFormat::svg),
                       out);
            return kPass;
        }

        if (*sweep) {
            if (n_max < n_min || m_max < m_min) {
                err << "error: empty sweep range\n";
                return kParamError;
            }
            std::vector<std::pair<int, int>> cells;
            for (int mm = m_min; mm <= m_max; ++mm)
                for (int nn = n_min; nn <= n_max; ++nn) cells.push_back({nn, mm});

            unsigned threads = std::thread::hardware_concurrency();
            if (threads == 0) threads = 1;
            if (const char* env = std::getenv("LOCC_LAB_THREADS")) {
                long v = std::strtol(env, nullptr, 10);
                if (v >= 1) threads = static_cast<unsigned>(v);
            }
            if (threads > cells.size()) threads = static_cast<unsigned>(cells.size());

            std::vector<SweepRow> rows(cells.size());
            std::atomic<size_t> next{0};
            auto worker = [&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    auto [nn, mm] = cells[i];
                    SweepRow row{nn, mm, "", true};
                    std::ostringstream line;
                    line << "n=" << nn << " m=" << mm << " ";
                    FamilyParams p{nn, mm};
                    if (nn < mm || mm < 4) {
                        line << "skipped (no construction for this shape)";
                        row.text = line.str();
                        rows[i] = row;
                        continue;
                    }
                    try {
                        Family fam = auto_family(p);
                        StateSet s = build_family(p, fam);
                        line << "family=" << s.family_tag << " states=" << s.states.size();
                        bool count_ok =
                            static_cast<long>(s.states.size()) == expected_count(p, fam);
                        bool orth_ok = verify_orthogonality(s).empty();
                        auto certs = certify_both(s);
                        bool cert_ok = certs.first.is_scalar_only && certs.second.is_scalar_only;
                        line << " count=" << (count_ok ? "ok" : "MISMATCH")
                             << " orthogonal=" << (orth_ok ? "ok" : "FAIL")
                             << " certA=" << (certs.first.is_scalar_only ? "scalar" : "nonscalar")
                             << " certB=" << (certs.second.is_scalar_only ? "scalar" : "nonscalar");
                        row.pass = count_ok && orth_ok && cert_ok;
                        if (!no_simulate) {
                            ProtocolTree tree = build_protocol_tree(p, theorem_for(s.family_tag));
                            RunReport rep = run(tree, s);
                            line << " simulate=" << (rep.perfect ? "perfect" : "FAIL");
                            row.pass = row.pass && rep.perfect;
                        }
                    } catch (const std::exception& e) {
                        line << "error (" << e.what() << ")";
                        row.pass = false;
                    }
                    row.text = line.str();
                    rows[i] = row;
                }
            };
            std::vector<std::thread> pool;
            for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();

            bool all_pass = true;
            for (const auto& r : rows) {
                out << r.text << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? kPass : kVerdictFail;
        }
    } catch (const parameter_error& e) {
        err << "error: " << e.what() << "\n";
        return kParamError;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const invalid_state& e) {
        err << "error: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerdictFail;
    }
    return kParamError;
}

}  // namespace locc
