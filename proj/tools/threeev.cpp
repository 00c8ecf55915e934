// Command-line front end: full sweep with table artifacts, stage-wise
// listings, refutation replay, cone analysis, and graph certification.

#include <threeev/certify.hpp>
#include <threeev/pipeline.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace threeev;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;

std::string default_out_dir() {
    if (const char* env = std::getenv("THREEEV_OUT")) return env;
    return "out";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
}

// eigenvalue literals: "5", "-2", "sqrt(6)", "-sqrt(6)", "3/2"
Quad parse_eigenvalue(std::string s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.erase(0, 1);
    }
    Quad v;
    if (s.rfind("sqrt(", 0) == 0 && s.back() == ')') {
        v = Quad::sqrt_of(std::stoll(s.substr(5, s.size() - 6)));
    } else if (auto slash = s.find('/'); slash != std::string::npos) {
        v = Quad(std::stoll(s.substr(0, slash)), 0, std::stoll(s.substr(slash + 1)), 1);
    } else {
        v = Quad(std::stoll(s));
    }
    return neg ? -v : v;
}

nlohmann::json certificate_json(const Graph& g, const Certificate& cert) {
    nlohmann::json j;
    j["n"] = g.order();
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(cert.edges_hash));
    j["edges_hash"] = hex;
    j["eigenvalues"] = {cert.theta0.str(), cert.theta1.str(), cert.theta2.str()};
    nlohmann::json alphas = nlohmann::json::array();
    for (const auto& a : cert.alpha) alphas.push_back({{"omega", a.omega}, {"beta", a.beta}});
    j["alpha"] = alphas;
    j["ok"] = cert.ok;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : cert.failures) fails.push_back({{"x", f.x}, {"y", f.y}, {"what", f.what}});
    j["failures"] = fails;
    return j;
}

Candidate candidate_from_json(const nlohmann::json& j) {
    Candidate c;
    c.params = {j.at("t").get<int>(), j.at("n").get<i64>(), j.at("s").get<i64>(),
                j.at("m").get<i64>()};
    c.valencies.params = c.params;
    c.valencies.omega = j.at("omega").get<i64>();
    c.valencies.betas = j.at("betas").get<std::vector<i64>>();
    c.counts = j.at("multiplicities").get<std::vector<i64>>();
    return c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact search and certification for graphs with three eigenvalues "
                 "and second largest eigenvalue 1"};
    app.require_subcommand(1);

    int t_min = kTMin, t_max = kTMax, jobs = 1;
    std::string out_dir = default_out_dir();
    bool expect_tables = false;
    bool bracket = true, n_lower = false, br_rule = true;

    auto add_toggles = [&](CLI::App* cmd) {
        cmd->add_flag("--bracket-condition,!--no-bracket-condition", bracket,
                      "require k_1 < s < k_r (default on)");
        cmd->add_flag("--apply-n-lower-bound,!--no-apply-n-lower-bound", n_lower,
                      "extra spectral floor n > (t-1/2)^2/2 (default off)");
        cmd->add_flag("--apply-br-uniqueness,!--no-apply-br-uniqueness", br_rule,
                      "refute equality cases via the cited uniqueness result (default on)");
    };
    auto make_options = [&] {
        SweepOptions opt;
        opt.t_min = t_min;
        opt.t_max = t_max;
        opt.jobs = jobs;
        opt.valency.bracket = bracket;
        opt.spectral.apply_n_lower_bound = n_lower;
        opt.refine.apply_br_uniqueness = br_rule;
        return opt;
    };

    auto* search = app.add_subcommand("search", "run the staged search and write artifacts");
    search->add_option("--t-min", t_min, "smallest t (>= 3)");
    search->add_option("--t-max", t_max, "largest t (<= 29)");
    search->add_option("--jobs", jobs, "worker threads across t");
    search->add_option("--out", out_dir, "output directory (env THREEEV_OUT overrides default)");
    search->add_flag("--expect-tables", expect_tables, "exit 1 unless counts match the published tables");
    add_toggles(search);

    int one_t = 3;
    i64 sel_n = -1, sel_s = -1, sel_m = -1;

    auto* spectral = app.add_subcommand("spectral", "list spectral parameter arrays for one t");
    spectral->add_option("--t", one_t)->required();
    add_toggles(spectral);

    auto* valencies = app.add_subcommand("valencies", "list feasible valency arrays");
    valencies->add_option("--t", one_t)->required();
    valencies->add_option("--n", sel_n, "restrict to one parameter array");
    valencies->add_option("--s", sel_s);
    valencies->add_option("--m", sel_m);
    add_toggles(valencies);

    auto* mults = app.add_subcommand("mults", "list feasible multiplicity arrays");
    mults->add_option("--t", one_t)->required();
    mults->add_option("--n", sel_n)->required();
    mults->add_option("--s", sel_s)->required();
    mults->add_option("--m", sel_m)->required();
    add_toggles(mults);

    std::string input_path;
    auto* refute = app.add_subcommand("refute", "re-run the elimination checks on candidate JSON");
    refute->add_option("file", input_path, "candidates.json")->required();
    add_toggles(refute);

    auto* cone = app.add_subcommand("cone", "bounds and case search for three-valency cones");
    cone->add_option("--t", one_t)->required();

    std::string th0_s, th1_s, th2_s;
    auto* verify = app.add_subcommand("verify", "certify the three-eigenvalue property of a graph file");
    verify->add_option("file", input_path, "graph file: 'n e' then edge lines")->required();
    verify->add_option("--theta0", th0_s, "expected eigenvalues, e.g. 5 1 -2 or sqrt(6)");
    verify->add_option("--theta1", th1_s);
    verify->add_option("--theta2", th2_s);

    auto* tables = app.add_subcommand("tables", "print the bundled published tables");

    CLI11_PARSE(app, argc, argv);

    try {
        if (search->parsed()) {
            auto res = run_sweep(make_options());
            std::string diag;
            const bool match = matches_gold(res, &diag);
            std::filesystem::create_directories(out_dir);
            const std::filesystem::path dir(out_dir);
            write_file(dir / "table1.csv", table1_csv(res));
            write_file(dir / "table2.csv", table2_csv(res));
            write_file(dir / "candidates.json", candidates_json(res));
            write_file(dir / "manifest.json", manifest_json(res, match, expect_tables));
            std::cout << "wrote " << (dir / "table1.csv").string() << " and friends; survivors: "
                      << res.survivors.size() << "\n";
            if (expect_tables && !match) {
                std::cerr << "expected-tables mismatch: " << diag << "\n";
                return kExitMismatch;
            }
            return kExitOk;
        }

        if (spectral->parsed()) {
            SpectralOptions so;
            so.apply_n_lower_bound = n_lower;
            std::cout << "n,s,m\n";
            for (const auto& p : enumerate_spectral(one_t, so))
                std::cout << p.n << ',' << p.s << ',' << p.m << '\n';
            return kExitOk;
        }

        if (valencies->parsed()) {
            SpectralOptions so;
            so.apply_n_lower_bound = n_lower;
            ValencyOptions vo;
            vo.bracket = bracket;
            std::cout << "n,s,m,omega,betas,valencies\n";
            for (const auto& p : enumerate_spectral(one_t, so)) {
                if (sel_n >= 0 && p.n != sel_n) continue;
                if (sel_s >= 0 && p.s != sel_s) continue;
                if (sel_m >= 0 && p.m != sel_m) continue;
                for (const auto& v : enumerate_valency_arrays(p, vo))
                    std::cout << p.n << ',' << p.s << ',' << p.m << ',' << v.omega << ','
                              << join(v.betas) << ',' << join(v.valencies()) << '\n';
            }
            return kExitOk;
        }

        if (mults->parsed()) {
            SpectralParams p{one_t, sel_n, sel_s, sel_m};
            if (!p.linkage_holds() || !check_spectral_conditions(p).all()) {
                std::cerr << "not a spectral parameter array: t=" << one_t << " n=" << sel_n
                          << " s=" << sel_s << " m=" << sel_m << "\n";
                return kExitBadInput;
            }
            ValencyOptions vo;
            vo.bracket = bracket;
            std::cout << "omega,betas,valencies,multiplicities\n";
            for (const auto& v : enumerate_valency_arrays(p, vo))
                for (const auto& ma : enumerate_multiplicity_arrays(v))
                    std::cout << v.omega << ',' << join(v.betas) << ',' << join(v.valencies())
                              << ',' << join(ma.counts) << '\n';
            return kExitOk;
        }

        if (refute->parsed()) {
            std::ifstream f(input_path);
            if (!f) {
                std::cerr << "cannot read " << input_path << "\n";
                return kExitBadInput;
            }
            nlohmann::json arr = nlohmann::json::parse(f);
            std::vector<Candidate> cands;
            for (const auto& j : arr) cands.push_back(candidate_from_json(j));
            RefineOptions ro;
            ro.apply_br_uniqueness = br_rule;
            auto report = refute_all(std::move(cands), ro);
            for (const auto& e : report.entries) {
                const Candidate& c = e.candidate;
                std::cout << "t=" << c.params.t << " (" << c.params.n << ',' << c.params.s << ','
                          << c.params.m << ") k=(" << join(c.valencies.valencies()) << ") n_i=("
                          << join(c.counts) << ") -> " << to_string(c.status);
                if (!c.reason.empty()) std::cout << ": " << c.reason;
                std::cout << '\n';
                for (const auto& cert : e.certificates)
                    std::cout << "    [" << cert.kind << "] " << cert.detail << '\n';
            }
            std::cout << "open: " << report.open_count << ", flagged: " << report.flagged_count
                      << '\n';
            return kExitOk;
        }

        if (cone->parsed()) {
            nlohmann::json j;
            j["t"] = one_t;
            auto b = cone_bounds(one_t);
            j["window"] = {{"lo", b.window_lo}, {"hi", b.window_hi}, {"feasible", b.feasible()}};
            auto candidate_row = [](const ConeCandidate& cc) {
                nlohmann::json r;
                r["alpha_x"] = Quad(0, cc.beta_x, 1, cc.omega).str();
                r["alpha_y"] = Quad(0, cc.beta_y, 1, cc.omega).str();
                r["omega"] = cc.omega;
                r["n"] = cc.n;
                if (cc.s) r["s"] = *cc.s;
                if (cc.n1) r["n1"] = *cc.n1;
                r["verdict"] = cc.verdict;
                return r;
            };
            if (one_t >= 3 && one_t <= 6) {
                auto rep = cone_case_search(one_t);
                nlohmann::json survivors = nlohmann::json::array();
                for (const auto& cc : rep.survivors) survivors.push_back(candidate_row(cc));
                nlohmann::json ledger = nlohmann::json::array();
                for (const auto& cc : rep.eliminated) ledger.push_back(candidate_row(cc));
                j["cones"] = survivors;
                j["eliminated"] = ledger;
            }
            std::cout << j.dump(2) << '\n';
            return kExitOk;
        }

        if (verify->parsed()) {
            std::ifstream f(input_path);
            if (!f) {
                std::cerr << "cannot read " << input_path << "\n";
                return kExitBadInput;
            }
            Graph g = read_graph(f);
            if (!g.connected()) {
                std::cerr << "graph is not connected\n";
                return kExitBadInput;
            }
            Quad th0, th1, th2;
            if (!th0_s.empty() || !th1_s.empty() || !th2_s.empty()) {
                if (th0_s.empty() || th1_s.empty() || th2_s.empty()) {
                    std::cerr << "provide all three of --theta0 --theta1 --theta2 or none\n";
                    return kExitBadInput;
                }
                th0 = parse_eigenvalue(th0_s);
                th1 = parse_eigenvalue(th1_s);
                th2 = parse_eigenvalue(th2_s);
            } else {
                auto sp = distinct_spectrum(g);
                if (sp.status != SpectrumStatus::ok || sp.eigenvalues.size() != 3) {
                    nlohmann::json j;
                    j["n"] = g.order();
                    j["ok"] = false;
                    j["note"] = sp.status == SpectrumStatus::ok
                                    ? "graph has " + std::to_string(sp.eigenvalues.size()) +
                                          " distinct eigenvalues"
                                    : sp.note;
                    std::cout << j.dump(2) << '\n';
                    return kExitMismatch;
                }
                th0 = sp.eigenvalues[0].value;
                th1 = sp.eigenvalues[1].value;
                th2 = sp.eigenvalues[2].value;
            }
            auto cert = certify_three_ev(g, th0, th1, th2);
            auto j = certificate_json(g, cert);
            if (cert.ok) j["walk3_ok"] = closed_walk3_check(g, cert);
            std::cout << j.dump(2) << '\n';
            return cert.ok ? kExitOk : kExitMismatch;
        }

        if (tables->parsed()) {
            std::cout << "t,S,K,M\n";
            for (const auto& g : kGoldTable1)
                std::cout << g.t << ',' << g.spectral << ',' << g.valency << ','
                          << g.multiplicity << '\n';
            std::cout << "\nt,n,s,m,valencies,multiplicities\n";
            for (const auto& g : gold_survivors())
                std::cout << g.t << ',' << g.n << ',' << g.s << ',' << g.m << ','
                          << join(g.valencies) << ',' << join(g.counts) << '\n';
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
