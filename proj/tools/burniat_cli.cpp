// Batch front end; every command prints one JSON report and exits with
// 0 (ok), 2 (input error), 3 (degenerate configuration) or 4 (verification
// failure).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "burniat/cohomology.hpp"
#include "burniat/curve_enum.hpp"
#include "burniat/json_io.hpp"

namespace {

using namespace burniat;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitVerification = 4;

void emit(const ojson& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out_path);
        if (!os) throw InputError("cannot open output file " + out_path);
        os << text;
    }
}

ojson report_shell(const std::string& command, ojson inputs) {
    ojson rep;
    rep["command"] = command;
    rep["inputs"] = std::move(inputs);
    return rep;
}

std::vector<Rat> parse_rational_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw InputError("empty entry in rational list");
        out.push_back(parse_rational(tok));
    }
    return out;
}

ProjPoint parse_point(const std::string& csv) {
    const auto coords = parse_rational_list(csv);
    if (coords.size() != 3) throw InputError("a point needs 3 coordinates");
    return ProjPoint::of(coords[0], coords[1], coords[2]);
}

DivisorClass parse_class_spec(const std::string& csv, int r) {
    std::vector<long long> nums;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) nums.push_back(std::stoll(tok));
    if (static_cast<int>(nums.size()) != r + 1)
        throw InputError("class spec needs r + 1 integers (a, b_1..b_r)");
    return DivisorClass(nums[0], std::vector<long long>(nums.begin() + 1, nums.end()));
}

int cmd_enumerate_lines(int r, const std::vector<std::string>& minus2_specs,
                        const std::string& out_path) {
    ojson inputs;
    inputs["r"] = r;
    std::vector<DivisorClass> minus2;
    ojson minus2_json = ojson::array();
    for (const auto& spec : minus2_specs) {
        std::stringstream ss(spec);
        std::string one;
        while (std::getline(ss, one, ';')) {
            DivisorClass d = parse_class_spec(one, r);
            minus2_json.push_back(divisor_to_json(d));
            minus2.push_back(std::move(d));
        }
    }
    if (!minus2.empty()) inputs["minus2"] = minus2_json;
    ojson rep = report_shell("enumerate-lines", inputs);

    const CurveClassList all = enumerate_minus1_classes(r);
    const CurveClassList kept = minus2.empty() ? all : lines_on_weak_dp(r, minus2);

    ojson results;
    results["count"] = kept.classes.size();
    results["max_line_count"] = max_line_count(r);
    ojson classes = ojson::array();
    for (const auto& c : kept.classes) classes.push_back(divisor_to_json(c));
    results["classes"] = classes;
    if (!minus2.empty()) {
        ojson excluded = ojson::array();
        for (const auto& c : all.classes)
            if (std::find(kept.classes.begin(), kept.classes.end(), c) == kept.classes.end())
                excluded.push_back(divisor_to_json(c));
        results["excluded"] = excluded;
    }
    rep["results"] = results;
    rep["status"] = "ok";
    emit(rep, out_path);
    return kExitOk;
}

int cmd_classify(const std::string& config_path, const std::string& out_path) {
    std::ifstream is(config_path);
    if (!is) throw InputError("cannot open config file " + config_path);
    nlohmann::json j;
    is >> j;
    const BurniatConfig cfg = config_from_json(j);

    ojson rep = report_shell("classify", ojson{{"config", config_path}});
    const ClassifyResult cls = classify(cfg);
    ojson results;
    results["case"] = case_name(cls.tag);
    results["m"] = cls.m;
    results["k_squared"] = cls.k_squared;
    results["nodal"] = cls.nodal;
    results["arrangement"] = scan_to_json(cls.scan);
    rep["results"] = results;
    rep["status"] = "ok";
    emit(rep, out_path);
    return kExitOk;
}

int cmd_branch_data(const std::string& case_str, bool verify, bool inject_error,
                    const std::string& out_path) {
    const CaseTag tag = case_from_name(case_str);
    BranchData bd = branch_table(tag);
    if (inject_error) {
        // negative control: swap one E_4 coefficient to E_5 in D_{1,2}
        auto& cls = bd.components[0][1];
        if (cls.r() >= 5) {
            std::swap(cls.b[3], cls.b[4]);
        } else {
            cls.b[static_cast<size_t>(cls.r() - 1)] += 1;
        }
        bd.D[0] = bd.component(1, 1) + bd.component(1, 2) + bd.component(1, 3) + bd.component(1, 4);
    }

    ojson rep = report_shell("branch-data",
                             ojson{{"case", case_str}, {"verify", verify}, {"inject_error", inject_error}});
    ojson results;
    results["r"] = bd.lat.r;
    ojson comps = ojson::array();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 4; ++j) {
            ojson cj;
            cj["i"] = i;
            cj["j"] = j == 4 ? ojson("E") : ojson(j);
            cj["class"] = divisor_to_json(bd.component(i, j));
            comps.push_back(cj);
        }
    results["components"] = comps;
    ojson dsum = ojson::array(), lsum = ojson::array();
    for (int i = 0; i < 3; ++i) {
        dsum.push_back(divisor_to_json(bd.D[static_cast<size_t>(i)]));
        lsum.push_back(divisor_to_json(bd.L[static_cast<size_t>(i)]));
    }
    results["D"] = dsum;
    results["L"] = lsum;

    bool all_pass = true;
    if (verify || inject_error) {
        const auto checks = verify_branch_identities(bd);
        for (const auto& chk : checks) all_pass = all_pass && chk.pass;
        results["identities"] = identity_checks_to_json(checks);
        const BranchCensus census = branch_census(bd);
        results["census"] = ojson{{"lines", census.lines},
                                  {"conics", census.conics},
                                  {"contracted", census.contracted}};
        results["natural_deformations_galois"] =
            natural_deformations_galois(bd, case_negatives(bd));
    }
    rep["results"] = results;
    rep["status"] = all_pass ? "ok" : "error";
    if (!all_pass) rep["code"] = kExitVerification;
    emit(rep, out_path);
    return all_pass ? kExitOk : kExitVerification;
}

int cmd_cohomology_table(const std::string& case_str, const std::string& format,
                         const std::string& out_path) {
    const CaseTag tag = case_from_name(case_str);
    if (tag != CaseTag::K6 && tag != CaseTag::K5 && tag != CaseTag::K4nn && tag != CaseTag::K4n)
        throw InputError("case " + case_str + " is out of scope; supported: K6, K5, K4nn, K4n");
    const EigenspaceTable table = eigenspace_table(tag);
    if (format == "text") {
        if (!out_path.empty()) {
            std::ofstream os(out_path);
            os << format_table(table);
        } else {
            std::cout << format_table(table);
        }
        return kExitOk;
    }
    ojson rep = report_shell("cohomology-table", ojson{{"case", case_str}});
    rep["results"] = table_to_json(table);
    rep["results"]["text"] = format_table(table);
    rep["status"] = "ok";
    emit(rep, out_path);
    return kExitOk;
}

int cmd_verify_invariants(const std::string& case_str, int trials, std::uint64_t seed,
                          const std::string& out_path) {
    if (trials <= 0) throw InputError("trials must be positive");
    std::vector<IdentityTrialReport> reports;
    if (case_str == "K5")
        reports = run_invariant_suite5(trials, seed);
    else if (case_str == "K6")
        reports = run_invariant_suite6(trials, seed);
    else
        throw InputError("invariant suites exist for K5 and K6");

    int total_failures = 0;
    for (const auto& rep : reports) total_failures += rep.failures;

    ojson rep = report_shell("verify-invariants",
                             ojson{{"case", case_str}, {"trials", trials}, {"seed", seed}});
    rep["results"] = ojson{{"identities", trial_reports_to_json(reports)},
                           {"total_failures", total_failures}};
    rep["status"] = total_failures == 0 ? "ok" : "error";
    if (total_failures != 0) rep["code"] = kExitVerification;
    emit(rep, out_path);
    return total_failures == 0 ? kExitOk : kExitVerification;
}

int cmd_make_config(const std::string& case_str, const std::string& a_csv, const std::string& b_csv,
                    const std::string& p4_csv, const std::string& p5_csv, const std::string& b1_str,
                    const std::string& out_path) {
    const CaseTag tag = case_from_name(case_str);
    BuildParams params;
    params.c = tag;
    if (!a_csv.empty()) params.a = parse_rational_list(a_csv);
    if (!b_csv.empty()) params.b = parse_rational_list(b_csv);
    if (!b1_str.empty()) params.b = {parse_rational(b1_str)};
    if (!p4_csv.empty()) params.extra_points.push_back(parse_point(p4_csv));
    if (!p5_csv.empty()) params.extra_points.push_back(parse_point(p5_csv));
    const BurniatConfig cfg = build_burniat_lines(params);
    emit(config_to_json(cfg), out_path);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on Burniat branch configurations"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate-lines", "(-1)-classes on a blow-up of the plane");
    int r = 0;
    std::vector<std::string> minus2_specs;
    std::string out_path;
    enumerate->add_option("--r", r, "number of blown-up points (0..8)")->required();
    enumerate->add_option("--minus2", minus2_specs,
                          "effective (-2)-class a,b1,..,br; repeat or separate with ';'");
    enumerate->add_option("--out", out_path, "write the report to a file");

    auto* classify_cmd = app.add_subcommand("classify", "classify a 9-line configuration");
    std::string config_path;
    classify_cmd->add_option("--config", config_path, "configuration JSON file")->required();
    classify_cmd->add_option("--out", out_path);

    auto* branch = app.add_subcommand("branch-data", "branch divisor classes and identities");
    std::string case_str;
    bool verify = false, inject_error = false;
    branch->add_option("--case", case_str, "K6, K5, K4nn or K4n")->required();
    branch->add_flag("--verify", verify, "check the linear-equivalence identities");
    branch->add_flag("--inject-error", inject_error, "tamper with the table (negative control)");
    branch->add_option("--out", out_path);

    auto* cohom = app.add_subcommand("cohomology-table", "eigenspace dimensions of Theta_S");
    std::string format = "json";
    cohom->add_option("--case", case_str, "K6, K5, K4nn or K4n")->required();
    cohom->add_option("--format", format, "json (default) or text");
    cohom->add_option("--out", out_path);

    auto* verify_inv = app.add_subcommand("verify-invariants", "group actions and invariant identities");
    int trials = 1000;
    std::uint64_t seed = burniat::kDefaultSeed;
    verify_inv->add_option("--case", case_str, "K5 or K6")->required();
    verify_inv->add_option("--trials", trials, "evaluations per identity");
    verify_inv->add_option("--seed", seed, "random seed");
    verify_inv->add_option("--out", out_path);

    auto* make_config = app.add_subcommand("make-config", "build a configuration JSON file");
    std::string a_csv, b_csv, p4_csv, p5_csv, b1_str;
    make_config->add_option("--case", case_str)->required();
    make_config->add_option("--a", a_csv, "a1,a2,a3 for K6");
    make_config->add_option("--b", b_csv, "b1,b2,b3 for K6/K5");
    make_config->add_option("--p4", p4_csv, "P4 as x1,x2,x3");
    make_config->add_option("--p5", p5_csv, "P5 as x1,x2,x3");
    make_config->add_option("--b1", b1_str, "free parameter of the nodal case");
    make_config->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (*enumerate) return cmd_enumerate_lines(r, minus2_specs, out_path);
        if (*classify_cmd) return cmd_classify(config_path, out_path);
        if (*branch) return cmd_branch_data(case_str, verify, inject_error, out_path);
        if (*cohom) return cmd_cohomology_table(case_str, format, out_path);
        if (*verify_inv) return cmd_verify_invariants(case_str, trials, seed, out_path);
        if (*make_config)
            return cmd_make_config(case_str, a_csv, b_csv, p4_csv, p5_csv, b1_str, out_path);
    } catch (const burniat::DegenerateConfig& e) {
        std::cerr << "degenerate configuration: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const burniat::InvalidBurniat& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const burniat::Inconclusive& e) {
        std::cerr << "verification inconclusive: " << e.what() << "\n";
        return kExitVerification;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "bad JSON input: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
