#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toricsg/ensemble.hpp"
#include "toricsg/ktheory.hpp"
#include "toricsg/report.hpp"
#include "toricsg/verify.hpp"
#include "toricsg/version.hpp"

using namespace toricsg;

namespace {

// exit codes (CI contract)
constexpr int kOk = 0;
constexpr int kMalformed = 1;
constexpr int kInvalid = 2;
constexpr int kMismatch = 3;
constexpr int kBudget = 4;

i64 env_default(const char* name, i64 fallback) {
    const char* v = std::getenv(name);
    return v ? std::atoll(v) : fallback;
}

struct CommonOpts {
    std::string file;
    std::string format = "auto";  // auto | json | text
    bool pretty = false;
    bool normalize = false;
};

InstanceSpec load_instance(const CommonOpts& o) {
    std::ifstream in(o.file);
    if (!in) throw std::invalid_argument("cannot open " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    bool as_json = o.format == "json" ||
                   (o.format == "auto" && o.file.size() >= 5 &&
                    o.file.substr(o.file.size() - 5) == ".json");
    if (as_json) return parse_instance_json(json::parse(buf.str()));
    return parse_instance_text(buf.str());
}

// Basis change to Z^2 for a full-rank generator set that spans a proper
// sublattice; records the applied basis in the report.
std::vector<Vec2> normalize_generators_to_z2(const std::vector<Vec2>& gens, json& report) {
    IntMatrix2 B = lattice_basis_of_columns(gens);
    Vec2 c1 = B.column(0), c2 = B.column(1);
    if (c1.x == 0 || c2.y == 0) return gens;  // rank-deficient: cannot help
    std::vector<Vec2> out;
    for (Vec2 g : gens) {
        i64 gx = g.x / c1.x;
        i64 gy = (g.y - chk_mul(gx, c1.y)) / c2.y;
        out.push_back({gx, gy});
    }
    report["normalized"] = json{{"basis", B}, {"generators", out}};
    return out;
}

ToricSemigroup validate_for_cli(const CommonOpts& o, const InstanceSpec& spec, json& report) {
    std::vector<Vec2> gens = spec.generators;
    try {
        return ToricSemigroup::validate(gens);
    } catch (const ValidationError& e) {
        if (o.normalize && e.kind == ValidationFailure::NotGenerating)
            return ToricSemigroup::validate(normalize_generators_to_z2(gens, report));
        throw;
    }
}

void emit(const json& report, bool pretty) {
    std::cout << report.dump(2) << "\n";
    if (pretty) std::cerr << pretty_summary(report);
}

int with_timing(json& report, const std::function<int()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    int rc = body();
    auto t1 = std::chrono::steady_clock::now();
    report["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rc;
}

int run_instance_command(const CommonOpts& o,
                         const std::function<int(const ToricSemigroup&, json&)>& body) {
    json report;
    InstanceSpec spec;
    try {
        spec = load_instance(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    }
    report = base_report(spec);
    int rc = kOk;
    try {
        rc = with_timing(report, [&] {
            ToricSemigroup S = validate_for_cli(o, spec, report);
            report["validation"] = json{{"ok", true}};
            return body(S, report);
        });
    } catch (const ValidationError& e) {
        report["validation"] = json{{"ok", false}, {"error", to_string(e.kind)}};
        emit(report, o.pretty);
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    }
    emit(report, o.pretty);
    return rc;
}

bool parse_point(const std::string& s, Vec2& out) {
    std::istringstream in(s);
    char comma;
    return static_cast<bool>(in >> out.x >> comma >> out.y) && comma == ',';
}

int status_to_exit(const VerifyOutcome& v) {
    if (v.mismatch) return kMismatch;
    if (v.budget_exhausted) return kBudget;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural invariants and C*-algebra K-theory of finitely generated "
                 "subsemigroups of Z^2"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOpts common;
    i64 bound = env_default("TORICSG_BOUND", 200);
    i64 budget = env_default("TORICSG_BUDGET", 64);
    i64 cell_cap = env_default("TORICSG_CELL_CAP", Oracle::kDefaultCellCap);

    auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
        if (needs_file) cmd->add_option("file", common.file, "instance file")->required();
        cmd->add_option("--format", common.format, "input format: auto|json|text")
            ->check(CLI::IsMember({"auto", "json", "text"}));
        cmd->add_flag("--pretty", common.pretty, "human-readable summary on stderr");
        cmd->add_flag("--normalize", common.normalize,
                      "apply a basis change when the generators span a proper sublattice");
    };

    auto* analyze = app.add_subcommand("analyze", "full K-theory report, no oracle checks");
    add_common(analyze);

    auto* verify = app.add_subcommand("verify", "run every brute-force oracle check");
    add_common(verify);
    verify->add_option("--bound", bound, "enumeration window bound");
    verify->add_option("--budget", budget, "per-class search budget");
    verify->add_option("--cell-cap", cell_cap, "enumeration cell cap");

    std::string element_str;
    auto* index = app.add_subcommand("index", "index-map values of an element over both faces");
    add_common(index);
    index->add_option("--element", element_str, "element m,n")->required();

    std::string point_str;
    auto* member_cmd = app.add_subcommand("member", "exact membership of a lattice point");
    add_common(member_cmd);
    member_cmd->add_option("--point", point_str, "point m,n")->required();

    i64 enum_bound = 0;
    auto* enumerate = app.add_subcommand("enumerate", "list all members within a window");
    add_common(enumerate);
    enumerate->add_option("--bound", enum_bound, "functional bound N")->required();

    int count = 1;
    std::uint64_t seed = 1;
    i64 coord_max = 8;
    auto* batch = app.add_subcommand("batch", "random ensemble with aggregate verification");
    add_common(batch, /*needs_file=*/false);
    batch->add_option("--count", count, "number of instances")->required();
    batch->add_option("--seed", seed, "RNG seed");
    batch->add_option("--coord-max", coord_max, "coordinate magnitude cap");
    batch->add_option("--bound", bound, "enumeration window bound");
    batch->add_option("--budget", budget, "per-class search budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kMalformed;
    }

    VerifyOptions vopt{bound, budget, cell_cap, 3};

    if (analyze->parsed()) {
        return run_instance_command(common, [&](const ToricSemigroup& S, json& report) {
            report["semigroup"] = semigroup_json(S);
            report["ktheory"] = k_theory(S);
            return kOk;
        });
    }
    if (verify->parsed()) {
        return run_instance_command(common, [&](const ToricSemigroup& S, json& report) {
            report["semigroup"] = semigroup_json(S);
            report["ktheory"] = k_theory(S);
            VerifyOutcome v = verify_instance(S, vopt);
            report["checks"] = v.checks;
            if (S.generators() == std::vector<Vec2>{{1, 0}, {2, -1}, {2, 1}}) {
                Oracle oracle(S, cell_cap);
                bool ok = oracle.independence_failure_check(bound);
                report["checks"]["independence_failure"] =
                    json{{"status", ok ? "pass" : "fail"}};
                if (!ok) v.mismatch = true;
            }
            return status_to_exit(v);
        });
    }
    if (index->parsed()) {
        Vec2 s;
        if (!parse_point(element_str, s)) {
            std::cerr << "error: --element expects m,n\n";
            return kMalformed;
        }
        return run_instance_command(common, [&](const ToricSemigroup& S, json& report) {
            Oracle oracle(S, cell_cap);
            if (!oracle.member(s)) {
                report["index"] = json{{"element", s}, {"error", "NotMember"}};
                return kMalformed;
            }
            json values;
            for (int j : {1, 2}) {
                try {
                    values["face_" + std::to_string(j)] = index_map(oracle, s, j);
                } catch (const OnFace&) {
                    values["face_" + std::to_string(j)] = "undefined: on face";
                }
            }
            report["index"] = json{{"element", s}, {"values", values}};
            return kOk;
        });
    }
    if (member_cmd->parsed()) {
        Vec2 p;
        if (!parse_point(point_str, p)) {
            std::cerr << "error: --point expects m,n\n";
            return kMalformed;
        }
        return run_instance_command(common, [&](const ToricSemigroup& S, json& report) {
            Oracle oracle(S, cell_cap);
            report["member"] = json{{"point", p},
                                    {"member", oracle.member(p)},
                                    {"saturation_member", S.saturation_member(p)}};
            return kOk;
        });
    }
    if (enumerate->parsed()) {
        return run_instance_command(common, [&](const ToricSemigroup& S, json& report) {
            Oracle oracle(S, cell_cap);
            // the table may round its bound up; keep only the requested window
            std::vector<Vec2> members;
            for (Vec2 p : oracle.table(enum_bound).members())
                if (oracle.functional(p) <= enum_bound) members.push_back(p);
            report["enumeration"] = json{{"bound", enum_bound}, {"members", members}};
            return kOk;
        });
    }
    if (batch->parsed()) {
        json report{{"schema_version", kSchemaVersion},
                    {"tool_version", kVersion},
                    {"seed", seed},
                    {"coord_max", coord_max}};
        int rc = kOk;
        try {
            rc = with_timing(report, [&] {
                auto instances = generate_ensemble(count, seed, coord_max);
                json items = json::array();
                int worst = kOk;
                for (const auto& spec : instances) {
                    ToricSemigroup S = ToricSemigroup::validate(spec.generators);
                    VerifyOutcome v = verify_instance(S, vopt);
                    items.push_back(json{{"instance", spec},
                                         {"ktheory", k_theory(S)},
                                         {"checks", v.checks}});
                    worst = std::max(worst, status_to_exit(v));
                }
                report["instances"] = items;
                return worst;
            });
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kMalformed;
        }
        emit(report, common.pretty);
        return rc;
    }
    return kMalformed;
}
