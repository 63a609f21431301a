// octosieve: command-line front end for the sixteen octonion multiplication
// rules, the Hadamard sieve and the derivation checks.
//
// Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.

#include <charconv>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "octosieve/acceptance.hpp"
#include "octosieve/json_io.hpp"
#include "octosieve/octosieve.hpp"

namespace {

using namespace octosieve;
using Json = nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string octonion_text(const Octonion& o) {
    std::string s = "(";
    for (std::size_t k = 0; k < 8; ++k) {
        if (k) s += ", ";
        s += number(o[k]);
    }
    return s + ")";
}

/// "iK" (K in 0..7, i0 being the real unit) or eight comma-separated reals.
Octonion parse_octonion(std::string_view text) {
    if (text.size() == 2 && text[0] == 'i' && text[1] >= '0' && text[1] <= '7') {
        return Octonion::unit(static_cast<std::size_t>(text[1] - '0'));
    }
    Octonion o;
    std::size_t k = 0;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        if (k == 8) throw UsageError("octonion literal has more than 8 coefficients: " + std::string(text));
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(v)) {
            throw UsageError("bad coefficient '" + std::string(field) + "' in octonion literal");
        }
        o[k++] = v;
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (k != 8) throw UsageError("octonion literal needs 8 coefficients: " + std::string(text));
    return o;
}

Assignment parse_assignments(const std::vector<std::string>& items) {
    Assignment env;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--assign expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        if (!env.emplace(name, parse_octonion(std::string_view(item).substr(eq + 1))).second) {
            throw UsageError("variable '" + name + "' assigned twice");
        }
    }
    return env;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

void cmd_tables(int algebra, bool as_json) {
    const AlgebraId n(algebra);
    if (as_json) return print_json(json::table(n));
    const MulTable& t = mul_table(n);
    std::cout << "O[" << n.value() << "] parity " << parity_word(n).to_string() << "\n     ";
    for (int m = 0; m < 8; ++m) std::cout << std::setw(5) << (m == 0 ? std::string("1") : "i" + std::to_string(m));
    std::cout << '\n';
    for (int l = 0; l < 8; ++l) {
        std::cout << std::setw(5) << (l == 0 ? std::string("1") : "i" + std::to_string(l));
        for (int m = 0; m < 8; ++m) std::cout << std::setw(5) << json::signed_basis(t(l, m));
        std::cout << '\n';
    }
}

void cmd_triplets(int algebra, bool as_json) {
    const AlgebraId n(algebra);
    if (as_json) return print_json(json::triplets(n));
    const OrientedTripletSet ts = triplet_set(n);
    std::cout << "O[" << n.value() << "] " << to_string(n.chirality()) << "-handed, parity "
              << ts.parity.to_string() << '\n';
    for (const Triplet& t : ts.triplets()) {
        std::cout << "  {" << t.idx[0] << "," << t.idx[1] << "," << t.idx[2] << "}";
    }
    std::cout << '\n';
}

void cmd_orbit(bool as_json) {
    if (as_json) return print_json(json::orbit_table());
    std::cout << std::left << std::setw(4) << "N" << std::setw(14) << "generator" << std::setw(10) << "parity"
              << "chirality\n";
    for (const OrbitEntry& e : orbit()) {
        std::cout << std::setw(4) << e.id.value() << std::setw(14) << e.generator.word() << std::setw(10)
                  << e.parity.to_string() << to_string(e.id.chirality()) << '\n';
    }
    std::cout << std::right;
}

struct SieveArgs {
    std::string expr;
    std::vector<std::string> assign;
    bool random_assign = false;
    std::uint64_t seed = 0;
    int trials = default_trials;
};

void print_family_text(const char* label, const std::array<Octonion, 16>& values) {
    for (int k = 0; k < 16; ++k) {
        std::cout << "  " << label << "[" << std::setw(2) << k << "] = " << octonion_text(values[k]) << '\n';
    }
}

void cmd_sieve(const SieveArgs& a, bool as_json) {
    if (a.random_assign && !a.assign.empty()) throw UsageError("--assign and --random-assign are exclusive");
    if (a.trials < 1) throw UsageError("--trials must be at least 1");
    const Expr e = parse(a.expr);

    Assignment env;
    InvarianceVerdict verdict;
    if (a.random_assign) {
        // Shown values come from the first trial's assignment.
        env = IntSampler(a.seed).assignment(free_vars(e));
        verdict = is_invariant(e, a.trials, a.seed);
    } else {
        env = parse_assignments(a.assign);
    }
    const FunctionFamily f = evaluate_family(e, env);
    const DistanceFamily g = sieve(f);
    if (!a.random_assign) {
        verdict.trials = 1;
        if (const auto k = first_nonzero_distance(g)) {
            verdict.invariant = false;
            verdict.witness = InvarianceWitness{env, *k, g.values[*k]};
        }
    }
    const Octonion mean = g.values[0] * 0.25;

    if (as_json) {
        return print_json({
            {"schema", json::schema_version},
            {"expr", to_string(e)},
            {"assignment", json::assignment(env)},
            {"functions", json::family(f.values)},
            {"distances", json::family(g.values)},
            {"mean", json::octonion(mean)},
            {"trials", verdict.trials},
            {"invariant", verdict.invariant},
            {"witness", json::witness(verdict.witness)},
        });
    }
    std::cout << "expr: " << to_string(e) << '\n';
    for (const auto& [name, value] : env) std::cout << "  " << name << " = " << octonion_text(value) << '\n';
    std::cout << "functions f[N]:\n";
    print_family_text("f", f.values);
    std::cout << "distances g[k]:\n";
    print_family_text("g", g.values);
    std::cout << "mean function value g[0]/4 = " << octonion_text(mean) << '\n';
    if (verdict.invariant) {
        std::cout << "verdict: invariant (no counterexample found in " << verdict.trials << " trial"
                  << (verdict.trials == 1 ? "" : "s") << ")\n";
    } else {
        std::cout << "verdict: not invariant, g[" << verdict.witness->index
                  << "] = " << octonion_text(verdict.witness->distance);
        if (a.random_assign) {
            std::cout << " at";
            for (const auto& [name, value] : verdict.witness->assignment) {
                std::cout << ' ' << name << '=' << octonion_text(value);
            }
        }
        std::cout << '\n';
    }
}

struct DeriveArgs {
    std::string u, v, expr;
    std::vector<std::string> assign;
    bool random_assign = false;
    std::uint64_t seed = 0;
    std::optional<int> algebra;
    bool all = false;
    bool regimes = false;
    int trials = default_trials;
};

std::optional<int> basis_index(std::string_view s) {
    if (s.size() == 2 && s[0] == 'i' && s[1] >= '1' && s[1] <= '7') return s[1] - '0';
    return std::nullopt;
}

void cmd_derive(const DeriveArgs& a, bool as_json) {
    if (a.random_assign && !a.assign.empty()) throw UsageError("--assign and --random-assign are exclusive");
    if (a.algebra && a.all) throw UsageError("--algebra and --all are exclusive");
    if (a.trials < 1) throw UsageError("--trials must be at least 1");
    const Octonion u = parse_octonion(a.u);
    const Octonion v = parse_octonion(a.v);
    const Expr e = parse(a.expr);
    std::optional<AlgebraId> only;
    if (a.algebra) only = AlgebraId(*a.algebra);

    const Assignment env = a.random_assign ? IntSampler(a.seed).assignment(free_vars(e)) : parse_assignments(a.assign);
    const auto values = derivation_family(u, v, e, env);
    AlgebraSet equal;
    for (int n = 0; n < 16; ++n) equal[n] = values[n] == values[0];

    std::optional<ExprDerivationReport> report;
    if (a.regimes) {
        const auto iu = basis_index(a.u);
        const auto iv = basis_index(a.v);
        if (!iu || !iv) throw UsageError("--regimes needs --u and --v given as basis units i1..i7");
        report = expr_cross_algebra_equal(*iu, *iv, e, a.trials, a.seed);
    }

    if (as_json) {
        Json per = Json::array();
        for (int n = 0; n < 16; ++n) {
            if (only && only->value() != n) continue;
            per.push_back({
                {"algebra", n},
                {"function", json::octonion(eval(e, env, AlgebraId(n)))},
                {"derivation", json::octonion(values[n])},
            });
        }
        Json equal_list = Json::array();
        for (int n = 0; n < 16; ++n) {
            if (equal[n]) equal_list.push_back(n);
        }
        Json out{
            {"schema", json::schema_version},
            {"expr", to_string(e)},
            {"u", json::octonion(u)},
            {"v", json::octonion(v)},
            {"assignment", json::assignment(env)},
            {"algebras", per},
            {"equal_to_reference", equal_list},
            {"all_equal", equal.all()},
        };
        if (report) {
            out["regimes"] = {
                {"quaternion_basis", report->quaternion_basis},
                {"quaternionic", json::regime(report->quaternionic)},
                {"generic", json::regime(report->generic)},
            };
        }
        return print_json(out);
    }

    std::cout << "D_{u,v}(f) with f = " << to_string(e) << "\n  u = " << octonion_text(u)
              << "\n  v = " << octonion_text(v) << '\n';
    for (const auto& [name, value] : env) std::cout << "  " << name << " = " << octonion_text(value) << '\n';
    for (int n = 0; n < 16; ++n) {
        if (only && only->value() != n) continue;
        std::cout << "  D[" << std::setw(2) << n << "] = " << octonion_text(values[n]) << '\n';
    }
    std::cout << "cross-algebra: " << (equal.all() ? "equal in all 16 rules" : "differs between rules")
              << " (" << equal.count() << "/16 match rule 0)\n";
    if (report) {
        auto show = [](const char* label, const RegimeVerdict& r) {
            std::cout << "  " << label << ": " << (r.all_equal ? "equal" : "unequal") << " over " << r.trials
                      << " trial" << (r.trials == 1 ? "" : "s");
            if (r.witness) {
                std::cout << ", rule " << r.witness->algebra << " gives " << octonion_text(r.witness->value)
                          << " vs " << octonion_text(r.witness->reference);
            }
            std::cout << '\n';
        };
        show("quaternionic regime", report->quaternionic);
        show("generic regime", report->generic);
    }
}

int cmd_verify(bool quick, bool as_json) {
    acceptance::Options opt;
    opt.quick = quick;
    const auto results = acceptance::run_all(opt);
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed;

    if (as_json) {
        Json checks = Json::array();
        for (const auto& r : results) {
            checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        print_json({{"schema", json::schema_version},
                    {"quick", quick},
                    {"passed", passed},
                    {"total", results.size()},
                    {"checks", checks}});
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ' ' << std::left
                      << std::setw(34) << r.name << std::right << r.detail << '\n';
        }
        std::cout << passed << "/" << results.size() << " checks passed" << (quick ? " (quick)" : "") << '\n';
    }
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sixteen octonion multiplication rules, Hadamard sieve and derivation checks"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    int algebra = 0;
    auto* tables = app.add_subcommand("tables", "Print the 8x8 basis product table of one rule");
    tables->add_option("--algebra", algebra, "Rule index N")->required();
    add_format(tables);

    auto* triplets = app.add_subcommand("triplets", "Print the oriented triplets and parity word of one rule");
    triplets->add_option("--algebra", algebra, "Rule index N")->required();
    add_format(triplets);

    auto* orbit_cmd = app.add_subcommand("orbit", "Print all 16 rules with their generating automorphisms");
    add_format(orbit_cmd);

    SieveArgs sieve_args;
    auto* sieve_cmd = app.add_subcommand("sieve", "Evaluate an expression in all 16 rules and sieve it");
    sieve_cmd->add_option("--expr", sieve_args.expr, "Expression, e.g. \"a*b + b*a\"")->required();
    sieve_cmd->add_option("--assign", sieve_args.assign, "name=a0,...,a7 or name=iK (repeatable)");
    sieve_cmd->add_flag("--random-assign", sieve_args.random_assign, "Draw random integer assignments");
    sieve_cmd->add_option("--seed", sieve_args.seed, "Seed for --random-assign");
    sieve_cmd->add_option("--trials", sieve_args.trials, "Random trials for the invariance test");
    add_format(sieve_cmd);

    DeriveArgs derive_args;
    int derive_algebra = 0;
    auto* derive_cmd = app.add_subcommand("derive", "Apply D_{u,v} to an expression in every rule");
    derive_cmd->add_option("--u", derive_args.u, "u as iK or 8 reals")->required();
    derive_cmd->add_option("--v", derive_args.v, "v as iK or 8 reals")->required();
    derive_cmd->add_option("--expr", derive_args.expr, "Expression")->required();
    derive_cmd->add_option("--assign", derive_args.assign, "name=a0,...,a7 or name=iK (repeatable)");
    derive_cmd->add_flag("--random-assign", derive_args.random_assign, "Draw a random integer assignment");
    derive_cmd->add_option("--seed", derive_args.seed, "Seed for random assignments");
    auto* derive_algebra_opt = derive_cmd->add_option("--algebra", derive_algebra, "Show only rule N");
    derive_cmd->add_flag("--all", derive_args.all, "Show all 16 rules (default)");
    derive_cmd->add_flag("--regimes", derive_args.regimes,
                         "Also test quaternionic and generic random assignments");
    derive_cmd->add_option("--trials", derive_args.trials, "Trials per regime for --regimes");
    add_format(derive_cmd);

    bool quick = false;
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    verify->add_flag("--quick", quick, "Smaller randomized samples");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool as_json = format == "json";
    try {
        if (tables->parsed()) {
            cmd_tables(algebra, as_json);
        } else if (triplets->parsed()) {
            cmd_triplets(algebra, as_json);
        } else if (orbit_cmd->parsed()) {
            cmd_orbit(as_json);
        } else if (sieve_cmd->parsed()) {
            cmd_sieve(sieve_args, as_json);
        } else if (derive_cmd->parsed()) {
            if (derive_algebra_opt->count() > 0) derive_args.algebra = derive_algebra;
            cmd_derive(derive_args, as_json);
        } else if (verify->parsed()) {
            return cmd_verify(quick, as_json);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const octosieve::Error& e) {
        if (as_json) {
            std::cerr << nlohmann::json{{"schema", json::schema_version}, {"error", e.kind()}, {"message", e.what()}}
                             .dump()
                      << '\n';
        } else {
            std::cerr << "error[" << e.kind() << "]: " << e.what() << '\n';
        }
        return 1;
    }
    return 0;
}
