#include "qms/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qms/error.hpp"
#include "qms/instance.hpp"
#include "qms/json_io.hpp"

namespace qms {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitInternal = 3;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QMS_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw FormatError("QMS_SEED is not an unsigned integer");
        }
    }
    return 0;
}

InstanceDims parse_dims(const std::string& text) {
    std::vector<int> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            vals.push_back(std::stoi(item));
        } catch (...) {
            throw FormatError("--dims expects integers, got \"" + item + "\"");
        }
    }
    if (vals.size() != 8)
        throw FormatError("--dims expects m,n,p1,p2,p3,q1,q2,q3");
    for (int v : vals)
        if (v < 0) throw FormatError("--dims entries must be nonnegative");
    return InstanceDims{vals[0], vals[1], vals[2], vals[3],
                        vals[4], vals[5], vals[6], vals[7]};
}

EquationKind parse_eq(const std::string& s) {
    if (s == "three") return EquationKind::three_term;
    if (s == "four") return EquationKind::four_term;
    throw FormatError("--eq expects three|four");
}

UnknownId parse_var(const std::string& s) {
    if (s == "X") return UnknownId::X;
    if (s == "W") return UnknownId::W;
    if (s == "Y") return UnknownId::Y;
    if (s == "Z") return UnknownId::Z;
    throw FormatError("--var expects X|Y|Z|W");
}

// Reports go to --output when given, else to the command's stdout.
void emit(const ordered_json& j, const std::string& output_path, std::ostream& out) {
    const std::string text = j.dump(2) + "\n";
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(output_path);
    if (!f) throw Error("cannot open " + output_path + " for writing");
    f << text;
    if (!f) throw Error("write to " + output_path + " failed");
}

int cmd_gen(const std::string& output, std::uint64_t seed, const std::string& dims_text,
            const std::string& mode_text, std::ostream& out) {
    const InstanceDims dims = parse_dims(dims_text);
    const GenMode mode = parse_gen_mode(mode_text);
    const SevenInput in = gen_instance(seed, dims, mode);
    save_instance(output, in);
    ordered_json j;
    j["written"] = output;
    j["seed"] = seed;
    j["mode"] = to_string(mode);
    j["dims"] = {dims.m, dims.n, dims.p1, dims.p2, dims.p3, dims.q1, dims.q2, dims.q3};
    out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_decompose(const std::string& input, const std::string& output, std::ostream& out) {
    const SevenInput in = load_instance(input);
    const SevenDecomposition d = decompose_seven(in);
    const VerifyReport rep = verify_decomposition(d, in);
    ordered_json j = decomposition_to_json(d);
    j["verify"] = verify_report_to_json(rep);
    emit(j, output, out);
    return rep.all_pass() ? kExitOk : kExitInternal;
}

int cmd_solve(const std::string& input, const std::string& output, const std::string& eq_text,
              int samples, std::uint64_t seed, std::ostream& out) {
    const SevenInput in = load_instance(input);
    const EquationKind eq = parse_eq(eq_text);
    const SevenDecomposition d = decompose_seven(in);
    const ConsistencyReport rep = eq == EquationKind::three_term
                                      ? check_consistency_three(d)
                                      : check_consistency_four(d);
    ordered_json j;
    j["equation"] = to_string(eq);
    j["consistency"] = consistency_to_json(rep);
    if (!rep.consistent) {
        emit(j, output, out);
        return kExitInconsistent;
    }

    Rng rng(seed);
    ordered_json sample_list = ordered_json::array();
    bool residuals_zero = true;
    if (eq == EquationKind::three_term) {
        const SolutionFamilyThree fam = general_solution_three(d);
        j["family"] = family_to_json(fam);
        const ThreeSolution part = assemble_three(fam, zero_params(fam.free_slots));
        residuals_zero = residual_three(in, part).is_zero();
        ordered_json p;
        p["X"] = matrix_to_json(part.X);
        p["Y"] = matrix_to_json(part.Y);
        p["Z"] = matrix_to_json(part.Z);
        p["residual_zero"] = residuals_zero;
        j["particular"] = std::move(p);
        for (int s = 0; s < samples; ++s) {
            const ThreeSolution sol = assemble_three(fam, random_params(fam.free_slots, rng));
            const bool ok = residual_three(in, sol).is_zero();
            residuals_zero = residuals_zero && ok;
            ordered_json js;
            js["ranks"] = {{"X", rank(sol.X)}, {"Y", rank(sol.Y)}, {"Z", rank(sol.Z)}};
            js["residual_zero"] = ok;
            sample_list.push_back(std::move(js));
        }
    } else {
        const SolutionFamilyFour fam = general_solution_four(d);
        j["family"] = family_to_json(fam);
        const FourSolution part = assemble_four(fam, zero_params(fam.free_slots));
        residuals_zero = residual_four(in, part).is_zero();
        ordered_json p;
        p["X"] = matrix_to_json(part.X);
        p["W"] = matrix_to_json(part.W);
        p["Y"] = matrix_to_json(part.Y);
        p["Z"] = matrix_to_json(part.Z);
        p["residual_zero"] = residuals_zero;
        j["particular"] = std::move(p);
        for (int s = 0; s < samples; ++s) {
            const FourSolution sol = assemble_four(fam, random_params(fam.free_slots, rng));
            const bool ok = residual_four(in, sol).is_zero();
            residuals_zero = residuals_zero && ok;
            ordered_json js;
            js["ranks"] = {{"X", rank(sol.X)},
                           {"W", rank(sol.W)},
                           {"Y", rank(sol.Y)},
                           {"Z", rank(sol.Z)}};
            js["residual_zero"] = ok;
            sample_list.push_back(std::move(js));
        }
    }
    j["samples"] = std::move(sample_list);
    emit(j, output, out);
    return residuals_zero ? kExitOk : kExitInternal;
}

int cmd_rank_range(const std::string& input, const std::string& output,
                   const std::string& eq_text, const std::string& var_text,
                   std::ostream& out) {
    const SevenInput in = load_instance(input);
    const EquationKind eq = parse_eq(eq_text);
    const UnknownId var = parse_var(var_text);
    const SevenDecomposition d = decompose_seven(in);
    const RankRangeReport rep = eq == EquationKind::three_term
                                    ? rank_range_three(in, var, &d)
                                    : rank_range_four(in, var, &d);
    const RankRange internal = rank_range_internal_path(d, eq, var);
    ordered_json j = rank_range_report_to_json(rep);
    j["internal_path"] = {{"min", internal.min}, {"max", internal.max}};
    j["paths_agree"] = internal.min == rep.range.min && internal.max == rep.range.max;
    emit(j, output, out);
    return j["paths_agree"].get<bool>() ? kExitOk : kExitInternal;
}

int cmd_verify(const std::string& input, const std::string& output, std::ostream& out) {
    const SevenInput in = load_instance(input);
    const SevenDecomposition d = decompose_seven(in);
    const VerifyReport vrep = verify_decomposition(d, in);
    const ConsistencyReport three = check_consistency_three(d);
    const ConsistencyReport four = check_consistency_four(d);
    ordered_json j;
    j["decomposition"] = verify_report_to_json(vrep);
    j["consistency"] = {{"three", consistency_to_json(three)},
                        {"four", consistency_to_json(four)}};
    bool ok = vrep.all_pass();
    if (four.consistent) {
        const IdentityReport idr = verify_block_rank_identities(d, in);
        j["identities"] = identity_report_to_json(idr);
        ok = ok && idr.all_pass();
    }
    j["all_pass"] = ok;
    emit(j, output, out);
    return ok ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact quaternion-matrix decomposition and equation solver"};
    app.require_subcommand(1);

    std::string input, output, dims_text, mode_text = "raw", eq_text = "three", var_text;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int samples = 0;

    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "RNG seed (default: QMS_SEED or 0)")
            ->each([&](const std::string&) { seed_given = true; });
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance file");
    gen->add_option("--output", output, "instance file to write")->required();
    add_seed(gen);
    gen->add_option("--dims", dims_text, "m,n,p1,p2,p3,q1,q2,q3")->required();
    gen->add_option("--mode", mode_text, "raw|consistent-three|consistent-four");

    CLI::App* dec = app.add_subcommand("decompose", "simultaneous decomposition");
    dec->add_option("--input", input, "instance file")->required();
    dec->add_option("--output", output, "report file (default: stdout)");

    CLI::App* solve = app.add_subcommand("solve", "solvability and general solution");
    solve->add_option("--input", input, "instance file")->required();
    solve->add_option("--output", output, "report file (default: stdout)");
    solve->add_option("--eq", eq_text, "three|four");
    solve->add_option("--sample", samples, "number of random parameter draws");
    add_seed(solve);

    CLI::App* rr = app.add_subcommand("rank-range", "min/max rank of one unknown");
    rr->add_option("--input", input, "instance file")->required();
    rr->add_option("--output", output, "report file (default: stdout)");
    rr->add_option("--eq", eq_text, "three|four");
    rr->add_option("--var", var_text, "X|Y|Z|W")->required();

    CLI::App* verify = app.add_subcommand("verify", "full identity suite");
    verify->add_option("--input", input, "instance file")->required();
    verify->add_option("--output", output, "report file (default: stdout)");

    try {
        args.insert(args.begin(), "qms");
        std::vector<const char*> argv;
        argv.reserve(args.size());
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (!seed_given) seed = default_seed();
        if (gen->parsed()) return cmd_gen(output, seed, dims_text, mode_text, out);
        if (dec->parsed()) return cmd_decompose(input, output, out);
        if (solve->parsed()) return cmd_solve(input, output, eq_text, samples, seed, out);
        if (rr->parsed()) return cmd_rank_range(input, output, eq_text, var_text, out);
        if (verify->parsed()) return cmd_verify(input, output, out);
        err << "no subcommand given\n";
        return kExitIo;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const InconsistentSystem& e) {
        err << "inconsistent system: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const InternalInconsistency& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return kExitInternal;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qms
