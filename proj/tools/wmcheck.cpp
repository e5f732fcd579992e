#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "spherical/report.hpp"

using namespace spherical;

namespace {

int emit_error(const std::string& error, const std::string& detail) {
    json e;
    e["error"] = error;
    e["detail"] = detail;
    std::cout << e.dump(2) << "\n";
    return 2;
}

json read_input(const std::string& path) {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(in);
}

struct CheckOptions {
    std::string input_path;
    bool explain = false;
    bool require_verdict = false;
    bool timings = false;
};

int run_verdict(const WeightMonoid& wm, const CheckOptions& opt, double parse_ms) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = decide_smooth(wm);
    auto t1 = std::chrono::steady_clock::now();
    if (opt.explain) {
        std::cout << explain_verdict(wm, v);
    } else {
        json out = verdict_to_json(wm, v);
        if (opt.timings) {
            json t;
            t["parse"] = parse_ms;
            t["decide"] = std::chrono::duration<double, std::milli>(t1 - t0).count();
            out["timings_ms"] = t;
        }
        std::cout << out.dump(2) << "\n";
    }
    if (opt.require_verdict && !v.smooth.has_value()) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decide whether a dominant-weight monoid comes from a smooth affine spherical variety"};
    app.require_subcommand(1);

    CheckOptions check_opt;
    auto* check = app.add_subcommand("check", "decide a monoid given as a JSON document");
    check->add_option("input", check_opt.input_path, "input file (default: stdin)");
    check->add_flag("--explain", check_opt.explain, "human-readable report instead of JSON");
    check->add_flag("--require-verdict", check_opt.require_verdict,
                    "exit 3 when no smoothness verdict can be produced");
    check->add_flag("--timings", check_opt.timings, "include timings_ms in the JSON output");

    std::string type_string = "A1";
    std::string isogeny = "simply_connected";
    CheckOptions model_opt;
    auto* model = app.add_subcommand("model", "decide existence of a smooth affine model variety");
    model->add_option("--type", type_string, "factor list, e.g. A3xC2")->required();
    model->add_option("--isogeny", isogeny, "simply_connected (default) or adjoint");
    model->add_flag("--explain", model_opt.explain, "human-readable report instead of JSON");
    model->add_flag("--timings", model_opt.timings, "include timings_ms in the JSON output");

    std::string sigma_type = "A1";
    std::string sigma_isogeny = "simply_connected";
    auto* sigma = app.add_subcommand("sigma-sc", "list the spherical roots of a group");
    sigma->add_option("--type", sigma_type, "factor list, e.g. A2xA2")->required();
    sigma->add_option("--isogeny", sigma_isogeny, "simply_connected (default) or adjoint");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            ParsedInput in;
            auto t0 = std::chrono::steady_clock::now();
            try {
                in = parse_input(read_input(check_opt.input_path));
            } catch (const std::exception& e) {
                return emit_error("invalid input", e.what());
            }
            auto t1 = std::chrono::steady_clock::now();
            try {
                WeightMonoid wm(in.datum, in.generators);
                return run_verdict(wm, check_opt,
                                   std::chrono::duration<double, std::milli>(t1 - t0).count());
            } catch (const NonPointedCone& e) {
                json out;
                out["error"] = "unsupported";
                out["detail"] = e.what();
                std::cout << out.dump(2) << "\n";
                return 3;
            }
        }
        if (model->parsed()) {
            std::vector<SimpleType> types;
            BasedRootDatum datum;
            try {
                types = parse_type_string(type_string);
                datum = (isogeny == "adjoint") ? adjoint(types) : simply_connected(types);
                if (isogeny != "adjoint" && isogeny != "simply_connected")
                    throw std::invalid_argument("unknown isogeny: " + isogeny);
            } catch (const std::exception& e) {
                return emit_error("invalid input", e.what());
            }
            WeightMonoid wm = full_weight_monoid(datum);
            return run_verdict(wm, model_opt, 0.0);
        }
        if (sigma->parsed()) {
            BasedRootDatum datum;
            try {
                auto types = parse_type_string(sigma_type);
                datum = (sigma_isogeny == "adjoint") ? adjoint(types) : simply_connected(types);
                if (sigma_isogeny != "adjoint" && sigma_isogeny != "simply_connected")
                    throw std::invalid_argument("unknown isogeny: " + sigma_isogeny);
            } catch (const std::exception& e) {
                return emit_error("invalid input", e.what());
            }
            std::cout << sigma_sc_to_json(datum, enumerate_sigma_sc(datum)).dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        return emit_error("internal error", e.what());
    }
    return 0;
}
