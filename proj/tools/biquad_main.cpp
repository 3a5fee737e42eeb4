// biquad - norm optimization for two-generator tensor polynomials.
//
// Subcommands:
//   value    global norm maximum over the anticommutation square
//   surface  norm on a uniform grid, CSV
//   state    optimal state at the best (or a given) point
//   tilted   closed-form data for the tilted CHSH family
//   convert  bias -> positive game shift
//   oracle   sampled strategy lower bound
//
// Exit codes: 0 success, 2 input/validation error, 3 domain/region/contract
// error.  BIQUAD_THREADS caps worker threads (default: hardware concurrency).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "biquad/convert.hpp"
#include "biquad/errors.hpp"
#include "biquad/optimizer.hpp"
#include "biquad/oracle.hpp"
#include "biquad/poly_io.hpp"
#include "biquad/reduce.hpp"
#include "biquad/state.hpp"
#include "biquad/tilted.hpp"
#include "biquad/word.hpp"

#include "json_writer.hpp"

namespace {

struct PolySource {
    std::string inline_json;
    std::string input_path;

    biquad::BiasPolynomial load() const {
        if (inline_json.empty() == input_path.empty()) {
            throw biquad::ConfigError("provide exactly one of --poly or --input");
        }
        if (!inline_json.empty()) return biquad::parse_bias_polynomial(inline_json);
        std::ifstream in(input_path);
        if (!in) throw biquad::InputError("cannot open input file: " + input_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return biquad::parse_bias_polynomial(ss.str());
    }
};

void add_poly_options(CLI::App* cmd, PolySource& src) {
    cmd->add_option("--poly", src.inline_json, "polynomial as inline JSON");
    cmd->add_option("--input", src.input_path, "path to a polynomial JSON file");
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw biquad::InputError("cannot open output file: " + output_path);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
}

void write_point(JsonWriter& w, const biquad::AnticommPoint& pt) {
    w.begin_object();
    w.key("s");
    w.value(pt.s_alice);
    w.key("t");
    w.value(pt.t_bob);
    w.end_object();
}

std::string render_value(const biquad::OptimizationResult& res, int grid_n, bool include_grid) {
    JsonWriter w;
    w.begin_object();
    w.key("value");
    w.value(res.value);
    w.key("best_points");
    w.begin_array();
    for (const auto& pt : res.best_points) write_point(w, pt);
    w.end_array();
    w.key("best_intervals");
    w.begin_array();
    for (const auto& iv : res.best_intervals) {
        w.begin_object();
        w.key("varying");
        w.value(std::string(1, iv.varying));
        w.key("fixed_value");
        w.value(iv.fixed_value);
        w.key("lo");
        w.value(iv.lo);
        w.key("hi");
        w.value(iv.hi);
        w.end_object();
    }
    w.end_array();
    w.key("refinement_depth");
    w.value(res.refinement_depth);
    w.key("tolerance");
    w.value(res.tolerance);
    w.key("grid_n");
    w.value(grid_n);
    w.key("value_trace");
    w.begin_array();
    for (double v : res.value_trace) w.value(v);
    w.end_array();
    if (include_grid) {
        w.key("grid");
        w.begin_array();
        for (const auto& smp : res.grid) {
            w.begin_object();
            w.key("s");
            w.value(smp.point.s_alice);
            w.key("t");
            w.value(smp.point.t_bob);
            w.key("norm");
            w.value(smp.norm);
            w.end_object();
        }
        w.end_array();
    }
    w.end_object();
    return w.str();
}

std::string render_state(const biquad::OptimalState& st, const biquad::MomentTable& table) {
    JsonWriter w;
    w.begin_object();
    w.key("point");
    write_point(w, st.point);
    w.key("eigenvalue");
    w.value(st.eigenvalue);
    w.key("degenerate");
    w.value(st.degenerate);
    w.key("vector");
    w.begin_array();
    for (const auto& x : st.vector) {
        w.begin_object();
        w.key("re");
        w.value(x.real());
        w.key("im");
        w.value(x.imag());
        w.end_object();
    }
    w.end_array();
    w.key("schmidt");
    w.begin_object();
    w.key("a");
    w.value(st.schmidt.a);
    w.key("d");
    w.value(st.schmidt.d);
    w.end_object();
    w.key("moments");
    w.begin_array();
    for (const auto& [key, val] : table.entries) {
        w.begin_object();
        w.key("alice");
        w.value(key.first);
        w.key("bob");
        w.value(key.second);
        w.key("re");
        w.value(val.real());
        w.key("im");
        w.value(val.imag());
        w.end_object();
    }
    w.end_array();
    w.end_object();
    return w.str();
}

std::string render_tilted(const biquad::TiltedParams& p) {
    const biquad::RegionClass rc = biquad::classify(p);
    JsonWriter w;
    w.begin_object();
    w.key("alpha");
    w.value(p.alpha);
    w.key("beta");
    w.value(p.beta);
    w.key("region");
    w.value(biquad::to_string(rc.label));
    w.key("value");
    w.value(rc.value());
    w.key("q_value_sq");
    w.value(rc.q_value_sq);
    w.key("l1_value_sq");
    w.value(rc.l1_value_sq);
    w.key("la_value_sq");
    w.value(rc.la_value_sq);
    try {
        w.key("t_star");
        w.value(biquad::t_star(p));
    } catch (const biquad::RegionError&) {
        w.value(std::string("undefined"));
    }
    try {
        const biquad::ClosedFormState st = biquad::closed_form_state(p);
        w.key("state");
        w.begin_object();
        w.key("a");
        w.value(st.a);
        w.key("d");
        w.value(st.d);
        w.key("w_plus_norm");
        w.value(st.w_plus_norm);
        w.key("w_minus_norm");
        w.value(st.w_minus_norm);
        w.key("moments");
        w.begin_array();
        for (const auto& row : st.moments) {
            w.begin_array();
            for (double x : row) w.value(x);
            w.end_array();
        }
        w.end_array();
        w.end_object();
    } catch (const biquad::RegionError&) {
        // No interior critical point; the summary above is complete.
    }
    w.end_object();
    return w.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"norm optimization for two-generator tensor polynomials"};
    app.require_subcommand(1);
    app.footer("Environment: BIQUAD_THREADS caps worker threads (unset/0 = hardware).");

    std::string output_path;
    app.add_option("--output", output_path, "write result to file instead of stdout")
        ->capture_default_str();

    // value
    auto* value_cmd = app.add_subcommand("value", "global norm maximum over the square");
    PolySource value_src;
    add_poly_options(value_cmd, value_src);
    biquad::OptimizerConfig value_cfg;
    value_cmd->add_option("--grid", value_cfg.grid_n, "coarse grid points per axis")
        ->capture_default_str();
    value_cmd->add_option("--refine", value_cfg.refine_iters, "refinement iterations")
        ->capture_default_str();
    value_cmd->add_option("--tol", value_cfg.tol, "best-set tie tolerance")->capture_default_str();
    bool no_grid = false;
    value_cmd->add_flag("--no-grid", no_grid, "omit the coarse grid from the output");

    // surface
    auto* surface_cmd = app.add_subcommand("surface", "norm surface on a uniform grid (CSV)");
    PolySource surface_src;
    add_poly_options(surface_cmd, surface_src);
    int surface_grid = 101;
    surface_cmd->add_option("--grid", surface_grid, "grid points per axis")->capture_default_str();

    // state
    auto* state_cmd = app.add_subcommand("state", "optimal state at the best (or given) point");
    PolySource state_src;
    add_poly_options(state_cmd, state_src);
    biquad::OptimizerConfig state_cfg;
    state_cmd->add_option("--grid", state_cfg.grid_n, "coarse grid points per axis")
        ->capture_default_str();
    state_cmd->add_option("--refine", state_cfg.refine_iters, "refinement iterations")
        ->capture_default_str();
    state_cmd->add_option("--tol", state_cfg.tol, "best-set tie tolerance")->capture_default_str();
    std::string at_point;
    state_cmd->add_option("--at", at_point, "evaluate at \"s,t\" instead of searching");
    int max_len = 2;
    state_cmd->add_option("--max-len", max_len, "max word length per side in the moment table")
        ->capture_default_str();

    // tilted
    auto* tilted_cmd = app.add_subcommand("tilted", "closed forms for the tilted CHSH family");
    biquad::TiltedParams tp;
    tilted_cmd->add_option("--alpha", tp.alpha, "tilt of the u(x)(u+v) block")->required();
    tilted_cmd->add_option("--beta", tp.beta, "marginal tilt (enters as 2*beta)")->required();

    // convert
    auto* convert_cmd = app.add_subcommand("convert", "bias -> positively shifted game");
    PolySource convert_src;
    add_poly_options(convert_cmd, convert_src);

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "sampled strategy lower bound");
    PolySource oracle_src;
    add_poly_options(oracle_cmd, oracle_src);
    long samples = 10000;
    unsigned long seed = 42;
    oracle_cmd->add_option("--samples", samples, "number of sampled strategies")
        ->capture_default_str();
    oracle_cmd->add_option("--seed", seed, "seed for the sample-sequence rotation")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (value_cmd->parsed()) {
            const auto poly = value_src.load();
            const auto res = biquad::optimize(poly, value_cfg);
            emit(render_value(res, value_cfg.grid_n, !no_grid), output_path);
        } else if (surface_cmd->parsed()) {
            const auto poly = surface_src.load();
            emit(biquad::surface_to_csv(biquad::evaluate_surface(poly, surface_grid)),
                 output_path);
        } else if (state_cmd->parsed()) {
            const auto poly = state_src.load();
            biquad::AnticommPoint pt;
            if (!at_point.empty()) {
                const auto comma = at_point.find(',');
                if (comma == std::string::npos) {
                    throw biquad::InputError("--at expects \"s,t\"");
                }
                try {
                    pt.s_alice = std::stod(at_point.substr(0, comma));
                    pt.t_bob = std::stod(at_point.substr(comma + 1));
                } catch (const std::exception&) {
                    throw biquad::InputError("--at expects two numbers \"s,t\"");
                }
            } else {
                const auto res = biquad::optimize(poly, state_cfg);
                if (res.best_points.empty()) {
                    throw biquad::ContractError("optimizer returned no best point");
                }
                pt = res.best_points.front();
            }
            const auto st = biquad::extract_state(poly, pt);
            emit(render_state(st, biquad::moment_table(st, max_len)), output_path);
        } else if (tilted_cmd->parsed()) {
            emit(render_tilted(tp), output_path);
        } else if (convert_cmd->parsed()) {
            const auto game = biquad::to_game(convert_src.load());
            JsonWriter w;
            w.begin_object();
            w.key("shift");
            w.value(game.shift);
            w.key("terms");
            w.begin_array();
            for (const auto& t : game.base.terms) {
                w.begin_object();
                w.key("coeff");
                w.value(t.coeff);
                w.key("alice");
                w.value(t.alice.letters);
                w.key("bob");
                w.value(t.bob.letters);
                w.end_object();
            }
            w.end_array();
            w.end_object();
            emit(w.str(), output_path);
        } else if (oracle_cmd->parsed()) {
            const auto poly = oracle_src.load();
            const auto best = biquad::brute_force_value(poly, samples, seed);
            JsonWriter w;
            w.begin_object();
            w.key("achieved");
            w.value(best.achieved);
            w.key("alice_angles");
            w.begin_array();
            w.value(best.alice_angles[0]);
            w.value(best.alice_angles[1]);
            w.end_array();
            w.key("bob_angles");
            w.begin_array();
            w.value(best.bob_angles[0]);
            w.value(best.bob_angles[1]);
            w.end_array();
            w.key("samples");
            w.value(samples);
            w.key("seed");
            w.value(seed);
            w.end_object();
            emit(w.str(), output_path);
        }
    } catch (const biquad::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const biquad::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const biquad::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const biquad::RegionError& e) {
        std::cerr << "region error: " << e.what() << "\n";
        return 3;
    } catch (const biquad::ContractError& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
