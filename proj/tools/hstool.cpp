// hstool: command-line surface for the Henon-Sibony toolkit.
//
// Subcommands: check, symmetries, iterate, shared-iterate, green, render,
// verify. Exit codes: 0 success, 1 negative finding (e.g. no shared
// iterate), 2 parse error, 3 map not regular / inverse unverifiable,
// 4 unsolved symmetry constraints, 5 other errors (budgets, I/O).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hs/builtin_suite.hpp"
#include "hs/map_dsl.hpp"
#include "hs/raster.hpp"
#include "hs/regularity.hpp"
#include "hs/symmetry.hpp"

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// "1+2i", "-0.5i", "3", "i" ...
std::complex<double> parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::runtime_error("empty complex literal");
    double re = 0.0, im = 0.0;
    std::size_t pos = 0;
    auto read_part = [&]() -> std::pair<double, bool> {  // value, is_imaginary
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
                                  s[pos] == 'e' || s[pos] == 'E' ||
                                  ((s[pos] == '+' || s[pos] == '-') &&
                                   (s[pos - 1] == 'e' || s[pos - 1] == 'E'))))
            ++pos;
        bool imag = pos < s.size() && s[pos] == 'i';
        double v;
        if (digits == pos) {  // bare "i" or "+i"/"-i"
            if (!imag) throw std::runtime_error("bad complex literal: " + raw);
            v = (start < s.size() && s[start] == '-') ? -1.0 : 1.0;
        } else {
            v = std::stod(s.substr(start, pos - start));
        }
        if (imag) ++pos;
        return {v, imag};
    };
    while (pos < s.size()) {
        auto [v, imag] = read_part();
        if (imag) im += v;
        else re += v;
    }
    return {re, im};
}

std::vector<std::complex<double>> parse_point(const std::string& s) {
    std::vector<std::complex<double>> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    return out;
}

struct RunConfig {
    double radius = 0.0;  // 0 = auto
    int max_iter = 200;
    double tol = 1e-6;
    int degree_budget = 256;
    std::size_t term_budget = 1000000;
    double v_cap = 3.0;
    int threads = 1;
    int rounds = 8;
    int nmax = 3;
    bool json_out = false;

    hs::Budget budget() const { return hs::Budget{degree_budget, term_budget}; }
    hs::GreenOptions green() const { return hs::GreenOptions{radius, max_iter}; }
};

json family_to_json(const hs::NResult& r) {
    json j;
    j["status"] = r.family.status() == hs::SolutionFamily::Status::solved ? "solved" : "unsolved";
    j["stabilized"] = r.stabilized;
    j["rounds"] = r.rounds_used;
    j["parameters"] = r.family.param_names;
    json assigns = json::object();
    for (const auto& [p, rhs] : r.family.assignments)
        assigns[r.family.param_names[static_cast<std::size_t>(p)]] =
            rhs.to_string(r.family.param_names);
    j["assignments"] = assigns;
    json powers = json::array();
    for (const auto& pr : r.family.power_residuals)
        powers.push_back({{"parameter", r.family.param_names[static_cast<std::size_t>(pr.param)]},
                          {"order", pr.order},
                          {"value", pr.value.to_string()}});
    j["power_residuals"] = powers;
    json residuals = json::array();
    for (const auto& e : r.family.other_residuals)
        residuals.push_back(e.to_string(r.family.param_names));
    j["residual_equations"] = residuals;
    if (auto n = r.family.element_count()) j["element_count"] = *n;
    json lin = json::array();
    for (int i = 0; i < r.reduced.k; ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < r.reduced.k; ++j2)
            row.push_back(r.reduced.lin[static_cast<std::size_t>(i)][static_cast<std::size_t>(j2)]
                              .to_string(r.family.param_names));
        lin.push_back(row);
    }
    json tr = json::array();
    for (int i = 0; i < r.reduced.k; ++i)
        tr.push_back(r.reduced.tr[static_cast<std::size_t>(i)].to_string(r.family.param_names));
    j["map"] = {{"linear", lin}, {"translation", tr}};
    j["trace"] = r.family.trace;
    return j;
}

hs::PolyMap load_map(const std::string& file, const std::string& name, hs::MapDefinition* def_out = nullptr) {
    auto defs = hs::parse_map_file(read_file(file));
    const hs::MapDefinition& def = hs::find_map(defs, name);
    if (def_out) *def_out = def;
    return def.to_polymap();
}

int cmd_check(const std::string& file, const std::string& name, const RunConfig& cfg) {
    hs::MapDefinition def;
    hs::PolyMap F = load_map(file, name, &def);
    if (!F.has_claimed_inverse()) throw hs::NotRegularError("no inverse supplied for '" + name + "'");
    hs::RegularityReport rep = hs::regularity_report(F, F.claimed_inverse(), cfg.budget());
    if (cfg.json_out) {
        json j;
        j["k"] = rep.k;
        j["d"] = rep.d;
        j["delta"] = rep.delta;
        j["s"] = rep.degree_identity_holds ? json(rep.s) : json(nullptr);
        j["degree_identity"] = rep.degree_identity_holds;
        j["indeterminacy_disjoint"] = rep.indeterminacy_disjoint;
        j["regular"] = rep.is_regular();
        json ip = json::array(), im = json::array();
        for (const auto& f : rep.iplus.forms) ip.push_back(f.to_string(def.variables));
        for (const auto& f : rep.iminus.forms) im.push_back(f.to_string(def.variables));
        j["I_plus_forms"] = ip;
        j["I_minus_forms"] = im;
        if (rep.is_regular()) {
            j["dim_I_plus_predicted"] = rep.predicted_dim_iplus();
            j["dim_I_minus_predicted"] = rep.predicted_dim_iminus();
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.to_text(def.variables);
    }
    return rep.is_regular() ? 0 : 1;
}

int cmd_symmetries(const std::string& file, const std::string& name, const RunConfig& cfg) {
    hs::PolyMap F = load_map(file, name);
    if (!F.has_claimed_inverse()) throw hs::NotRegularError("no inverse supplied for '" + name + "'");
    hs::NOptions opts;
    opts.max_rounds = cfg.rounds;
    opts.budget = cfg.budget();
    hs::NResult res = hs::compute_N(F, F.claimed_inverse(), opts);
    if (cfg.json_out) {
        std::cout << family_to_json(res).dump(2) << "\n";
    } else {
        std::cout << res.family.to_text();
        std::cout << "map = " << res.reduced.to_string() << "\n";
        std::cout << (res.stabilized ? "stabilized" : "NOT stabilized") << " after "
                  << res.rounds_used << " round(s)\n";
    }
    if (res.family.status() != hs::SolutionFamily::Status::solved || !res.stabilized) return 4;
    return 0;
}

int cmd_iterate(const std::string& file, const std::string& name, int n, const RunConfig& cfg) {
    hs::MapDefinition def;
    hs::PolyMap F = load_map(file, name, &def);
    hs::PolyMap Fn = hs::iterate(hs::PolyMap(F.components()), n, cfg.budget());
    hs::MapDefinition out;
    out.name = def.name + "_" + std::to_string(n);
    out.variables = def.variables;
    out.components = Fn.components();
    std::cout << hs::print_map(out) << "\n";
    return 0;
}

int cmd_shared_iterate(const std::string& file, const std::string& m1, const std::string& m2,
                       const RunConfig& cfg) {
    hs::PolyMap F = load_map(file, m1);
    hs::PolyMap G = load_map(file, m2);
    auto r = hs::shared_iterate_search(F, G, cfg.nmax, cfg.budget());
    if (cfg.json_out) {
        json j;
        j["found"] = r.has_value();
        if (r) {
            j["n"] = r->n;
            j["m"] = r->m;
        }
        std::cout << j.dump(2) << "\n";
    } else if (r) {
        std::cout << "(" << r->n << ", " << r->m << ")\n";
    } else {
        std::cout << "none up to nmax = " << cfg.nmax << "\n";
    }
    return r ? 0 : 1;
}

int cmd_green(const std::string& file, const std::string& name, const std::string& point,
              bool minus, const RunConfig& cfg) {
    hs::PolyMap F = load_map(file, name);
    auto z = parse_point(point);
    hs::GreenEstimate est;
    if (minus) {
        if (!F.has_claimed_inverse()) throw hs::NotRegularError("no inverse supplied for '" + name + "'");
        if (!hs::verify_inverse(F, F.claimed_inverse(), cfg.budget()))
            throw hs::NotRegularError("claimed inverse does not verify");
        const hs::PolyMap& inv = F.claimed_inverse();
        est = hs::green_minus(hs::FloatMap::compile(inv), inv.degree(), z, cfg.green());
    } else {
        est = hs::green_plus(hs::FloatMap::compile(F), F.degree(), z, cfg.green());
    }
    if (cfg.json_out) {
        json j;
        j["value"] = est.value;
        j["iterations_used"] = est.iterations_used;
        j["escaped"] = est.escaped;
        j["error_bound"] = est.error_bound;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("value = %.17g\niterations = %d\nescaped = %s\nerror_bound = %.17g\n", est.value,
                    est.iterations_used, est.escaped ? "true" : "false", est.error_bound);
    }
    return 0;
}

int cmd_render(const std::string& file, const std::string& name, const std::string& out_base,
               const hs::SliceSpec& spec, const RunConfig& cfg) {
    hs::PolyMap F = load_map(file, name);
    if (F.degree() < 2) throw hs::NotRegularError("not Henon-Sibony (degree " + std::to_string(F.degree()) + ")");
    hs::FloatMap fm = hs::FloatMap::compile(F);
    hs::RasterGrid grid = hs::raster_slice(fm, F.degree(), spec, cfg.green(), cfg.threads);
    hs::write_file(out_base + ".pgm", hs::encode_pgm(grid, cfg.v_cap));
    hs::write_file(out_base + ".csv", hs::encode_csv(grid));
    std::cout << "wrote " << out_base << ".pgm and " << out_base << ".csv ("
              << grid.escaped_count() << "/" << grid.cells.size() << " pixels escaped)\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    auto results = hs::run_builtin_suite(cfg.budget());
    bool all = hs::all_passed(results);
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
        if (!r.pass && !r.detail.empty()) std::cout << "      " << r.detail << "\n";
    }
    std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Henon-Sibony map toolkit: exact symmetry groups, regularity reports, and "
                 "Green-function numerics"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_flag("--json", cfg.json_out, "emit JSON instead of text");
    app.add_option("--radius", cfg.radius, "escape radius (0 = auto)");
    app.add_option("--max-iter", cfg.max_iter, "iteration budget");
    app.add_option("--tol", cfg.tol, "numeric tolerance");
    app.add_option("--degree-budget", cfg.degree_budget, "symbolic degree budget");
    app.add_option("--term-budget", cfg.term_budget, "symbolic term budget");
    app.add_option("--threads", cfg.threads, "render worker threads");
    app.add_option("--v-cap", cfg.v_cap, "PGM gray saturation value");

    std::string file, map_name, map2, point, out_base = "slice";
    int iterate_n = 1;
    hs::SliceSpec spec;
    std::string base_str, dir_u_str, dir_v_str;
    std::vector<double> window;

    auto* check = app.add_subcommand("check", "regularity report for a map");
    check->fallthrough();
    check->add_option("file", file)->required();
    check->add_option("map", map_name)->required();

    auto* sym = app.add_subcommand("symmetries", "compute the affine conjugation group N");
    sym->fallthrough();
    sym->add_option("file", file)->required();
    sym->add_option("map", map_name)->required();
    sym->add_option("--rounds", cfg.rounds, "max refinement rounds");

    auto* it = app.add_subcommand("iterate", "print the n-th iterate");
    it->fallthrough();
    it->add_option("file", file)->required();
    it->add_option("map", map_name)->required();
    it->add_option("n", iterate_n)->required();

    auto* sh = app.add_subcommand("shared-iterate", "search for F^n = G^m");
    sh->fallthrough();
    sh->add_option("file", file)->required();
    sh->add_option("map1", map_name)->required();
    sh->add_option("map2", map2)->required();
    sh->add_option("--nmax", cfg.nmax, "search bound");

    auto* gr = app.add_subcommand("green", "Green function estimate at a point");
    gr->fallthrough();
    gr->add_option("file", file)->required();
    gr->add_option("map", map_name)->required();
    gr->add_option("--point", point, "comma-separated complex coordinates")->required();
    bool minus = false;
    gr->add_flag("--minus", minus, "evaluate G^- via the inverse map");

    auto* rd = app.add_subcommand("render", "rasterize a 2-D slice to PGM + CSV");
    rd->fallthrough();
    rd->add_option("file", file)->required();
    rd->add_option("map", map_name)->required();
    rd->add_option("--out", out_base, "output path base");
    rd->add_option("--width", spec.width);
    rd->add_option("--height", spec.height);
    rd->add_option("--window", window, "u_min u_max v_min v_max")->expected(4);
    rd->add_option("--base", base_str, "slice base point");
    rd->add_option("--dir-u", dir_u_str, "first slice direction");
    rd->add_option("--dir-v", dir_v_str, "second slice direction");

    app.add_subcommand("verify", "run the built-in verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file, map_name, cfg);
        if (sym->parsed()) return cmd_symmetries(file, map_name, cfg);
        if (it->parsed()) return cmd_iterate(file, map_name, iterate_n, cfg);
        if (sh->parsed()) return cmd_shared_iterate(file, map_name, map2, cfg);
        if (gr->parsed()) return cmd_green(file, map_name, point, minus, cfg);
        if (rd->parsed()) {
            hs::PolyMap probe = load_map(file, map_name);
            int k = probe.dim();
            if (window.size() == 4) {
                spec.u_min = window[0];
                spec.u_max = window[1];
                spec.v_min = window[2];
                spec.v_max = window[3];
            }
            spec.base = base_str.empty()
                            ? std::vector<std::complex<double>>(static_cast<std::size_t>(k), 0.0)
                            : parse_point(base_str);
            if (dir_u_str.empty()) {
                spec.dir_u.assign(static_cast<std::size_t>(k), 0.0);
                spec.dir_u[0] = 1.0;
            } else {
                spec.dir_u = parse_point(dir_u_str);
            }
            if (dir_v_str.empty()) {
                spec.dir_v.assign(static_cast<std::size_t>(k), 0.0);
                if (k > 1) spec.dir_v[1] = 1.0;
            } else {
                spec.dir_v = parse_point(dir_v_str);
            }
            return cmd_render(file, map_name, out_base, spec, cfg);
        }
        return cmd_verify(cfg);
    } catch (const hs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hs::NotRegularError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hs::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    }
}
