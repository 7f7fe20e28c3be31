#pragma once

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "certify.hpp"
#include "convolution.hpp"
#include "errors.hpp"
#include "examples.hpp"
#include "harmonic.hpp"
#include "io.hpp"
#include "render.hpp"
#include "zerocheck.hpp"

namespace hconv {

namespace cli_detail {

struct GridSettings {
    double r_max = 0.99;
    std::size_t n_radii = 20;
    std::size_t angles = 64;
    std::size_t order = 256;
};

inline SweepGrid make_grid(const GridSettings& s) {
    return SweepGrid::radial(s.r_max, s.n_radii, s.angles);
}

// flag > config file > built-in default
inline void apply_config(GridSettings& s, const std::map<std::string, std::string>& cfg,
                         bool rmax_set, bool radii_set, bool angles_set, bool order_set) {
    auto take = [&cfg](const char* key, auto& slot, bool explicitly_set) {
        if (explicitly_set) return;
        const auto it = cfg.find(key);
        if (it == cfg.end()) return;
        try {
            if constexpr (std::is_same_v<std::decay_t<decltype(slot)>, double>)
                slot = std::stod(it->second);
            else
                slot = std::stoul(it->second);
        } catch (const std::exception&) {
            throw IoError(std::string("config: bad value for ") + key + ": " + it->second);
        }
    };
    take("r_max", s.r_max, rmax_set);
    take("radii", s.n_radii, radii_set);
    take("angles", s.angles, angles_set);
    take("order", s.order, order_set);
}

inline std::string resolve_out_path(const std::string& file, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::path p(file);
    if (!out_dir.empty() && p.is_relative()) p = fs::path(out_dir) / p;
    if (p.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(p.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + p.parent_path().string());
    }
    return p.string();
}

inline HarmonicMap resolve_map(const std::string& name, std::size_t order) {
    if (name == "f0") return canonical_f0(order);
    if (name == "identity") return identity_map(order);
    if (name == "f1") return example_map(ExampleMapId::f1, order);
    if (name == "f2") return example_map(ExampleMapId::f2, order);
    if (name == "f3") return example_map(ExampleMapId::f3, order);
    if (name == "F1") return example_map(ExampleMapId::F1, order);
    if (name == "F2") return example_map(ExampleMapId::F2, order);
    if (name == "F3") return example_map(ExampleMapId::F3, order);
    return parse_coefficients(read_text_file(name)); // else: coefficient dump on disk
}

inline Complex parse_complex_token(const std::string& tok) {
    const auto comma = tok.find(',');
    try {
        if (comma == std::string::npos) return Complex(std::stod(tok), 0.0);
        return Complex(std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1)));
    } catch (const std::exception&) {
        throw BadParameter("zeros: cannot parse coefficient '" + tok + "'");
    }
}

inline void print_report(std::ostream& os, const CertificationReport& r) {
    os << r.claim << ": extremum=" << detail::fmt17(r.max_modulus) << " witness=("
       << detail::fmt17(r.witness.real()) << "," << detail::fmt17(r.witness.imag()) << ") "
       << (r.passed ? "pass" : "FAIL") << "\n";
}

} // namespace cli_detail

/// Entry point behind main(): 0 = pass, 1 = certification failure, 2 = usage.
inline int run_cli(int argc, const char* const* argv) {
    using namespace cli_detail;

    CLI::App app{"shear construction, convolution, and certification of planar harmonic maps"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    app.add_option("--config", config_path, "key = value file with grid defaults");
    app.add_option("--out-dir", out_dir, "directory for output files (env HCONV_OUT_DIR)");

    GridSettings grid;
    // one option list per setting, spanning all subcommands that take grid flags
    std::vector<std::vector<CLI::Option*>> grid_opts(4);

    auto add_grid_opts = [&](CLI::App* sub) {
        grid_opts[0].push_back(sub->add_option("--r-max", grid.r_max, "outermost sweep radius"));
        grid_opts[1].push_back(sub->add_option("--radii", grid.n_radii, "number of sweep radii"));
        grid_opts[2].push_back(sub->add_option("--angles", grid.angles, "angles per radius"));
        grid_opts[3].push_back(sub->add_option("--order", grid.order, "series truncation order"));
    };
    auto flag_given = [&grid_opts](std::size_t i) {
        for (const CLI::Option* o : grid_opts[i])
            if (o->count() > 0) return true;
        return false;
    };

    // shear ------------------------------------------------------------------
    auto* sc_shear = app.add_subcommand("shear", "build a shear and dump its coefficients");
    std::string sh_target = "right", sh_omega = "monomial", sh_out, sh_name = "shear";
    double sh_gamma = 0.0, sh_alpha = std::numbers::pi / 2, sh_theta = 0.0, sh_a = 0.0;
    int sh_n = 1;
    sc_shear->add_option("--target", sh_target, "right | slanted | strip");
    sc_shear->add_option("--gamma", sh_gamma, "slant angle");
    sc_shear->add_option("--alpha", sh_alpha, "strip parameter in [pi/2, pi)");
    sc_shear->add_option("--omega", sh_omega, "monomial | mobius | none");
    sc_shear->add_option("--theta", sh_theta, "monomial rotation");
    sc_shear->add_option("--n", sh_n, "monomial degree");
    sc_shear->add_option("--a", sh_a, "Mobius parameter in (-1,1)");
    sc_shear->add_option("--out", sh_out, "output file (default stdout)");
    sc_shear->add_option("--name", sh_name, "label in the dump header");
    add_grid_opts(sc_shear);

    // convolve ---------------------------------------------------------------
    auto* sc_conv = app.add_subcommand("convolve", "Hadamard product of two maps");
    std::string cv_left, cv_right, cv_out;
    sc_conv->add_option("left", cv_left, "map name or coefficient dump path")->required();
    sc_conv->add_option("right", cv_right, "map name or coefficient dump path")->required();
    sc_conv->add_option("--out", cv_out, "output file (default stdout)");
    add_grid_opts(sc_conv);

    // certify ------------------------------------------------------------------
    auto* sc_cert = app.add_subcommand("certify", "run a certification sweep");
    int ct_theorem = 0, ct_remark = 0, ct_example = 0, ct_n = 2, ct_thetas = 16;
    double ct_a = 0.5, ct_alpha = std::numbers::pi / 2, ct_gamma = std::numbers::pi / 4;
    double ct_c = 1.0, ct_direction = 0.0;
    bool ct_dir_set = false;
    std::string ct_csv;
    sc_cert->add_option("--theorem", ct_theorem, "theorem tag 1|2|3|5|6");
    sc_cert->add_option("--remark", ct_remark, "counterexample witness family (1)");
    sc_cert->add_option("--example", ct_example, "image-region example 1|2|3");
    sc_cert->add_option("--n", ct_n, "monomial degree");
    sc_cert->add_option("--a", ct_a, "Mobius parameter");
    sc_cert->add_option("--alpha", ct_alpha, "strip parameter");
    sc_cert->add_option("--gamma", ct_gamma, "slant angle for the convexity instance");
    sc_cert->add_option("--theta-count", ct_thetas, "theta grid size");
    sc_cert->add_option("--c", ct_c, "level-curve constant");
    auto* dir_opt = sc_cert->add_option("--direction", ct_direction, "convexity direction");
    sc_cert->add_option("--csv", ct_csv, "write reports as CSV");
    add_grid_opts(sc_cert);

    // zeros ---------------------------------------------------------------------
    auto* sc_zeros = app.add_subcommand("zeros", "zero counting inside the unit disk");
    std::vector<std::string> zr_coeffs;
    bool zr_strict = false;
    sc_zeros->add_option("coeffs", zr_coeffs, "ascending coefficients, re or re,im")->required();
    sc_zeros->add_flag("--strict", zr_strict, "fail on near-circle oracle roots");

    // render ---------------------------------------------------------------------
    auto* sc_render = app.add_subcommand("render", "SVG image of concentric circles");
    std::string rd_map = "f0", rd_out;
    std::vector<double> rd_radii;
    std::size_t rd_rays = 0, rd_samples = 256;
    sc_render->add_option("--map", rd_map, "map name or coefficient dump path");
    sc_render->add_option("--circle-radii", rd_radii, "circle radii in (0,1)")->delimiter(',');
    sc_render->add_option("--rays", rd_rays, "radial spokes");
    sc_render->add_option("--samples", rd_samples, "samples per circle (>= 64)");
    sc_render->add_option("--out", rd_out, "output file (default stdout)");
    add_grid_opts(sc_render);

    // examples -------------------------------------------------------------------
    auto* sc_ex = app.add_subcommand("examples", "emit the convolution fixtures F1 F2 F3");
    add_grid_opts(sc_ex);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    ct_dir_set = dir_opt->count() > 0;

    try {
        if (out_dir.empty()) {
            if (const char* env = std::getenv("HCONV_OUT_DIR")) out_dir = env;
        }
        std::map<std::string, std::string> cfg;
        if (!config_path.empty()) cfg = parse_config(read_text_file(config_path));
        if (cfg.count("out_dir") && out_dir.empty()) out_dir = cfg.at("out_dir");
        apply_config(grid, cfg, flag_given(0), flag_given(1), flag_given(2), flag_given(3));

        auto emit = [&](const std::string& text, const std::string& file) {
            if (file.empty()) { std::cout << text; return; }
            const std::string path = resolve_out_path(file, out_dir);
            write_text_file(path, text);
            std::cout << path << "\n";
        };

        if (sc_shear->parsed()) {
            TargetDomain target = sh_target == "right"     ? TargetDomain::right_half_plane()
                                  : sh_target == "slanted" ? TargetDomain::slanted_half_plane(sh_gamma)
                                  : sh_target == "strip"
                                      ? TargetDomain::vertical_strip(sh_alpha)
                                      : throw BadParameter("shear: unknown target " + sh_target);
            Dilatation w = sh_omega == "monomial" ? Dilatation::monomial(sh_theta, sh_n)
                           : sh_omega == "mobius" ? Dilatation::mobius(sh_a)
                           : sh_omega == "none"
                               ? Dilatation::series(PowerSeries(grid.order))
                               : throw BadParameter("shear: unknown dilatation " + sh_omega);
            emit(dump_coefficients(shear(target, w, grid.order), sh_name), sh_out);
            return 0;
        }

        if (sc_conv->parsed()) {
            HarmonicMap a = resolve_map(cv_left, grid.order);
            HarmonicMap b = resolve_map(cv_right, grid.order);
            const std::size_t n = std::min(a.h().order(), b.h().order());
            const HarmonicMap out =
                convolve(HarmonicMap(a.h().resized(n), a.g().resized(n)),
                         HarmonicMap(b.h().resized(n), b.g().resized(n)));
            emit(dump_coefficients(out, cv_left + "*" + cv_right), cv_out);
            return 0;
        }

        if (sc_cert->parsed()) {
            const SweepGrid sweep = make_grid(grid);
            std::vector<CertificationReport> reports;
            const int selectors = (ct_theorem ? 1 : 0) + (ct_remark ? 1 : 0) + (ct_example ? 1 : 0);
            if (selectors != 1)
                throw BadParameter("certify: pass exactly one of --theorem, --remark, --example");

            if (ct_remark == 1) {
                const DilatationWitness w = remark1_witness(ct_n);
                CertificationReport rep;
                rep.claim = "witness with |omega~| > 1 exists for n = " + std::to_string(ct_n);
                rep.max_modulus = w.modulus;
                rep.witness = w.z0;
                rep.passed = w.modulus > 1.0;
                reports.push_back(rep);
            } else if (ct_theorem == 1) {
                const Dilatation none = Dilatation::series(PowerSeries(grid.order));
                const HarmonicMap left = shear(TargetDomain::slanted_half_plane(ct_gamma), none, grid.order);
                const HarmonicMap right = shear(TargetDomain::slanted_half_plane(ct_gamma), none, grid.order);
                const double direction = ct_dir_set ? ct_direction : -2.0 * ct_gamma;
                reports.push_back(convexity_in_direction(convolve(left, right), direction, sweep));
            } else if (ct_theorem == 2 || ct_theorem == 5) {
                for (int j = 0; j < ct_thetas; ++j) {
                    const double theta = 2.0 * std::numbers::pi * j / ct_thetas;
                    const Dilatation w = Dilatation::monomial(theta, ct_n);
                    const RationalDilatation rd = ct_theorem == 2
                                                      ? omega_tilde_halfplane(w)
                                                      : omega_tilde_strip(w, ct_alpha);
                    reports.push_back(sweep_dilatation(rd, sweep));
                }
            } else if (ct_theorem == 3) {
                reports.push_back(sweep_dilatation(omega_tilde_halfplane(Dilatation::mobius(ct_a)), sweep));
            } else if (ct_theorem == 6) {
                CertificationReport rep;
                rep.claim = "Schur-Cohn minors positive for a in [0,1), x in (-1,0]";
                rep.max_modulus = std::numeric_limits<double>::infinity();
                rep.passed = true;
                for (int i = 0; i < 50; ++i) {
                    for (int j = 0; j < 50; ++j) {
                        const double a = i / 50.0;
                        const double x = -(j / 50.0);
                        const RationalDilatation rd =
                            omega_tilde_strip(Dilatation::mobius(a), std::acos(x));
                        const SchurCohnReport sc = schur_cohn(rd.num);
                        for (double m : sc.minors)
                            if (m < rep.max_modulus) { rep.max_modulus = m; rep.witness = Complex(a, x); }
                        rep.passed = rep.passed && sc.all_inside;
                    }
                }
                reports.push_back(rep);
            } else if (ct_example >= 1 && ct_example <= 3) {
                const ExampleMapId id = ct_example == 1   ? ExampleMapId::F1
                                        : ct_example == 2 ? ExampleMapId::F2
                                                          : ExampleMapId::F3;
                reports.push_back(region_membership(id, sweep, grid.order));
                const HarmonicMap map = example_map(id, grid.order);
                const double offset = level_curve_image_offset(id, ct_c);
                CertificationReport lvl;
                lvl.claim = "level-curve images have constant imaginary part";
                lvl.max_modulus = 0.0;
                for (Complex z : level_curve_points(id, ct_c, 64)) {
                    const double dev = std::abs(eval_map(map, z).imag() - offset);
                    if (dev > lvl.max_modulus) { lvl.max_modulus = dev; lvl.witness = z; }
                }
                lvl.passed = lvl.max_modulus <= 1e-6;
                reports.push_back(lvl);
            } else {
                throw BadParameter("certify: unsupported selector");
            }

            bool all = true;
            for (const auto& r : reports) {
                print_report(std::cout, r);
                all = all && r.passed;
            }
            if (!ct_csv.empty()) {
                const std::string path = resolve_out_path(ct_csv, out_dir);
                write_text_file(path, report_csv(reports));
                std::cout << path << "\n";
            }
            std::cout << (all ? "PASS" : "FAIL") << "\n";
            return all ? 0 : 1;
        }

        if (sc_zeros->parsed()) {
            std::vector<Complex> cs;
            cs.reserve(zr_coeffs.size());
            for (const auto& tok : zr_coeffs) cs.push_back(parse_complex_token(tok));
            const Polynomial p(cs);
            std::cout << "degree " << p.degree() << "\n";
            ZeroCountOptions opts;
            opts.strict_boundary = zr_strict;
            std::cout << "count " << count_zeros_in_disk(p, opts) << "\n";
            const SchurCohnReport sc = schur_cohn(p);
            for (std::size_t v = 0; v < sc.minors.size(); ++v)
                std::cout << "M_" << (v + 1) << " " << detail::fmt17(sc.minors[v]) << "\n";
            std::cout << "all_inside " << (sc.all_inside ? "true" : "false") << "\n";
            return 0;
        }

        if (sc_render->parsed()) {
            RenderSpec spec;
            spec.circle_radii = rd_radii;
            if (spec.circle_radii.empty())
                spec.circle_radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
            spec.rays = rd_rays;
            spec.samples_per_circle = rd_samples;
            emit(render_svg(resolve_map(rd_map, grid.order), spec), rd_out);
            return 0;
        }

        if (sc_ex->parsed()) {
            const std::pair<ExampleMapId, std::string> fixtures[] = {
                {ExampleMapId::F1, "F1"}, {ExampleMapId::F2, "F2"}, {ExampleMapId::F3, "F3"}};
            for (const auto& [id, name] : fixtures) {
                const std::string path = resolve_out_path(name + ".txt", out_dir);
                write_text_file(path, dump_coefficients(example_map(id, grid.order), name));
                std::cout << path << "\n";
            }
            return 0;
        }

        throw BadParameter("no subcommand");
    } catch (const BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadAlpha& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedVariant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "certification error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace hconv
