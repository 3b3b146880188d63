/*
 * Copyright 2026 The ztrig Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ztrig/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>

#include "ztrig/bounds.hpp"
#include "ztrig/experiments.hpp"
#include "ztrig/lie.hpp"
#include "ztrig/trig.hpp"

namespace ztrig {

using nlohmann::json;

namespace {

enum class Format { text, json, csv };

/// Writes to --out if given, otherwise to the default stream.
void emit(const std::string& out_path, std::ostream& fallback, const std::function<void(std::ostream&)>& body)
{
    if (out_path.empty()) {
        body(fallback);
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw std::runtime_error("cannot open output file " + out_path);
    }
    body(file);
}

void write_matrix_csv(std::ostream& os, const std::string& name, const ComplexMatrix& m)
{
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            os << name << ',' << r << ',' << c << ',' << m(r, c).real() << ',' << m(r, c).imag() << '\n';
        }
    }
}

struct TermsOptions {
    int order = 4;
    bool left = false;
};

struct ApproxOptions {
    std::string x_path;
    std::string y_path;
    int order = 4;
    std::string mode = "recursive";
    std::string identity;
};

struct RegionOptions {
    double x_max = 2.0;
    double y_max = 2.0;
    int grid = 50;
    int n_max = 50;
};

void run_terms(const TermsOptions& opt, Format fmt, const std::string& out_path, std::ostream& out)
{
    const auto terms = opt.left ? left_zassenhaus_terms(opt.order) : zassenhaus_terms(opt.order);
    const std::string prefix = opt.left ? "Cbar_" : "C_";
    emit(out_path, out, [&](std::ostream& os) {
        if (fmt == Format::json) {
            json arr = json::array();
            for (std::size_t i = 0; i < terms.size(); ++i) {
                arr.push_back({{"n", i + 2}, {"expr", terms[i].to_string()}});
            }
            os << json{{"left", opt.left}, {"terms", arr}}.dump(2) << '\n';
            return;
        }
        if (fmt == Format::csv) {
            os << "n,expr\n";
            for (std::size_t i = 0; i < terms.size(); ++i) {
                os << (i + 2) << ",\"" << terms[i].to_string() << "\"\n";
            }
            return;
        }
        for (std::size_t i = 0; i < terms.size(); ++i) {
            os << prefix << (i + 2) << " = " << terms[i].to_string() << '\n';
        }
    });
}

void run_approx(const ApproxOptions& opt, Format fmt, const std::string& out_path, std::ostream& out)
{
    const ComplexMatrix x = parse_matrix_file(opt.x_path);
    const ComplexMatrix y = parse_matrix_file(opt.y_path);
    if (x.dim() != y.dim()) {
        throw std::invalid_argument("approx: x and y have different dimensions");
    }

    json doc{{"order", opt.order}};
    std::vector<std::pair<std::string, ComplexMatrix>> matrices;
    std::vector<std::pair<std::string, double>> errors;

    if (!opt.identity.empty()) {
        ComplexMatrix value = ComplexMatrix::zero(x.dim());
        ComplexMatrix direct = ComplexMatrix::zero(x.dim());
        const auto [c_minus, s_minus] = mat_cos_sin(x - y);
        const auto [c_plus, s_plus] = mat_cos_sin(x + y);
        if (opt.identity == "cos_diff") {
            value = generalized_identity_eval(x, y, opt.order, GeneralizedIdentity::cos_diff);
            direct = c_minus - c_plus;
        } else if (opt.identity == "sin_sum") {
            value = generalized_identity_eval(x, y, opt.order, GeneralizedIdentity::sin_sum);
            direct = s_minus + s_plus;
        } else {
            value = symmetrized_cos(x, y);
            direct = c_plus;
        }
        doc["identity"] = opt.identity;
        matrices.emplace_back("value", value);
        errors.emplace_back("error", two_norm_est(value - direct));
    } else {
        TrigApproximation psi = opt.mode == "factored" ? psi_via_factored_z(x, y, opt.order)
                              : opt.mode == "left"     ? left_oriented_psi(x, y, opt.order)
                                                       : psi_recursive(x, y, opt.order);
        const auto [c, s] = mat_cos_sin(x + y);
        doc["mode"] = opt.mode;
        matrices.emplace_back("psi_c", psi.psi_c);
        matrices.emplace_back("psi_s", psi.psi_s);
        errors.emplace_back("err_cos", two_norm_est(psi.psi_c - c));
        errors.emplace_back("err_sin", two_norm_est(psi.psi_s - s));
    }

    emit(out_path, out, [&](std::ostream& os) {
        if (fmt == Format::json) {
            for (const auto& [name, m] : matrices) {
                json mj = matrix_to_json(m);
                if (!mj.contains("imag")) {
                    mj["imag"] = mj["real"];
                    for (auto& row : mj["imag"]) {
                        for (auto& v : row) {
                            v = 0.0;
                        }
                    }
                }
                doc[name] = mj;
            }
            for (const auto& [name, e] : errors) {
                doc[name] = e;
            }
            os << doc.dump(2) << '\n';
            return;
        }
        const auto old_precision = os.precision();
        os << std::setprecision(17);
        for (const auto& [key, value] : doc.items()) {
            os << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
        for (const auto& [name, e] : errors) {
            os << "# " << name << '=' << e << '\n';
        }
        os << "matrix,row,col,re,im\n";
        for (const auto& [name, m] : matrices) {
            write_matrix_csv(os, name, m);
        }
        os.precision(old_precision);
    });
}

void run_region(const RegionOptions& opt, const std::string& out_path, std::ostream& out)
{
    const auto cells = region_scan(opt.x_max, opt.y_max, opt.grid, opt.n_max);
    emit(out_path, out, [&](std::ostream& os) { write_region_csv(os, cells); });
}

void run_experiment(const std::string& which, const ExperimentConfig& cfg, Format fmt, const std::string& out_path,
                    std::ostream& out)
{
    emit(out_path, out, [&](std::ostream& os) {
        if (which == "pauli") {
            const PauliReport r = run_pauli(cfg);
            if (fmt == Format::json) {
                os << r.to_json().dump(2) << '\n';
            } else {
                r.write_csv(os);
            }
        } else if (which == "random") {
            const DecayReport r = run_random_error_decay(cfg);
            if (fmt == Format::json) {
                os << r.to_json().dump(2) << '\n';
            } else {
                r.write_csv(os);
            }
        } else {
            const json doc = run_frechet(cfg).to_json();
            if (fmt == Format::json) {
                os << doc.dump(2) << '\n';
            } else {
                os << std::setprecision(17) << "key,value\n";
                for (const auto& [key, value] : doc.items()) {
                    if (value.is_number() || value.is_string()) {
                        os << key << ',' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
                    }
                }
                for (const auto& [key, value] : doc["config"].items()) {
                    os << "config." << key << ','
                       << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
                }
            }
        }
    });
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Zassenhaus-based approximations to cos(X+Y) and sin(X+Y) for non-commuting matrices", "ztrig"};
    app.require_subcommand(1);

    std::string format_name;
    std::string out_path;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "Output file (default: stdout)");
    };

    TermsOptions terms_opt;
    auto* terms = app.add_subcommand("terms", "Print the Zassenhaus exponents C_2..C_N");
    terms->add_option("--order", terms_opt.order, "Highest order N")->required()->check(CLI::Range(2, kSymbolicOrderCap));
    terms->add_flag("--left", terms_opt.left, "Print the left-oriented exponents Cbar_i = (-1)^{i+1} C_i");
    add_common(terms);

    ApproxOptions approx_opt;
    auto* approx = app.add_subcommand("approx", "Approximate cos/sin(X+Y) for matrices read from files");
    approx->add_option("--x", approx_opt.x_path, "Matrix file for X")->required()->check(CLI::ExistingFile);
    approx->add_option("--y", approx_opt.y_path, "Matrix file for Y")->required()->check(CLI::ExistingFile);
    approx->add_option("--order", approx_opt.order, "Order n")->required()->check(CLI::PositiveNumber);
    approx->add_option("--mode", approx_opt.mode, "Construction")
        ->check(CLI::IsMember({"recursive", "factored", "left"}));
    approx->add_option("--identity", approx_opt.identity, "Evaluate a generalized identity instead")
        ->check(CLI::IsMember({"cos_diff", "sin_sum", "sym_cos"}));
    add_common(approx);

    RegionOptions region_opt;
    auto* region = app.add_subcommand("region", "Scan the convergence verdict of the bound series over a grid");
    region->add_option("--xmax", region_opt.x_max, "Largest ||X||")->check(CLI::PositiveNumber);
    region->add_option("--ymax", region_opt.y_max, "Largest ||Y||")->check(CLI::PositiveNumber);
    region->add_option("--grid", region_opt.grid, "Points per axis")->check(CLI::Range(2, 100000));
    region->add_option("--nmax", region_opt.n_max, "Highest bound order")->check(CLI::Range(kMinVerdictOrder, 400));
    add_common(region);

    ExperimentConfig cfg;
    std::string which;
    std::string variant = "trig";
    auto* experiment = app.add_subcommand("experiment", "Run one of the worked examples");
    experiment->add_option("name", which, "pauli, random or frechet")
        ->required()
        ->check(CLI::IsMember({"pauli", "random", "frechet"}));
    experiment->add_option("--epsilon", cfg.epsilon, "Pauli scale epsilon")->check(CLI::PositiveNumber);
    experiment->add_option("--beta", cfg.beta, "Pauli weight beta");
    experiment->add_option("--alpha", cfg.alpha, "Frechet parameter alpha (nonzero)");
    experiment->add_option("--t", cfg.t, "Frechet scaling t");
    experiment->add_option("--dim", cfg.dim, "Random matrix dimension")->check(CLI::Range(2, 4096));
    experiment->add_option("--seed", cfg.seed, "Random seed");
    experiment->add_option("--max-order", cfg.max_order, "Highest order n")->check(CLI::Range(2, 64));
    experiment->add_option("--frechet-variant", variant, "Frechet matrix pair")
        ->check(CLI::IsMember({"trig", "exponential"}));
    add_common(experiment);

    std::vector<std::string> argv_storage{"ztrig"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    // terms defaults to one line per exponent; the reports default to JSON.
    const Format fmt = format_name == "csv"    ? Format::csv
                     : format_name == "json"   ? Format::json
                     : static_cast<bool>(*terms) ? Format::text
                                                 : Format::json;
    try {
        if (*terms) {
            run_terms(terms_opt, fmt, out_path, out);
        } else if (*approx) {
            run_approx(approx_opt, fmt, out_path, out);
        } else if (*region) {
            run_region(region_opt, out_path, out);
        } else if (*experiment) {
            cfg.frechet_variant = variant == "exponential" ? FrechetVariant::exponential : FrechetVariant::trig;
            run_experiment(which, cfg, fmt, out_path, out);
        }
    } catch (const std::exception& e) {
        err << "ztrig: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace ztrig
