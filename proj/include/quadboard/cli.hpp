#pragma once

// Command-line front end. parse_args() validates everything into a RunConfig
// before any computation; run() executes it against a stream.
//
// Exit codes: 0 success, 2 usage, 3 domain error, 4 resource cap.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "quadboard/bessel.hpp"
#include "quadboard/dirac.hpp"
#include "quadboard/io.hpp"
#include "quadboard/linear.hpp"
#include "quadboard/paths.hpp"
#include "quadboard/propagator.hpp"
#include "quadboard/spacetime.hpp"

namespace quadboard::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kDomain = 3, kResource = 4 };

class usage_error : public error {
public:
    using error::error;
};

enum class Format { text, csv, json };
enum class Model { quadratic, linear };

struct RunConfig {
    std::string subcommand;
    Format format = Format::json;
    std::optional<std::string> out_path;
    unsigned threads = 1;
    unsigned cap = kDefaultEnumerationCap;
    SeriesOptions series;

    // member, boost
    std::optional<Rational> point_t, point_x;
    Integer p = 1, q = 1;
    // spectrum
    unsigned max_pq = 1;
    // enumerate, exact
    unsigned P = 1, Q = 1;
    Direction start = Direction::Right, end = Direction::Left;
    // exact, propagator, converge
    Model model = Model::quadratic;
    Real t = 1, x = 0;
    Rational v;
    std::vector<unsigned> sizes;
    // dirac-check
    Region region;
    Real h = 0.01L;
};

inline Real parse_real(const std::string& text, const char* flag) {
    std::size_t used = 0;
    Real value;
    try {
        value = std::stold(text, &used);
    } catch (const std::exception&) {
        throw usage_error(std::string("--") + flag + ": not a real number: '" + text + "'");
    }
    if (used != text.size()) throw usage_error(std::string("--") + flag + ": not a real number: '" + text + "'");
    return value;
}

inline Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const invalid_parameter& e) {
        throw usage_error(std::string("--") + flag + ": " + e.what());
    }
}

inline Integer parse_integer_flag(const std::string& text, const char* flag) {
    Rational r = parse_rational_flag(text, flag);
    if (denominator(r) != 1) throw usage_error(std::string("--") + flag + ": expected an integer, got '" + text + "'");
    return numerator(r);
}

/// Parses argv-style arguments (without the program name). Throws usage_error;
/// returns nullopt after printing help.
inline std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Quadratic checkerboard path sums for the 1+1 Dirac equation on a rational spacetime"};
    app.require_subcommand(1);
    // "-h" is left free for the grid spacing flag of dirac-check
    app.set_help_flag("--help", "print this help and exit");
    app.set_help_all_flag("--help-all", "print help for every subcommand");

    RunConfig cfg;
    std::string format, out_path, model = "quadratic";
    std::string t_str, x_str, v_str, p_str, q_str, start_str = "R", end_str = "L", tol_str;
    std::string t0_str = "0.5", t1_str = "3", xfrac_str = "0.4", h_str = "0.01";
    std::vector<unsigned> p_list, n_list;

    auto common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
        std::string allowed;
        for (const auto& f : formats) allowed += (allowed.empty() ? "" : "|") + f;
        sub->add_option("--format", format, "output format: " + allowed + " (default " + formats.front() + ")")
            ->check(CLI::IsMember(formats));
        sub->add_option("-o,--out", out_path, "write output to this file instead of stdout");
    };

    auto* member = app.add_subcommand("member", "test membership of (t, x) in M and print the canonical witness");
    member->add_option("--t", t_str, "time coordinate, rational a/b or decimal")->required();
    member->add_option("--x", x_str, "space coordinate, rational a/b or decimal")->required();
    common(member, {"json", "csv"});

    auto* boost_cmd = app.add_subcommand("boost", "boost matrix generated by nonzero integers (p, q)");
    boost_cmd->add_option("--p", p_str, "nonzero integer")->required();
    boost_cmd->add_option("--q", q_str, "nonzero integer")->required();
    boost_cmd->add_option("--t", t_str, "optional point to transform: time (rational)");
    boost_cmd->add_option("--x", x_str, "optional point to transform: space (rational)");
    common(boost_cmd, {"json"});

    auto* spectrum = app.add_subcommand("spectrum", "velocity spectrum (p^2-q^2)/(p^2+q^2), 1 <= p,q <= max-pq");
    spectrum->add_option("--max-pq", cfg.max_pq, "largest p and q")->required()->check(CLI::PositiveNumber);
    common(spectrum, {"csv", "json"});

    auto* enumerate = app.add_subcommand("enumerate", "list every path of a sector with its bends and amplitude");
    enumerate->add_option("--P", cfg.P, "Right segments (>= 1)")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--Q", cfg.Q, "Left segments (>= 1)")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--start", start_str, "start direction R|L (default R)");
    enumerate->add_option("--end", end_str, "end direction R|L (default L)");
    enumerate->add_option("--cap", cfg.cap, "largest P+Q to enumerate (default 24)");
    common(enumerate, {"text", "json"});

    auto* exact = app.add_subcommand("exact", "exact sector polynomials and their value at eps = t/(P^2+Q^2) or t/N");
    exact->add_option("--P", cfg.P, "Right segments (>= 1)")->required()->check(CLI::PositiveNumber);
    exact->add_option("--Q", cfg.Q, "Left segments (>= 1)")->required()->check(CLI::PositiveNumber);
    exact->add_option("--t", t_str, "endpoint time > 0 (decimal)")->required();
    exact->add_option("--model", model, "quadratic|linear (default quadratic)")
        ->check(CLI::IsMember({"quadratic", "linear"}));
    common(exact, {"json"});

    auto* propagator = app.add_subcommand("propagator", "closed-form propagator components at (t, x), |x| < t");
    propagator->add_option("--t", t_str, "time (decimal)")->required();
    propagator->add_option("--x", x_str, "space (decimal)")->required();
    propagator->add_option("--tol", tol_str, "relative series tolerance (default 1e-16)");
    common(propagator, {"json"});

    auto* converge = app.add_subcommand("converge", "deviation of the lattice sum from the closed form as the lattice is refined");
    converge->add_option("--model", model, "quadratic|linear (default quadratic)")
        ->check(CLI::IsMember({"quadratic", "linear"}));
    converge->add_option("--v", v_str, "velocity as a rational; quadratic needs (p^2-q^2)/(p^2+q^2)")->required();
    converge->add_option("--t", t_str, "time > 0 (decimal)")->required();
    converge->add_option("--p", p_list, "quadratic: comma-separated Right segment counts")->delimiter(',');
    converge->add_option("--n", n_list, "linear: comma-separated total segment counts")->delimiter(',');
    converge->add_option("--threads", cfg.threads, "rows computed in parallel (default 1)")->check(CLI::PositiveNumber);
    common(converge, {"csv"});

    auto* dirac = app.add_subcommand("dirac-check", "central-difference residual of the Dirac equation for psi1, psi2");
    dirac->add_option("--t0", t0_str, "first time (default 0.5)");
    dirac->add_option("--t1", t1_str, "last time (default 3)");
    dirac->add_option("--xfrac", xfrac_str, "sample |x| <= xfrac * t (default 0.4)");
    dirac->add_option("--h", h_str, "grid spacing and stencil width (default 0.01)");
    common(dirac, {"json"});

    std::vector<std::string> argv_store{"quadboard"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.subcommand = chosen->get_name();
    if (!out_path.empty()) cfg.out_path = out_path;
    const std::string& sub = cfg.subcommand;
    if (format.empty()) format = (sub == "spectrum" || sub == "converge") ? "csv" : (sub == "enumerate" ? "text" : "json");
    cfg.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
    cfg.model = model == "linear" ? Model::linear : Model::quadratic;

    if (sub == "member") {
        cfg.point_t = parse_rational_flag(t_str, "t");
        cfg.point_x = parse_rational_flag(x_str, "x");
    } else if (sub == "boost") {
        cfg.p = parse_integer_flag(p_str, "p");
        cfg.q = parse_integer_flag(q_str, "q");
        if (cfg.p == 0 || cfg.q == 0) throw usage_error("--p and --q must be nonzero");
        if (t_str.empty() != x_str.empty()) throw usage_error("--t and --x must be given together");
        if (!t_str.empty()) {
            cfg.point_t = parse_rational_flag(t_str, "t");
            cfg.point_x = parse_rational_flag(x_str, "x");
        }
    } else if (sub == "enumerate") {
        try {
            cfg.start = parse_direction(start_str);
            cfg.end = parse_direction(end_str);
        } catch (const invalid_parameter& e) {
            throw usage_error(e.what());
        }
    } else if (sub == "exact") {
        cfg.t = parse_real(t_str, "t");
    } else if (sub == "propagator") {
        cfg.t = parse_real(t_str, "t");
        cfg.x = parse_real(x_str, "x");
        if (!tol_str.empty()) cfg.series.rel_tol = parse_real(tol_str, "tol");
        if (!(cfg.series.rel_tol > 0)) throw usage_error("--tol must be positive");
    } else if (sub == "converge") {
        cfg.t = parse_real(t_str, "t");
        cfg.v = parse_rational_flag(v_str, "v");
        if (cfg.model == Model::quadratic) {
            if (p_list.empty() || !n_list.empty()) throw usage_error("--model quadratic takes --p (and not --n)");
            cfg.sizes = p_list;
        } else {
            if (n_list.empty() || !p_list.empty()) throw usage_error("--model linear takes --n (and not --p)");
            cfg.sizes = n_list;
        }
        for (unsigned s : cfg.sizes)
            if (s == 0) throw usage_error("lattice sizes must be positive");
    } else if (sub == "dirac-check") {
        cfg.region = {parse_real(t0_str, "t0"), parse_real(t1_str, "t1"), parse_real(xfrac_str, "xfrac")};
        cfg.h = parse_real(h_str, "h");
    }
    return cfg;
}

namespace detail {

inline void run_member(const RunConfig& cfg, std::ostream& out) {
    SpacetimePoint pt{*cfg.point_t, *cfg.point_x};
    auto w = is_member(pt);
    if (cfg.format == Format::csv) {
        out << "schema_version,t,x,member,n,m,p,q\n";
        out << io::kSchemaVersion << ',' << to_string(pt.t) << ',' << to_string(pt.x) << ',' << (w ? "true" : "false");
        if (w)
            out << ',' << w->n << ',' << w->m << ',' << w->p << ',' << w->q << '\n';
        else
            out << ",,,,\n";
        return;
    }
    io::json j{{"schema_version", io::kSchemaVersion}, {"t", to_string(pt.t)}, {"x", to_string(pt.x)}, {"member", w.has_value()}};
    j["witness"] = w ? io::witness_json(*w) : io::json(nullptr);
    out << j.dump(2) << '\n';
}

inline void run_boost(const RunConfig& cfg, std::ostream& out) {
    auto b = make_boost(cfg.p, cfg.q);
    io::json j{{"schema_version", io::kSchemaVersion},
               {"p", io::integer_json(b.p())},
               {"q", io::integer_json(b.q())},
               {"velocity", to_string(b.velocity())},
               {"matrix", io::json::array({io::json::array({to_string(b.a11()), to_string(b.a12())}),
                                           io::json::array({to_string(b.a21()), to_string(b.a22())})})},
               {"determinant", to_string(b.determinant())}};
    if (cfg.point_t) {
        SpacetimePoint pt{*cfg.point_t, *cfg.point_x};
        auto image = apply_boost(b, pt);
        j["point"] = io::point_json(pt);
        io::json img = io::point_json(image);
        auto w = is_member(image);
        img["member"] = w.has_value();
        img["witness"] = w ? io::witness_json(*w) : io::json(nullptr);
        j["image"] = img;
    }
    out << j.dump(2) << '\n';
}

inline void run_spectrum(const RunConfig& cfg, std::ostream& out) {
    auto values = velocity_spectrum(cfg.max_pq);
    if (cfg.format == Format::json) {
        io::json list = io::json::array();
        for (const auto& v : values) list.push_back(to_string(v));
        out << io::json{{"schema_version", io::kSchemaVersion}, {"max_pq", cfg.max_pq}, {"velocities", list}}.dump(2)
            << '\n';
        return;
    }
    out << "schema_version,index,v\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << io::kSchemaVersion << ',' << i << ',' << to_string(values[i]) << '\n';
}

inline void run_enumerate(const RunConfig& cfg, std::ostream& out) {
    io::json paths = io::json::array();
    AmplitudePolynomial total;
    std::size_t count = 0;
    const bool text = cfg.format == Format::text;
    if (text) out << "# schema_version=1 P=" << cfg.P << " Q=" << cfg.Q << " start=" << to_char(cfg.start)
                  << " end=" << to_char(cfg.end) << '\n';
    for_each_path(
        cfg.P, cfg.Q, cfg.start, cfg.end,
        [&](const LatticePath& path) {
            auto amp = path_amplitude(path);
            total += amp;
            ++count;
            if (text) {
                out << path.str() << " R=" << path.bends() << " R+=" << path.bends_to_right()
                    << " R-=" << path.bends_to_left() << " amplitude=" << to_string(amp) << '\n';
            } else {
                paths.push_back(io::json{{"path", path.str()},
                                         {"R", path.bends()},
                                         {"R_plus", path.bends_to_right()},
                                         {"R_minus", path.bends_to_left()},
                                         {"amplitude", io::polynomial_json(amp)}});
            }
        },
        cfg.cap);
    if (text) {
        out << "# paths=" << count << " sum=" << to_string(total) << '\n';
        return;
    }
    io::json j{{"schema_version", io::kSchemaVersion},
               {"P", cfg.P},
               {"Q", cfg.Q},
               {"start", std::string(1, to_char(cfg.start))},
               {"end", std::string(1, to_char(cfg.end))},
               {"count", count},
               {"paths", paths},
               {"sum", io::polynomial_json(total)}};
    out << j.dump(2) << '\n';
}

inline void run_exact(const RunConfig& cfg, std::ostream& out) {
    if (!(cfg.t > 0)) throw domain_error("exact needs t > 0");
    const bool linear = cfg.model == Model::linear;
    const auto polys = linear ? linear_components(cfg.P, cfg.Q) : exact_components(cfg.P, cfg.Q);
    const Real eps = linear ? LinearSpec{cfg.P, cfg.Q, cfg.t}.epsilon() : LatticeSpec{cfg.P, cfg.Q, cfg.t}.eps0();
    const Real x = linear ? LinearSpec{cfg.P, cfg.Q, cfg.t}.x() : LatticeSpec{cfg.P, cfg.Q, cfg.t}.x();
    const auto values = evaluate(polys, eps);
    io::json comps = io::json::object();
    for (auto c : kComponents)
        comps[component_name(c)] = io::json{{"polynomial", io::polynomial_json(polys[c])},
                                            {"re", io::real_json(values[c].real())},
                                            {"im", io::real_json(values[c].imag())}};
    io::json j{{"schema_version", io::kSchemaVersion},
               {"model", linear ? "linear" : "quadratic"},
               {"P", cfg.P},
               {"Q", cfg.Q},
               {"t", io::real_json(cfg.t)},
               {"x", io::real_json(x)},
               {"eps", io::real_json(eps)},
               {"components", comps}};
    out << j.dump(2) << '\n';
}

inline void run_propagator(const RunConfig& cfg, std::ostream& out) {
    const auto m = closed_matrix(cfg.t, cfg.x, cfg.series);
    const Real s = std::sqrt((cfg.t - cfg.x) * (cfg.t + cfg.x));
    io::json j{{"schema_version", io::kSchemaVersion},
               {"t", io::real_json(cfg.t)},
               {"x", io::real_json(cfg.x)},
               {"s", io::real_json(s)},
               {"gamma", io::real_json(cfg.t / s)}};
    for (auto c : kComponents) j[component_name(c)] = io::complex_json(m[c]);
    out << j.dump(2) << '\n';
}

inline void run_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto rows = cfg.model == Model::linear ? linear_converge(cfg.t, cfg.v, cfg.sizes, cfg.threads)
                                           : convergence_sweep(cfg.t, cfg.v, cfg.sizes, cfg.threads);
    for (const auto& r : rows)
        if (r.skipped)
            err << "warning: N=" << r.Q << " cannot represent v=" << to_string(r.v) << "; row skipped\n";
    io::write_convergence_csv(out, rows);
}

inline void run_dirac(const RunConfig& cfg, std::ostream& out) {
    out << io::report_json(dirac_residual(cfg.region, cfg.h)).dump(2) << '\n';
}

} // namespace detail

/// Executes a validated config, writing the artifact to `out`.
inline void run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& sub = cfg.subcommand;
    if (sub == "member") detail::run_member(cfg, out);
    else if (sub == "boost") detail::run_boost(cfg, out);
    else if (sub == "spectrum") detail::run_spectrum(cfg, out);
    else if (sub == "enumerate") detail::run_enumerate(cfg, out);
    else if (sub == "exact") detail::run_exact(cfg, out);
    else if (sub == "propagator") detail::run_propagator(cfg, out);
    else if (sub == "converge") detail::run_converge(cfg, out, err);
    else if (sub == "dirac-check") detail::run_dirac(cfg, out);
    else throw usage_error("unknown subcommand '" + sub + "'");
}

/// Full CLI entry: parse, run, route output, map errors to exit codes.
inline int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        auto cfg = parse_args(args, out);
        if (!cfg) return kOk;
        std::ostringstream buffer;
        run(*cfg, buffer, err);
        if (cfg->out_path) {
            std::ofstream file(*cfg->out_path, std::ios::binary);
            if (!file) {
                err << "error: cannot open '" << *cfg->out_path << "' for writing\n";
                return kUsage;
            }
            file << buffer.str();
        } else {
            out << buffer.str();
        }
        return kOk;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return kUsage;
    } catch (const resource_limit& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
}

} // namespace quadboard::cli
