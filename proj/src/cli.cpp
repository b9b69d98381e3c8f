#include "bead/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <variant>

#include "bead/core_model.hpp"
#include "bead/discrete_hexagon.hpp"
#include "bead/kernel.hpp"
#include "bead/sampler.hpp"
#include "bead/scaling.hpp"
#include "bead/svg.hpp"
#include "bead/validation.hpp"

namespace bead {

std::string format_double(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

namespace {

using Cell = std::variant<long long, double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
    nlohmann::json spec = nlohmann::json::object();
    std::optional<std::uint64_t> seed;
};

std::string cell_text(const Cell& c) {
    if (auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    if (auto* d = std::get_if<double>(&c)) return format_double(*d);
    const auto& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

void write_table(std::ostream& os, const Table& t, const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["spec"] = t.spec;
        j["seed"] = t.seed ? nlohmann::json(*t.seed) : nlohmann::json(nullptr);
        j["rows"] = nlohmann::json::array();
        for (const auto& r : t.rows) {
            nlohmann::json o = nlohmann::json::object();
            for (std::size_t i = 0; i < r.size(); ++i)
                std::visit([&](const auto& v) { o[t.header[i]] = v; }, r[i]);
            j["rows"].push_back(o);
        }
        os << j.dump(2) << '\n';
        return;
    }
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell_text(r[i]);
        os << '\n';
    }
}

struct Output {
    std::string format = "csv";
    std::string path;
};

void add_output(CLI::App* sub, Output& o) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.path, "write to this file instead of stdout");
}

void emit(const Output& o, const Table& t, std::ostream& out) {
    if (o.path.empty()) {
        write_table(out, t, o.format);
        return;
    }
    std::ofstream f(o.path);
    if (!f) throw std::runtime_error("cannot open " + o.path);
    write_table(f, t, o.format);
}

nlohmann::json spec_json(int p, int q) { return {{"p", p}, {"q", q}}; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finitized bead process: sampling, exact kernels, discrete checks, scaling limits", "beadproc"};
    app.require_subcommand(1);

    int p = 0, q = 0, n = 0, t = 0, s = 0, threads = 1, points = 100, count = 1;
    std::optional<std::uint64_t> seed;
    double x = 0.5, y = 0.5, k = 2.0, S = 2.0, X = 0.0, Y = 0.0;
    int s0 = 0, t0 = 0;
    Output o;

    auto need_pq = [&](CLI::App* sub) {
        sub->add_option("--p", p, "p")->required();
        sub->add_option("--q", q, "q")->required();
    };

    // sample
    std::string svg_path;
    auto* sample = app.add_subcommand("sample", "draw configurations");
    need_pq(sample);
    sample->add_option("--count", count, "number of configurations")->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "seed; drawn from the OS when absent");
    sample->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sample->add_option("--svg", svg_path, "also draw the configurations as SVG");
    add_output(sample, o);

    // density
    std::optional<int> line_opt;
    auto* density = app.add_subcommand("density", "one-point function on a grid");
    need_pq(density);
    density->add_option("--t", line_opt, "line (all lines when absent)");
    density->add_option("--points", points, "grid points per line")->check(CLI::PositiveNumber);
    add_output(density, o);

    // kernel
    std::optional<int> grid;
    bool kernel_table = false;
    auto* kernel = app.add_subcommand("kernel", "K(s,y;t,x)");
    need_pq(kernel);
    kernel->add_option("--s", s, "line of y")->required();
    kernel->add_option("--t", t, "line of x")->required();
    kernel->add_option("--y", y, "position on line s");
    kernel->add_option("--x", x, "position on line t");
    kernel->add_option("--grid", grid, "tabulate on a grid x grid of midpoints instead");
    kernel->add_flag("--table", kernel_table, "print the single value as a table row");
    add_output(kernel, o);

    // correlate
    std::vector<std::string> pts_raw;
    auto* correlate = app.add_subcommand("correlate", "n-point correlation det[K]");
    need_pq(correlate);
    correlate->add_option("--point", pts_raw, "line:position, repeatable")->required();

    // enumerate
    bool total_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "discrete hexagon enumeration");
    enumerate->add_option("--n", n, "paths")->required();
    need_pq(enumerate);
    enumerate->add_option("--line", line_opt, "restrict to one line");
    enumerate->add_flag("--total", total_only, "print only the number of configurations");
    add_output(enumerate, o);

    // limit-shape
    auto* shape = app.add_subcommand("limit-shape", "support endpoints c_S, d_S");
    shape->add_option("--k", k, "(q-p)/p");
    shape->add_option("--points", points, "number of S values")->check(CLI::Range(2, 100000));
    add_output(shape, o);

    // bulk
    bool probe = false;
    std::vector<int> probe_ps{16, 32, 64};
    std::string b_variant = "alt";
    auto* bulk = app.add_subcommand("bulk", "bulk kernel K*, or the finite-p convergence probe");
    bulk->add_option("--k", k, "(q-p)/p");
    bulk->add_option("--S", S, "scaled line label");
    bulk->add_option("--s0", s0, "line offset of Y");
    bulk->add_option("--t0", t0, "line offset of X");
    bulk->add_option("--X", X, "scaled position X");
    bulk->add_option("--Y", Y, "scaled position Y");
    bulk->add_flag("--probe", probe, "compare scaled finite kernels against K* on the standard grid");
    bulk->add_option("--p", probe_ps, "values of p for --probe");
    bulk->add_option("--B", b_variant, "prefactor variant for --probe")->check(CLI::IsMember({"alt", "printed"}));
    add_output(bulk, o);

    // validate
    std::string suite = "all", level = "quick";
    auto* validate = app.add_subcommand("validate", "run a validation suite");
    validate->add_option("--suite", suite, "kernel, sampler, discrete, asymptotics, bulk or all")
        ->check([](const std::string& v) { return known_suite(v) ? std::string() : "unknown suite " + v; });
    validate->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    validate->add_option("--seed", seed, "seed for the Monte Carlo checks");
    validate->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    validate->add_option("--svg", svg_path, "where to write the shape-check figure");
    add_output(validate, o);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return 2;
    }

    try {
        if (sample->parsed()) {
            HexagonSpec spec(p, q);
            if (!seed) {
                std::random_device rd;
                seed = (std::uint64_t(rd()) << 32) ^ rd();
                err << "seed: " << *seed << '\n';
            }
            auto cfgs = sample_many(spec, count, *seed, threads);
            Table tb{{"sample", "line", "index", "position"}, {}, spec_json(p, q), seed};
            for (std::size_t i = 0; i < cfgs.size(); ++i)
                for (std::size_t l = 0; l < cfgs[i].lines.size(); ++l)
                    for (std::size_t j = 0; j < cfgs[i].lines[l].size(); ++j)
                        tb.rows.push_back({(long long)i, (long long)l + 1, (long long)j + 1, cfgs[i].lines[l][j]});
            emit(o, tb, out);
            if (!svg_path.empty()) {
                std::ofstream f(svg_path);
                if (!f) throw std::runtime_error("cannot open " + svg_path);
                write_svg(f, spec, cfgs);
            }
            return 0;
        }
        if (density->parsed()) {
            HexagonSpec spec(p, q);
            KernelContext ctx(spec);
            Table tb{{"s", "y", "t", "x", "value"}, {}, spec_json(p, q), {}};
            int lo = line_opt ? *line_opt : 1, hi = line_opt ? *line_opt : spec.num_lines();
            for (int l = lo; l <= hi; ++l)
                for (int i = 0; i < points; ++i) {
                    double xx = (i + 0.5) / points;
                    tb.rows.push_back({(long long)l, xx, (long long)l, xx, line_density(ctx, l, xx)});
                }
            emit(o, tb, out);
            return 0;
        }
        if (kernel->parsed()) {
            HexagonSpec spec(p, q);
            KernelContext ctx(spec);
            Table tb{{"s", "y", "t", "x", "value"}, {}, spec_json(p, q), {}};
            if (grid) {
                for (int i = 0; i < *grid; ++i)
                    for (int j = 0; j < *grid; ++j) {
                        double yy = (i + 0.5) / *grid, xx = (j + 0.5) / *grid;
                        tb.rows.push_back({(long long)s, yy, (long long)t, xx, kernel_eval(ctx, s, yy, t, xx)});
                    }
                emit(o, tb, out);
                return 0;
            }
            double v = kernel_eval(ctx, s, y, t, x);
            if (!kernel_table && o.path.empty() && o.format == "csv") {
                out << format_double(v) << '\n';
                return 0;
            }
            tb.rows.push_back({(long long)s, y, (long long)t, x, v});
            emit(o, tb, out);
            return 0;
        }
        if (correlate->parsed()) {
            HexagonSpec spec(p, q);
            KernelContext ctx(spec);
            std::vector<SpacePoint> pts;
            for (const auto& r : pts_raw) {
                auto c = r.find(':');
                if (c == std::string::npos) {
                    err << "error: --point expects line:position, got " << r << '\n';
                    return 2;
                }
                pts.push_back({std::stoi(r.substr(0, c)), std::stod(r.substr(c + 1))});
            }
            out << format_double(npoint_correlation(ctx, pts)) << '\n';
            return 0;
        }
        if (enumerate->parsed()) {
            DiscreteHexagon hex(n, p, q);
            if (total_only) {
                out << enumerate_configurations(hex).size() << '\n';
                return 0;
            }
            Table tb{{"line", "positions", "count", "weight"}, {}, {{"n", n}, {"p", p}, {"q", q}}, {}};
            int lo = line_opt ? *line_opt : 1, hi = line_opt ? *line_opt : p + q - 1;
            for (int l = lo; l <= hi; ++l) {
                auto counts = bruteforce_line_counts(hex, l);
                for (const auto& xs : line_tuples(hex, l)) {
                    std::string pos;
                    for (std::size_t i = 0; i < xs.size(); ++i) pos += (i ? " " : "") + std::to_string(xs[i]);
                    auto it = counts.find(xs);
                    std::string cnt = it == counts.end() ? "0" : it->second.str();
                    tb.rows.push_back({(long long)l, pos, cnt, hahn_marginal_unnormalized(hex, l, xs).str()});
                }
            }
            emit(o, tb, out);
            return 0;
        }
        if (shape->parsed()) {
            Table tb{{"S", "c", "d"}, {}, {{"k", k}}, {}};
            for (int i = 0; i < points; ++i) {
                double SS = (2 + k) * i / (points - 1);
                auto [c, d] = support_interval(k, SS);
                tb.rows.push_back({SS, c, d});
            }
            emit(o, tb, out);
            return 0;
        }
        if (bulk->parsed()) {
            ScalingContext sc = scaling_context(k, S);
            if (!probe) {
                out << format_double(bulk_kernel(sc.nu, s0, Y, t0, X)) << '\n';
                return 0;
            }
            std::vector<BulkProbePoint> grid_pts;
            for (int dl = -2; dl <= 2; ++dl)
                for (double tau : {-2.0, -1.0, 0.03, 1.0, 2.0})
                    grid_pts.push_back({std::max(dl, 0), std::max(-dl, 0), tau / 2, -tau / 2});
            double B = b_variant == "alt" ? sc.B_alt : sc.B_printed;
            Table tb{{"p", "s0", "t0", "X", "Y", "finite", "limit", "error"}, {}, {{"k", k}, {"S", S}}, {}};
            for (int pp : probe_ps) {
                auto r = bulk_convergence_probe(k, S, pp, grid_pts, B);
                for (const auto& row : r.rows)
                    tb.rows.push_back({(long long)pp, (long long)row.pt.s0, (long long)row.pt.t0, row.pt.X, row.pt.Y,
                                       row.scaled_finite, row.limit, row.error});
            }
            emit(o, tb, out);
            return 0;
        }
        if (validate->parsed()) {
            ValidationOptions vo;
            vo.level = level == "full" ? Level::full : Level::quick;
            if (seed) vo.seed = *seed;
            vo.threads = threads;
            vo.svg_path = svg_path;
            auto res = run_suite(suite, vo);
            Table tb{{"suite", "check", "status", "measure", "threshold"}, {}, nlohmann::json::object(), vo.seed};
            bool ok = true;
            for (const auto& r : res) {
                ok = ok && r.passed;
                tb.rows.push_back({r.suite, r.check, std::string(r.passed ? "pass" : "fail"), r.measure, r.threshold});
            }
            emit(o, tb, out);
            return ok ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace bead
