// kdyck: exact combinatorics toolkit for k-Dyck paths and k-non-crossing
// trees — counting, enumeration, bijection, series verification, figures.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kdyck/bijection.hpp"
#include "kdyck/errors.hpp"
#include "kdyck/formulas.hpp"
#include "kdyck/json_io.hpp"
#include "kdyck/parallel.hpp"
#include "kdyck/paths.hpp"
#include "kdyck/render.hpp"
#include "kdyck/series.hpp"
#include "kdyck/trees.hpp"
#include "kdyck/verify.hpp"

namespace {

using namespace kdyck;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
    std::string path; // empty = stdout
    std::ofstream file;

    std::ostream& open() {
        if (path.empty()) return std::cout;
        file.open(path);
        if (!file) throw MalformedInput("cannot open output file: " + path);
        return file;
    }
};

std::vector<std::string> read_input_lines(const std::string& path) {
    std::vector<std::string> lines;
    std::string line;
    if (path.empty() || path == "-") {
        while (std::getline(std::cin, line)) lines.push_back(line);
    } else {
        std::ifstream in(path);
        if (!in) throw MalformedInput("cannot open input file: " + path);
        while (std::getline(in, line)) lines.push_back(line);
    }
    return lines;
}

// -- count --

struct CountArgs {
    std::size_t k = 2, t = 0;
    std::optional<std::size_t> m, n;
    std::vector<std::size_t> signature;
    bool all_signatures = false, bivariate = false;
    std::string format = "text";
    OutputTarget out;
};

std::vector<SignatureRow> signature_table(std::size_t k, std::size_t t,
                                          std::size_t m) {
    std::vector<SignatureRow> rows;
    if (m == 0) {
        rows.emplace_back(std::vector<std::size_t>(k, 0), BigCount(1ul));
        return rows;
    }
    for (const Signature& sig : all_signatures(k, m)) {
        BigCount c = t == 0 ? kdyck_count_t0(sig) : kdyck_count_bounded(t, sig);
        if (c > BigCount(0ul)) rows.emplace_back(sig.a, c);
    }
    return rows;
}

int run_count(CountArgs& args) {
    std::ostream& os = args.out.open();
    if (args.bivariate) {
        if (!args.n) throw MalformedInput("--bivariate needs --n");
        const long long n = static_cast<long long>(*args.n);
        if (args.format == "csv") {
            os << "n,j,count\n";
            for (long long j = 0; j <= n - 2; ++j)
                os << n << ',' << j << ',' << nct_bivariate(n, j) << '\n';
        } else if (args.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (long long j = 0; j <= n - 2; ++j)
                rows.push_back({{"j", j}, {"count", nct_bivariate(n, j).str()}});
            os << nlohmann::json{{"n", n}, {"rows", rows}}.dump() << '\n';
        } else {
            BigCount total(0ul);
            for (long long j = 0; j <= n - 2; ++j) {
                BigCount c = nct_bivariate(n, j);
                total += c;
                os << "j=" << j << ": " << c << '\n';
            }
            os << "total: " << total << '\n';
        }
        return kExitOk;
    }
    if (!args.signature.empty()) {
        Signature sig(args.k, args.signature);
        BigCount c = args.t == 0 ? kdyck_count_t0(sig)
                                 : kdyck_count_bounded(args.t, sig);
        os << c << '\n';
        return kExitOk;
    }
    if (args.all_signatures) {
        if (!args.m) throw MalformedInput("--all-signatures needs --m");
        auto rows = signature_table(args.k, args.t, *args.m);
        BigCount total(0ul);
        for (const auto& [a, c] : rows) total += c;
        if (args.format == "csv") {
            write_signature_csv(os, args.k, args.t, *args.m, rows);
        } else if (args.format == "json") {
            nlohmann::json j =
                signature_rows_to_json(args.k, args.t, *args.m, rows);
            j["total"] = total.str();
            if (args.t == 0) j["fuss_catalan"] = fuss_catalan(args.k, *args.m).str();
            os << j.dump() << '\n';
        } else {
            for (const auto& [a, c] : rows) {
                ClassHistogram h(args.k);
                h.count = a;
                os << h.signature() << ": " << c << '\n';
            }
            os << "total: " << total << '\n';
            if (args.t == 0)
                os << "fuss-catalan: " << fuss_catalan(args.k, *args.m) << '\n';
            else
                os << "bounded total (t=" << args.t << "): " << total << '\n';
        }
        return kExitOk;
    }
    if (args.m) {
        // plain total for (k, t, m)
        if (args.t == 0) {
            os << fuss_catalan(args.k, *args.m) << '\n';
        } else {
            BigCount total(0ul);
            for (const auto& [a, c] : signature_table(args.k, args.t, *args.m))
                total += c;
            os << total << '\n';
        }
        return kExitOk;
    }
    throw MalformedInput("count needs --m, --signature, or --bivariate --n");
}

// -- enumerate --

struct EnumerateArgs {
    std::string what; // "paths" | "trees"
    std::size_t k = 2, t = 0, m = 0;
    unsigned threads = 0;
    OutputTarget out;
};

int run_enumerate(EnumerateArgs& args) {
    std::ostream& os = args.out.open();
    unsigned long long count = 0;
    if (args.what == "paths") {
        unsigned threads = args.threads ? args.threads : effective_threads();
        enumerate_paths_parallel(args.k, args.m, args.t,
                                 [&](const KDyckPath& p) {
                                     os << p.encode() << '\n';
                                     ++count;
                                 },
                                 threads);
    } else {
        enumerate_trees(args.k, args.m, [&](const KnctTree& t) {
            os << t.encode() << '\n';
            ++count;
        });
    }
    os << count << '\n';
    return kExitOk;
}

// -- biject --

struct BijectArgs {
    std::size_t k = 2, t = 0;
    bool stats = false, decompose = false;
    std::string input;
    OutputTarget out;
};

bool looks_like_path(const std::string& line) {
    for (char c : line)
        if (c == 'U' || c == 'D') return true;
    return false;
}

int run_biject(BijectArgs& args) {
    std::ostream& os = args.out.open();
    auto lines = read_input_lines(args.input);
    bool stats_ok = true;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        try {
            if (args.decompose && looks_like_path(lines[ln])) {
                KDyckPath p = parse_path(args.k, args.t, lines[ln]);
                BoundedDecomposition d = decompose_bounded(p);
                for (std::size_t s = 0; s < d.components.size(); ++s)
                    os << (s ? ";" : "") << d.components[s].encode();
                os << '\n';
                continue;
            }
            if (looks_like_path(lines[ln])) {
                KDyckPath p = parse_path(args.k, 0, lines[ln]);
                KnctTree tree = path_to_tree(p);
                os << tree.encode() << '\n';
                if (args.stats) {
                    auto [edges, residues] = statistic_transport(tree);
                    os << "stats: edges " << edges.signature() << " residues "
                       << residues.signature()
                       << (edges == residues ? " equal" : " MISMATCH") << '\n';
                    if (edges != residues) stats_ok = false;
                }
            } else {
                KnctTree tree = parse_tree(args.k, lines[ln]);
                KDyckPath p = tree_to_path(tree);
                os << p.encode() << '\n';
                if (args.stats) {
                    auto [edges, residues] = statistic_transport(tree);
                    os << "stats: edges " << edges.signature() << " residues "
                       << residues.signature()
                       << (edges == residues ? " equal" : " MISMATCH") << '\n';
                    if (edges != residues) stats_ok = false;
                }
            }
        } catch (const Error& e) {
            throw MalformedInput("line " + std::to_string(ln + 1) + ": " +
                                 e.what());
        }
    }
    return stats_ok ? kExitOk : kExitVerifyFailed;
}

// -- verify --

struct VerifyArgs {
    VerifyOptions opt;
    std::optional<std::size_t> k, m;
    OutputTarget out;
};

int run_verify_cmd(VerifyArgs& args) {
    if (args.k) {
        args.opt.has_k_only = true;
        args.opt.k_only = *args.k;
        args.opt.k_max = std::max(args.opt.k_max, *args.k);
    }
    if (args.m) {
        args.opt.has_m_only = true;
        args.opt.m_only = *args.m;
    }
    std::ostream& os = args.out.open();
    auto results = run_verify(args.opt);
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        std::ostringstream secs;
        secs.precision(3);
        secs << std::fixed << r.seconds;
        os << " (" << secs.str() << "s)";
        if (!r.detail.empty()) os << " -- " << r.detail;
        os << '\n';
        if (r.pass) ++passed;
    }
    os << passed << '/' << results.size() << " checks passed\n";
    return passed == results.size() ? kExitOk : kExitVerifyFailed;
}

// -- series --

struct SeriesArgs {
    std::size_t k = 2, t = 0, order = 8;
    std::optional<std::size_t> zpower;
    OutputTarget out;
};

int run_series(SeriesArgs& args) {
    std::ostream& os = args.out.open();
    ZSeries F = tree_gf(args.k, args.t, args.order);
    if (args.zpower) {
        os << coeff_to_json(coeff(F, *args.zpower), *args.zpower).dump() << '\n';
    } else {
        for (std::size_t n = args.t + 1; n <= args.order; ++n)
            os << coeff_to_json(coeff(F, n), n).dump() << '\n';
    }
    return kExitOk;
}

// -- render --

struct RenderArgs {
    std::string what; // "path" | "tree"
    std::size_t k = 2, t = 0;
    std::string format = "svg";
    std::string text;
    std::string input;
    OutputTarget out;
};

int run_render(RenderArgs& args) {
    std::string encoded = args.text;
    if (encoded.empty() && !args.input.empty()) {
        auto lines = read_input_lines(args.input);
        std::string joined;
        for (const auto& l : lines) joined += l;
        encoded = joined;
    }
    std::ostream& os = args.out.open();
    if (args.what == "path") {
        KDyckPath p = parse_path(args.k, args.t, encoded);
        os << (args.format == "tikz" ? render_path_tikz(p) : render_path_svg(p));
    } else {
        KnctTree tree = parse_tree(args.k, encoded);
        os << (args.format == "tikz" ? render_tree_tikz(tree)
                                     : render_tree_svg(tree));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-Dyck path / k-non-crossing tree toolkit"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count = app.add_subcommand("count", "closed-form counts and tables");
    count->add_option("--k", count_args.k, "residue modulus (k >= 2)");
    count->add_option("--t", count_args.t, "lower boundary -t (0 <= t < k)");
    count->add_option("--m", count_args.m, "number of down-steps");
    count->add_option("--n", count_args.n, "node count for --bivariate");
    count->add_option("--signature", count_args.signature,
                      "single signature a_1,...,a_k")
        ->delimiter(',');
    count->add_flag("--all-signatures", count_args.all_signatures,
                    "full table for (k,t,m)");
    count->add_flag("--bivariate", count_args.bivariate,
                    "left/right refinement over n nodes (k=2)");
    count->add_option("--format", count_args.format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    count->add_option("--output", count_args.out.path, "write to file");

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "exhaustive generation");
    enumerate->add_option("what", enum_args.what, "paths|trees")
        ->required()
        ->check(CLI::IsMember({"paths", "trees"}));
    enumerate->add_option("--k", enum_args.k, "residue modulus");
    enumerate->add_option("--t", enum_args.t, "lower boundary (paths only)");
    enumerate->add_option("--m", enum_args.m, "number of down-steps")->required();
    enumerate->add_option("--threads", enum_args.threads, "worker threads");
    enumerate->add_option("--output", enum_args.out.path, "write to file");

    BijectArgs biject_args;
    auto* biject = app.add_subcommand("biject", "convert between encodings");
    biject->add_option("--k", biject_args.k, "residue modulus");
    biject->add_option("--t", biject_args.t, "boundary for --decompose");
    biject->add_flag("--stats", biject_args.stats,
                     "print and compare both histograms");
    biject->add_flag("--decompose", biject_args.decompose,
                     "split bounded paths into t+1 components");
    biject->add_option("--input", biject_args.input, "input file (default stdin)");
    biject->add_option("--output", biject_args.out.path, "write to file");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "cross-oracle identity sweep");
    verify->add_option("--k", verify_args.k, "restrict sweeps to one k");
    verify->add_option("--m", verify_args.m, "restrict sweeps to one m");
    verify->add_option("--k-max", verify_args.opt.k_max, "sweep k = 2..k-max");
    verify->add_option("--m-max", verify_args.opt.m_max, "down-steps per cell");
    verify->add_option("--n-max", verify_args.opt.geometric_n_max,
                       "geometric-oracle node range");
    verify->add_option("--order", verify_args.opt.series_order,
                       "substitution-check order");
    verify->add_flag("--use-printed-bivariate",
                     verify_args.opt.use_printed_bivariate,
                     "document the misprinted bivariate variant");
    verify->add_option("--threads", verify_args.opt.threads, "worker threads");
    verify->add_option("--output", verify_args.out.path, "write to file");

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "generating-function coefficients");
    series->add_option("--k", series_args.k, "residue modulus");
    series->add_option("--t", series_args.t, "lower boundary");
    series->add_option("--order", series_args.order, "truncation order");
    series->add_option("--z", series_args.zpower, "single z power to print");
    series->add_option("--output", series_args.out.path, "write to file");

    RenderArgs render_args;
    auto* render = app.add_subcommand("render", "emit SVG or TikZ figures");
    render->add_option("what", render_args.what, "path|tree")
        ->required()
        ->check(CLI::IsMember({"path", "tree"}));
    render->add_option("--k", render_args.k, "residue modulus");
    render->add_option("--t", render_args.t, "lower boundary (paths)");
    render->add_option("--format", render_args.format, "svg|tikz")
        ->check(CLI::IsMember({"svg", "tikz"}));
    render->add_option("--text", render_args.text, "encoding on the command line");
    render->add_option("--input", render_args.input, "read encoding from file");
    render->add_option("--output", render_args.out.path, "write to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(count_args);
        if (enumerate->parsed()) return run_enumerate(enum_args);
        if (biject->parsed()) return run_biject(biject_args);
        if (verify->parsed()) return run_verify_cmd(verify_args);
        if (series->parsed()) return run_series(series_args);
        if (render->parsed()) return run_render(render_args);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
