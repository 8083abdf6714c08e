#include "kdyck/verify.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "kdyck/bijection.hpp"
#include "kdyck/errors.hpp"
#include "kdyck/formulas.hpp"
#include "kdyck/geometric.hpp"
#include "kdyck/parallel.hpp"
#include "kdyck/paths.hpp"
#include "kdyck/series.hpp"
#include "kdyck/trees.hpp"

namespace kdyck {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name,
                  const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    r.pass = true;
    auto start = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        if (!r.detail.empty()) r.detail += "; ";
        r.detail += std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

void record_fail(CheckResult& r, const std::string& what) {
    r.pass = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += what;
}

std::string sig_str(const std::vector<std::size_t>& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(a[i]);
    }
    return out + ")";
}

// oracle tallies are unsigned long long, which gmpxx refuses to take directly
BigCount as_count(unsigned long long v) {
    return BigCount(mpz_class(static_cast<unsigned long>(v)));
}

} // namespace

std::map<std::vector<std::size_t>, unsigned long long>
census_paths(std::size_t k, std::size_t m, std::size_t t) {
    std::map<std::vector<std::size_t>, unsigned long long> census;
    enumerate_paths(k, m, t, [&](const KDyckPath& p) {
        ++census[residue_histogram(p).count];
    });
    return census;
}

std::vector<CheckResult> check_bivariate(std::size_t n_max, bool printed_variant) {
    std::vector<CheckResult> out;
    const char* tag = printed_variant ? "printed variant, n=" : "n=";
    for (std::size_t n = 2; n <= n_max; ++n) {
        out.push_back(timed("bivariate " + std::string(tag) + std::to_string(n),
                            [&](CheckResult& r) {
            std::vector<unsigned long long> by_j(n - 1, 0);
            unsigned long long total = 0;
            enumerate_geometric_ncts(n, [&](const GeometricNct& tree) {
                EdgeClassHist h = classify_left_right(tree);
                ++by_j[h.at_class(1)];
                ++total;
            });
            for (std::size_t j = 0; j + 2 <= n; ++j) {
                BigCount formula;
                try {
                    formula = printed_variant
                                  ? nct_bivariate_printed(static_cast<long long>(n),
                                                          static_cast<long long>(j))
                                  : nct_bivariate(static_cast<long long>(n),
                                                  static_cast<long long>(j));
                } catch (const NonDivisible& e) {
                    record_fail(r, "j=" + std::to_string(j) +
                                       ": formula does not divide exactly (" +
                                       e.what() + ")");
                    continue;
                }
                if (formula != as_count(by_j[j]))
                    record_fail(r, "j=" + std::to_string(j) + ": formula " +
                                       formula.str() + " != oracle " +
                                       std::to_string(by_j[j]));
            }
            if (nct_total(static_cast<long long>(n)) != as_count(total))
                record_fail(r, "row sum " + std::to_string(total) +
                                   " != closed-form total " +
                                   nct_total(static_cast<long long>(n)).str());
            if (r.pass)
                r.detail = std::to_string(total) + " trees across " +
                           std::to_string(n - 1) + " classes";
        }));
    }
    return out;
}

std::vector<CheckResult> check_signature_sweep(std::size_t k, std::size_t t,
                                               std::size_t m_max) {
    std::vector<CheckResult> out;
    for (std::size_t m = 0; m <= m_max; ++m) {
        std::string name = "signatures k=" + std::to_string(k) +
                           " t=" + std::to_string(t) + " m=" + std::to_string(m);
        out.push_back(timed(name, [&](CheckResult& r) {
            auto census = census_paths(k, m, t);
            unsigned long long oracle_total = 0;
            for (const auto& [a, c] : census) oracle_total += c;

            const std::size_t zpow = m + t + 1;
            ZSeries F = tree_gf(k, t, zpow);
            const MultiPoly& poly = coeff(F, zpow);

            if (m == 0) {
                // the empty path: no formula (it needs N >= 1), but the
                // oracle and the series must both see exactly one object
                if (oracle_total != 1)
                    record_fail(r, "oracle found " + std::to_string(oracle_total) +
                                       " empty paths");
                if (poly.total_count() != BigCount(1ul))
                    record_fail(r, "series constant-path coefficient is " +
                                       poly.total_count().str());
                if (r.pass) r.detail = "1 path";
                return;
            }

            BigCount formula_total(0ul);
            std::size_t checked = 0;
            for (const Signature& sig : all_signatures(k, m)) {
                unsigned long long oracle = 0;
                if (auto it = census.find(sig.a); it != census.end())
                    oracle = it->second;
                BigCount formula = t == 0 ? kdyck_count_t0(sig)
                                          : kdyck_count_bounded(t, sig);
                MultiPoly::Exponents e(sig.a.begin(), sig.a.end());
                BigCount series = poly.count_at(e);
                if (formula != as_count(oracle))
                    record_fail(r, "signature " + sig_str(sig.a) + ": formula " +
                                       formula.str() + " != oracle " +
                                       std::to_string(oracle));
                if (series != as_count(oracle))
                    record_fail(r, "signature " + sig_str(sig.a) + ": series " +
                                       series.str() + " != oracle " +
                                       std::to_string(oracle));
                formula_total += formula;
                ++checked;
            }
            if (formula_total != as_count(oracle_total))
                record_fail(r, "signature sum " + formula_total.str() +
                                   " != path count " + std::to_string(oracle_total));
            if (t == 0 && fuss_catalan(k, m) != as_count(oracle_total))
                record_fail(r, "path count " + std::to_string(oracle_total) +
                                   " != Fuss-Catalan " + fuss_catalan(k, m).str());
            if (r.pass)
                r.detail = std::to_string(checked) + " signatures, " +
                           std::to_string(oracle_total) + " paths";
        }));
    }
    return out;
}

std::vector<CheckResult> check_bijection(std::size_t k, std::size_t m_max) {
    std::vector<CheckResult> out;
    for (std::size_t m = 0; m <= m_max; ++m) {
        std::string name = "bijection k=" + std::to_string(k) + " m=" +
                           std::to_string(m);
        out.push_back(timed(name, [&](CheckResult& r) {
            std::set<std::string> path_set;
            enumerate_paths(k, m, 0, [&](const KDyckPath& p) {
                path_set.insert(p.encode());
            });

            std::set<std::string> image, rotated;
            std::size_t trees = 0;
            enumerate_trees(k, m, [&](const KnctTree& tree) {
                ++trees;
                KDyckPath p = tree_to_path(tree);
                image.insert(p.encode());
                if (path_to_tree(p) != tree)
                    record_fail(r, "path_to_tree(tree_to_path) != id at tree " +
                                       tree.encode());
                auto [edges, residues] = statistic_transport(tree);
                if (edges != residues)
                    record_fail(r, "statistics differ at tree " + tree.encode() +
                                       ": edges " + edges.signature() +
                                       " vs residues " + residues.signature());
                KnctTree rot = rotate_subtrees(tree);
                rotated.insert(rot.encode());
                if (positional_histogram(rot) != edge_class_histogram(tree, 0))
                    record_fail(r, "rotation changes the statistic at tree " +
                                       tree.encode());
            });
            if (image.size() != trees)
                record_fail(r, "tree_to_path is not injective: " +
                                   std::to_string(trees) + " trees, " +
                                   std::to_string(image.size()) + " paths");
            if (image != path_set)
                record_fail(r, "image of tree_to_path is not the full path set");
            if (rotated.size() != trees)
                record_fail(r, "rotate_subtrees is not injective");
            for (const std::string& text : path_set) {
                KDyckPath p = parse_path(k, 0, text);
                if (tree_to_path(path_to_tree(p)) != p)
                    record_fail(r, "tree_to_path(path_to_tree) != id at " + text);
            }
            if (r.pass)
                r.detail = std::to_string(trees) + " trees <-> " +
                           std::to_string(path_set.size()) + " paths";
        }));
    }
    return out;
}

std::vector<CheckResult> check_bounded_transport(std::size_t k, std::size_t t,
                                                 std::size_t m_max) {
    std::vector<CheckResult> out;
    for (std::size_t m = 0; m <= m_max; ++m) {
        std::string name = "transport k=" + std::to_string(k) + " t=" +
                           std::to_string(t) + " m=" + std::to_string(m);
        out.push_back(timed(name, [&](CheckResult& r) {
            std::size_t count = 0;
            enumerate_paths(k, m, t, [&](const KDyckPath& p) {
                ++count;
                BoundedDecomposition d = decompose_bounded(p);
                if (d.components.size() != t + 1)
                    record_fail(r, "wrong component count at " + p.encode());
                std::size_t downs = 0;
                ClassHistogram sum(k);
                for (std::size_t s = 0; s <= t; ++s) {
                    const KDyckPath& comp = d.components[s];
                    downs += comp.downs();
                    EdgeClassHist h = edge_class_histogram(path_to_tree(comp), s);
                    for (std::size_t c = 1; c <= k; ++c)
                        sum.at_class(c) += h.at_class(c);
                }
                if (downs != m)
                    record_fail(r, "down-steps not conserved at " + p.encode());
                if (sum != residue_histogram(p))
                    record_fail(r, "transported histogram " + sum.signature() +
                                       " != residue histogram " +
                                       residue_histogram(p).signature() + " at " +
                                       p.encode());
                if (recombine(d) != p)
                    record_fail(r, "recombine(decompose) != id at " + p.encode());
            });
            if (r.pass) r.detail = std::to_string(count) + " paths";
        }));
    }
    return out;
}

std::vector<CheckResult> check_substitution(std::size_t k_max, std::size_t order) {
    std::vector<CheckResult> out;
    for (std::size_t k = 2; k <= k_max; ++k) {
        std::string name = "substitution k=" + std::to_string(k) + " order=" +
                           std::to_string(order);
        out.push_back(timed(name, [&](CheckResult& r) {
            if (!verify_substitution(k, order))
                record_fail(r, "B(z(v)) != v");
            else
                r.detail = "B(z(v)) = v exactly";
        }));
    }
    return out;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
    std::vector<std::function<std::vector<CheckResult>()>> suites;

    if (opt.use_printed_bivariate) {
        // focused documentation mode: both bivariate variants, nothing else
        suites.push_back([&] { return check_bivariate(4, true); });
        suites.push_back([&] { return check_bivariate(opt.geometric_n_max, false); });
    } else {
        suites.push_back([&] { return check_bivariate(opt.geometric_n_max, false); });
        for (std::size_t k = 2; k <= opt.k_max; ++k) {
            if (opt.has_k_only && k != opt.k_only) continue;
            for (std::size_t t = 0; t < k; ++t) {
                std::size_t kk = k, tt = t;
                if (opt.has_m_only) {
                    std::size_t mm = opt.m_only;
                    suites.push_back([kk, tt, mm] {
                        auto cells = check_signature_sweep(kk, tt, mm);
                        return std::vector<CheckResult>{cells.back()};
                    });
                } else {
                    suites.push_back(
                        [kk, tt, m = opt.m_max] { return check_signature_sweep(kk, tt, m); });
                }
            }
            std::size_t kk = k;
            suites.push_back(
                [kk, m = opt.m_max] { return check_bijection(kk, m); });
            for (std::size_t t = 1; t < k; ++t) {
                std::size_t tt = t;
                suites.push_back([kk, tt, m = opt.m_max] {
                    return check_bounded_transport(kk, tt, m);
                });
            }
        }
        suites.push_back(
            [&] { return check_substitution(opt.k_max, opt.series_order); });
    }

    unsigned threads = opt.threads ? opt.threads : effective_threads();
    std::vector<CheckResult> all;
    ordered_parallel_for<std::vector<CheckResult>>(
        suites.size(),
        [&](std::size_t i) { return suites[i](); },
        [&](std::size_t, std::vector<CheckResult>& part) {
            for (auto& r : part) all.push_back(std::move(r));
        },
        threads);
    return all;
}

} // namespace kdyck
