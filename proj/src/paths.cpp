#include "kdyck/paths.hpp"

#include <algorithm>

#include "kdyck/errors.hpp"
#include "kdyck/parallel.hpp"

namespace kdyck {

std::size_t KDyckPath::downs() const {
    return static_cast<std::size_t>(
        std::count(steps.begin(), steps.end(), Step::Down));
}

std::string KDyckPath::encode() const {
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) out += (s == Step::Up ? 'U' : 'D');
    return out;
}

KDyckPath validate(std::size_t k, std::size_t t, std::vector<Step> steps) {
    if (k < 2) throw BadParameters("k must be at least 2, got " + std::to_string(k));
    if (t >= k)
        throw BadParameters("boundary t must satisfy t < k, got t=" +
                            std::to_string(t) + ", k=" + std::to_string(k));
    long long level = 0;
    const long long floor = -static_cast<long long>(t);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        level += steps[i] == Step::Up ? 1 : -static_cast<long long>(k);
        if (level < floor)
            throw BoundaryViolation("level " + std::to_string(level) +
                                    " after step " + std::to_string(i + 1) +
                                    " is below -t = " + std::to_string(floor));
    }
    if (level != 0)
        throw EndpointViolation("path ends at level " + std::to_string(level) +
                                ", expected 0");
    return KDyckPath{k, t, std::move(steps)};
}

KDyckPath parse_path(std::size_t k, std::size_t t, const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'U')
            steps.push_back(Step::Up);
        else if (c == 'D')
            steps.push_back(Step::Down);
        else if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            continue;
        else
            throw MalformedPath(std::string("unexpected character '") + c +
                                "' at position " + std::to_string(i + 1));
    }
    return validate(k, t, std::move(steps));
}

std::vector<long long> level_profile(const KDyckPath& p) {
    std::vector<long long> out;
    out.reserve(p.steps.size());
    long long level = 0;
    for (Step s : p.steps) {
        level += s == Step::Up ? 1 : -static_cast<long long>(p.k);
        out.push_back(level);
    }
    return out;
}

ResidueStats residue_histogram(const KDyckPath& p) {
    ResidueStats h(p.k);
    long long level = 0;
    for (Step s : p.steps) {
        if (s == Step::Up) {
            ++level;
        } else {
            level -= static_cast<long long>(p.k);
            ++h.at_class(ClassHistogram::class_of_level(level, p.k));
        }
    }
    return h;
}

namespace {

struct GenState {
    std::size_t k, t;
    std::vector<Step> steps;
    std::size_t ups_left, downs_left;
    long long level = 0;
};

// Depth-first over {Up < Down}.  Any state with level >= -t and the step
// budget intact can be completed (climb first, then drop), so the two local
// guards are the whole pruning story: no dead ends, no duplicates.
void gen(GenState& st, const std::function<void(const KDyckPath&)>& yield) {
    if (st.ups_left == 0 && st.downs_left == 0) {
        yield(KDyckPath{st.k, st.t, st.steps});
        return;
    }
    if (st.ups_left > 0) {
        st.steps.push_back(Step::Up);
        ++st.level;
        --st.ups_left;
        gen(st, yield);
        ++st.ups_left;
        --st.level;
        st.steps.pop_back();
    }
    if (st.downs_left > 0 &&
        st.level - static_cast<long long>(st.k) >= -static_cast<long long>(st.t)) {
        st.steps.push_back(Step::Down);
        st.level -= static_cast<long long>(st.k);
        --st.downs_left;
        gen(st, yield);
        ++st.downs_left;
        st.level += static_cast<long long>(st.k);
        st.steps.pop_back();
    }
}

void check_enum_params(std::size_t k, std::size_t t) {
    if (k < 2) throw BadParameters("k must be at least 2, got " + std::to_string(k));
    if (t >= k)
        throw BadParameters("boundary t must satisfy t < k, got t=" +
                            std::to_string(t) + ", k=" + std::to_string(k));
}

// All valid length-d prefixes, in lexicographic order, as resumable states.
void gen_prefixes(GenState& st, std::size_t depth, std::vector<GenState>& out) {
    if (st.steps.size() == depth || (st.ups_left == 0 && st.downs_left == 0)) {
        out.push_back(st);
        return;
    }
    if (st.ups_left > 0) {
        st.steps.push_back(Step::Up);
        ++st.level;
        --st.ups_left;
        gen_prefixes(st, depth, out);
        ++st.ups_left;
        --st.level;
        st.steps.pop_back();
    }
    if (st.downs_left > 0 &&
        st.level - static_cast<long long>(st.k) >= -static_cast<long long>(st.t)) {
        st.steps.push_back(Step::Down);
        st.level -= static_cast<long long>(st.k);
        --st.downs_left;
        gen_prefixes(st, depth, out);
        ++st.downs_left;
        st.level += static_cast<long long>(st.k);
        st.steps.pop_back();
    }
}

} // namespace

void enumerate_paths(std::size_t k, std::size_t m, std::size_t t,
                     const std::function<void(const KDyckPath&)>& yield) {
    check_enum_params(k, t);
    GenState st{k, t, {}, k * m, m, 0};
    st.steps.reserve((k + 1) * m);
    gen(st, yield);
}

std::vector<KDyckPath> collect_paths(std::size_t k, std::size_t m, std::size_t t) {
    std::vector<KDyckPath> out;
    enumerate_paths(k, m, t, [&](const KDyckPath& p) { out.push_back(p); });
    return out;
}

namespace {

unsigned long long count_constrained(std::size_t k, std::size_t t,
                                     std::vector<std::size_t>& budget,
                                     std::size_t ups_left, std::size_t downs_left,
                                     long long level) {
    if (downs_left == 0) return 1; // forced: climb straight back to 0
    unsigned long long total = 0;
    if (ups_left > 0) {
        ++level;
        --ups_left;
        total += count_constrained(k, t, budget, ups_left, downs_left, level);
        ++ups_left;
        --level;
    }
    long long landing = level - static_cast<long long>(k);
    if (landing >= -static_cast<long long>(t)) {
        std::size_t cls = ClassHistogram::class_of_level(landing, k);
        if (budget[cls - 1] > 0) {
            --budget[cls - 1];
            total += count_constrained(k, t, budget, ups_left, downs_left - 1, landing);
            ++budget[cls - 1];
        }
    }
    return total;
}

} // namespace

unsigned long long count_paths_with_histogram(std::size_t k, std::size_t t,
                                              const std::vector<std::size_t>& target) {
    check_enum_params(k, t);
    if (target.size() != k)
        throw BadParameters("signature has " + std::to_string(target.size()) +
                            " entries, expected " + std::to_string(k));
    std::size_t m = 0;
    for (std::size_t v : target) m += v;
    std::vector<std::size_t> budget = target;
    return count_constrained(k, t, budget, k * m, m, 0);
}

void enumerate_paths_parallel(std::size_t k, std::size_t m, std::size_t t,
                              const std::function<void(const KDyckPath&)>& yield,
                              unsigned threads) {
    check_enum_params(k, t);
    const std::size_t total = (k + 1) * m;
    if (threads <= 1 || total < 16) {
        enumerate_paths(k, m, t, yield);
        return;
    }

    const std::size_t depth = std::min<std::size_t>(total / 2, 12);
    GenState root{k, t, {}, k * m, m, 0};
    root.steps.reserve(total);
    std::vector<GenState> prefixes;
    gen_prefixes(root, depth, prefixes);

    ordered_parallel_for<std::vector<KDyckPath>>(
        prefixes.size(),
        [&](std::size_t i) {
            std::vector<KDyckPath> part;
            GenState st = prefixes[i];
            st.steps.reserve(total);
            gen(st, [&](const KDyckPath& p) { part.push_back(p); });
            return part;
        },
        [&](std::size_t, std::vector<KDyckPath>& part) {
            for (const KDyckPath& p : part) yield(p);
        },
        threads);
}

} // namespace kdyck
