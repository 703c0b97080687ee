#include "gwcut/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "gwcut/errors.hpp"
#include "gwcut/linalg.hpp"

namespace gwcut {

namespace {

constexpr std::uint64_t kRoundingDomain = 0xB2;

void check_sizes(const EmbeddingMatrix& v, const WeightMatrix& w, const char* who) {
    if (v.count != w.size())
        throw input_error(std::string(who) + ": embedding has " + std::to_string(v.count) +
                          " columns, weight matrix has size " + std::to_string(w.size()));
}

} // namespace

std::vector<double> sample_hyperplane_normal(std::size_t dim, Rng& rng) {
    if (dim == 0) throw input_error("sample_hyperplane_normal: dimension must be >= 1");
    std::vector<double> r(dim);
    double nrm = 0.0;
    while (nrm == 0.0) {
        for (auto& x : r) x = rng.next_gaussian();
        nrm = norm2(r);
    }
    for (auto& x : r) x /= nrm;
    return r;
}

Rng make_trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return Rng(substream_seed(domain_seed(seed, kRoundingDomain), trial));
}

double cut_value(const WeightMatrix& w, std::span<const int> signs) {
    const std::size_t n = w.size();
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = w.row(i);
        for (std::size_t j = i + 1; j < n; ++j)
            if (signs[i] != signs[j]) c += row[j];
    }
    return c;
}

CutPartition round_once(const EmbeddingMatrix& v, const WeightMatrix& w,
                        std::span<const double> r) {
    check_sizes(v, w, "round_once");
    if (r.size() != v.ambient_dim)
        throw input_error("round_once: hyperplane normal has dimension " +
                          std::to_string(r.size()) + ", embedding has " +
                          std::to_string(v.ambient_dim));

    CutPartition part;
    part.signs.resize(v.count);
    for (std::size_t i = 0; i < v.count; ++i)
        part.signs[i] = dot(v.column(i), r) >= 0.0 ? 1 : -1;
    part.cut_value = cut_value(w, part.signs);
    return part;
}

double expected_cut(const EmbeddingMatrix& v, const WeightMatrix& w) {
    check_sizes(v, w, "expected_cut");
    const std::size_t n = w.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = w.row(i);
        const auto vi = v.column(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double wij = row[j];
            if (wij == 0.0) continue;
            const double d = std::clamp(dot(vi, v.column(j)), -1.0, 1.0);
            total += wij * std::acos(d) / std::numbers::pi;
        }
    }
    return total;
}

AlphaMinimum alpha_minimum() {
    // f(θ) = 2θ / (π (1 - cos θ)) is unimodal on (0, π] with the minimum
    // near 2.33; golden-section search pins it well past the needed 1e-4.
    const auto f = [](double theta) {
        return 2.0 * theta / (std::numbers::pi * (1.0 - std::cos(theta)));
    };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.5;
    double hi = std::numbers::pi;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 200 && (hi - lo) > 1e-13; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    const double theta = 0.5 * (lo + hi);
    return {theta, f(theta)};
}

double alpha_constant() { return alpha_minimum().alpha; }

RoundingReport round_best(const EmbeddingMatrix& v, const WeightMatrix& w,
                          std::size_t trials, std::uint64_t seed, unsigned threads) {
    check_sizes(v, w, "round_best");
    if (trials == 0) throw input_error("round_best: trials must be >= 1");
    if (threads == 0) threads = 1;

    std::vector<double> cuts(trials);

    struct Best {
        double cut = -1.0;
        std::size_t trial = 0;
        std::vector<int> signs;
    };

    const auto run_range = [&](std::size_t begin, std::size_t end, Best& best) {
        for (std::size_t t = begin; t < end; ++t) {
            Rng rng = make_trial_rng(seed, t);
            const auto r = sample_hyperplane_normal(v.ambient_dim, rng);
            CutPartition part = round_once(v, w, r);
            cuts[t] = part.cut_value;
            if (part.cut_value > best.cut) {
                best.cut = part.cut_value;
                best.trial = t;
                best.signs = std::move(part.signs);
            }
        }
    };

    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(threads, trials));
    std::vector<Best> bests(workers);
    if (workers <= 1) {
        run_range(0, trials, bests[0]);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (trials + workers - 1) / workers;
        for (unsigned wk = 0; wk < workers; ++wk) {
            const std::size_t begin = wk * chunk;
            const std::size_t end = std::min(trials, begin + chunk);
            pool.emplace_back(run_range, begin, end, std::ref(bests[wk]));
        }
        for (auto& th : pool) th.join();
    }

    // Merge: highest cut, ties by earliest trial — identical to sequential.
    Best* winner = &bests[0];
    for (auto& b : bests) {
        if (b.signs.empty()) continue;
        if (winner->signs.empty() || b.cut > winner->cut ||
            (b.cut == winner->cut && b.trial < winner->trial))
            winner = &b;
    }

    RoundingReport report;
    report.best.signs = std::move(winner->signs);
    report.best.cut_value = winner->cut;
    report.trials = trials;
    report.seed = seed;
    double sum = 0.0;
    for (const double c : cuts) sum += c; // fixed order regardless of threads
    report.sampled_mean_cut = sum / static_cast<double>(trials);
    report.closed_form_expected_cut = expected_cut(v, w);
    report.relaxed_objective = relaxed_objective(w, v);
    report.ratio_to_relaxation =
        report.relaxed_objective > 0.0 ? report.best.cut_value / report.relaxed_objective : 0.0;
    return report;
}

} // namespace gwcut
