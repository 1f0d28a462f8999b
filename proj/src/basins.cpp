#include "socdyn/basins.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "socdyn/classify.hpp"

namespace socdyn {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double std_error(double f, std::size_t n) {
    return std::sqrt(f * (1.0 - f) / static_cast<double>(n));
}

}  // namespace

SimplexState sample_simplex_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL);
    std::array<double, 4> e{};
    double sum = 0.0;
    for (double& v : e) {
        state = splitmix64(state);
        // u in (0, 1): 53 random bits offset by half an ulp.
        const double u = (static_cast<double>(state >> 11) + 0.5) * 0x1.0p-53;
        v = -std::log(u);
        sum += v;
    }
    for (double& v : e) v /= sum;
    return SimplexState::make(e);
}

std::vector<SimplexState> sample_simplex(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample count must be at least 1");
    std::vector<SimplexState> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(sample_simplex_at(seed, i));
    return out;
}

BasinReport estimate_basins(const Params& p, std::size_t n, std::uint64_t seed,
                            const IntegratorConfig& cfg, unsigned jobs, double match_tol,
                            double tol) {
    if (n == 0) throw std::invalid_argument("sample count must be at least 1");
    cfg.check();
    const RegimeReport regimes = classify_global(p, tol);
    const auto& attractors = regimes.global_attractors;

    IntegratorConfig quiet = cfg;
    quiet.record = false;

    std::vector<int> outcome(n, -1);
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < n; i += stride) {
            try {
                const auto m =
                    find_attractor(sample_simplex_at(seed, i), p, quiet, attractors, match_tol);
                if (m.index) outcome[i] = static_cast<int>(*m.index);
            } catch (const IntegrationError&) {
                // stays unresolved
            }
        }
    };

    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    if (jobs == 1 || n < 2) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w, jobs);
        for (auto& t : pool) t.join();
    }

    BasinReport r;
    r.samples = n;
    r.seed = seed;
    for (const auto& a : attractors) r.attractors.push_back({a.label, a.location});
    for (int o : outcome) {
        if (o < 0)
            ++r.unresolved;
        else
            ++r.attractors[static_cast<std::size_t>(o)].hits;
    }
    const double total = static_cast<double>(n);
    for (auto& e : r.attractors) {
        e.fraction = static_cast<double>(e.hits) / total;
        e.std_error = std_error(e.fraction, n);
    }
    r.unresolved_fraction = static_cast<double>(r.unresolved) / total;
    r.unresolved_std_error = std_error(r.unresolved_fraction, n);
    return r;
}

void write_basin_csv(std::ostream& os, const BasinReport& report) {
    const auto old = os.precision(17);
    os << "attractor,x1,x2,x3,x4,hits,fraction,std_error\n";
    for (const auto& e : report.attractors) {
        const auto& x = e.location;
        os << e.label << ',' << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ',' << e.hits
           << ',' << e.fraction << ',' << e.std_error << '\n';
    }
    os << "unresolved,,,,," << report.unresolved << ',' << report.unresolved_fraction << ','
       << report.unresolved_std_error << '\n';
    os.precision(old);
}

}  // namespace socdyn
