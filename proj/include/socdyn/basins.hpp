#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "socdyn/dynamics.hpp"
#include "socdyn/model.hpp"

namespace socdyn {

/// The i-th point of the stream for `seed`: four standard exponentials,
/// normalized. Uniform on the open simplex; depends only on (seed, index).
SimplexState sample_simplex_at(std::uint64_t seed, std::uint64_t index);

/// n points uniform on the open 3-simplex. Throws std::invalid_argument if n == 0.
std::vector<SimplexState> sample_simplex(std::size_t n, std::uint64_t seed);

struct BasinEntry {
    std::string label;
    SimplexState location;
    std::size_t hits = 0;
    double fraction = 0.0;
    double std_error = 0.0;
};

struct BasinReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string measure = "uniform (flat Dirichlet) on the open simplex";
    std::vector<BasinEntry> attractors;
    std::size_t unresolved = 0;
    double unresolved_fraction = 0.0;
    double unresolved_std_error = 0.0;
};

/// Integrates `n` uniform starts and tallies which classified attractor each
/// one reaches. Integrator failures land in the unresolved bucket. The result
/// does not depend on `jobs` (0 = hardware concurrency).
BasinReport estimate_basins(const Params& p, std::size_t n, std::uint64_t seed,
                            const IntegratorConfig& cfg, unsigned jobs = 0,
                            double match_tol = kDefaultMatchTol, double tol = kDefaultTol);

/// One row per attractor plus an "unresolved" row.
void write_basin_csv(std::ostream& os, const BasinReport& report);

}  // namespace socdyn
