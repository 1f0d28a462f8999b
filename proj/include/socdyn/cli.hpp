#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "socdyn/model.hpp"

namespace socdyn::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kInvalidParams = 2,  // positivity or non-dominance fails
    kDegenerate = 3,
    kIntegrationFailure = 4,
};

/// Entry point of the `socdyn` executable.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
/// Same, with the program name omitted from `args`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses flat `key=value` text; blank lines and `#` comments are skipped.
/// Throws std::invalid_argument on unknown keys or malformed numbers.
std::map<std::string, double> parse_key_values(std::string_view text);

/// Combines file values with KEY=VAL overrides (later wins). All six
/// parameters must end up present.
Params assemble_params(const std::map<std::string, double>& file_values,
                       const std::vector<std::string>& overrides);

/// One sweep axis, NAME:MIN:MAX:STEPS. STEPS counts intervals, so the grid
/// has STEPS + 1 points including both ends.
struct SweepAxis {
    std::string name;
    double min = 0.0;
    double max = 0.0;
    int steps = 2;

    std::vector<double> values() const;
};

/// Throws std::invalid_argument when the name is not a parameter, the numbers
/// do not parse, or steps < 2.
SweepAxis parse_axis(std::string_view spec);

struct SweepRow {
    std::vector<double> values;
    std::string status;                  // "ok", "invalid" or "degenerate"
    std::string branch;                  // "B-plus", "B-minus" or empty
    std::string nash;                    // strict Nash vertices, "?" when undetermined
    std::array<std::string, 4> figures;  // S_N, S_O, S_H, S_P; "-" when not classifiable
    std::optional<std::size_t> attractors;
    bool degenerate = false;
};

/// Classifies every grid point independently. Rows are in row-major order of
/// the axes and do not depend on `jobs` (0 = hardware concurrency).
std::vector<SweepRow> run_sweep(const Params& base, const std::vector<SweepAxis>& axes,
                                double tol = kDefaultTol, unsigned jobs = 0);

void write_sweep_csv(std::ostream& os, const std::vector<SweepAxis>& axes,
                     const std::vector<SweepRow>& rows);

}  // namespace socdyn::cli
