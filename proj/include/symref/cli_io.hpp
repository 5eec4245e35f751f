#pragma once

#include "symref/form_spectrum.hpp"
#include "symref/group.hpp"
#include "symref/reflection.hpp"
#include "symref/stratification.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symref {

// Process exit codes. Disjoint so batch scripts can tell "obstructed" from "bad input".
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitOrderBound = 2;
inline constexpr int kExitNegative = 3;  // NoSymplecticResolution, or a failed semismall check

/**
 * Group spec documents:
 *
 *   {"name": "...", "dimension": 4, "conductor": 1,
 *    "symplectic_form": "standard" | [[entry, ...], ...]   (omit for a plain action on W),
 *    "generators": [[[entry, ...], ...], ...]}
 *
 * An entry is a rational string "p/q" or "p", a JSON integer, or a cyclotomic
 * object {"coeffs": ["p/q", ...]} with phi(conductor) coefficients (an
 * optional "conductor" key may name any divisor of the document conductor).
 * Throws ParseError for malformed JSON and ValidationError with the field path.
 */
GroupSpec parse_spec(std::string_view text);
std::string serialize_spec(const GroupSpec& spec);

/// {"fibers": {"<stratum index>": dim, ...}}
ResolutionFiberData parse_fibers(std::string_view text);

/// {"theta": matrix, "metric": matrix (default identity)}; entries are numbers or [re, im].
FormSpectrumInput parse_spectrum_input(std::string_view text);

struct StratumSummary {
    std::size_t codim;
    std::size_t stabilizer_order;
    std::size_t orbit_size;
};

struct AnalysisReport {
    std::string name;
    std::size_t dimension = 0;
    std::size_t group_order = 0;
    std::size_t reflection_count = 0;
    std::size_t reflection_conjugacy_class_count = 0;
    std::size_t g0_order = 0;
    std::size_t g0_index = 0;
    VerdictKind verdict = VerdictKind::NecessaryConditionHolds;
    bool dim2_duval_note = false;
    std::size_t z_min_codim = 0;  // dimension + 1 when G_0 = G
    std::optional<std::vector<StratumSummary>> strata;  // one entry per G-orbit of strata
};

/// Runs closure, census, G_0 and the verdict; strata only when requested.
AnalysisReport analyze(const GroupSpec& spec, bool with_strata, std::size_t max_order = kDefaultMaxOrder);

std::string report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

struct CommandResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

struct AnalyzeOptions {
    bool json = false;
    bool strata = false;
    std::size_t max_order = kDefaultMaxOrder;
};

CommandResult run_analyze(std::string_view spec_text, const AnalyzeOptions& options);
CommandResult run_semismall(std::string_view spec_text, std::string_view fibers_text,
                            std::size_t max_order = kDefaultMaxOrder);
CommandResult run_double(std::string_view spec_text);
CommandResult run_catalog_list();
CommandResult run_catalog_emit(std::string_view name);
CommandResult run_spectrum(std::string_view input_text);

}  // namespace symref
