#pragma once

#include "ckalg/generators.hpp"
#include "ckalg/omega.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ckalg::cli {

enum class Format { json, csv, text };

struct RunConfig {
    std::string command;
    Family family = Family::so;
    std::size_t n = 0;
    std::optional<OmegaVector> omega;
    Format format = Format::json;
    std::string out_path;
    unsigned jobs = 1;
    bool stretch = false;
    bool corrupt = false;
};

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_input_error = 2;

struct SweepRow {
    OmegaVector omega;
    std::size_t n_zeros = 0;
    std::size_t dim_z2 = 0;
    std::size_t dim_b2 = 0;
    std::size_t dim_h2 = 0;
    std::size_t predicted = 0;
    bool match = false;
};

/// Solver vs predictor over all 3^n sign patterns, rows in lexicographic ω order.
std::vector<SweepRow> sweep(Family family, std::size_t n, unsigned jobs);

int cmd_generators(const RunConfig& cfg, std::ostream& out);
int cmd_structure(const RunConfig& cfg, std::ostream& out);
int cmd_h2(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

/// Parses argv-style arguments (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ckalg::cli
