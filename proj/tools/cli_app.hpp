// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 dpcfade contributors

#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace dpcfade::cli {

using Cell = std::variant<std::monostate, double, std::string>;

/// One plot-ready result table. CSV rendering emits a '#'-prefixed JSON
/// metadata comment (full config echo, seed, version), the header line, and
/// the data rows with doubles printed at 17 significant digits.
struct Table {
    nlohmann::json meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> trailing_comments;
};

std::string render_csv(const Table& table);
std::string render_json(const Table& table);
std::string format_double(double v);

/// Entry point used by both the binary and the tests. Returns the process
/// exit code: 0 success, 2 usage/config error, 3 numerical non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpcfade::cli
