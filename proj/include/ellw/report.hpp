#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellw/types.hpp"

namespace ellw {

struct CheckLine {
    std::string name;
    int samples = 0;
    int skipped = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    // informational lines report a residual but never gate overall_pass;
    // their pass flag records only that the evaluation completed
    bool informational = false;
};

struct CheckReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;  // ordered echo
    std::vector<CheckLine> checks;
    bool overall_pass = true;

    void add(CheckLine line) {
        checks.push_back(std::move(line));
        recompute();
    }
    void recompute() {
        overall_pass = true;
        for (const auto& c : checks) overall_pass = overall_pass && c.pass;
    }
};

std::string report_to_json(const std::vector<CheckReport>& reports);
std::string report_to_csv(const std::vector<CheckReport>& reports);
std::string report_to_text(const std::vector<CheckReport>& reports);

}  // namespace ellw
