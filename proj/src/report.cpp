#include "ellw/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace ellw {

namespace {
using ordered_json = nlohmann::ordered_json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ordered_json report_json(const CheckReport& r) {
    ordered_json j;
    j["suite"] = r.suite;
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["samples"] = c.samples;
        jc["skipped"] = c.skipped;
        jc["max_residual"] = c.max_residual;
        jc["tolerance"] = c.tolerance;
        jc["pass"] = c.pass;
        if (c.informational) jc["informational"] = true;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["overall_pass"] = r.overall_pass;
    return j;
}
}  // namespace

std::string report_to_json(const std::vector<CheckReport>& reports) {
    ordered_json j;
    j["schema"] = 1;
    if (reports.size() == 1) {
        ordered_json inner = report_json(reports[0]);
        for (auto& [k, v] : inner.items()) j[k] = v;
    } else {
        ordered_json arr = ordered_json::array();
        bool all = true;
        for (const auto& r : reports) {
            arr.push_back(report_json(r));
            all = all && r.overall_pass;
        }
        j["suites"] = arr;
        j["overall_pass"] = all;
    }
    return j.dump(2) + "\n";
}

std::string report_to_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    out << "suite,name,samples,skipped,max_residual,tolerance,pass\n";
    for (const auto& r : reports)
        for (const auto& c : r.checks)
            out << r.suite << ',' << c.name << ',' << c.samples << ','
                << c.skipped << ',' << fmt17(c.max_residual) << ','
                << fmt17(c.tolerance) << ',' << (c.pass ? "true" : "false")
                << '\n';
    return out.str();
}

std::string report_to_text(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    bool all = true;
    for (const auto& r : reports) {
        out << "suite " << r.suite << " (";
        bool first = true;
        for (const auto& [k, v] : r.params) {
            if (!first) out << ' ';
            out << k << '=' << v;
            first = false;
        }
        out << ")\n";
        for (const auto& c : r.checks) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "  %-34s %s  max_residual %.3e  tol %.1e  "
                          "samples %d skipped %d%s\n",
                          c.name.c_str(), c.pass ? "PASS" : "FAIL",
                          c.max_residual, c.tolerance, c.samples, c.skipped,
                          c.informational ? "  [informational]" : "");
            out << buf;
        }
        all = all && r.overall_pass;
    }
    out << (all ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
    return out.str();
}

}  // namespace ellw
