// ellw: command-line harness for the elliptic vertex / deformed W-algebra
// toolkit.  Subcommands:
//   eval   <function> key=value...   print one complex value
//   verify <suite>    key=value...   run a property suite, emit a report
//   table  <name>     key=value...   emit a mode-coefficient table
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 numeric error.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ellw/modes.hpp"
#include "ellw/report.hpp"
#include "ellw/rmatrix.hpp"
#include "ellw/special.hpp"
#include "ellw/structure.hpp"
#include "ellw/suites.hpp"

using namespace ellw;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// numeric literal: float or rational "a/b"
double parse_real_part(const std::string& s) {
    std::string t = s;
    if (t.empty() || t == "+") t = "1";
    else if (t == "-") t = "-1";
    auto slash = t.find('/');
    auto as_double = [](const std::string& u) {
        size_t pos = 0;
        double v;
        try {
            v = std::stod(u, &pos);
        } catch (const std::exception&) {
            throw UsageError("cannot parse number '" + u + "'");
        }
        if (pos != u.size())
            throw UsageError("cannot parse number '" + u + "'");
        return v;
    };
    if (slash == std::string::npos) return as_double(t);
    double num = as_double(t.substr(0, slash));
    double den = as_double(t.substr(slash + 1));
    if (den == 0.0) throw UsageError("zero denominator in '" + s + "'");
    return num / den;
}

// "a+bi", "a-bi", "bi", "a", "i", "1/2", "1e-3+2e-4i", ...
cplx parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw UsageError("empty numeric value");
    bool has_i = (s.back() == 'i' || s.back() == 'I');
    if (!has_i) return {parse_real_part(s), 0.0};
    s.pop_back();
    // split at the last +/- that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_real_part(s)};
    double re = parse_real_part(s.substr(0, split));
    std::string im = s.substr(split);  // keeps the sign
    return {re, parse_real_part(im)};
}

long parse_long(const std::string& s) {
    size_t pos = 0;
    long v;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("cannot parse integer '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("cannot parse integer '" + s + "'");
    return v;
}

// key -> raw string; preloaded with the documented defaults
struct Params {
    std::map<std::string, std::string> kv;
    std::map<std::string, bool> given;

    const std::string& raw(const std::string& k) const {
        auto it = kv.find(k);
        if (it == kv.end()) throw UsageError("missing parameter '" + k + "'");
        return it->second;
    }
    bool has(const std::string& k) const {
        auto it = given.find(k);
        return it != given.end() && it->second;
    }
    cplx c(const std::string& k) const { return parse_complex(raw(k)); }
    double d(const std::string& k) const { return parse_real_part(raw(k)); }
    long l(const std::string& k) const { return parse_long(raw(k)); }
    int i(const std::string& k) const { return int(parse_long(raw(k))); }

    void require(std::initializer_list<const char*> keys) const {
        for (const char* k : keys)
            if (!has(k))
                throw UsageError(std::string("missing required parameter '") +
                                 k + "'");
    }
};

const std::vector<std::string> kKeys = {
    "N",  "M", "h", "i", "j", "k", "q", "p", "x", "c", "z", "z2", "nome",
    "g1", "g2", "xi", "tau", "r", "s", "table", "tol", "trunc-theta",
    "trunc-prod", "trunc-series", "r-max", "samples", "seed", "format", "out"};

void add_keys(CLI::App* cmd, Params& prm) {
    // -h is taken as the parity parameter, so help is --help only
    cmd->set_help_flag("--help", "print help");
    prm.kv = {{"N", "2"},         {"M", "1"},         {"h", "1"},
              {"i", "1"},         {"j", "2"},         {"k", "1"},
              {"q", "0.5"},       {"p", "0.3"},       {"tol", "1e-8"},
              {"trunc-theta", "64"}, {"trunc-prod", "64"},
              {"trunc-series", "64"}, {"r-max", "5"}, {"samples", "20"},
              {"seed", "42"},     {"table", "critical-k0"},
              {"format", ""},     {"out", ""}};
    for (const auto& key : kKeys) {
        std::string flag = "--" + key;
        // underscore aliases for the dashed flags
        std::string alias;
        if (key.find('-') != std::string::npos) {
            alias = key;
            for (auto& ch : alias)
                if (ch == '-') ch = '_';
            flag += ",--" + alias;
        }
        cmd->add_option_function<std::string>(
            flag,
            [&prm, key](const std::string& v) {
                prm.kv[key] = v;
                prm.given[key] = true;
            },
            "");
    }
}

TruncationConfig trunc_from(const Params& p) {
    TruncationConfig tc;
    tc.theta_terms = p.i("trunc-theta");
    tc.prod_terms = p.i("trunc-prod");
    tc.series_lmax = p.i("trunc-series");
    if (tc.theta_terms < 1 || tc.prod_terms < 1 || tc.series_lmax < 1)
        throw UsageError("truncation orders must be positive");
    return tc;
}

ModularParams mp_from(const Params& p) {
    ModularParams mp;
    mp.N = p.i("N");
    mp.q = p.c("q");
    mp.p = p.c("p");
    if (p.has("c")) mp.c = p.c("c");
    return mp;
}

void emit(const std::string& text, const Params& p) {
    const std::string& path = p.raw("out");
    if (path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + path + "'");
    f.write(text.data(), std::streamsize(text.size()));
}

int cmd_eval(const std::string& fn, const Params& p) {
    TruncationConfig tc = trunc_from(p);
    cplx v;
    if (fn == "theta") {
        p.require({"xi", "tau"});
        ThetaChar ch{p.has("g1") ? p.d("g1") : 0.0,
                     p.has("g2") ? p.d("g2") : 0.0};
        v = theta_char(ch, p.c("xi"), p.c("tau"), tc);
    } else if (fn == "big-theta") {
        p.require({"z", "nome"});
        v = big_theta(p.c("z"), p.c("nome"), tc);
    } else if (fn == "tau") {
        p.require({"z"});
        v = tau_n(p.c("z"), mp_from(p), tc);
    } else if (fn == "kappa-inv") {
        if (!p.has("z2") && !p.has("z")) p.require({"z2"});
        cplx z2 = p.has("z2") ? p.c("z2") : p.c("z") * p.c("z");
        v = kappa_inv(z2, mp_from(p), tc);
    } else if (fn == "T") {
        p.require({"x"});
        ModularParams mp = mp_from(p);
        if (!mp.c) mp.c = cplx(-double(mp.N), 0.0);
        v = t_function(p.c("x"), mp, tc);
    } else if (fn == "f") {
        p.require({"x"});
        v = f_function(p.c("x"), mp_from(p), tc);
    } else if (fn == "F") {
        p.require({"x"});
        v = f_exchange(p.i("M"), p.c("x"), mp_from(p), tc);
    } else if (fn == "Y") {
        p.require({"x"});
        v = y_exchange(p.i("N"), p.i("M"), p.c("x"), p.c("q"), p.c("p"), tc);
    } else if (fn == "fh") {
        p.require({"x"});
        v = f_h_function(p.c("x"), p.i("N"), p.i("M"), p.i("h"), p.c("q"), tc);
    } else if (fn == "mode-coeff") {
        p.require({"r"});
        long r = p.l("r");
        int rmax = int(std::max(1L, std::labs(r)));
        const std::string& tab = p.raw("table");
        ModeCoeffTable t;
        if (tab == "critical-k0")
            t = critical_k0_table(p.i("N"), p.c("q"), rmax);
        else if (tab == "sl2-sector")
            t = sl2_sector_table(p.i("k"), p.c("q"), rmax);
        else if (tab == "higher-spin-k0")
            t = higher_spin_k0_table(p.i("i"), p.i("j"), p.i("N"), p.c("q"),
                                     rmax);
        else if (tab == "h-limit")
            t = h_limit_table(p.i("N"), p.i("M"), p.i("h"), p.c("q"), rmax);
        else
            throw UsageError("unknown table '" + tab + "'");
        v = t.at(r);
    } else if (fn == "hs-f") {
        p.require({"x"});
        v = classical_higher_spin_f(p.i("i"), p.i("j"), p.c("x"), mp_from(p),
                                    tc);
    } else if (fn == "hs-y") {
        p.require({"x"});
        SurfacePoint sp = solve_surface(p.i("N"), p.i("M"), p.c("q"), p.c("p"));
        v = quantum_higher_spin_y(p.i("i"), p.i("j"), p.c("x"), sp, tc);
    } else if (fn == "q-number") {
        p.require({"r"});
        v = q_number(p.l("r"), p.c("q"));
    } else {
        throw UsageError("unknown function '" + fn + "'");
    }
    std::string fmt = p.raw("format");
    std::string text;
    if (fmt.empty() || fmt == "text") {
        text = format_complex(v, 15) + "\n";
    } else if (fmt == "csv") {
        char buf[96];
        std::snprintf(buf, sizeof buf, "re,im\n%.17g,%.17g\n", v.real(),
                      v.imag());
        text = buf;
    } else if (fmt == "json") {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "{\n  \"schema\": 1,\n  \"re\": %.17g,\n  \"im\": "
                      "%.17g\n}\n",
                      v.real(), v.imag());
        text = buf;
    } else {
        throw UsageError("unknown format '" + fmt + "'");
    }
    emit(text, p);
    return 0;
}

int cmd_verify(const std::string& suite, const Params& p) {
    static const std::vector<std::string> known = {
        "special", "rmatrix", "structure", "classical", "modes", "all"};
    if (std::find(known.begin(), known.end(), suite) == known.end())
        throw UsageError("unknown suite '" + suite + "'");
    SuiteConfig cfg;
    cfg.mp = mp_from(p);
    cfg.M = p.i("M");
    cfg.h = p.i("h");
    cfg.i = p.i("i");
    cfg.j = p.i("j");
    cfg.k = p.i("k");
    cfg.trunc = trunc_from(p);
    cfg.tol.abs = p.d("tol");
    cfg.tol.rel = p.d("tol");
    cfg.samples = p.i("samples");
    cfg.r_max = p.i("r-max");
    cfg.seed = std::uint64_t(p.l("seed"));
    if (cfg.samples < 1) throw UsageError("samples must be positive");
    if (cfg.M == 0) throw UsageError("M must be nonzero");

    std::vector<CheckReport> reports = run_suites(suite, cfg);
    std::string fmt = p.raw("format");
    if (fmt.empty()) fmt = "json";
    std::string text;
    if (fmt == "json") text = report_to_json(reports);
    else if (fmt == "csv") text = report_to_csv(reports);
    else if (fmt == "text") text = report_to_text(reports);
    else throw UsageError("unknown format '" + fmt + "'");
    emit(text, p);
    for (const auto& r : reports)
        if (!r.overall_pass) return 1;
    return 0;
}

int cmd_table(const std::string& name, const Params& p) {
    int rmax = p.i("r-max");
    if (rmax < 0) throw UsageError("r-max must be >= 0");
    ModeCoeffTable t;
    if (name == "critical-k0")
        t = critical_k0_table(p.i("N"), p.c("q"), rmax);
    else if (name == "sl2-sector")
        t = sl2_sector_table(p.i("k"), p.c("q"), rmax);
    else if (name == "higher-spin-k0")
        t = higher_spin_k0_table(p.i("i"), p.i("j"), p.i("N"), p.c("q"), rmax);
    else if (name == "h-limit")
        t = h_limit_table(p.i("N"), p.i("M"), p.i("h"), p.c("q"), rmax);
    else
        throw UsageError("unknown table '" + name + "'");

    std::string fmt = p.raw("format");
    if (fmt.empty()) fmt = "csv";
    std::ostringstream out;
    if (fmt == "csv") {
        out << "r,re,im\n";
        for (long r = -rmax; r <= rmax; ++r) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g\n", r,
                          t.at(r).real(), t.at(r).imag());
            out << buf;
        }
    } else if (fmt == "json") {
        out << "{\n  \"schema\": 1,\n  \"table\": \"" << name << "\",\n"
            << "  \"rows\": [\n";
        for (long r = -rmax; r <= rmax; ++r) {
            char buf[128];
            std::snprintf(buf, sizeof buf,
                          "    {\"r\": %ld, \"re\": %.17g, \"im\": %.17g}%s\n",
                          r, t.at(r).real(), t.at(r).imag(),
                          r == rmax ? "" : ",");
            out << buf;
        }
        out << "  ]\n}\n";
    } else if (fmt == "text") {
        for (long r = -rmax; r <= rmax; ++r) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "%4ld  %s\n", r,
                          format_complex(t.at(r), 15).c_str());
            out << buf;
        }
    } else {
        throw UsageError("unknown format '" + fmt + "'");
    }
    emit(out.str(), p);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    // accept bare key=value tokens as flag assignments
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        bool keyval = false;
        if (!a.empty() && a[0] != '-') {
            auto eq = a.find('=');
            if (eq != std::string::npos && eq > 0) {
                keyval = true;
                for (size_t k = 0; k < eq; ++k) {
                    char c = a[k];
                    if (!(std::isalnum(static_cast<unsigned char>(c)) ||
                          c == '-' || c == '_'))
                        keyval = false;
                }
            }
        }
        args.push_back(keyval ? "--" + a : a);
    }

    CLI::App app{"elliptic R-matrix and deformed W-algebra toolkit", "ellw"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    std::string eval_fn, verify_suite, table_name;
    Params pe, pv, pt;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one function");
    eval->add_option("function", eval_fn,
                     "theta | big-theta | tau | kappa-inv | T | f | F | Y | "
                     "fh | mode-coeff | hs-f | hs-y | q-number")
        ->required();
    add_keys(eval, pe);

    CLI::App* verify = app.add_subcommand("verify", "run a property suite");
    verify->add_option("suite", verify_suite,
                       "special | rmatrix | structure | classical | modes | all")
        ->required();
    add_keys(verify, pv);

    CLI::App* table = app.add_subcommand("table", "emit a coefficient table");
    table->add_option("name", table_name,
                      "critical-k0 | sl2-sector | higher-spin-k0 | h-limit")
        ->required();
    add_keys(table, pt);

    try {
        std::reverse(args.begin(), args.end());  // CLI11 vector order
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(eval_fn, pe);
        if (verify->parsed()) return cmd_verify(verify_suite, pv);
        if (table->parsed()) return cmd_table(table_name, pt);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const PoleError& e) {
        std::cerr << "pole error: " << e.what() << "\n";
        return 3;
    } catch (const TruncationError& e) {
        std::cerr << "truncation error: " << e.what() << "\n";
        return 3;
    } catch (const BranchError& e) {
        std::cerr << "branch error: " << e.what() << "\n";
        return 3;
    } catch (const SingularMatrixError& e) {
        std::cerr << "singular matrix: " << e.what() << "\n";
        return 3;
    }
}
