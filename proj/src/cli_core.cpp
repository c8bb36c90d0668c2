/*
 * Document construction for the command-line front end: the info, verify,
 * count and table commands, rendered as JSON, CSV or plain text.  JSON
 * uses a fixed key order and exact integers throughout, so serialization
 * is byte-deterministic; stderr carries progress lines, never data.
 */

#include "grs/cli.hpp"

#include "grs/exactlin.hpp"
#include "grs/hurwitz.hpp"
#include "grs/ktheory.hpp"
#include "grs/system.hpp"
#include "grs/weyl.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace grs {

const int kExitSuccess = 0;
const int kExitCheckFailed = 1;
const int kExitInvalidInput = 2;
const int kExitStateCap = 3;

namespace {

using nlohmann::ordered_json;

ordered_json json_triple(const std::array<int64_t, 3>& a) {
    return ordered_json::array({a[0], a[1], a[2]});
}

ordered_json json_vec(const IntVec& v) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(v[i]);
    return arr;
}

ordered_json json_mat(const IntMat& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.n(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.n(); ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

ordered_json json_rat(const Rat& r) {
    return ordered_json{{"num", r.num}, {"den", r.den}};
}

std::array<int64_t, 3> sorted_triple(const std::array<int64_t, 3>& a) {
    std::array<int64_t, 3> s = a;
    std::sort(s.begin(), s.end());
    return s;
}

std::string triple_text(const std::array<int64_t, 3>& a) {
    std::ostringstream os;
    os << "(" << a[0] << ", " << a[1] << ", " << a[2] << ")";
    return os.str();
}

std::string vec_text(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string mat_text(const IntMat& m) {
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j)
            width = std::max(width, std::to_string(m.at(i, j)).size());
    std::ostringstream os;
    for (std::size_t i = 0; i < m.n(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.n(); ++j) {
            std::string cell = std::to_string(m.at(i, j));
            if (j) os << " ";
            os << std::string(width - cell.size(), ' ') << cell;
        }
        os << "]\n";
    }
    return os.str();
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

/* Quote a CSV cell when it contains a comma, a quote or a newline. */
std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

/* Header fields shared by every per-system document. */
void add_system_summary(ordered_json& doc, const SystemDescriptor& sys,
                        const std::array<int64_t, 3>& a_input) {
    doc["a"] = json_triple(sys.a);
    doc["a_input"] = json_triple(a_input);
    doc["mu"] = static_cast<int64_t>(sys.mu);
    doc["chi"] = json_rat(sys.chi);
    doc["ell"] = sys.ell;
}

RunResult invalid_input(const std::string& command, const std::string& message,
                        OutputFormat format) {
    if (format == OutputFormat::Json) {
        ordered_json doc;
        doc["command"] = command;
        doc["error"] = message;
        return {kExitInvalidInput, dump_json(doc)};
    }
    if (format == OutputFormat::Csv)
        return {kExitInvalidInput, "error\n" + csv_cell(message) + "\n"};
    return {kExitInvalidInput, "error: " + message + "\n"};
}

std::vector<CheckReport> run_verify_suites(const SystemDescriptor& sys,
                                           uint64_t seed) {
    std::vector<std::function<CheckReport()>> suites = {
        [&] { return verify_euler_uniqueness(sys); },
        [&] { return verify_conjugation_identities(sys, seed); },
        [&] { return verify_power_identity(sys); },
        [&] { return verify_coxeter_action_table(sys); },
        [&] { return verify_artin_relations(sys); },
        [&] { return verify_dual_twist(sys); },
        [&] { return verify_spherical_class_identity(sys); },
        [&] { return verify_quiver_cross_check(sys); },
    };
    std::vector<CheckReport> reports;
    reports.reserve(suites.size());
    for (auto& run : suites) reports.push_back(run());
    return reports;
}

struct TableRow {
    std::array<int64_t, 3> a{};
    std::size_t mu = 0;
    Rat chi;
    bool overflow = false;   /* formula exceeds 64 bits */
    int64_t formula = 0;     /* valid unless overflow */
    bool counted = false;    /* BFS ran for this row */
    uint64_t e_count = 0;    /* valid when counted */
    bool match = false;      /* valid when counted */
};

} // namespace

RunResult cmd_info(const RunConfig& cfg) {
    const auto a = sorted_triple(cfg.a);
    SystemDescriptor sys;
    try {
        sys = build_system(a[0], a[1], a[2]);
    } catch (const NotAffineAde& e) {
        return invalid_input("info", e.what(), cfg.format);
    }

    const IntMat cartan = cartan_form(sys);
    const IntMat euler = euler_form_triangular(sys);
    const IntMat cox = coxeter_matrix(sys).matrix;
    const IntMat twist = twist_matrix(sys).matrix;
    const IntVec d = delta(sys);

    if (cfg.format == OutputFormat::Json) {
        ordered_json doc;
        doc["command"] = "info";
        add_system_summary(doc, sys, cfg.a);
        ordered_json names = ordered_json::array();
        for (const auto& v : sys.vertex_order) names.push_back(v.name());
        doc["vertex_order"] = names;
        doc["delta"] = json_vec(d);
        doc["cartan"] = json_mat(cartan);
        doc["euler"] = json_mat(euler);
        doc["coxeter"] = json_mat(cox);
        doc["twist"] = json_mat(twist);
        return {kExitSuccess, dump_json(doc)};
    }

    if (cfg.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "key,value\n";
        os << "a," << csv_cell(ordered_json(json_triple(sys.a)).dump()) << "\n";
        os << "a_input," << csv_cell(ordered_json(json_triple(cfg.a)).dump()) << "\n";
        os << "mu," << sys.mu << "\n";
        os << "chi_num," << sys.chi.num << "\n";
        os << "chi_den," << sys.chi.den << "\n";
        os << "ell," << sys.ell << "\n";
        std::string names;
        for (const auto& v : sys.vertex_order) {
            if (!names.empty()) names += " ";
            names += v.name();
        }
        os << "vertex_order," << csv_cell(names) << "\n";
        os << "delta," << csv_cell(ordered_json(json_vec(d)).dump()) << "\n";
        os << "cartan," << csv_cell(ordered_json(json_mat(cartan)).dump()) << "\n";
        os << "euler," << csv_cell(ordered_json(json_mat(euler)).dump()) << "\n";
        os << "coxeter," << csv_cell(ordered_json(json_mat(cox)).dump()) << "\n";
        os << "twist," << csv_cell(ordered_json(json_mat(twist)).dump()) << "\n";
        return {kExitSuccess, os.str()};
    }

    std::ostringstream os;
    os << "system " << triple_text(sys.a) << "\n";
    os << "input " << triple_text(cfg.a) << "\n";
    os << "mu " << sys.mu << "\n";
    os << "chi " << to_string(sys.chi) << "\n";
    os << "ell " << sys.ell << "\n";
    os << "vertex order";
    for (const auto& v : sys.vertex_order) os << " " << v.name();
    os << "\n";
    os << "delta " << vec_text(d) << "\n";
    os << "cartan\n" << mat_text(cartan);
    os << "euler\n" << mat_text(euler);
    os << "coxeter\n" << mat_text(cox);
    os << "twist\n" << mat_text(twist);
    return {kExitSuccess, os.str()};
}

RunResult cmd_verify(const RunConfig& cfg) {
    const auto a = sorted_triple(cfg.a);
    SystemDescriptor sys;
    try {
        sys = build_system(a[0], a[1], a[2]);
    } catch (const NotAffineAde& e) {
        return invalid_input("verify", e.what(), cfg.format);
    }

    std::cerr << "verifying " << triple_text(sys.a) << "\n";
    const std::vector<CheckReport> reports = run_verify_suites(sys, cfg.seed);
    bool all_pass = true;
    std::size_t checks = 0;
    std::size_t failures = 0;
    for (const auto& rep : reports) {
        checks += rep.checks.size();
        for (const auto& c : rep.checks)
            if (!c.pass) ++failures;
        all_pass = all_pass && rep.all_pass();
    }
    std::cerr << "ran " << checks << " checks, " << failures << " failed\n";
    const int exit_code = all_pass ? kExitSuccess : kExitCheckFailed;

    if (cfg.format == OutputFormat::Json) {
        ordered_json doc;
        doc["command"] = "verify";
        add_system_summary(doc, sys, cfg.a);
        doc["seed"] = cfg.seed;
        ordered_json suites = ordered_json::array();
        for (const auto& rep : reports) {
            ordered_json s;
            s["suite"] = rep.suite;
            s["pass"] = rep.all_pass();
            ordered_json cs = ordered_json::array();
            for (const auto& c : rep.checks) {
                ordered_json cj;
                cj["name"] = c.name;
                cj["pass"] = c.pass;
                if (!c.detail.empty()) cj["detail"] = c.detail;
                cs.push_back(cj);
            }
            s["checks"] = cs;
            suites.push_back(s);
        }
        doc["suites"] = suites;
        doc["all_pass"] = all_pass;
        return {exit_code, dump_json(doc)};
    }

    if (cfg.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "suite,check,pass,detail\n";
        for (const auto& rep : reports)
            for (const auto& c : rep.checks)
                os << csv_cell(rep.suite) << "," << csv_cell(c.name) << ","
                   << bool_text(c.pass) << "," << csv_cell(c.detail) << "\n";
        return {exit_code, os.str()};
    }

    std::ostringstream os;
    os << "system " << triple_text(sys.a) << "\n";
    os << "seed " << cfg.seed << "\n";
    for (const auto& rep : reports) {
        os << rep.suite << " " << (rep.all_pass() ? "pass" : "FAIL") << " ("
           << rep.checks.size() << " checks)\n";
        for (const auto& c : rep.checks)
            if (!c.pass) {
                os << "  " << c.name;
                if (!c.detail.empty()) os << ": " << c.detail;
                os << "\n";
            }
    }
    if (all_pass)
        os << "all " << checks << " checks passed\n";
    else
        os << failures << " of " << checks << " checks failed\n";
    return {exit_code, os.str()};
}

RunResult cmd_count(const RunConfig& cfg) {
    const auto a = sorted_triple(cfg.a);
    SystemDescriptor sys;
    try {
        sys = build_system(a[0], a[1], a[2]);
    } catch (const NotAffineAde& e) {
        return invalid_input("count", e.what(), cfg.format);
    }

    RootIndex idx(sys);
    OrbitCount orbit;
    try {
        std::cerr << "enumerating braid orbit for " << triple_text(sys.a) << "\n";
        orbit = enumerate_orbit(idx, cfg.state_cap);
        std::cerr << "found " << orbit.e_count << " classes\n";
    } catch (const OverflowError& e) {
        /* The closed formula does not fit in 64 bits, so the enumeration
         * target is unrepresentable; report it like a resource limit. */
        std::string msg = e.what();
        if (cfg.format == OutputFormat::Json) {
            ordered_json doc;
            doc["command"] = "count";
            add_system_summary(doc, sys, cfg.a);
            doc["error"] = msg;
            return {kExitStateCap, dump_json(doc)};
        }
        if (cfg.format == OutputFormat::Csv)
            return {kExitStateCap, "error\n" + csv_cell(msg) + "\n"};
        return {kExitStateCap, "error: " + msg + "\n"};
    }

    int exit_code = kExitSuccess;
    if (orbit.capped) exit_code = kExitStateCap;
    else if (!orbit.match) exit_code = kExitCheckFailed;

    if (cfg.format == OutputFormat::Json) {
        ordered_json doc;
        doc["command"] = "count";
        add_system_summary(doc, sys, cfg.a);
        doc["state_cap"] = cfg.state_cap;
        doc["formula_value"] = orbit.formula_value;
        doc["e_count"] = orbit.e_count;
        doc["states_explored"] = orbit.states_expanded;
        doc["match"] = orbit.match;
        doc["capped"] = orbit.capped;
        return {exit_code, dump_json(doc)};
    }

    if (cfg.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "a1,a2,a3,mu,chi_num,chi_den,state_cap,formula,ecount,"
              "states_explored,match,capped\n";
        os << sys.a[0] << "," << sys.a[1] << "," << sys.a[2] << "," << sys.mu
           << "," << sys.chi.num << "," << sys.chi.den << "," << cfg.state_cap
           << "," << orbit.formula_value << "," << orbit.e_count << ","
           << orbit.states_expanded << "," << bool_text(orbit.match) << ","
           << bool_text(orbit.capped) << "\n";
        return {exit_code, os.str()};
    }

    std::ostringstream os;
    os << "system " << triple_text(sys.a) << "\n";
    os << "state cap " << cfg.state_cap << "\n";
    os << "formula " << orbit.formula_value << "\n";
    os << "e_count " << orbit.e_count << "\n";
    os << "states explored " << orbit.states_expanded << "\n";
    os << "match " << bool_text(orbit.match) << "\n";
    os << "capped " << bool_text(orbit.capped) << "\n";
    return {exit_code, os.str()};
}

RunResult cmd_table(const RunConfig& cfg) {
    if (cfg.amax < 1 || cfg.amax > 12)
        return invalid_input("table", "amax must be between 1 and 12",
                             cfg.format);

    std::vector<TableRow> rows;
    for (int64_t a1 = 1; a1 <= cfg.amax; ++a1)
        for (int64_t a2 = a1; a2 <= cfg.amax; ++a2)
            for (int64_t a3 = a2; a3 <= cfg.amax; ++a3) {
                SystemDescriptor sys;
                try {
                    sys = build_system(a1, a2, a3);
                } catch (const NotAffineAde&) {
                    continue;
                }
                TableRow row;
                row.a = sys.a;
                row.mu = sys.mu;
                row.chi = sys.chi;
                try {
                    row.formula = formula_deg_ll(sys);
                } catch (const OverflowError&) {
                    row.overflow = true;
                }
                if (!row.overflow &&
                    static_cast<uint64_t>(row.formula) <= cfg.state_cap) {
                    std::cerr << "counting " << triple_text(sys.a)
                              << " (target " << row.formula << ")\n";
                    RootIndex idx(sys);
                    const OrbitCount orbit = enumerate_orbit(idx, cfg.state_cap);
                    row.counted = true;
                    row.e_count = orbit.e_count;
                    row.match = orbit.match;
                }
                rows.push_back(row);
            }

    if (cfg.format == OutputFormat::Json) {
        ordered_json doc;
        doc["command"] = "table";
        doc["amax"] = cfg.amax;
        doc["state_cap"] = cfg.state_cap;
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json r;
            r["a"] = json_triple(row.a);
            r["mu"] = static_cast<int64_t>(row.mu);
            r["chi"] = json_rat(row.chi);
            if (row.overflow) {
                r["overflow"] = true;
            } else {
                r["formula"] = row.formula;
                if (row.counted) {
                    r["e_count"] = row.e_count;
                    r["match"] = row.match;
                }
            }
            arr.push_back(r);
        }
        doc["rows"] = arr;
        return {kExitSuccess, dump_json(doc)};
    }

    if (cfg.format == OutputFormat::Csv) {
        std::ostringstream os;
        os << "a1,a2,a3,mu,chi_num,chi_den,formula,ecount,match\n";
        for (const auto& row : rows) {
            os << row.a[0] << "," << row.a[1] << "," << row.a[2] << ","
               << row.mu << "," << row.chi.num << "," << row.chi.den << ",";
            if (row.overflow) os << "overflow";
            else os << row.formula;
            os << ",";
            if (row.counted)
                os << row.e_count << "," << bool_text(row.match);
            else
                os << ",";
            os << "\n";
        }
        return {kExitSuccess, os.str()};
    }

    std::ostringstream os;
    os << "amax " << cfg.amax << ", state cap " << cfg.state_cap << "\n";
    for (const auto& row : rows) {
        os << triple_text(row.a) << " mu=" << row.mu
           << " chi=" << to_string(row.chi) << " formula=";
        if (row.overflow) os << "overflow";
        else os << row.formula;
        if (row.counted)
            os << " ecount=" << row.e_count << " match=" << bool_text(row.match);
        os << "\n";
    }
    return {kExitSuccess, os.str()};
}

} // namespace grs
