#include "gring/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gring/structure.hpp"
#include "gring/suites.hpp"

namespace gring {

namespace {

// elements serialize as {degree-tuple: coefficient-string}
nlohmann::json element_json(const RingElement& f) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [m, c] : f.terms()) obj[m.str().substr(1)] = c.str();
    return obj;
}

std::string describe(const std::string& name, const RingElement& f) {
    return name + " = " + print_element(f) + " over " + f.ring()->name() + "[" +
           f.monoid()->str() + "]";
}

const RingElement& named_element(const SessionDeclaration& session, const std::string& name) {
    const RingElement* f = session.find_element(name);
    if (!f) fail(errc::unknown_name, "no element named '" + name + "'");
    return *f;
}

const MonoidPtr& named_monoid(const SessionDeclaration& session, const std::string& name) {
    const MonoidPtr* m = session.find_monoid(name);
    if (!m) fail(errc::unknown_name, "no monoid named '" + name + "'");
    return *m;
}

struct ArgScan {
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> flags;

    const std::string* flag(const std::string& name) const {
        for (const auto& [k, v] : flags)
            if (k == name) return &v;
        return nullptr;
    }
};

ArgScan scan_args(const std::vector<std::string>& args) {
    ArgScan out;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i].rfind("--", 0) == 0) {
            std::string key = args[i].substr(2);
            if (key == "brute") {  // boolean flag
                out.flags.emplace_back(key, "1");
                continue;
            }
            if (i + 1 >= args.size())
                fail(errc::usage_error, "flag --" + key + " needs a value");
            out.flags.emplace_back(key, args[++i]);
        } else {
            out.positional.push_back(args[i]);
        }
    }
    return out;
}

long parse_long(const std::string& s) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        fail(errc::usage_error, "expected an integer, got '" + s + "'");
    }
}

std::pair<long, long> parse_window_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) fail(errc::usage_error, "window must look like lo..hi");
    long lo = parse_long(s.substr(0, dots));
    long hi = parse_long(s.substr(dots + 2));
    if (hi < lo) fail(errc::usage_error, "window must satisfy lo <= hi");
    return {lo, hi};
}

UnitCertificate unit_certificate_for(const RingElement& f) {
    return f.monoid()->is_group() ? check_unit_characterization(f) : is_unit_monoid_ring(f);
}

}  // namespace

CommandOutcome run_command(const std::vector<std::string>& args, const SessionDeclaration& session,
                           const CliOptions& options) {
    CommandOutcome out;
    Report& report = out.report;
    report.seed = options.seed.value_or(0);
    const auto started = std::chrono::steady_clock::now();

    auto finish = [&](int code) {
        if (options.timing) {
            report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - started)
                                    .count();
        }
        out.exit_code = code;
        return out;
    };

    if (args.empty()) {
        report.command = "(none)";
        report.verdict = "error: no command given";
        return finish(2);
    }
    report.command = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) report.command += " " + args[i];

    try {
        ArgScan scan = scan_args(args);
        const std::string& cmd = args[0];

        if (cmd == "eval") {
            if (scan.positional.empty()) fail(errc::usage_error, "eval needs an expression");
            std::string text;
            for (const auto& p : scan.positional) {
                if (!text.empty()) text += " ";
                text += p;
            }
            RingElement value = evaluate_expression(text, session);
            report.instance = text;
            report.verdict = print_element(value);
            report.witnesses["value"] = element_json(value);
            return finish(0);
        }

        if (cmd == "is-unit" || cmd == "invert") {
            if (scan.positional.size() != 1) fail(errc::usage_error, cmd + " needs one element name");
            const RingElement& f = named_element(session, scan.positional[0]);
            report.instance = describe(scan.positional[0], f);
            UnitCertificate cert = unit_certificate_for(f);
            if (cmd == "invert" && !cert.is_unit)
                fail(errc::not_a_unit, scan.positional[0] + " is not a unit: " + cert.detail);
            if (cert.is_unit) {
                report.verdict = cmd == "invert" ? print_element(*cert.inverse) : "Unit";
                report.witnesses["inverse"] = element_json(*cert.inverse);
                RingElement product = f * *cert.inverse;
                report.witnesses["product"] = element_json(product);
                report.witnesses["inverse_text"] = print_element(*cert.inverse);
            } else {
                report.verdict =
                    std::string("NotUnit(") + UnitCertificate::reason_name(cert.reason) + ")";
                report.witnesses["detail"] = cert.detail;
                if (cert.failing_pair) {
                    report.witnesses["pair"] = {cert.failing_pair->first.str(),
                                                cert.failing_pair->second.str()};
                }
            }
            return finish(0);
        }

        if (cmd == "is-nilpotent") {
            if (scan.positional.size() != 1) fail(errc::usage_error, "is-nilpotent needs one name");
            const RingElement& f = named_element(session, scan.positional[0]);
            report.instance = describe(scan.positional[0], f);
            unsigned bound = 64;
            if (const std::string* b = scan.flag("bound")) bound = static_cast<unsigned>(parse_long(*b));
            bool brute = scan.flag("brute") != nullptr;
            if (!brute) {
                try {
                    bool verdict = is_nilpotent(f);
                    report.verdict = verdict ? "Nilpotent" : "NotNilpotent";
                    report.witnesses["route"] = "coefficientwise";
                    return finish(0);
                } catch (const Error& e) {
                    if (e.code() != errc::not_torsion_free && e.code() != errc::unsupported) throw;
                    report.witnesses["note"] = std::string(e.what()) + "; fell back to brute force";
                }
            }
            BoundedNilpotence bn = is_nilpotent_bruteforce(f, bound);
            report.verdict = bn.nilpotent ? "Nilpotent(Yes(" + std::to_string(bn.value) + "))"
                                          : "NotNilpotent(NoUpTo(" + std::to_string(bn.value) + "))";
            report.witnesses["route"] = "bruteforce";
            return finish(0);
        }

        if (cmd == "is-zero-divisor") {
            if (scan.positional.size() != 1) fail(errc::usage_error, "is-zero-divisor needs one name");
            const RingElement& f = named_element(session, scan.positional[0]);
            report.instance = describe(scan.positional[0], f);
            ZeroDivisorResult zd = is_zero_divisor(f);
            if (zd.is_zero_divisor) {
                report.verdict = "Yes(" + zd.witness->str() + ")";
                report.witnesses["witness"] = zd.witness->str();
            } else {
                report.verdict = "No";
            }
            return finish(0);
        }

        if (cmd == "annihilator") {
            if (scan.positional.size() != 1) fail(errc::usage_error, "annihilator needs one name");
            const RingElement& f = named_element(session, scan.positional[0]);
            report.instance = describe(scan.positional[0], f);
            const std::string* w = scan.flag("window");
            if (!w) fail(errc::usage_error, "annihilator needs --window lo..hi");
            auto [lo, hi] = parse_window_range(*w);
            SupportWindow window = SupportWindow::range(f.monoid(), lo, hi);
            AnnihilatorOptions opts;
            if (options.budget) opts.coefficient_degree_bound = *options.budget;
            if (const std::string* d = scan.flag("coeff-degree"))
                opts.coefficient_degree_bound = static_cast<unsigned>(parse_long(*d));
            std::vector<RingElement> basis = annihilator_in_window(f, window, opts);
            GradednessResult graded = annihilator_is_graded_in_window(f, window, opts);
            report.verdict = basis.empty() ? "TrivialKernel"
                                           : (graded.graded ? "Graded" : "NotGraded");
            nlohmann::json list = nlohmann::json::array();
            for (const auto& h : basis) list.push_back(element_json(h));
            report.witnesses["kernel"] = list;
            report.witnesses["graded"] = graded.graded;
            if (graded.failing_component)
                report.witnesses["failing_component"] = element_json(*graded.failing_component);
            return finish(0);
        }

        if (cmd == "shrink") {
            if (scan.positional.size() != 1) fail(errc::usage_error, "shrink needs a seed element");
            const RingElement& g = named_element(session, scan.positional[0]);
            const std::string* ideal_arg = scan.flag("ideal");
            if (!ideal_arg) fail(errc::usage_error, "shrink needs --ideal name[,name...]");
            IdealSpec ideal;
            std::stringstream ss(*ideal_arg);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) ideal.generators.push_back(named_element(session, item));
            report.instance = describe(scan.positional[0], g) + " against (" + *ideal_arg + ")";
            RingElement h = shrink_to_homogeneous_annihilator(g, ideal);
            report.verdict = print_element(h);
            report.witnesses["homogeneous_annihilator"] = element_json(h);
            report.witnesses["support_size"] = h.terms().size();
            return finish(0);
        }

        if (cmd == "is-idempotent") {
            if (scan.positional.size() != 1) fail(errc::usage_error, "is-idempotent needs one name");
            const RingElement& f = named_element(session, scan.positional[0]);
            report.instance = describe(scan.positional[0], f);
            bool idem = is_idempotent(f);
            report.verdict = idem ? "Idempotent" : "NotIdempotent";
            if (idem)
                report.witnesses["support_in_quasi_torsion"] = idempotent_support_in_quasi_torsion(f);
            return finish(0);
        }

        if (cmd == "grothendieck") {
            if (scan.positional.size() != 1) fail(errc::usage_error, "grothendieck needs a monoid name");
            const MonoidPtr& m = named_monoid(session, scan.positional[0]);
            report.instance = scan.positional[0] + " = " + m->str();
            GrothendieckGroup g = grothendieck_group(m);
            report.verdict = g.group.str();
            report.witnesses["free_rank"] = g.group.free_rank;
            nlohmann::json factors = nlohmann::json::array();
            for (const auto& n : g.group.invariant_factors) factors.push_back(n.get_str());
            report.witnesses["invariant_factors"] = factors;
            report.witnesses["cancellative"] = m->is_cancellative();
            TorsionSubgroup torsion = torsion_subgroup(g.group);
            report.witnesses["torsion_subgroup"] = torsion.subgroup.str();
            return finish(0);
        }

        if (cmd == "quasi-zero") {
            if (scan.positional.size() != 1) fail(errc::usage_error, "quasi-zero needs a monoid name");
            const MonoidPtr& m = named_monoid(session, scan.positional[0]);
            report.instance = scan.positional[0] + " = " + m->str();
            std::vector<MonoidElement> members = quasi_zero_submonoid(m);
            nlohmann::json list = nlohmann::json::array();
            for (const auto& x : members) list.push_back(x.str());
            report.verdict = std::to_string(members.size()) + " elements";
            report.witnesses["members"] = list;
            return finish(0);
        }

        if (cmd == "snf") {
            const std::string* matrix_arg = scan.flag("matrix");
            if (!matrix_arg) fail(errc::usage_error, "snf needs --matrix [[a,b],[c,d]]");
            nlohmann::json parsed;
            try {
                parsed = nlohmann::json::parse(*matrix_arg);
            } catch (const nlohmann::json::exception&) {
                fail(errc::usage_error, "matrix must be a JSON array of integer rows");
            }
            IntMat a;
            for (const auto& row : parsed) {
                IntVec r;
                for (const auto& v : row) r.emplace_back(v.get<long>());
                a.push_back(std::move(r));
            }
            if (a.empty()) fail(errc::usage_error, "matrix must be nonempty");
            report.instance = *matrix_arg;
            SmithResult snf = smith_normal_form(a);
            nlohmann::json diag = nlohmann::json::array();
            for (const auto& d : snf.diagonal()) diag.push_back(d.get_str());
            report.verdict = "rank " + std::to_string(snf.rank);
            report.witnesses["diagonal"] = diag;
            report.witnesses["uav_equals_d"] = mat_mul(mat_mul(snf.U, a), snf.V) == snf.D;
            report.witnesses["det_u"] = determinant(snf.U).get_str();
            report.witnesses["det_v"] = determinant(snf.V).get_str();
            return finish(0);
        }

        if (cmd == "suite") {
            if (scan.positional.size() != 1) fail(errc::usage_error, "suite needs a suite name");
            if (!options.seed)
                fail(errc::usage_error, "randomized suites require an explicit --seed");
            unsigned trials = options.trials;
            if (const std::string* t = scan.flag("trials"))
                trials = static_cast<unsigned>(parse_long(*t));
            long modulus = 0;
            if (const std::string* m = scan.flag("n")) modulus = parse_long(*m);
            SuiteResult result = run_suite(scan.positional[0], trials, *options.seed, modulus);
            report.instance = "suite " + result.name + ", " + std::to_string(result.trials) +
                              " trials, seed " + std::to_string(result.seed);
            report.verdict = result.pass()
                                 ? "pass (" + std::to_string(result.trials) + " trials)"
                                 : "fail (" + std::to_string(result.failures) + " of " +
                                       std::to_string(result.trials) + " trials)";
            report.witnesses["trials"] = result.trials;
            report.witnesses["failures"] = result.failures;
            nlohmann::json notes = nlohmann::json::array();
            for (const auto& n : result.notes) notes.push_back(n);
            report.witnesses["notes"] = notes;
            return finish(result.pass() ? 0 : 1);
        }

        fail(errc::usage_error, "unknown command '" + cmd + "'");
    } catch (const Error& e) {
        report.verdict = std::string("error: ") + e.what();
        report.witnesses["error_code"] = errc_name(e.code());
        return finish(e.code() == errc::usage_error || e.code() == errc::unknown_name ||
                              e.code() == errc::syntax_error
                          ? 2
                          : 1);
    }
}

int run_cli(const std::vector<std::string>& args, std::string* captured_output) {
    CliOptions options;
    std::vector<std::string> session_files;
    std::optional<std::string> json_path;
    std::vector<std::string> command;

    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto next = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size()) {
                fail(errc::usage_error, std::string(flag) + " needs a value");
            }
            return args[++i];
        };
        try {
            if (a == "--session")
                session_files.push_back(next("--session"));
            else if (a == "--json")
                json_path = next("--json");
            else if (a == "--seed")
                options.seed = std::stoull(next("--seed"));
            else if (a == "--trials")
                options.trials = static_cast<unsigned>(std::stoul(next("--trials")));
            else if (a == "--budget")
                options.budget = static_cast<unsigned>(std::stoul(next("--budget")));
            else if (a == "--timing")
                options.timing = true;
            else
                command.push_back(a);
        } catch (const Error& e) {
            std::string msg = std::string("error: ") + e.what() + "\n";
            if (captured_output)
                *captured_output += msg;
            else
                std::cerr << msg;
            return 2;
        } catch (const std::exception& e) {
            std::string msg = std::string("error: bad flag value: ") + e.what() + "\n";
            if (captured_output)
                *captured_output += msg;
            else
                std::cerr << msg;
            return 2;
        }
    }

    SessionDeclaration session;
    std::string source;
    for (const std::string& path : session_files) {
        std::ifstream in(path);
        if (!in) {
            std::string msg = "error: cannot open session file " + path + "\n";
            if (captured_output)
                *captured_output += msg;
            else
                std::cerr << msg;
            return 2;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        source += buffer.str();
        source += "\n";
    }
    try {
        if (!source.empty()) session = parse_session(source);
    } catch (const Error& e) {
        std::string msg = std::string("error: ") + e.what() + "\n";
        if (captured_output)
            *captured_output += msg;
        else
            std::cerr << msg;
        return 2;
    }

    CommandOutcome outcome = run_command(command, session, options);
    std::string text = outcome.report.text();
    std::string json_text = outcome.report.json_text();
    if (captured_output) {
        *captured_output += text;
        if (json_path && *json_path == "-") *captured_output += json_text;
    } else {
        std::cout << text;
        if (json_path) {
            if (*json_path == "-") {
                std::cout << json_text;
            } else {
                std::ofstream out(*json_path);
                out << json_text;
            }
        }
    }
    if (captured_output && json_path && *json_path != "-") {
        std::ofstream out(*json_path);
        out << json_text;
    }
    return outcome.exit_code;
}

}  // namespace gring
