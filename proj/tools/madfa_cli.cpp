// madfa — exact counting, enumeration and conversion for acyclic automata
// and generalized parking functions.
//
// Verbs: count | table | enumerate | zeta | verify.
// Exit codes: 0 success, 1 verification failure, 2 config error,
//             3 parse/validation error, 4 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "madfa/madfa.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_config = 2;
constexpr int exit_parse = 3;
constexpr int exit_budget = 4;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// phi spec: either the quadruple "a,k,t,c" or a family name such as
// "m", "m^2", "2m^k", "2m^k-1", "2(m+t)^k", "2(m+t)^k-t-1"; a symbolic k or t
// resolves through -k / -t.
madfa::WeightFunction parse_phi(const std::string& spec, std::optional<int> k_flag,
                                std::optional<int> t_flag) {
    static const std::regex quad(R"(^(-?\d+),(-?\d+),(-?\d+),(-?\d+)$)");
    static const std::regex family(
        R"(^(\d*)(m|\(m\+(t|\d+)\))(\^(k|\d+))?(-t-1|-(\d+))?$)");
    std::smatch m;
    if (std::regex_match(spec, m, quad)) {
        try {
            return madfa::WeightFunction::power(std::stoll(m[1]), std::stoi(m[2]),
                                                std::stoll(m[3]), std::stoll(m[4]));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("invalid phi: ") + e.what());
        }
    }
    if (!std::regex_match(spec, m, family))
        throw ConfigError("cannot parse phi spec '" + spec + "'");
    const std::int64_t a = m[1].str().empty() ? 1 : std::stoll(m[1]);
    std::int64_t t = 0;
    if (m[3].matched) {
        if (m[3].str() == "t") {
            if (!t_flag) throw ConfigError("phi spec uses symbolic t; pass -t");
            t = *t_flag;
        } else {
            t = std::stoll(m[3]);
        }
    }
    int k = 1;
    if (m[5].matched) {
        if (m[5].str() == "k") {
            if (!k_flag) throw ConfigError("phi spec uses symbolic k; pass -k");
            k = *k_flag;
        } else {
            k = std::stoi(m[5]);
        }
    }
    std::int64_t c = 0;
    if (m[6].matched) c = m[6].str() == "-t-1" ? -t - 1 : -std::stoll(m[7]);
    try {
        return madfa::WeightFunction::power(a, k, t, c);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid phi: ") + e.what());
    }
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file " + path);
    out << content;
}

std::int64_t env_budget() {
    if (const char* env = std::getenv("MADFA_BUDGET")) return std::atoll(env);
    return madfa::default_budget;
}

madfa::ConstraintSet load_constraints(const std::string& path, int k) {
    auto j = madfa::ordered_json::parse(read_input(path));
    std::vector<madfa::Constraint> items;
    for (const auto& e : j) {
        madfa::Constraint c;
        c.accepting_status = e.at("accepting").get<bool>();
        for (const auto& cell : e.at("nu")) {
            const std::string s = cell.get<std::string>();
            if (s == "@")
                c.nu.push_back(madfa::absorbing);
            else if (!s.empty() && s[0] == 'T')
                c.nu.push_back(std::stoi(s.substr(1)));
            else
                c.nu.push_back(std::stoi(s));
        }
        if (static_cast<int>(c.nu.size()) != k)
            throw std::invalid_argument("constraint arity does not match k");
        items.push_back(std::move(c));
    }
    return madfa::make_constraint_set(std::move(items));
}

int run(int argc, char** argv) {
    CLI::App app{"exact enumeration of minimal acyclic DFAs and generalized parking functions"};
    app.require_subcommand(1);

    std::optional<int> k_flag, t_flag, n_flag;
    std::string phi_spec, format, out_path, in_path;
    int k_max = 2, n_max = 3, t_max = 1;
    std::int64_t budget = env_budget();

    // count
    auto* count = app.add_subcommand("count", "print one exact count");
    std::string count_what;
    count->add_option("what", count_what, "pf | simple-pf | d | e | adfa | madfa")->required();
    count->add_option("-k", k_flag, "alphabet size");
    count->add_option("-t", t_flag, "extra absorbing states");
    count->add_option("-n", n_flag, "number of labels/states")->required();
    count->add_option("--phi", phi_spec, "weight function (family name or a,k,t,c)");

    // table
    auto* table = app.add_subcommand("table", "emit a normalized count table");
    std::string table_kind;
    table->add_option("kind", table_kind, "a | b | c | f | s | d | e | adfa | madfa")->required();
    table->add_option("--k-max", k_max, "largest alphabet size")->check(CLI::PositiveNumber);
    table->add_option("--n-max", n_max, "largest n");
    table->add_option("-t", t_flag, "extra absorbing states (kinds d, e)");
    table->add_option("--format", format, "csv | json (default csv)");
    table->add_option("--out", out_path, "output path (default stdout)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list structures one per line");
    std::string enum_what;
    enumerate->add_option("what", enum_what, "pf | simple-pf | ni-adfa")->required();
    enumerate->add_option("-k", k_flag, "alphabet size");
    enumerate->add_option("-t", t_flag, "extra absorbing states");
    enumerate->add_option("-n", n_flag, "number of labels/states")->required();
    enumerate->add_option("--phi", phi_spec, "weight function for pf kinds");
    enumerate->add_option("--budget", budget, "candidate budget for automata");
    enumerate->add_option("--out", out_path, "output path (default stdout)");

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "map a parking function to an automaton (or back)");
    bool invert = false;
    std::string extras_spec, constraints_path;
    zeta_cmd->add_option("-k", k_flag, "alphabet size")->required();
    zeta_cmd->add_option("--in", in_path, "input path (default stdin)");
    zeta_cmd->add_option("--out", out_path, "output path (default stdout)");
    zeta_cmd->add_option("--format", format, "json | dot (forward), text | json (inverse)");
    zeta_cmd->add_flag("--invert", invert, "map an automaton file back to a parking function");
    zeta_cmd->add_option("--extras", extras_spec, "comma-separated extra labels (extended map)");
    zeta_cmd->add_option("--constraints", constraints_path, "constraint set JSON (extended map)");

    // verify
    auto* verify = app.add_subcommand("verify", "run the brute-force oracle");
    bool corrupt = false;
    verify->add_option("--k-max", k_max, "largest alphabet size");
    verify->add_option("--n-max", n_max, "largest state/label count");
    verify->add_option("--t-max", t_max, "largest extra-absorbing count");
    verify->add_option("--budget", budget, "candidate budget per enumeration");
    verify->add_option("--format", format, "text | json (default text)");
    verify->add_flag("--corrupt-check", corrupt, "inject a failing check (negative control)")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return exit_config;
    }

    if (count->parsed()) {
        const int n = *n_flag;
        if (n < 0) throw ConfigError("-n must be >= 0");
        if (k_flag && *k_flag < 1) throw ConfigError("-k must be >= 1");
        if (t_flag && *t_flag < 0) throw ConfigError("-t must be >= 0");
        if ((count_what == "adfa" || count_what == "madfa") && n < 1)
            throw ConfigError("count " + count_what + " requires -n >= 1");
        madfa::BigCount v;
        if (count_what == "pf" || count_what == "simple-pf") {
            if (phi_spec.empty()) throw ConfigError("count " + count_what + " requires --phi");
            auto phi = parse_phi(phi_spec, k_flag, t_flag);
            v = count_what == "pf" ? madfa::count_pf(phi, n) : madfa::count_simple_pf(phi, n);
        } else if (count_what == "d") {
            if (!k_flag) throw ConfigError("count d requires -k");
            v = madfa::count_transition_functions(*k_flag, t_flag.value_or(0), n);
        } else if (count_what == "e") {
            if (!k_flag) throw ConfigError("count e requires -k");
            v = madfa::count_extended_ni(*k_flag, t_flag.value_or(0), n);
        } else if (count_what == "adfa") {
            if (!k_flag) throw ConfigError("count adfa requires -k");
            v = madfa::count_adfa(*k_flag, n);
        } else if (count_what == "madfa") {
            if (!k_flag) throw ConfigError("count madfa requires -k");
            v = madfa::count_madfa(*k_flag, n);
        } else {
            throw ConfigError("unknown count kind '" + count_what + "'");
        }
        std::cout << v.str() << "\n";
        return exit_ok;
    }

    if (table->parsed()) {
        std::string kind = table_kind;
        if (kind == "a" || kind == "b" || kind == "c") kind = "table-" + kind;
        else if (kind == "adfa") kind = "a";
        else if (kind == "madfa") kind = "m";
        madfa::CountTable t;
        try {
            t = madfa::emit_table(kind, k_max, n_max, t_flag.value_or(0));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        write_output(out_path, format == "json" ? madfa::to_json(t).dump(2) + "\n" : madfa::to_csv(t));
        return exit_ok;
    }

    if (enumerate->parsed()) {
        const int n = *n_flag;
        if (n < 0) throw ConfigError("-n must be >= 0");
        std::ostringstream lines;
        madfa::BigCount total = 0;
        if (enum_what == "pf" || enum_what == "simple-pf") {
            if (phi_spec.empty()) throw ConfigError("enumerate " + enum_what + " requires --phi");
            auto phi = parse_phi(phi_spec, k_flag, t_flag);
            const madfa::BigCount expected = enum_what == "pf" ? madfa::count_pf(phi, n)
                                                               : madfa::count_simple_pf(phi, n);
            if (expected > budget)
                throw madfa::BudgetExceeded("enumerate: " + expected.str() +
                                            " structures exceed budget " + std::to_string(budget));
            auto emit = [&](const madfa::ParkingFunction& pf) {
                lines << madfa::to_text(pf) << "\n";
                ++total;
            };
            if (enum_what == "pf")
                madfa::for_each_pf(phi, n, emit);
            else
                madfa::for_each_simple_pf(phi, n, emit);
        } else if (enum_what == "ni-adfa") {
            if (!k_flag) throw ConfigError("enumerate ni-adfa requires -k");
            madfa::for_each_ni_automaton(*k_flag, t_flag.value_or(0), n, budget,
                                         [&](const madfa::ExtendedNiAutomaton& a) {
                                             lines << madfa::to_json(a).dump() << "\n";
                                             ++total;
                                         });
        } else {
            throw ConfigError("unknown enumerate kind '" + enum_what + "'");
        }
        write_output(out_path, lines.str());
        std::cerr << total.str() << "\n";
        return exit_ok;
    }

    if (zeta_cmd->parsed()) {
        const int k = *k_flag;
        std::vector<madfa::Label> extras;
        if (!extras_spec.empty()) {
            std::stringstream ss(extras_spec);
            std::string item;
            while (std::getline(ss, item, ',')) extras.push_back(std::stoi(item));
            std::sort(extras.begin(), extras.end());
        }
        std::optional<madfa::ConstraintSet> constraints;
        if (!constraints_path.empty()) constraints = load_constraints(constraints_path, k);
        if (!extras.empty() && !constraints)
            throw ConfigError("--extras requires --constraints");

        const std::string input = read_input(in_path);
        if (!invert) {
            auto slots = input.find('[') != std::string::npos
                             ? madfa::pf_slots_from_json(madfa::ordered_json::parse(input))
                             : madfa::parse_pf_text(input);
            const auto t = static_cast<std::int64_t>(extras.size());
            auto phi = constraints ? madfa::phi_constrained(k, t) : madfa::phi_2mk(k, t);
            auto pf = madfa::make_parking_function(std::move(slots), phi);
            auto aut = constraints ? madfa::zeta_extended(pf, k, extras, *constraints)
                                   : madfa::zeta(pf, k);
            write_output(out_path, format == "dot" ? madfa::to_dot(aut)
                                                   : madfa::to_json(aut).dump(2) + "\n");
        } else {
            auto aut = madfa::automaton_from_json(madfa::ordered_json::parse(input));
            auto pf = constraints ? madfa::zeta_extended_inverse(aut, k, *constraints)
                                  : madfa::zeta_inverse(aut, k);
            write_output(out_path, format == "json" ? madfa::to_json(pf).dump() + "\n"
                                                    : madfa::to_text(pf) + "\n");
        }
        return exit_ok;
    }

    if (verify->parsed()) {
        madfa::OracleScope scope;
        scope.k_max = k_max;
        scope.n_max = n_max;
        scope.t_max = t_max;
        scope.budget = budget;
        scope.corrupt_check = corrupt;
        auto report = madfa::verify_all(scope);
        write_output(out_path,
                     format == "json" ? madfa::to_json(report).dump(2) + "\n" : madfa::to_text(report));
        return report.all_pass() ? exit_ok : exit_verify_failed;
    }

    return exit_config;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const madfa::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
}
