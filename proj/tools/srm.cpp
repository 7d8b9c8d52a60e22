// srm: spectral-radius and rainbow-matching toolkit CLI.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <srm/srm.hpp>

namespace {

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

srm::Graph load_graph(const std::string& path) { return srm::parse_graph_auto(read_input(path)); }

// precedence: --tol flag, then SRM_TOL, then the built-in default
double resolve_tol(bool flag_given, double flag_value) {
    if (flag_given) {
        if (!(flag_value > 0.0)) throw std::invalid_argument("--tol must be positive");
        return flag_value;
    }
    if (const char* env = std::getenv("SRM_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0.0))
            throw std::invalid_argument("SRM_TOL must be a positive real");
        return v;
    }
    return srm::kDefaultTol;
}

struct VerifyArgs {
    int n = 0;
    int m = 0;
    bool exhaustive = false;
    std::uint64_t sample_count = 0;
    bool sampled = false;
    std::uint64_t seed = 0;
    double margin = srm::kDefaultMargin;
    std::uint64_t budget = srm::kDefaultBudget;
    int threads = 1;
    double tol = srm::kDefaultTol;
    bool tol_given = false;
};

void add_verify_flags(CLI::App* cmd, VerifyArgs& a) {
    cmd->add_option("--n", a.n, "number of vertices")->required();
    cmd->add_option("--m", a.m, "matching-number parameter")->required();
    auto* ex = cmd->add_flag("--exhaustive", a.exhaustive, "sweep the whole instance space");
    auto* sa = cmd->add_option("--sample", a.sample_count, "number of sampled instances")
                   ->check(CLI::PositiveNumber)
                   ->each([&a](const std::string&) { a.sampled = true; });
    ex->excludes(sa);
    cmd->add_option("--seed", a.seed, "sampling seed");
    cmd->add_option("--margin", a.margin, "spectral comparison slack");
    cmd->add_option("--budget", a.budget, "instance-count cap for exhaustive sweeps");
    cmd->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--tol", a.tol, "eigensolver tolerance")
        ->each([&a](const std::string&) { a.tol_given = true; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral-radius and rainbow-matching toolkit"};
    app.require_subcommand(1);

    // construct
    int c_n = 0, c_m = 0, c_i = 0;
    std::string c_format = "g6";
    auto* construct = app.add_subcommand("construct", "build an extremal graph");
    construct->add_option("--n", c_n)->required();
    construct->add_option("--m", c_m)->required();
    construct->add_option("--i", c_i)->required();
    construct->add_option("--format", c_format)->check(CLI::IsMember({"g6", "edges"}));

    // rho
    std::string r_file;
    double r_tol = srm::kDefaultTol;
    bool r_tol_given = false;
    std::string r_output = "text";
    auto* rho = app.add_subcommand("rho", "spectral radius of the input graph");
    rho->add_option("file", r_file, "graph file (default stdin)");
    rho->add_option("--tol", r_tol)->each([&](const std::string&) { r_tol_given = true; });
    rho->add_option("--output", r_output)->check(CLI::IsMember({"text", "json"}));

    // shift
    std::string s_file;
    int s_x = 0, s_y = 0;
    bool s_full = false, s_trace = false;
    auto* shift = app.add_subcommand("shift", "apply compressing shifts");
    shift->add_option("file", s_file, "graph file (default stdin)");
    auto* sx = shift->add_option("--x", s_x, "target vertex");
    auto* sy = shift->add_option("--y", s_y, "source vertex");
    auto* sf = shift->add_flag("--full", s_full, "shift to a fixed point");
    shift->add_flag("--trace", s_trace, "emit one JSON line per applied shift");
    sx->needs(sy);
    sy->needs(sx);
    sf->excludes(sx);

    // nu
    std::string n_file;
    auto* nu = app.add_subcommand("nu", "maximum matching size and witness");
    nu->add_option("file", n_file, "graph file (default stdin)");

    // rainbow
    std::vector<std::string> f_files;
    auto* rainbow = app.add_subcommand("rainbow", "rainbow matching across a family");
    rainbow->add_option("--family", f_files, "member graph files")->required()->expected(-1);

    // verify
    auto* verify = app.add_subcommand("verify", "bound sweeps emitting JSON-lines certificates");
    verify->require_subcommand(1);
    VerifyArgs va;
    const char* kinds[] = {"t11", "t12", "t13", "rigidity"};
    for (const char* k : kinds) add_verify_flags(verify->add_subcommand(k), va);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*construct) {
            const srm::Graph g = srm::construct_extremal({c_n, c_m, c_i});
            if (c_format == "g6") std::cout << srm::graph6_encode(g) << "\n";
            else std::cout << srm::edge_list_encode(g);
            return 0;
        }
        if (*rho) {
            const srm::Graph g = load_graph(r_file);
            const srm::SpectralResult s = srm::spectral_radius(g, resolve_tol(r_tol_given, r_tol));
            if (r_output == "json") {
                srm::ordered_json j{{"rho", s.rho}, {"residual", s.residual},
                                    {"iterations", s.iterations}};
                std::cout << j.dump() << "\n";
            } else {
                std::printf("rho=%.17g\nresidual=%.17g\niterations=%llu\n", s.rho, s.residual,
                            static_cast<unsigned long long>(s.iterations));
            }
            return 0;
        }
        if (*shift) {
            if (!s_full && sx->count() == 0)
                throw std::invalid_argument("shift: need --x/--y or --full");
            const srm::Graph g = load_graph(s_file);
            srm::Graph result{1};
            std::vector<srm::ShiftStep> steps;
            if (s_full) {
                srm::ShiftTrace tr = srm::fully_shift(g);
                steps = std::move(tr.steps);
                result = std::move(tr.result);
            } else {
                const auto moved = srm::detail::moved_endpoints(g, s_x, s_y);
                result = srm::shift_xy(g, s_x, s_y);
                if (!moved.empty())
                    steps.push_back({s_x, s_y, static_cast<int>(moved.size())});
            }
            if (s_trace)
                for (const srm::ShiftStep& st : steps) {
                    srm::ordered_json j{{"x", st.x}, {"y", st.y}, {"edges_moved", st.edges_moved}};
                    std::cout << j.dump() << "\n";
                }
            std::cout << srm::graph6_encode(result) << "\n";
            return 0;
        }
        if (*nu) {
            const srm::Graph g = load_graph(n_file);
            const srm::MatchingResult mr = srm::max_matching(g);
            std::cout << "nu=" << mr.size << "\n";
            for (const auto& [u, v] : mr.edges) std::cout << u << " " << v << "\n";
            return 0;
        }
        if (*rainbow) {
            std::vector<srm::Graph> members;
            members.reserve(f_files.size());
            for (const std::string& f : f_files) members.push_back(load_graph(f));
            const int n = members.front().n();
            srm::GraphFamily family(n, std::move(members));
            if (const auto rm = srm::find_rainbow(family)) {
                for (const srm::RainbowPick& p : rm->picks)
                    std::cout << p.member << ": " << p.u << " " << p.v << "\n";
            } else {
                std::cout << "NONE\n";
            }
            return 0;
        }
        if (*verify) {
            std::string kind;
            for (const CLI::App* sub : verify->get_subcommands())
                if (sub->parsed()) kind = sub->get_name();

            srm::SweepPlan plan;
            if (va.sampled) {
                plan.mode = srm::SweepMode::Sampled;
                plan.sample_count = va.sample_count;
            } else if (kind == "t13" || kind == "t11") {
                plan.mode = srm::SweepMode::FilteredExhaustive;
            }
            plan.seed = va.seed;
            plan.margin = va.margin;
            plan.budget = va.budget;
            plan.threads = va.threads;
            plan.tol = resolve_tol(va.tol_given, va.tol);

            const srm::CertSink sink = [](const srm::Certificate& c) {
                std::cout << c.to_jsonl() << "\n";
            };
            srm::SweepSummary summary;
            if (kind == "t12") summary = srm::check_T12(va.n, va.m, plan, sink);
            else if (kind == "t13") summary = srm::check_T13(va.n, va.m, plan, sink);
            else if (kind == "t11") summary = srm::check_T11(va.n, va.m, plan, sink);
            else summary = srm::check_extremal_rigidity(va.n, va.m, plan, sink);
            return summary.counterexamples > 0 ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
