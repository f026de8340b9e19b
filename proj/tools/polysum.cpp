#include "polysum/cli.hpp"

#include <chrono>
#include <iostream>

#include "CLI11.hpp"

using namespace polysum::cli;

int main(int argc, char** argv) {
    CLI::App app{"polysum: exact face counts of Minkowski sums"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "add wall-clock time to the report");

    std::string hull_file;
    auto* hull = app.add_subcommand("hull", "convex hull and f-vector of a vertex file");
    hull->add_option("file", hull_file)->required();

    std::vector<std::string> mk_files;
    std::string via = "both";
    auto* mk = app.add_subcommand("minkowski", "f-vector of the sum of 2 or 3 polytopes");
    mk->add_option("files", mk_files)->required();
    mk->add_option("--via", via)->check(CLI::IsMember({"direct", "cayley", "both"}));

    int d = 0;
    std::vector<long> n;
    std::vector<std::string> achieved;
    auto* bd = app.add_subcommand("bounds", "upper bounds on the face numbers of the sum");
    bd->add_option("--d", d)->required();
    bd->add_option("--n", n)->required()->delimiter(',');
    bd->add_option("--achieved", achieved);

    std::string tau, emit;
    std::uint64_t seed = 1;
    auto* cs = app.add_subcommand("construct", "three polytopes attaining the bounds");
    cs->add_option("--d", d)->required();
    cs->add_option("--n", n)->required()->delimiter(',');
    auto* tau_opt = cs->add_option("--tau", tau, "fixed tau p/q instead of the search");
    auto* emit_opt = cs->add_option("--emit", emit, "directory for P1.txt, P2.txt, P3.txt");
    cs->add_option("--seed", seed, "polygon placement seed (d=2)");

    std::vector<std::string> vf_files;
    auto* vf = app.add_subcommand("verify", "identity and inequality checks on three polytopes");
    vf->add_option("files", vf_files)->required();

    std::string lemma, params;
    int random = 0;
    auto* da = app.add_subcommand("detasym", "minimal tau exponent and leading sign of the lemma determinants");
    da->add_option("--lemma", lemma)->required();
    auto* params_opt = da->add_option("--params", params, "one instance as a JSON object");
    da->add_option("--random", random, "number of seeded random instances");
    da->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    Outcome o;
    if (*hull) o = cmd_hull(hull_file);
    else if (*mk) o = cmd_minkowski(mk_files, via == "direct" ? Via::direct : via == "cayley" ? Via::cayley : Via::both);
    else if (*bd) o = cmd_bounds(d, n, achieved);
    else if (*cs)
        o = cmd_construct(d, n, *tau_opt ? std::optional(tau) : std::nullopt,
                          *emit_opt ? std::optional(emit) : std::nullopt, seed);
    else if (*vf) o = cmd_verify(vf_files);
    else o = cmd_detasym(lemma, *params_opt ? std::optional(params) : std::nullopt, random, seed);

    if (timing)
        o.report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
    std::cout << o.report.dump(2) << "\n";
    if (o.report.contains("error")) std::cerr << "polysum: " << o.report["error"].get<std::string>() << "\n";
    return o.exit_code;
}
