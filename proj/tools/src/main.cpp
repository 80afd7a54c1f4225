#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pwlent/interval48.hpp"
#include "pwlent_cli/commands.hpp"

using namespace pwlent;
using namespace pwlent::cli;

namespace {

struct ParamOpts {
    std::string a, b;
};

void add_param(CLI::App* sub, ParamOpts& p) {
    sub->add_option("--b", p.b, "parameter b as N/D or a decimal")->required();
    sub->add_option("--a", p.a, "parameter a < 0; (a,b) is reduced to a = -1 by scaling");
}

BigRational param_b(const ParamOpts& p) {
    std::optional<BigRational> a;
    if (!p.a.empty()) a = BigRational::parse(p.a);
    return reduce_parameter(a, BigRational::parse(p.b));
}

int emit(const CommandResult& r, const std::string& out) {
    if (out.empty()) {
        std::cout << r.body;
    } else {
        auto path = resolve_output(out);
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::cerr << "pwlent: cannot write " << path.string() << "\n";
            return BadInput;
        }
        f << r.body;
    }
    return r.status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact entropy computations for F(x,y) = (|x|-y+a, x-|y|+b)", "pwlent"};
    app.require_subcommand(1);
    std::string out;
    app.add_option("-o,--output", out, "write to this file (relative to $PWLENT_OUTPUT_DIR if set)");

    ParamOpts ent_p, gr_p, dg_p, ms_p;
    unsigned digits = 5, levels = 3, upper = 24, lower = 32;
    std::size_t depth = 10;
    std::string format, regime, mode = "lower";
    bool json = false;

    auto* ent = app.add_subcommand("entropy", "entropy or bounds for 4 < b < 8");
    add_param(ent, ent_p);
    ent->add_option("--digits", digits)->check(CLI::PositiveNumber);
    ent->add_flag("--json", json);

    auto* tab = app.add_subcommand("table1", "CSV of the level classes for levels 0..L-1");
    tab->add_option("--levels", levels)->check(CLI::PositiveNumber);
    tab->add_option("--digits", digits)->check(CLI::PositiveNumber);

    auto* ca = app.add_subcommand("certify-alpha", "rational bracket of the alpha transition");
    auto* cb = app.add_subcommand("certify-beta", "rational bracket of the beta transition");
    for (auto* c : {ca, cb}) {
        c->add_option("--upper", upper, "period 3*2^N of the positive-entropy side");
        c->add_option("--lower", lower, "period 2^N of the zero-entropy side");
    }

    auto* gr = app.add_subcommand("graph", "invariant graph export");
    add_param(gr, gr_p);
    gr->add_option("--regime", regime)->required()->check(CLI::IsMember({"negb", "alpha", "beta", "band48"}));
    gr->add_option("--format", format)->required()->check(CLI::IsMember({"svg", "json", "dot"}));

    auto* dg = app.add_subcommand("digraph", "Band48 cover digraph at b");
    add_param(dg, dg_p);
    dg->add_option("--mode", mode)->check(CLI::IsMember({"lower", "upper", "markov"}));
    dg->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* ms = app.add_subcommand("measure", "capture profiles of plateau preimages (CSV)");
    add_param(ms, ms_p);
    ms->add_option("--regime", regime)->required()->check(CLI::IsMember({"negb", "alpha", "beta"}));
    ms->add_option("--depth", depth);

    auto* vf = app.add_subcommand("verify", "run the property suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ent->parsed()) return emit(cmd_entropy(param_b(ent_p), digits, json), out);
        if (tab->parsed()) return emit(cmd_table1(levels, digits), out);
        if (ca->parsed()) return emit(cmd_certify(Transition::Alpha, upper, lower), out);
        if (cb->parsed()) return emit(cmd_certify(Transition::Beta, upper, lower), out);
        if (gr->parsed()) return emit(cmd_graph(parse_regime(regime), param_b(gr_p), format), out);
        if (dg->parsed()) {
            CoverMode m = mode == "upper" ? CoverMode::Upper : mode == "markov" ? CoverMode::Markov : CoverMode::Lower;
            return emit(cmd_digraph(param_b(dg_p), m, format.empty() ? "dot" : format), out);
        }
        if (ms->parsed()) return emit(cmd_measure(parse_regime(regime), param_b(ms_p), depth), out);
        if (vf->parsed()) return emit(cmd_verify(), out);
    } catch (const Error& e) {
        std::cerr << "pwlent: " << e.what() << "\n";
        return BadInput;
    }
    return BadInput;
}
