// ramcalc: ramification invariants of finite separable extensions of
// Laurent series fields, described as towers of monogenic steps.
//
// Subcommands: report, conductor, herbrand, components, np, tower,
// basechange, defierce. Output is a JSON report with --json, an indented
// key/value listing otherwise, and CSV samples for components --csv.
// Errors print a machine-readable JSON object on stderr; the exit code
// groups them as 2 input, 3 precision, 4 unsupported, 5 internal.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cdvf/parse.hpp"
#include "cdvf/report.hpp"

namespace {

struct CommonArgs {
    std::string base;
    std::vector<std::string> polys;
    bool json = false;
    long cap = 512;
};

void add_common(CLI::App* sub, CommonArgs& a, bool want_polys = true) {
    sub->add_option("--base", a.base, "base field, e.g. \"laurent(p=2,k=Fp(u))\"")
        ->required();
    if (want_polys)
        sub->add_option("--poly", a.polys,
                        "monic step polynomial over the current presentation; repeat "
                        "to stack steps")
            ->required();
    sub->add_flag("--json", a.json, "emit the JSON report on stdout");
    sub->add_option("--precision-cap", a.cap, "largest working series precision")
        ->check(CLI::Range(8L, 1000000L))
        ->capture_default_str();
}

// The grammar's combined form; positions in syntax errors refer to it.
std::string joined_input(const CommonArgs& a) {
    std::string text = a.base;
    for (const std::string& p : a.polys) text += "; " + p;
    return text;
}

void emit(const cdvf::ReportJSON& rep, bool json) {
    if (json)
        std::cout << rep.dump(2) << "\n";
    else
        cdvf::human_render(rep, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact ramification invariants over Laurent series fields"};
    app.require_subcommand(1);

    CommonArgs rep_a, con_a, her_a, com_a, np_a, tow_a, bc_a, df_a;
    bool csv = false;
    long bc_m = 0;
    std::string bc_residue;
    std::vector<std::string> radicial;

    CLI::App* rep = app.add_subcommand("report", "full invariant report");
    add_common(rep, rep_a);

    CLI::App* con = app.add_subcommand("conductor", "conductor and its log variant");
    add_common(con, con_a);

    CLI::App* her = app.add_subcommand("herbrand", "breaks in lower and upper numbering");
    add_common(her, her_a);

    CLI::App* com = app.add_subcommand("components", "component-count step function");
    add_common(com, com_a);
    com->add_flag("--csv", csv, "emit r,count samples instead of a report");

    CLI::App* np = app.add_subcommand(
        "np", "polygon shape check for a degree-p step over the tower below it");
    add_common(np, np_a);

    CLI::App* tow = app.add_subcommand("tower", "accumulated invariants of a tower");
    add_common(tow, tow_a);

    CLI::App* bc = app.add_subcommand("basechange", "restate one step over a larger base");
    add_common(bc, bc_a);
    bc->add_option("--m", bc_m, "tame substitution t = s^m, m coprime to p");
    bc->add_option("--residue-step", bc_residue,
                   "unramified change: polynomial of a separable residue extension");

    CLI::App* df = app.add_subcommand("defierce", "eliminate fierce steps from a tower");
    add_common(df, df_a);
    df->add_option("--radicial", radicial,
                   "residue constant of the base whose root generates the "
                   "inseparable part; repeatable");

    CLI11_PARSE(app, argc, argv);

    using namespace cdvf;
    try {
        if (rep->parsed()) {
            auto [b, ps] = parse_input(joined_input(rep_a));
            emit(build_report(b, ps, rep_a.cap), rep_a.json);
        } else if (con->parsed()) {
            auto [b, ps] = parse_input(joined_input(con_a));
            emit(conductor_json(b, ps, con_a.cap), con_a.json);
        } else if (her->parsed()) {
            auto [b, ps] = parse_input(joined_input(her_a));
            emit(herbrand_json(b, ps, her_a.cap), her_a.json);
        } else if (com->parsed()) {
            auto [b, ps] = parse_input(joined_input(com_a));
            if (csv)
                std::cout << components_csv(components_profile(b, ps, com_a.cap));
            else
                emit(components_json(b, ps, com_a.cap), com_a.json);
        } else if (np->parsed()) {
            auto [b, ps] = parse_input(joined_input(np_a));
            emit(np_json(b, ps, np_a.cap), np_a.json);
        } else if (tow->parsed()) {
            auto [b, ps] = parse_input(joined_input(tow_a));
            emit(tower_json(b, ps, tow_a.cap), tow_a.json);
        } else if (bc->parsed()) {
            check((bc_m != 0) != !bc_residue.empty(), errc::syntax_error,
                  "basechange needs exactly one of --m and --residue-step");
            check(bc_a.polys.size() == 1, errc::unsupported_tower,
                  "basechange acts on a single step");
            auto [b, ps] = parse_input(joined_input(bc_a));
            if (bc_m != 0) {
                emit(basechange_json(b, ps[0], bc_m, bc_a.cap), bc_a.json);
            } else {
                KPoly rs = parse_poly(b, bc_residue);
                emit(basechange_json(b, ps[0], rs, bc_a.cap), bc_a.json);
            }
        } else if (df->parsed()) {
            auto [b, ps] = parse_input(joined_input(df_a));
            std::vector<TSeries> hints;
            for (const std::string& h : radicial) hints.push_back(parse_series(b, h));
            emit(defierce_json(b, ps, hints, df_a.cap), df_a.json);
        }
    } catch (const error& e) {
        std::cerr << json_error(e).dump() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        error wrapped(errc::internal_error, e.what());
        std::cerr << json_error(wrapped).dump() << "\n";
        return 5;
    }
    return 0;
}
