// Command-line front end: validation, invariants, move scripts, the twist
// family sweep, and the registered end-to-end scenarios.
//
// Exit codes: 0 success, 1 failed check or failed move, 2 unusable input
// (bad file, parse error, unknown scenario, bad arguments).
#include "corkcalc/alexander.hpp"
#include "corkcalc/builders.hpp"
#include "corkcalc/errors.hpp"
#include "corkcalc/fld.hpp"
#include "corkcalc/linking.hpp"
#include "corkcalc/moves.hpp"
#include "corkcalc/scenario.hpp"
#include "corkcalc/script.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

using namespace corkcalc;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FixtureMissing", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FramedLinkDiagram read_diagram(const std::string& path) { return parse_fld(read_file(path)); }

int cmd_validate(const std::string& path) {
    FramedLinkDiagram d = read_diagram(path);
    std::vector<std::string> bad = d.validate();
    if (!bad.empty()) {
        for (const std::string& b : bad) std::cout << b << "\n";
        return 1;
    }
    std::size_t loops = 0;
    for (const Component& c : d.components)
        if (c.is_loop()) ++loops;
    std::cout << "ok: " << d.components.size() << " component(s), " << d.crossings.size()
              << " crossing(s)";
    if (loops) std::cout << ", " << loops << " crossingless loop(s)";
    std::cout << ", hash " << diagram_hash(d) << "\n";
    return 0;
}

int cmd_invariant(const std::string& kind, const std::string& path, std::string component) {
    FramedLinkDiagram d = read_diagram(path);
    if (kind == "h1") {
        std::cout << h1_surgery(d).to_string() << "\n";
        return 0;
    }
    if (kind == "linking") {
        LinkingPresentation p = linking_matrix(d);
        std::cout << "order:";
        for (const std::string& label : p.order) std::cout << " " << label;
        std::cout << "\n";
        for (const LinkingPresentation::Entry& e : p.filled)
            std::cout << "coefficient " << e.label << " = " << e.coeff.to_string() << "\n";
        for (const std::string& u : p.unfilled) std::cout << "unfilled " << u << "\n";
        for (const std::string& o : p.ornaments) std::cout << "ornament " << o << "\n";
        for (std::size_t i = 0; i < p.linking.rows(); ++i) {
            for (std::size_t j = 0; j < p.linking.cols(); ++j)
                std::cout << (j ? " " : "") << p.linking.at(i, j);
            std::cout << "\n";
        }
        return 0;
    }
    // alexander
    if (component.empty()) {
        if (d.components.empty()) throw Error("UnknownComponent", "empty diagram");
        component = d.components[0].id;
    }
    std::cout << fox_alexander(d, component, false).to_string() << "\n";
    return 0;
}

int cmd_script(const std::string& diagram_path, const std::string& script_path) {
    FramedLinkDiagram d = read_diagram(diagram_path);
    std::vector<MoveStep> steps = parse_script(read_file(script_path));
    ScriptOutcome out = apply_script(d, steps);
    for (std::size_t i = 0; i < out.trace.entries.size(); ++i) {
        const TraceEntry& t = out.trace.entries[i];
        std::cout << "step " << (i + 1) << " ok: " << t.step << "  [h1 " << t.pre.h1.to_string()
                  << " -> " << t.post.h1.to_string() << "]\n";
    }
    if (!out.ok) {
        std::cout << "failed at " << out.error << "\n";
        return 1;
    }
    std::cout << "final diagram:\n" << serialize_fld(out.diagram);
    return 0;
}

int cmd_family(int kmin, int kmax) {
    if (kmin > kmax) throw Error("BadRange", "min exceeds max");
    std::set<std::string> seen;
    for (int k = kmin; k <= kmax; ++k) {
        FramedLinkDiagram d = twist_knot(k, -1);
        const std::string poly = fox_alexander(d, d.components[0].id).to_string();
        seen.insert(poly);
        std::cout << "k=" << k << ": " << poly << "\n";
    }
    const std::size_t total = static_cast<std::size_t>(kmax - kmin + 1);
    std::cout << total << " polynomial(s), " << seen.size() << " distinct\n";
    return seen.size() == total ? 0 : 1;
}

int cmd_scenario(const std::string& id, const std::string& json_path) {
    if (!scenario_known(id)) {
        std::cerr << "unknown scenario '" << id << "'; known:";
        for (const std::string& s : scenario_ids()) std::cerr << " " << s;
        std::cerr << "\n";
        return 2;
    }
    ScenarioReport r = run_scenario(id);
    std::cout << scenario_report_text(r);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        out << scenario_report_json(r);
        if (!out) throw Error("FixtureMissing", "cannot write " + json_path);
    }
    return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for framed-link surgery diagrams"};
    app.require_subcommand(1);

    std::string path, script_path, component, kind, scenario_id, json_path;
    int kmin = -10, kmax = 10;

    CLI::App* validate = app.add_subcommand("validate", "Check a diagram file");
    validate->add_option("file", path, "diagram file")->required();

    CLI::App* invariant = app.add_subcommand("invariant", "Print an invariant of a diagram");
    invariant->add_option("kind", kind, "alexander, linking, or h1")
        ->required()
        ->check(CLI::IsMember({"alexander", "linking", "h1"}));
    invariant->add_option("file", path, "diagram file")->required();
    invariant->add_option("--component", component, "component for alexander (default: first)");

    CLI::App* script = app.add_subcommand("script", "Apply a move script to a diagram");
    script->add_option("file", path, "diagram file")->required();
    script->add_option("moves", script_path, "move script file")->required();

    CLI::App* family = app.add_subcommand("family", "Alexander polynomials of the clasp family");
    family->add_option("--min", kmin, "smallest twist parameter");
    family->add_option("--max", kmax, "largest twist parameter");

    CLI::App* scenario = app.add_subcommand("scenario", "Run a registered end-to-end scenario");
    scenario->add_option("id", scenario_id, "scenario name")->required();
    scenario->add_option("--json", json_path, "also write a JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is an input error
    }

    try {
        if (validate->parsed()) return cmd_validate(path);
        if (invariant->parsed()) return cmd_invariant(kind, path, component);
        if (script->parsed()) return cmd_script(path, script_path);
        if (family->parsed()) return cmd_family(kmin, kmax);
        if (scenario->parsed()) return cmd_scenario(scenario_id, json_path);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        const std::string code = e.code();
        if (code == "FixtureMissing" || code == "SyntaxError" || code == "ScriptParse" ||
            code == "BadRange" || code == "UnknownScenario")
            return 2;
        return 1;
    }
    return 2;
}
