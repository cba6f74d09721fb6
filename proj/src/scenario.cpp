#include "corkcalc/scenario.hpp"

#include "corkcalc/alexander.hpp"
#include "corkcalc/builders.hpp"
#include "corkcalc/cw.hpp"
#include "corkcalc/errors.hpp"
#include "corkcalc/fld.hpp"
#include "corkcalc/linking.hpp"
#include "corkcalc/moves.hpp"
#include "corkcalc/script.hpp"
#include "corkcalc/seifert.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace corkcalc {

namespace {

void add_step(ScenarioReport& r, const std::string& name, const std::string& expected,
              const std::string& actual) {
    r.steps.push_back({name, expected, actual, expected == actual});
}

void add_input(ScenarioReport& r, const std::string& key, const std::string& value) {
    r.inputs.emplace_back(key, value);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string int_str(const Int& n) { return n.str(); }

// ---- twist-family --------------------------------------------------------

// The clasp family κ(k, -1): the k = 0 member is the unknot, consecutive
// members are distinguished by the normalized Alexander polynomial, and the
// Fox-calculus and Seifert-matrix computations must agree exactly.
ScenarioReport scenario_twist_family() {
    ScenarioReport r;
    r.scenario = "twist-family";
    const int kmin = -10, kmax = 10;
    add_input(r, "k_min", std::to_string(kmin));
    add_input(r, "k_max", std::to_string(kmax));

    const int total = kmax - kmin + 1;
    std::set<std::string> seen;
    int agree = 0;
    std::string at_zero = "(missing)";
    for (int k = kmin; k <= kmax; ++k) {
        FramedLinkDiagram d = twist_knot(k, -1);
        const std::string comp = d.components[0].id;
        const std::string fox = fox_alexander(d, comp).to_string();
        const std::string sf = alexander_from_seifert(seifert_matrix(d, comp)).to_string();
        if (fox == sf) ++agree;
        seen.insert(fox);
        if (k == 0) at_zero = fox;
    }
    add_step(r, "unknot member has trivial polynomial", "1*t^0", at_zero);
    add_step(r, "distinct polynomials across the family", std::to_string(total),
             std::to_string(seen.size()));
    add_step(r, "Fox and Seifert computations agree",
             std::to_string(total) + "/" + std::to_string(total),
             std::to_string(agree) + "/" + std::to_string(total));
    return r;
}

// ---- borromean-t3 --------------------------------------------------------

ScenarioReport scenario_borromean() {
    ScenarioReport r;
    r.scenario = "borromean-t3";
    FramedLinkDiagram d = load_fixture_diagram("borromean.fld");
    add_input(r, "fixture", "borromean.fld");
    add_input(r, "fixture_hash", diagram_hash(d));

    add_step(r, "components", "3", std::to_string(d.components.size()));
    add_step(r, "lk(B1,B2)", "0", int_str(linking_number(d, "B1", "B2")));
    add_step(r, "lk(B1,B3)", "0", int_str(linking_number(d, "B1", "B3")));
    add_step(r, "lk(B2,B3)", "0", int_str(linking_number(d, "B2", "B3")));
    add_step(r, "h1 of 0-surgery", "Z^3", h1_surgery(d).to_string());
    return r;
}

// ---- p-reduction ---------------------------------------------------------

ScenarioReport scenario_p_reduction() {
    ScenarioReport r;
    r.scenario = "p-reduction";
    FramedLinkDiagram d = load_fixture_diagram("p_reduction.fld");
    std::vector<MoveStep> steps = parse_script(load_fixture_text("p_reduction.moves"));
    add_input(r, "fixture", "p_reduction.fld");
    add_input(r, "fixture_hash", diagram_hash(d));
    add_input(r, "script", "p_reduction.moves");
    add_input(r, "script_steps", std::to_string(steps.size()));

    const std::string h1 = h1_surgery(d).to_string();
    add_step(r, "initial h1", "Z", h1);

    ScriptOutcome out = apply_script(d, steps);
    add_step(r, "script runs to completion", "ok", out.ok ? "ok" : out.error);

    std::size_t kept = 0;
    for (const TraceEntry& t : out.trace.entries)
        if (t.pre.h1.to_string() == h1 && t.post.h1.to_string() == h1) ++kept;
    add_step(r, "h1 preserved at every step",
             std::to_string(steps.size()) + "/" + std::to_string(steps.size()),
             std::to_string(kept) + "/" + std::to_string(steps.size()));

    const bool single_unfilled = out.diagram.components.size() == 1 &&
                                 out.diagram.components[0].coeff == SurgeryCoefficient::unfilled() &&
                                 out.diagram.components[0].is_loop();
    add_step(r, "final diagram is one unfilled unknot", "yes", yes_no(single_unfilled));
    return r;
}

// ---- L-in-S3 -------------------------------------------------------------

ScenarioReport scenario_l_in_s3() {
    ScenarioReport r;
    r.scenario = "L-in-S3";
    FramedLinkDiagram d = load_fixture_diagram("cork_boundary_link.fld");
    std::vector<MoveStep> steps = parse_script(load_fixture_text("l_in_s3.moves"));
    add_input(r, "fixture", "cork_boundary_link.fld");
    add_input(r, "fixture_hash", diagram_hash(d));
    add_input(r, "script", "l_in_s3.moves");
    add_input(r, "script_steps", std::to_string(steps.size()));

    LinkingPresentation p = linking_matrix(d);
    Int det = 0;
    {
        const std::size_t n = p.filled.size();
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.at(i, i) = p.filled[i].coeff.p;  // all framings integral here
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) m.at(i, j) = p.linking.at(i, j);
        }
        det = determinant(m);
    }
    add_step(r, "framed linking matrix unimodular", "yes",
             (det == 1 || det == -1) ? "yes" : "no, determinant " + int_str(det));
    add_step(r, "h1 of the presentation", "0", h1_surgery(p).to_string());

    ScriptOutcome out = apply_script(d, steps);
    add_step(r, "script runs to completion", "ok", out.ok ? "ok" : out.error);

    std::size_t kept = 0;
    for (const TraceEntry& t : out.trace.entries)
        if (t.pre.h1.trivial() && t.post.h1.trivial()) ++kept;
    add_step(r, "h1 trivial at every step",
             std::to_string(steps.size()) + "/" + std::to_string(steps.size()),
             std::to_string(kept) + "/" + std::to_string(steps.size()));

    std::size_t surgery = 0, ornaments = 0;
    for (const Component& c : out.diagram.components)
        (c.coeff.kind == Filling::Ornament ? ornaments : surgery) += 1;
    add_step(r, "final surgery components", "0", std::to_string(surgery));
    add_step(r, "final ornament components", "4", std::to_string(ornaments));
    return r;
}

// ---- minus-1-over-k ------------------------------------------------------

ScenarioReport scenario_minus_one_over_k() {
    ScenarioReport r;
    r.scenario = "minus-1-over-k";
    const int kmax = 10;
    add_input(r, "k_min", std::to_string(-kmax));
    add_input(r, "k_max", std::to_string(kmax));

    int emptied = 0, total = 0;
    for (int k = -kmax; k <= kmax; ++k) {
        if (k == 0) continue;
        ++total;
        FramedLinkDiagram d = unknot_loop({"u", "", SurgeryCoefficient::rational(-1, k)});
        ScriptOutcome out = apply_script(
            d, {MoveStep::rolfsen_twist("u", k), MoveStep::erase_infinity("u")});
        if (out.ok && out.diagram.components.empty()) ++emptied;
    }
    add_step(r, "k twists then erasure empty the diagram",
             std::to_string(total) + "/" + std::to_string(total),
             std::to_string(emptied) + "/" + std::to_string(total));
    return r;
}

// ---- homology-ladder -----------------------------------------------------

ScenarioReport scenario_homology_ladder() {
    ScenarioReport r;
    r.scenario = "homology-ladder";
    add_input(r, "model", "punctured torus x circle");

    CWComplex y = product(punctured_torus(), circle());
    std::vector<AbelianGroupInvariants> hy = y.chain().homology_all(false);
    add_step(r, "H0 of the ladder block", "Z", hy[0].to_string());
    add_step(r, "H1 of the ladder block", "Z^3", hy[1].to_string());
    add_step(r, "H2 of the ladder block", "Z^2", hy[2].to_string());

    CWComplex yp = attach_disk(attach_disk(attach_disk(y, "c-1 x v"), "c+1 x v"), "v x s");
    ChainComplex cp = yp.chain();
    std::vector<AbelianGroupInvariants> hp = cp.homology_all(false);
    add_step(r, "H1 after attaching the three disks", "0", hp[1].to_string());
    add_step(r, "H2 after attaching the three disks", "Z^2", hp[2].to_string());

    // the surviving H2 basis is carried by the two torus cells
    IntegerMatrix ker = cp.kernel_basis(2);
    bool torus_cells_only = ker.cols() == 2;
    for (std::size_t j = 0; j < ker.cols(); ++j)
        for (std::size_t i = 0; i < ker.rows(); ++i) {
            if (ker.at(i, j) == 0) continue;
            const std::string& lab = cp.labels(2)[i];
            if (lab != "c-1 x s" && lab != "c+1 x s") torus_cells_only = false;
        }
    add_step(r, "H2 basis carried by the torus cells", "yes", yes_no(torus_cells_only));

    IntegerMatrix pairing(2, 2);
    pairing.at(0, 1) = 1;
    pairing.at(1, 0) = 1;
    BallCertificate cert = homology_ball_certificate(2, pairing);
    add_step(r, "ball certificate for hyperbolic pairing", "certified",
             cert.certified ? "certified" : "not certified");

    std::vector<AbelianGroupInvariants> hb = attach_disk(circle(), "s").chain().homology_all(true);
    bool contractible = true;
    for (const AbelianGroupInvariants& g : hb)
        if (!g.trivial()) contractible = false;
    add_step(r, "ball model has vanishing reduced homology", "yes", yes_no(contractible));
    return r;
}

}  // namespace

std::vector<std::string> scenario_ids() {
    return {"twist-family", "borromean-t3",    "p-reduction",
            "L-in-S3",      "minus-1-over-k",  "homology-ladder"};
}

bool scenario_known(const std::string& id) {
    for (const std::string& s : scenario_ids())
        if (s == id) return true;
    return false;
}

ScenarioReport run_scenario(const std::string& id) {
    const auto start = std::chrono::steady_clock::now();
    ScenarioReport r;
    if (id == "twist-family")
        r = scenario_twist_family();
    else if (id == "borromean-t3")
        r = scenario_borromean();
    else if (id == "p-reduction")
        r = scenario_p_reduction();
    else if (id == "L-in-S3")
        r = scenario_l_in_s3();
    else if (id == "minus-1-over-k")
        r = scenario_minus_one_over_k();
    else if (id == "homology-ladder")
        r = scenario_homology_ladder();
    else
        throw Error("UnknownScenario", "no scenario named '" + id + "'");
    r.pass = !r.steps.empty();
    for (const ScenarioStep& s : r.steps)
        if (!s.pass) r.pass = false;
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string scenario_report_json(const ScenarioReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["scenario"] = r.scenario;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const ScenarioStep& s : r.steps)
        steps.push_back({{"name", s.name},
                         {"expected", s.expected},
                         {"actual", s.actual},
                         {"verdict", s.pass ? "pass" : "fail"}});
    j["steps"] = steps;
    j["verdict"] = r.pass ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string scenario_report_text(const ScenarioReport& r) {
    std::ostringstream out;
    out << "scenario " << r.scenario << "\n";
    for (const auto& [k, v] : r.inputs) out << "  input " << k << " = " << v << "\n";
    for (const ScenarioStep& s : r.steps) {
        out << "  [" << (s.pass ? "pass" : "FAIL") << "] " << s.name << ": " << s.actual;
        if (!s.pass) out << " (expected " << s.expected << ")";
        out << "\n";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.wall_seconds);
    out << (r.pass ? "PASS" : "FAIL") << " (" << buf << "s)\n";
    return out.str();
}

std::string fixtures_dir() {
    if (const char* env = std::getenv("CORKCALC_FIXTURES"); env && *env) return env;
#ifdef CORKCALC_FIXTURES_DEFAULT
    return CORKCALC_FIXTURES_DEFAULT;
#else
    return "fixtures";
#endif
}

std::string fixture_path(const std::string& name) { return fixtures_dir() + "/" + name; }

std::string load_fixture_text(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) throw Error("FixtureMissing", "cannot open " + fixture_path(name));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

FramedLinkDiagram load_fixture_diagram(const std::string& name) {
    return parse_fld(load_fixture_text(name));
}

}  // namespace corkcalc
