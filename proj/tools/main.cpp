// symcirc command-line tool: symbolic circuit analysis, filter sizing, ladder
// synthesis, network reduction, Bode data, and Groebner bases.
//
// Exit codes: 0 success, 2 input error, 3 resource budget exhausted,
// 4 internal invariant violation.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <symcirc/ladder.hpp>
#include <symcirc/network.hpp>
#include <symcirc/sizing.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace symcirc;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    int digits = 30;
    size_t budget_pairs = 0;   // 0 = library default
    size_t budget_bits = 0;
    double budget_seconds = 0;
    std::string out;
    std::string format = "json"; // json | text | csv
    bool no_meta = false;

    void attach(CLI::App* app) {
        app->add_option("--digits", digits, "printed decimal precision")
            ->check(CLI::Range(6, 1000));
        app->add_option("--budget-pairs", budget_pairs, "Groebner S-pair budget");
        app->add_option("--budget-bits", budget_bits, "coefficient bit-size budget");
        app->add_option("--budget-seconds", budget_seconds, "wall-clock budget (seconds)");
        app->add_option("--out", out, "output file (default stdout)");
        app->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text", "csv"}));
        app->add_flag("--no-meta", no_meta, "omit the meta block (timestamp)");
    }

    ResourceBudget budget() const {
        ResourceBudget b;
        auto env_num = [](const char* name) -> double {
            const char* v = std::getenv(name);
            return v ? std::atof(v) : 0;
        };
        if (double e = env_num("SYMCIRC_BUDGET_PAIRS"); e > 0) b.max_pairs = (size_t)e;
        if (double e = env_num("SYMCIRC_BUDGET_BITS"); e > 0) b.max_coeff_bits = (size_t)e;
        if (double e = env_num("SYMCIRC_BUDGET_SECONDS"); e > 0) b.max_seconds = e;
        if (budget_pairs) b.max_pairs = budget_pairs;
        if (budget_bits) b.max_coeff_bits = budget_bits;
        if (budget_seconds > 0) b.max_seconds = budget_seconds;
        return b;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// "3", "-1/2", "2.5e-3" -> exact rational
Rat parse_rat(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos)
            return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
        return rat_from_decimal(s);
    } catch (const std::exception&) {
        throw InputError("cannot parse rational value '" + s + "'");
    }
}

Rat json_to_rat(const json& v) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) return parse_rat(v.get<std::string>());
    throw InputError("expected an integer or a rational/decimal string, got " + v.dump());
}

std::string rat_str(const Rat& x) { return x.get_str(); }

// Decimal enclosure: lo/hi truncated to `digits` fractional digits plus the
// longest decimal prefix certified by the interval (never over-claims).
json iv_json(const RatIv& iv, int digits) {
    std::string lo = rat_to_decimal(iv.lo, (unsigned)digits);
    std::string hi = rat_to_decimal(iv.hi, (unsigned)digits);
    json j;
    j["lo"] = lo;
    j["hi"] = hi;
    if (lo == hi) {
        j["decimal"] = lo;
    } else {
        size_t n = 0;
        while (n < lo.size() && n < hi.size() && lo[n] == hi[n]) ++n;
        j["decimal"] = lo.substr(0, n); // certified common prefix
    }
    j["exact"] = iv.is_point();
    if (iv.is_point()) j["rational"] = rat_str(iv.lo);
    return j;
}

void render_text(const json& j, std::ostream& os, int indent = 0) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 1);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_text(v, os, indent + 1);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(json doc, const Common& c, const std::string& command) {
    if (!c.no_meta) {
        json meta;
        meta["command"] = command;
        meta["generated_at"] = (long)std::chrono::duration_cast<std::chrono::seconds>(
                                   std::chrono::system_clock::now().time_since_epoch())
                                   .count();
        doc["meta"] = meta;
    }
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!c.out.empty()) {
        f.open(c.out);
        if (!f) throw InputError("cannot write " + c.out);
        os = &f;
    }
    if (c.format == "text")
        render_text(doc, *os);
    else
        *os << doc.dump(2) << "\n";
}

json tf_json(const TransferFunction& tf) {
    json j;
    j["input"] = tf.input;
    j["output"] = tf.output;
    j["num"] = poly_to_string(tf.num);
    j["den"] = poly_to_string(tf.den);
    Symbol s = sym("s");
    json nc = json::array(), dc = json::array();
    for (const auto& c : tf.num.collect(s)) nc.push_back(poly_to_string(c));
    for (const auto& c : tf.den.collect(s)) dc.push_back(poly_to_string(c));
    j["num_coefficients"] = nc;
    j["den_coefficients"] = dc;
    return j;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& path, const std::vector<std::string>& substs,
                const Common& c) {
    TransferFunction tf = derive_transfer_function(parse_netlist(read_file(path)));
    if (!substs.empty()) {
        std::map<Symbol, QPoly> bind;
        for (const auto& a : substs) {
            auto eq = a.find('=');
            if (eq == std::string::npos)
                throw InputError("--subst expects name=value, got '" + a + "'");
            bind[sym(a.substr(0, eq))] = QPoly(parse_rat(a.substr(eq + 1)));
        }
        tf = substitute_values(tf, bind);
    }
    json doc;
    doc["netlist"] = path;
    doc["transfer_function"] = tf_json(tf);
    Symbol s = sym("s");
    if (tf.num.is_univariate_in(s) && tf.den.is_univariate_in(s)) {
        PoleZeroReport pz = poles_zeros(tf);
        Rat eps = pow10_rat(-(c.digits + 2));
        auto roots = [&](std::vector<RealRoot<Rat>> rs) {
            json arr = json::array();
            for (auto& r : rs) {
                r.refine(eps);
                json e = iv_json(RatIv(r.lo, r.hi), c.digits);
                e["multiplicity"] = r.multiplicity;
                arr.push_back(e);
            }
            return arr;
        };
        json pzj;
        pzj["real_poles"] = roots(pz.poles);
        pzj["real_zeros"] = roots(pz.zeros);
        pzj["complex_pole_pairs"] = pz.complex_poles;
        pzj["complex_zero_pairs"] = pz.complex_zeros;
        doc["poles_zeros"] = pzj;
    }
    emit(doc, c, "analyze");
    return 0;
}

// ---------------------------------------------------------------------------
// size
// ---------------------------------------------------------------------------

std::vector<Symbol> sym_list(const json& arr) {
    std::vector<Symbol> v;
    for (const auto& e : arr) v.push_back(sym(e.get<std::string>()));
    return v;
}

int cmd_size(const std::string& spec_path, const Common& c) {
    json spec;
    try {
        spec = json::parse(read_file(spec_path));
    } catch (const json::exception& e) {
        throw InputError(std::string("spec JSON: ") + e.what());
    }

    std::string net_text;
    if (spec.contains("netlist_text")) {
        net_text = spec["netlist_text"].get<std::string>();
    } else if (spec.contains("netlist")) {
        std::string rel = spec["netlist"].get<std::string>();
        auto slash = spec_path.find_last_of('/');
        std::string dir = slash == std::string::npos ? "" : spec_path.substr(0, slash + 1);
        net_text = read_file(rel.front() == '/' ? rel : dir + rel);
    } else {
        throw InputError("spec needs 'netlist' (path) or 'netlist_text'");
    }
    TransferFunction tf = derive_transfer_function(parse_netlist(net_text));

    std::string mode = spec.value("mode", "");
    DesignSystem sys;
    if (mode == "butterworth" || mode == "chebyshev" || mode == "target") {
        DesignSpec ds;
        if (mode == "target") {
            ds.mode = DesignMode::TargetRational;
            for (const auto& v : spec.at("target_num")) ds.target_num.push_back(json_to_rat(v));
            for (const auto& v : spec.at("target_den")) ds.target_den.push_back(json_to_rat(v));
        } else {
            ds.mode = mode == "butterworth" ? DesignMode::Butterworth : DesignMode::Chebyshev;
            ds.order = spec.at("order").get<int>();
        }
        sys = coefficient_match(tf, ds);
    } else if (mode == "pole_placement") {
        std::vector<QPoly> poles;
        for (const auto& p : spec.at("poles")) {
            if (p.is_string() && !p.get<std::string>().empty() &&
                !std::isdigit((unsigned char)p.get<std::string>()[0]) &&
                p.get<std::string>()[0] != '-')
                poles.push_back(parse_qpoly(p.get<std::string>())); // symbolic pole
            else
                poles.push_back(QPoly(json_to_rat(p)));
        }
        QPoly zeros = spec.contains("zero_structure")
                          ? parse_qpoly(spec["zero_structure"].get<std::string>())
                          : tf.num;
        Symbol scale = sym(spec.value("scale", "k"));
        std::vector<Symbol> unknowns = sym_list(spec.at("unknowns"));
        std::vector<Symbol> params =
            spec.contains("parameters") ? sym_list(spec["parameters"]) : std::vector<Symbol>{};
        sys = pole_placement_system(tf, poles, zeros, scale, unknowns, params);
    } else {
        throw InputError("spec 'mode' must be butterworth, chebyshev, target, or "
                         "pole_placement");
    }

    if (spec.contains("freeze"))
        for (const auto& [k, v] : spec["freeze"].items()) sys.frozen[sym(k)] = json_to_rat(v);
    if (spec.contains("positive")) sys.positive = sym_list(spec["positive"]);
    if (spec.contains("nonnegative")) sys.nonnegative = sym_list(spec["nonnegative"]);
    if (spec.contains("unknown_order")) {
        // mentioned unknowns move to the back, in the given order; the last
        // listed symbol becomes the eliminant variable
        std::vector<Symbol> tail = sym_list(spec["unknown_order"]);
        std::vector<Symbol> order;
        for (Symbol u : sys.unknowns)
            if (std::find(tail.begin(), tail.end(), u) == tail.end()) order.push_back(u);
        for (Symbol u : tail) {
            if (std::find(sys.unknowns.begin(), sys.unknowns.end(), u) == sys.unknowns.end())
                throw InputError("unknown_order lists '" + sym_name(u) +
                                 "' which is not an unknown of the system");
            order.push_back(u);
        }
        sys.unknowns = order;
    }

    SolveDesignOptions opt;
    opt.budget = c.budget();
    DesignReport rep = solve_design(sys, opt);

    json doc;
    doc["spec"] = spec_path;
    doc["mode"] = mode;
    json unk = json::array();
    for (Symbol u : sys.unknowns) unk.push_back(sym_name(u));
    doc["unknowns"] = unk;
    if (!rep.eliminant.is_zero()) {
        doc["eliminant_variable"] = sym_name(rep.eliminant_var);
        doc["eliminant_degree"] = rep.eliminant.degree(rep.eliminant_var);
        doc["eliminant"] = poly_to_string(rep.eliminant);
    }
    doc["basis_size"] = rep.basis.polys.size();
    doc["solution_count"] = rep.solutions.size();
    doc["admissible_count"] = rep.admissible_count();
    json sols = json::array();
    Rat eps = pow10_rat(-(c.digits + 2));
    for (auto& sol : rep.solutions) {
        try {
            sol.box.refine(eps);
        } catch (const std::runtime_error&) {
            // keep the widest certified enclosure
        }
        json sj;
        sj["admissible"] = sol.admissible();
        sj["reasons"] = sol.reasons;
        sj["residual_certified"] = sol.residual_ok;
        if (sol.hurwitz_ok) sj["hurwitz"] = *sol.hurwitz_ok;
        json vals;
        for (const auto& [v, iv] : sol.box.assignments) vals[sym_name(v)] = iv_json(iv, c.digits);
        sj["values"] = vals;
        if (!sol.derived_values.empty()) {
            json dv;
            for (const auto& [v, iv] : sol.derived_values) dv[sym_name(v)] = iv_json(iv, c.digits);
            sj["derived"] = dv;
        }
        if (!sol.box.free_vars.empty()) {
            json fv = json::array();
            for (Symbol v : sol.box.free_vars) fv.push_back(sym_name(v));
            sj["free_variables"] = fv;
        }
        sols.push_back(sj);
    }
    doc["solutions"] = sols;
    doc["warnings"] = rep.warnings;
    doc["seconds"] = rep.seconds;
    emit(doc, c, "size");
    return 0;
}

// ---------------------------------------------------------------------------
// ladder
// ---------------------------------------------------------------------------

QPoly parse_value_poly(const std::string& s) {
    try {
        return QPoly(parse_rat(s));
    } catch (const InputError&) {
        return parse_qpoly(s); // symbolic value
    }
}

json ladder_json(const Ladder& l) {
    json stages = json::array();
    for (const auto& st : l.stages) {
        json s;
        s["L"] = poly_to_string(st.L);
        s["C"] = poly_to_string(st.C);
        stages.push_back(s);
    }
    return stages;
}

int cmd_ladder(const std::string& sub, const std::vector<std::string>& stage_args,
               const std::string& num, const std::string& den, const Common& c) {
    json doc;
    if (sub == "impedance") {
        if (stage_args.empty()) throw InputError("ladder impedance needs --stage L,C ...");
        Ladder l;
        for (const auto& a : stage_args) {
            auto comma = a.find(',');
            if (comma == std::string::npos)
                throw InputError("--stage expects L,C, got '" + a + "'");
            l.stages.push_back(
                {parse_value_poly(a.substr(0, comma)), parse_value_poly(a.substr(comma + 1))});
        }
        RationalFunction z = ladder_impedance(l);
        doc["stages"] = ladder_json(l);
        doc["impedance"] = {{"num", poly_to_string(z.num)}, {"den", poly_to_string(z.den)}};
    } else if (sub == "expand") {
        if (num.empty() || den.empty()) throw InputError("ladder expand needs --num and --den");
        Ladder l = cauer_expand(RationalFunction(parse_qpoly(num), parse_qpoly(den)));
        doc["stages"] = ladder_json(l);
    } else if (sub == "synth") {
        if (!num.empty() && !den.empty()) {
            LadderSizing sized = ladder_size(RationalFunction(parse_qpoly(num), parse_qpoly(den)));
            doc["complete"] = sized.complete;
            doc["stages"] = ladder_json(sized.ladder);
            if (!sized.issue.empty()) doc["issue"] = sized.issue;
        } else {
            // symbolic first-stage solution of the three-stage sizing system
            LadderSizingStep step = ladder_sizing_step();
            json vals;
            for (const auto& [v, rf] : step.values)
                vals[sym_name(v)] = {{"num", poly_to_string(rf.num)},
                                     {"den", poly_to_string(rf.den)}};
            doc["first_stage"] = vals;
            json eqs = json::array();
            for (const auto& e : step.equations) eqs.push_back(poly_to_string(e));
            doc["equations"] = eqs;
        }
    } else {
        throw InputError("ladder subcommand must be impedance, expand, or synth");
    }
    emit(doc, c, "ladder " + sub);
    return 0;
}

// ---------------------------------------------------------------------------
// reduce
// ---------------------------------------------------------------------------

int cmd_reduce(const std::string& path, bool no_delta_wye, size_t max_steps, const Common& c) {
    json in;
    try {
        in = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw InputError(std::string("network JSON: ") + e.what());
    }
    TwoTerminalNetwork net;
    net.t1 = in.value("t1", 0);
    net.t2 = in.value("t2", 1);
    for (const auto& e : in.at("edges")) {
        RationalFunction z;
        if (e.contains("z"))
            z = RationalFunction(parse_qpoly(e["z"].get<std::string>()));
        else
            z = RationalFunction(parse_qpoly(e.at("num").get<std::string>()),
                                 e.contains("den") ? parse_qpoly(e["den"].get<std::string>())
                                                   : QPoly(1));
        net.add(e.at("name").get<std::string>(), e.at("n1").get<int>(), e.at("n2").get<int>(),
                std::move(z));
    }
    ReduceOptions opt;
    opt.allow_delta_wye = !no_delta_wye;
    if (max_steps) opt.max_steps = max_steps;
    ReductionTrace tr = reduce_network(net, opt);

    json doc;
    json steps = json::array();
    for (const auto& st : tr.steps) {
        json s;
        s["kind"] = step_kind_name(st.kind);
        s["removed"] = st.removed;
        s["created"] = st.created;
        s["equation"] = st.equation;
        steps.push_back(s);
    }
    doc["steps"] = steps;
    doc["complete"] = tr.complete;
    if (tr.complete) {
        doc["impedance"] = {{"num", poly_to_string(tr.impedance.num)},
                            {"den", poly_to_string(tr.impedance.den)}};
    } else {
        json rem = json::array();
        for (const auto& e : tr.remainder.edges) {
            json ej;
            ej["name"] = e.name;
            ej["n1"] = e.n1;
            ej["n2"] = e.n2;
            ej["num"] = poly_to_string(e.z.num);
            ej["den"] = poly_to_string(e.z.den);
            rem.push_back(ej);
        }
        doc["remainder"] = rem;
    }
    emit(doc, c, "reduce");
    return 0;
}

// ---------------------------------------------------------------------------
// bode
// ---------------------------------------------------------------------------

int cmd_bode(const std::string& netlist, const std::string& num, const std::string& den,
             const std::string& f_lo, const std::string& f_hi, int ppd, Common c) {
    TransferFunction tf;
    if (!netlist.empty()) {
        tf = derive_transfer_function(parse_netlist(read_file(netlist)));
    } else if (!num.empty() && !den.empty()) {
        tf.num = parse_qpoly(num);
        tf.den = parse_qpoly(den);
    } else {
        throw InputError("bode needs --netlist or --num/--den");
    }
    std::vector<BodeSample> samples = bode_samples(tf, parse_rat(f_lo), parse_rat(f_hi), ppd);
    if (c.format == "json") c.format = "csv"; // CSV is the natural default here

    if (c.format == "csv") {
        std::ostream* os = &std::cout;
        std::ofstream f;
        if (!c.out.empty()) {
            f.open(c.out);
            if (!f) throw InputError("cannot write " + c.out);
            os = &f;
        }
        *os << "frequency_hz,magnitude_db,phase_deg,at_pole\n";
        for (const auto& s : samples)
            *os << rat_to_decimal(s.frequency_hz, 6) << "," << s.magnitude_db << ","
                << s.phase_deg << "," << (s.at_pole ? 1 : 0) << "\n";
        return 0;
    }
    json doc;
    json arr = json::array();
    for (const auto& s : samples) {
        json e;
        e["frequency_hz"] = rat_to_decimal(s.frequency_hz, 6);
        e["magnitude_db"] = s.magnitude_db;
        e["phase_deg"] = s.phase_deg;
        if (s.at_pole) e["at_pole"] = true;
        arr.push_back(e);
    }
    doc["samples"] = arr;
    emit(doc, c, "bode");
    return 0;
}

// ---------------------------------------------------------------------------
// groebner
// ---------------------------------------------------------------------------

int cmd_groebner(const std::string& path, const std::string& order, const Common& c) {
    json in;
    try {
        in = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw InputError(std::string("system JSON: ") + e.what());
    }
    PolySystem ps;
    for (const auto& p : in.at("polys")) ps.generators.push_back(parse_qpoly(p.get<std::string>()));
    ps.unknowns = sym_list(in.at("unknowns"));
    if (in.contains("parameters")) ps.parameters = sym_list(in["parameters"]);

    GroebnerBasis gb;
    if (order == "lex")
        eliminate(ps, {}, c.budget(), &gb);
    else
        gb = buchberger(ps, grevlex_order(ps.order_high_to_low()), c.budget());

    json doc;
    doc["order"] = order;
    json polys = json::array();
    for (const auto& p : gb.polys) polys.push_back(poly_to_string(p));
    doc["basis"] = polys;
    doc["basis_size"] = gb.polys.size();
    doc["zero_dimensional"] = is_zero_dimensional(gb, ps.unknowns);
    emit(doc, c, "groebner");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symcirc: exact symbolic-numeric analog circuit design"};
    app.require_subcommand(1);
    Common c;

    // analyze
    auto* analyze = app.add_subcommand("analyze", "netlist -> symbolic transfer function");
    std::string an_path;
    std::vector<std::string> an_subst;
    analyze->add_option("netlist", an_path, "netlist file")->required();
    analyze->add_option("--subst", an_subst, "substitute name=value (repeatable)");
    c.attach(analyze);

    // size
    auto* size = app.add_subcommand("size", "solve a sizing spec (JSON)");
    std::string sz_path;
    size->add_option("spec", sz_path, "design spec JSON file")->required();
    c.attach(size);

    // ladder
    auto* ladder = app.add_subcommand("ladder", "LC ladder synthesis and analysis");
    std::string la_sub, la_num, la_den;
    std::vector<std::string> la_stages;
    ladder->add_option("subcommand", la_sub, "impedance | expand | synth")->required();
    ladder->add_option("--stage", la_stages, "ladder stage L,C (repeatable)");
    ladder->add_option("--num", la_num, "impedance numerator polynomial");
    ladder->add_option("--den", la_den, "impedance denominator polynomial");
    c.attach(ladder);

    // reduce
    auto* reduce = app.add_subcommand("reduce", "two-terminal network reduction");
    std::string re_path;
    bool re_no_dw = false;
    size_t re_max_steps = 0;
    reduce->add_option("network", re_path, "network JSON file")->required();
    reduce->add_flag("--no-delta-wye", re_no_dw, "series/parallel moves only");
    reduce->add_option("--max-steps", re_max_steps, "stop after N steps");
    c.attach(reduce);

    // bode
    auto* bode = app.add_subcommand("bode", "frequency response samples");
    std::string bo_net, bo_num, bo_den, bo_flo, bo_fhi;
    int bo_ppd = 20;
    bode->add_option("f_lo", bo_flo, "start frequency (Hz)")->required();
    bode->add_option("f_hi", bo_fhi, "end frequency (Hz)")->required();
    bode->add_option("--netlist", bo_net, "numeric netlist file");
    bode->add_option("--num", bo_num, "numerator polynomial in s");
    bode->add_option("--den", bo_den, "denominator polynomial in s");
    bode->add_option("--ppd", bo_ppd, "points per decade")->check(CLI::PositiveNumber);
    c.attach(bode);

    // groebner
    auto* groe = app.add_subcommand("groebner", "Groebner basis of a polynomial system");
    std::string gr_path, gr_order = "lex";
    groe->add_option("system", gr_path, "system JSON file")->required();
    groe->add_option("--order", gr_order, "monomial order")
        ->check(CLI::IsMember({"lex", "grevlex"}));
    c.attach(groe);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(an_path, an_subst, c);
        if (*size) return cmd_size(sz_path, c);
        if (*ladder) return cmd_ladder(la_sub, la_stages, la_num, la_den, c);
        if (*reduce) return cmd_reduce(re_path, re_no_dw, re_max_steps, c);
        if (*bode) return cmd_bode(bo_net, bo_num, bo_den, bo_flo, bo_fhi, bo_ppd, c);
        if (*groe) return cmd_groebner(gr_path, gr_order, c);
    } catch (const BudgetExceeded& e) {
        std::cerr << "resource budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const NetlistError& e) {
        std::cerr << "netlist error: " << e.what() << "\n";
        return 2;
    } catch (const LadderError& e) {
        std::cerr << "ladder error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 4;
}
