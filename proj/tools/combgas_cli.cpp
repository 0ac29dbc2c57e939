// combgas: command-line front end. Every report carries a manifest echo so a run can be repeated
// byte for byte; CSV numbers use 17 significant digits.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "combgas/catalog.hpp"
#include "combgas/comb_bec.hpp"
#include "combgas/errors.hpp"
#include "combgas/family.hpp"
#include "combgas/graph_io.hpp"
#include "combgas/secular.hpp"
#include "combgas/spectral.hpp"
#include "combgas/thermo.hpp"

using namespace combgas;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Globals {
    double tol = 1e-10;
    int dense_cap = kDefaultDenseCap;
    int threads = 1;
    std::string out;
    std::string format = "json";
};

// command-local inputs; one instance shared by all subcommands (only one runs)
struct Inputs {
    std::string graph_path;
    std::string family;
    std::vector<std::string> params;
    std::string n = "";
    int window = 2;
    bool laplacian = false;
    double shift = NAN;
    double beta = 1.0;
    double mu = NAN;
    double rho = NAN;
    double gap = NAN;
    double hi = NAN;
    int d = 0;
    double c = 1.0;
    double power = 1.0;
    std::string schedule = "condensate";
    std::string xi, eta;
    bool no_limit = false;
    std::string name;
};

std::string fmt17(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

// Result of one command: scalar fields plus an optional table.
struct Report {
    json doc = json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
    int exit_code = 0;
};

std::string cell(const json& v) {
    if (v.is_number_float()) return fmt17(v.get<double>());
    if (v.is_null()) return "inf";
    if (v.is_string()) return csv_field(v.get<std::string>());
    return csv_field(v.dump());
}

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void emit(const Report& r, const json& manifest, const Globals& g) {
    std::ostringstream os;
    if (g.format == "json") {
        json doc = r.doc;
        doc["manifest"] = manifest;
        if (!r.columns.empty()) {
            json rows = json::array();
            for (const auto& row : r.rows) rows.push_back(row);
            doc["table"] = {{"columns", r.columns}, {"rows", rows}};
        }
        os << doc.dump(2) << '\n';
    } else {
        os << "# manifest " << manifest.dump() << '\n';
        if (r.columns.empty()) {
            os << "key,value\n";
            for (const auto& [k, v] : r.doc.items()) os << csv_field(k) << ',' << cell(v) << '\n';
        } else {
            if (!r.doc.empty()) os << "# result " << r.doc.dump() << '\n';
            for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
            os << '\n';
            for (const auto& row : r.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell(row[i]);
                os << '\n';
            }
        }
    }
    if (g.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(g.out);
        if (!f) throw InputError("cannot write '" + g.out + "'");
        f << os.str();
    }
}

std::map<std::string, std::string> param_map(const std::vector<std::string>& kv) {
    std::map<std::string, std::string> out;
    for (const auto& s : kv) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw InputError("--param expects key=value, got '" + s + "'");
        out[s.substr(0, eq)] = s.substr(eq + 1);
    }
    return out;
}

GraphFamily family_of(const Inputs& in) {
    if (in.family.empty()) throw InputError("--family is required");
    return parse_family(in.family, param_map(in.params));
}

// "6", "4,6,8" or "4:8:2"
std::vector<int> parse_ns(const std::string& s, std::vector<int> def) {
    if (s.empty()) return def;
    std::vector<int> out;
    auto to_i = [&](const std::string& t) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            return v;
        } catch (const std::exception&) {
            throw InputError("--n: bad integer '" + t + "' in '" + s + "'");
        }
    };
    if (s.find(':') != std::string::npos) {
        std::vector<int> p;
        std::stringstream ss(s);
        for (std::string t; std::getline(ss, t, ':');) p.push_back(to_i(t));
        if (p.size() < 2 || p.size() > 3) throw InputError("--n range must be lo:hi or lo:hi:step");
        const int step = p.size() == 3 ? p[2] : 1;
        if (step < 1 || p[1] < p[0]) throw InputError("--n range must be increasing with a positive step");
        for (int n = p[0]; n <= p[1]; n += step) out.push_back(n);
    } else {
        std::stringstream ss(s);
        for (std::string t; std::getline(ss, t, ',');) out.push_back(to_i(t));
    }
    for (int n : out)
        if (n < 1) throw InputError("--n values must be >= 1");
    return out;
}

int single_n(const Inputs& in, int def) {
    const auto ns = parse_ns(in.n, {def});
    if (ns.size() != 1) throw InputError("--n takes a single value for this command");
    return ns[0];
}

// ||A|| of the infinite graph behind a family
double infinite_norm(const GraphFamily& f, double tol) {
    switch (f.kind) {
        case FamilyKind::chain:
        case FamilyKind::fibers: return 2.0;
        case FamilyKind::lattice_box: return 2.0 * f.d;
        case FamilyKind::comb: return comb_norm(f.d);
        case FamilyKind::catalog:
            if (catalog_has_closed_form(f.catalog_name, f.params)) return catalog_expected(f.catalog_name, f.params);
            return solve_secular(catalog_system(f.catalog_name, f.params), catalog_max_degree(f.catalog_name, f.params), tol)
                .lambda0;
    }
    return 0.0;
}

struct SystemInfo {
    std::string name;
    Params params;
};
SystemInfo secular_of(const GraphFamily& f) {
    if (f.kind == FamilyKind::catalog) return {f.catalog_name, f.params};
    if (f.kind == FamilyKind::comb) return {"comb", {{"d", f.d}}};
    throw InputError("family '" + f.describe() + "' has no secular system (use catalog:<name> or comb)");
}

json label_json(const Label& l) { return json(l); }

Report cmd_build(const Inputs& in) {
    Report r;
    Graph g;
    if (!in.graph_path.empty()) g = load_graph_description(in.graph_path).assemble().graph;
    else g = family_of(in).build(single_n(in, 4));
    r.doc = graph_to_json(g);
    r.doc["vertex_count"] = g.vertex_count();
    r.doc["edge_count"] = g.edge_count();
    r.columns = {"u", "v", "multiplicity", "u_label", "v_label"};
    for (auto [u, v] : g.edges())
        r.rows.push_back({u, v, g.multiplicity(u, v), label_string(g.label(u)), label_string(g.label(v))});
    // the table repeats the edges; keep JSON output compact
    r.doc.erase("edges");
    return r;
}

Report cmd_norm(const Inputs& in, const Globals& g) {
    Report r;
    if (!in.graph_path.empty()) {
        const auto pg = load_graph_description(in.graph_path).assemble();
        const auto s = top_eigenpair(pg.graph, g.tol);
        r.doc["norm"] = s.top_eigenvalue;
        r.doc["residual"] = s.residual;
        r.doc["vertex_count"] = pg.graph.vertex_count();
        return r;
    }
    const auto f = family_of(in);
    const auto rep = norm_sequence(f, single_n(in, 8), in.window, g.tol);
    r.doc["family"] = f.describe();
    r.doc["extrapolated_norm"] = rep.extrapolated_norm.value;
    r.doc["extrapolation_uncertainty"] = rep.extrapolated_norm.uncertainty;
    json pf = json::array();
    for (const auto& [l, v] : rep.pf_pointwise) pf.push_back({{"label", label_json(l)}, {"value", v}});
    r.doc["pf_pointwise"] = pf;
    if (f.kind == FamilyKind::catalog || f.kind == FamilyKind::comb) {
        const auto sys = secular_of(f);
        const auto sol = solve_secular(catalog_system(sys.name, sys.params), catalog_max_degree(sys.name, sys.params), g.tol);
        r.doc["lambda0"] = sol.lambda0;
        r.doc["secular_status"] = sol.status == SecularStatus::root_found ? "root_found" : "no_root_in_bracket";
        if (catalog_has_closed_form(sys.name, sys.params)) r.doc["closed_form"] = catalog_expected(sys.name, sys.params);
    }
    r.columns = {"n", "norm"};
    for (std::size_t i = 0; i < rep.ns.size(); ++i) r.rows.push_back({rep.ns[i], rep.norms[i]});
    return r;
}

Report cmd_spectrum(const Inputs& in, const Globals& g) {
    Report r;
    std::vector<double> ev;
    if (!in.graph_path.empty()) {
        const auto gr = load_graph_description(in.graph_path).assemble().graph;
        ev = in.laplacian ? laplacian_spectrum(gr, g.dense_cap) : dense_spectrum(gr, g.dense_cap);
    } else {
        const auto f = family_of(in);
        const int n = single_n(in, 4);
        ev = in.laplacian ? family_laplacian_spectrum(f, n, g.dense_cap) : family_spectrum(f, n, g.dense_cap);
    }
    r.doc["operator"] = in.laplacian ? "laplacian" : "adjacency";
    r.doc["count"] = ev.size();
    r.columns = {"index", "eigenvalue"};
    for (std::size_t i = 0; i < ev.size(); ++i) r.rows.push_back({i, ev[i]});
    return r;
}

Report cmd_secular(const Inputs& in, const Globals& g, bool hidden) {
    Report r;
    const auto sys = secular_of(family_of(in));
    const auto s = catalog_system(sys.name, sys.params);
    const double hi = std::isnan(in.hi) ? catalog_max_degree(sys.name, sys.params) : in.hi;
    const auto sol = solve_secular(s, hi, g.tol);
    r.doc["system"] = sys.name;
    r.doc["params"] = sys.params;
    r.doc["lambda0"] = sol.lambda0;
    r.doc["status"] = sol.status == SecularStatus::root_found ? "root_found" : "no_root_in_bracket";
    r.doc["bracket"] = {sol.lo, sol.hi};
    if (catalog_has_closed_form(sys.name, sys.params)) r.doc["closed_form"] = catalog_expected(sys.name, sys.params);
    if (hidden) {
        const double radius = catalog_base_radius(sys.name, sys.params);
        const auto v = hidden_spectrum_verdict(sol, radius, 1e3 * g.tol);
        r.doc["base_radius"] = radius;
        r.doc["hidden"] = v.hidden;
        r.doc["gap"] = v.gap;
        return r;
    }
    r.doc["pf_z"] = sol.pf_z;
    r.columns = {"lambda", "pf_eigenvalue"};
    for (auto [lam, e] : sol.trace) r.rows.push_back({lam, e});
    return r;
}

double shift_of(const Inputs& in, const GraphFamily& f, const Globals& g) {
    return std::isnan(in.shift) ? infinite_norm(f, g.tol) : in.shift;
}

StepMeasure measure_of(const Inputs& in, const Globals& g, double& shift) {
    const auto f = family_of(in);
    shift = shift_of(in, f, g);
    auto ev = family_spectrum(f, single_n(in, 4), g.dense_cap);
    for (double& e : ev) e = shift - e;
    return measure_from_values(std::move(ev), f.describe() + " n=" + in.n);
}

Report cmd_ids(const Inputs& in, const Globals& g) {
    Report r;
    double shift = 0.0;
    const auto m = measure_of(in, g, shift);
    r.doc["shift"] = shift;
    r.doc["atoms"] = m.atoms.size();
    r.doc["origin"] = m.origin;
    r.columns = {"h", "cumulative"};
    for (auto [h, c] : m.steps()) r.rows.push_back({h, c});
    return r;
}

Report cmd_density(const Inputs& in, const Globals& g) {
    Report r;
    if (std::isnan(in.mu)) throw InputError("--mu is required");
    TaggedValue v;
    if (in.n.empty()) {
        if (family_of(in).kind != FamilyKind::chain)
            throw InputError("without --n only the chain family has a closed-form density");
        const double shift = std::isnan(in.shift) ? 2.0 : in.shift;
        v = bose_density_chain(in.beta, shift, in.mu);
        r.doc["shift"] = shift;
        r.doc["measure"] = "arcsine";
    } else {
        double shift = 0.0;
        const auto m = measure_of(in, g, shift);
        v = bose_density(m, in.beta, in.mu);
        r.doc["shift"] = shift;
        r.doc["measure"] = m.origin;
    }
    r.doc["beta"] = in.beta;
    r.doc["mu"] = in.mu;
    r.doc["density"] = num(v.value);
    r.doc["infinite"] = v.infinite;
    return r;
}

Report cmd_critical(const Inputs& in) {
    Report r;
    double gap = in.gap;
    if (std::isnan(gap)) {
        if (in.d < 1) throw InputError("give --gap or the comb dimension --d");
        gap = comb_norm(in.d) - 2.0;
        r.doc["d"] = in.d;
    }
    r.doc["beta"] = in.beta;
    r.doc["norm_gap"] = gap;
    r.doc["critical_density"] = critical_density_shifted(in.beta, gap);
    return r;
}

Report cmd_mu_solve(const Inputs& in, const Globals& g) {
    Report r;
    if (std::isnan(in.rho)) throw InputError("--rho is required");
    double shift = 0.0;
    const auto m = measure_of(in, g, shift);
    const auto s = solve_mu(m, in.beta, in.rho);
    r.doc["shift"] = shift;
    r.doc["beta"] = in.beta;
    r.doc["rho"] = in.rho;
    r.doc["mu"] = s.mu;
    r.doc["density"] = s.density;
    r.doc["e0"] = s.e0;
    r.doc["gap_to_bottom"] = s.e0 - s.mu;
    r.doc["iterations"] = s.iterations;
    return r;
}

Report cmd_transience(const Inputs& in) {
    Report r;
    const auto f = family_of(in);
    const auto t = transience(f);
    r.doc["family"] = f.describe();
    r.doc["verdict"] = verdict_name(t.verdict);
    r.doc["method"] = t.method;
    if (t.verdict == TransienceVerdict::transient) r.doc["green_value"] = t.value;
    r.doc["witness"] = t.witness;
    if (t.verdict == TransienceVerdict::recurrent) r.exit_code = 3;
    return r;
}

Report cmd_bec(const Inputs& in) {
    Report r;
    if (in.d < 1) throw InputError("--d is required (>= 1)");
    CombRunConfig cfg;
    cfg.d = in.d;
    cfg.beta = in.beta;
    cfg.ns = parse_ns(in.n, {4, 6, 8});
    auto& s = cfg.schedule;
    if (in.schedule == "condensate") {
        s.kind = MuSchedule::Kind::condensate_scaled;
        s.c = in.c;
    } else if (in.schedule == "power") {
        s.kind = MuSchedule::Kind::power;
        s.power = in.power;
    } else if (in.schedule == "density") {
        if (std::isnan(in.rho)) throw InputError("--schedule density needs --rho");
        s.kind = MuSchedule::Kind::fixed_density;
        s.rho = in.rho;
    } else {
        throw InputError("--schedule must be condensate, power or density");
    }
    std::string origin = "0";
    for (int i = 0; i < in.d; ++i) origin += ",0";
    const std::string xs = in.xi.empty() ? origin : in.xi;
    const auto xi = parse_fock_site(xs, in.d);
    const auto eta = parse_fock_site(in.eta.empty() ? xs : in.eta, in.d);
    r.columns = {"n", "mu", "eps", "smooth", "line", "q", "condensate", "total_re", "total_im", "kprime"};
    for (int n : cfg.ns) {
        const auto b = two_point_finite(cfg, n, xi, eta);
        const auto k = condensate_coefficient(cfg.d, cfg.beta, n, b.mu, xi);
        r.rows.push_back({n, b.mu, b.eps, b.smooth.real(), b.line.real(), b.q.real(), b.condensate.real(),
                          b.total.real(), b.total.imag(), k.kprime});
    }
    r.doc["d"] = cfg.d;
    r.doc["beta"] = cfg.beta;
    r.doc["schedule"] = in.schedule;
    if (in.no_limit) return r;
    if (s.kind != MuSchedule::Kind::condensate_scaled) {
        r.doc["limit"] = "only the condensate-scaled schedule has a two-point limit";
        return r;
    }
    try {
        const auto L = two_point_limit(cfg.d, cfg.beta, s.c, xi, eta);
        r.doc["limit"] = {{"smooth", L.smooth.real()},
                          {"line", L.line.real()},
                          {"q", L.q.real()},
                          {"condensate", L.condensate.real()},
                          {"total_re", L.total.real()},
                          {"total_im", L.total.imag()},
                          {"smooth_uncertainty", L.smooth_uncertainty},
                          {"slope_in_c", (L.overlap_eta * L.overlap_xi).real() / cfg.beta},
                          {"raw_overlap_product", (L.raw_overlap_eta * L.raw_overlap_xi).real()}};
    } catch (const DivergenceError& e) {
        r.doc["limit"] = nullptr;
        r.doc["verdict"] = "diverges";
        r.doc["reason"] = e.what();
        r.exit_code = 3;
    }
    return r;
}

Report cmd_catalog(const Inputs& in) {
    Report r;
    std::vector<std::string> names = in.name.empty() ? catalog_names() : std::vector<std::string>{in.name};
    r.columns = {"name", "params", "closed_form", "base_radius", "max_degree"};
    for (const auto& name : names) {
        Params p = catalog_default_params(name);
        if (!in.name.empty())
            for (const auto& [k, v] : param_map(in.params)) {
                if (!p.count(k)) throw InputError("parameter '" + k + "' not understood by catalog entry '" + name + "'");
                p[k] = std::stoi(v);
            }
        const bool cf = catalog_has_closed_form(name, p);
        r.rows.push_back({name, json(p).dump(), cf ? json(catalog_expected(name, p)) : json(nullptr),
                          catalog_base_radius(name, p), catalog_max_degree(name, p)});
    }
    r.doc["count"] = names.size();
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combgas: spectra, secular norms and Bose gases on perturbed and comb graphs"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Globals g;
    Inputs in;
    app.add_option("--tol", g.tol, "solver tolerance")->capture_default_str();
    app.add_option("--dense-cap", g.dense_cap, "largest vertex count for dense eigensolves")->capture_default_str();
    app.add_option("--threads", g.threads, "worker count (results do not depend on it)")
        ->envname("COMBGAS_THREADS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", g.out, "write the report here instead of stdout");
    app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    auto family_opts = [&](CLI::App* s) {
        s->add_option("--family", in.family, "chain | lattice | comb | fibers | catalog:<name>");
        s->add_option("--param", in.params, "family parameter key=value (repeatable)");
    };
    auto* build = app.add_subcommand("build", "assemble a graph and print vertices and edges");
    family_opts(build);
    build->add_option("--graph", in.graph_path, "JSON graph description");
    build->add_option("--n", in.n, "volume index");

    auto* norm = app.add_subcommand("norm", "||A_n|| sequence, extrapolation and secular norm");
    family_opts(norm);
    norm->add_option("--graph", in.graph_path, "JSON graph description (single finite graph)");
    norm->add_option("--n", in.n, "largest volume index (default 8)");
    norm->add_option("--window", in.window, "PF values reported for labels with |coordinate| <= window");

    auto* spectrum = app.add_subcommand("spectrum", "all eigenvalues of a finite volume");
    family_opts(spectrum);
    spectrum->add_option("--graph", in.graph_path, "JSON graph description");
    spectrum->add_option("--n", in.n, "volume index");
    spectrum->add_flag("--laplacian", in.laplacian, "graph Laplacian instead of adjacency");

    auto* secular = app.add_subcommand("secular", "solve the secular equation of a catalog system");
    family_opts(secular);
    secular->add_option("--hi", in.hi, "upper end of the bracket (default: max degree)");

    auto* hidden = app.add_subcommand("hidden", "hidden-spectrum verdict and gap");
    family_opts(hidden);
    hidden->add_option("--hi", in.hi, "upper end of the bracket (default: max degree)");

    auto* ids = app.add_subcommand("ids", "empirical integrated density of states of H = shift - A_n");
    family_opts(ids);
    ids->add_option("--n", in.n, "volume index");
    ids->add_option("--shift", in.shift, "default: norm of the infinite graph");

    auto* density = app.add_subcommand("density", "Bose density at (beta, mu)");
    family_opts(density);
    density->add_option("--n", in.n, "volume index (omit for the chain arcsine law)");
    density->add_option("--shift", in.shift, "default: norm of the infinite graph");
    density->add_option("--beta", in.beta)->capture_default_str();
    density->add_option("--mu", in.mu)->required();

    auto* critical = app.add_subcommand("critical", "critical density of the shifted chain");
    critical->add_option("--beta", in.beta)->capture_default_str();
    critical->add_option("--gap", in.gap, "norm gap (mu = -gap)");
    critical->add_option("--d", in.d, "comb dimension: gap = 2 sqrt(d^2+1) - 2");

    auto* mu_solve = app.add_subcommand("mu-solve", "chemical potential for a given density");
    family_opts(mu_solve);
    mu_solve->add_option("--n", in.n, "volume index");
    mu_solve->add_option("--shift", in.shift, "default: norm of the infinite graph");
    mu_solve->add_option("--beta", in.beta)->capture_default_str();
    mu_solve->add_option("--rho", in.rho)->required();

    auto* trans = app.add_subcommand("transience", "transience verdict (exit 3 when recurrent)");
    family_opts(trans);

    auto* bec = app.add_subcommand("bec", "comb two-point function sweep and limit");
    bec->add_option("--d", in.d)->required();
    bec->add_option("--beta", in.beta)->capture_default_str();
    bec->add_option("--c", in.c, "condensate-scaled schedule mu_n = -1/(c (2n+1)^d)")->capture_default_str();
    bec->add_option("--n", in.n, "volumes: 6 | 4,6,8 | 4:8:2");
    bec->add_option("--schedule", in.schedule, "condensate | power | density")->capture_default_str();
    bec->add_option("--power", in.power, "power schedule mu_n = -n^-p");
    bec->add_option("--rho", in.rho, "fixed density");
    bec->add_option("--xi", in.xi, "site label j1,...,jd,j");
    bec->add_option("--eta", in.eta, "site label (default: xi)");
    bec->add_flag("--no-limit", in.no_limit, "skip the infinite-volume limit");

    auto* catalog = app.add_subcommand("catalog", "list catalog entries");
    catalog->add_option("--name", in.name, "one entry only");
    catalog->add_option("--param", in.params, "parameter key=value (with --name)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    json manifest = {{"tool", "combgas"},
                     {"version", kVersion},
                     {"command", app.get_subcommands().front()->get_name()},
                     {"argv", std::vector<std::string>(argv + 1, argv + argc)},
                     {"tolerances", {{"tol", g.tol}, {"dense_cap", g.dense_cap}}},
                     {"format", g.format}};
    try {
        Report r;
        if (*build) r = cmd_build(in);
        else if (*norm) r = cmd_norm(in, g);
        else if (*spectrum) r = cmd_spectrum(in, g);
        else if (*secular) r = cmd_secular(in, g, false);
        else if (*hidden) r = cmd_secular(in, g, true);
        else if (*ids) r = cmd_ids(in, g);
        else if (*density) r = cmd_density(in, g);
        else if (*critical) r = cmd_critical(in);
        else if (*mu_solve) r = cmd_mu_solve(in, g);
        else if (*trans) r = cmd_transience(in);
        else if (*bec) r = cmd_bec(in);
        else if (*catalog) r = cmd_catalog(in);
        emit(r, manifest, g);
        return r.exit_code;
    } catch (const InputError& e) {
        std::cerr << "combgas: input error: " << e.what() << '\n';
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "combgas: numeric failure: " << e.what() << '\n';
        return 2;
    } catch (const DivergenceError& e) {
        std::cerr << "combgas: diverges: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "combgas: numeric failure: " << e.what() << '\n';
        return 2;
    }
}
