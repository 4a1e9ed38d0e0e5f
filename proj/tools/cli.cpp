#include "cli.hpp"

#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "isores/hermite.hpp"
#include "isores/invariants.hpp"
#include "isores/wavelets.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace isores::cli {

namespace {

struct TolKey {
    const char* name;
    double Tolerances::*field;
};

constexpr TolKey tol_table[] = {
    {"eigen", &Tolerances::eigen},
    {"ode", &Tolerances::ode},
    {"gabor", &Tolerances::gabor},
    {"iso", &Tolerances::iso},
    {"tail", &Tolerances::tail},
    {"divergence-ratio", &Tolerances::divergence_ratio},
    {"divergence-rel", &Tolerances::divergence_rel},
};

const TolKey& find_key(std::string_view key) {
    for (const auto& k : tol_table) {
        if (key == k.name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown tolerance '" + std::string(key) + "'");
}

}  // namespace

const std::vector<std::string>& tolerance_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& t : tol_table) {
            k.emplace_back(t.name);
        }
        return k;
    }();
    return keys;
}

void set_tolerance(Tolerances& tol, std::string_view key, double value) {
    const TolKey& k = find_key(key);
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument("tolerance '" + std::string(key) + "' must be a positive number");
    }
    tol.*(k.field) = value;
}

double get_tolerance(const Tolerances& tol, std::string_view key) { return tol.*(find_key(key).field); }

Grid RunConfig::grid() const {
    return Grid::symmetric(t_max.value_or(default_t_max), n_points.value_or(default_n_points));
}

Grid RunConfig::grid_for(std::string_view entry) const {
    if (t_max || n_points) {
        const Grid d = catalog_default_grid(entry);
        return Grid::symmetric(t_max.value_or(d.t_max()), n_points.value_or(d.size()));
    }
    return catalog_default_grid(entry);
}

DivergencePolicy RunConfig::divergence() const {
    DivergencePolicy p;
    p.ratio_threshold = tol.divergence_ratio;
    p.relative_increment = tol.divergence_rel;
    return p;
}

namespace {

std::string status(bool ok) { return ok ? "PASS" : "FAIL"; }

// sqrt(2 pi), -j sqrt(2 pi), ...
std::string eigenvalue_label(int quarter_turns) {
    static const char* labels[] = {"sqrt(2pi)", "-j sqrt(2pi)", "-sqrt(2pi)", "j sqrt(2pi)"};
    return labels[quarter_turns & 3];
}

int quarter_turns_of(cplx lambda) {
    const auto all = admissible_eigenvalues();
    for (int k = 0; k < 4; ++k) {
        if (all[static_cast<std::size_t>(k)] == lambda) {
            return k;
        }
    }
    return 0;
}

Value optional_number(const std::optional<double>& x) { return x ? Value(*x) : Value(Absent{}); }

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    GridPolicy policy;
    policy.divergence = cfg.divergence();
    if (cfg.t_max) {
        policy.divergence.base_half_width = *cfg.t_max;
    }
    const auto rows = table1(policy);
    std::vector<Record> records;
    bool all_pass = true;
    for (const auto& r : rows) {
        const RowCheck c = check_row(r, reference_row(r.wavelet));
        if (!c.annotated) {
            all_pass = all_pass && c.pass();
        }
        Record rec;
        rec.add("wavelet", r.wavelet)
            .add("m2_t", r.m2_t)
            .add("m2_w", r.m2_w)
            .add("delta_t", r.delta_t)
            .add("delta_w", r.delta_w)
            .add("paper_factor", optional_number(r.paper_factor))
            .add("equalizing_factor", optional_number(r.equalizing_factor))
            .add("notes", r.notes);
        if (cfg.format != Format::csv) {
            rec.add("check", c.annotated ? std::string("annotated") : status(c.pass()));
        }
        records.push_back(std::move(rec));
    }
    write_table(out, cfg.format, records);
    return all_pass ? exit_ok : exit_mismatch;
}

int cmd_eigen(int n, const RunConfig& cfg, std::ostream& out) {
    const Grid g = cfg.grid();
    const FourierConvention conv = cfg.convention();
    const Signal s = psi(n, g);
    const EigenfunctionSpec spec = eigenfunction_spec(n, conv);
    const EigenReport e = eigencheck(s, conv, {cfg.tol.eigen, 0.0});
    const double ode = ode_residual(s, spec.kappa);
    const MomentReport m = moments(s, conv, cfg.divergence());
    const double expected_gabor = (2.0 * n + 1.0) / 2.0;

    const bool eig_ok = e.best_eigenvalue == spec.eigenvalue && e.is_invariant;
    const bool ode_ok = ode < cfg.tol.ode;
    const bool gabor_ok = m.finite() && std::abs(m.gabor_product - expected_gabor) < cfg.tol.gabor;

    Record r;
    r.add("n", static_cast<long long>(n))
        .add("eigenvalue", eigenvalue_label(e.quarter_turns))
        .add("eigenvalue_re", e.best_eigenvalue.real())
        .add("eigenvalue_im", e.best_eigenvalue.imag())
        .add("expected_eigenvalue", eigenvalue_label(quarter_turns_of(spec.eigenvalue)))
        .add("eigen_residual", Small{e.relative_residual})
        .add("kappa", spec.kappa)
        .add("ode_residual", Small{ode})
        .add("gabor_product", m.gabor_product)
        .add("expected_gabor", expected_gabor)
        .add("status", status(eig_ok && ode_ok && gabor_ok));
    write_record(out, cfg.format, r);
    return eig_ok && ode_ok && gabor_ok ? exit_ok : exit_mismatch;
}

int cmd_invariant(const std::string& name, const RunConfig& cfg, std::ostream& out) {
    const CatalogEntry entry = catalog(name, cfg.grid_for(name));
    Record r;
    r.add("name", entry.name).add("definition", entry.definition);
    if (!entry.numeric) {
        r.add("numeric", false).add("status", std::string("symbolic"));
        write_record(out, cfg.format, r);
        return exit_ok;
    }
    const FourierConvention conv = cfg.convention();
    const EigenReport e = eigencheck(*entry.signal, conv, {entry.expected_tolerance, 0.0});
    const bool ok = e.best_eigenvalue == entry.expected_eigenvalue && e.is_invariant;
    const Grid& g = entry.signal->grid();
    r.add("numeric", true)
        .add("t_max", g.t_max())
        .add("n_points", static_cast<long long>(g.size()))
        .add("eigenvalue", eigenvalue_label(e.quarter_turns))
        .add("expected_eigenvalue", eigenvalue_label(quarter_turns_of(entry.expected_eigenvalue)))
        .add("residual", Small{e.relative_residual})
        .add("tolerance", Small{entry.expected_tolerance})
        .add("status", status(ok));
    write_record(out, cfg.format, r);
    return ok ? exit_ok : exit_mismatch;
}

bool is_wavelet(const std::string& name) {
    for (const auto& w : wavelet_names()) {
        if (w == name) {
            return true;
        }
    }
    return false;
}

int cmd_isoscale(const std::string& name, const RunConfig& cfg, std::ostream& out) {
    const FourierConvention conv = cfg.convention();
    Signal s = [&] {
        if (is_wavelet(name)) {
            return sample(name, cfg.grid());
        }
        const CatalogEntry entry = catalog(name, cfg.grid_for(name));
        if (!entry.signal) {
            throw std::invalid_argument("'" + name + "' has no samples to rescale");
        }
        return *entry.signal;
    }();

    Record r;
    r.add("name", name);
    const MomentReport before = moments(s, conv, cfg.divergence());
    if (!before.finite()) {
        r.add("a", Absent{})
            .add("paper_factor", Absent{})
            .add("delta_t_before", before.delta_t)
            .add("delta_w_before", before.delta_w)
            .add("delta_t_after", Absent{})
            .add("delta_w_after", Absent{})
            .add("status", std::string(before.divergent_t ? "divergent in time" : "divergent in frequency"));
        write_record(out, cfg.format, r);
        return exit_mismatch;
    }
    const IsoScaleResult iso = isoresolution_scale(s, conv);
    const double gap = std::abs(iso.after.delta_t - iso.after.delta_w) / iso.after.delta_w;
    const bool ok = gap < cfg.tol.iso;
    r.add("a", iso.a)
        .add("paper_factor", std::sqrt(before.m2_t / before.m2_w))
        .add("delta_t_before", before.delta_t)
        .add("delta_w_before", before.delta_w)
        .add("delta_t_after", iso.after.delta_t)
        .add("delta_w_after", iso.after.delta_w)
        .add("relative_gap", Small{gap})
        .add("status", status(ok));
    write_record(out, cfg.format, r);
    return ok ? exit_ok : exit_mismatch;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const auto results = run_properties(cfg);
    std::vector<Record> rows;
    bool all = true;
    for (const auto& p : results) {
        all = all && p.passed;
        Record r;
        r.add("status", status(p.passed))
            .add("module", p.module)
            .add("property", p.property)
            .add("value", Small{p.value})
            .add("relation", p.relation)
            .add("limit", Small{p.limit})
            .add("detail", p.detail);
        rows.push_back(std::move(r));
    }
    write_table(out, cfg.format, rows);
    return all ? exit_ok : exit_mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fourier eigenfunctions, time-frequency resolution and wavelet isoresolution"};
    app.name("isores");
    app.require_subcommand(1);

    RunConfig cfg;
    double t_max = 0.0;
    std::size_t n_points = 0;
    std::string format = "text";
    std::vector<std::string> tolerances;

    auto* t_opt = app.add_option("--t-max", t_max, "Half width of the symmetric time grid")
                      ->check(CLI::PositiveNumber);
    auto* n_opt = app.add_option("--n-points", n_points, "Grid nodes (even counts are bumped to odd)")
                      ->check(CLI::Range(std::size_t{16}, std::size_t{1} << 24));
    app.add_option("--kernel-sign", cfg.kernel_sign, "Sign of j w t in the forward kernel")
        ->check(CLI::IsMember({-1, 1}));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--tolerance", tolerances, "Override a tolerance, KEY=VAL")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

    auto* table = app.add_subcommand("table", "Second moments and isoresolution factors of the wavelet catalog");
    int order = 0;
    auto* eigen = app.add_subcommand("eigen", "Eigenvalue, ODE residual and Gabor product of psi_N");
    eigen->add_option("N", order, "Order, 0..20")->required();
    std::string inv_name;
    auto* invariant = app.add_subcommand("invariant", "Eigencheck of a catalog invariant (h1, sech, h2-symbolic)");
    invariant->add_option("NAME", inv_name)->required();
    std::string iso_name;
    auto* isoscale = app.add_subcommand("isoscale", "Rescale a wavelet or invariant to equal spreads");
    isoscale->add_option("NAME", iso_name)->required();
    auto* verify = app.add_subcommand("verify", "Run the property suite");

    for (auto* sub : {table, eigen, invariant, isoscale, verify}) {
        sub->fallthrough();
    }

    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    try {
        app.parse(reversed_args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "isores: " << e.what() << '\n';
        return exit_usage;
    }

    if (*t_opt) {
        cfg.t_max = t_max;
    }
    if (*n_opt) {
        cfg.n_points = n_points;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
    for (const auto& kv : tolerances) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            err << "isores: --tolerance expects KEY=VAL, got '" << kv << "'\n";
            return exit_usage;
        }
        try {
            std::size_t used = 0;
            const std::string num = kv.substr(eq + 1);
            const double v = std::stod(num, &used);
            if (used != num.size()) {
                throw std::invalid_argument("trailing characters");
            }
            set_tolerance(cfg.tol, kv.substr(0, eq), v);
        } catch (const std::exception& e) {
            err << "isores: bad tolerance '" << kv << "': " << e.what() << '\n';
            return exit_usage;
        }
    }

    if (*eigen && (order < 0 || order > max_psi_order)) {
        err << "isores: eigen order must lie in [0, " << max_psi_order << "]\n";
        return exit_usage;
    }
    if (*invariant) {
        bool known = false;
        for (const auto& n : invariant_names()) {
            known = known || n == inv_name;
        }
        if (!known) {
            err << "isores: unknown invariant '" << inv_name << "'\n";
            return exit_usage;
        }
    }
    if (*isoscale) {
        bool known = is_wavelet(iso_name);
        for (const auto& n : invariant_names()) {
            known = known || (n == iso_name && n != "h2-symbolic");
        }
        if (!known) {
            err << "isores: unknown or non-numeric catalog name '" << iso_name << "'\n";
            return exit_usage;
        }
    }

    // Everything past parsing runs with buffered output so a failure leaves
    // no partial report behind.
    std::ostringstream buf;
    int code = exit_ok;
    try {
        if (*table) {
            code = cmd_table(cfg, buf);
        } else if (*eigen) {
            code = cmd_eigen(order, cfg, buf);
        } else if (*invariant) {
            code = cmd_invariant(inv_name, cfg, buf);
        } else if (*isoscale) {
            code = cmd_isoscale(iso_name, cfg, buf);
        } else {
            code = cmd_verify(cfg, buf);
        }
    } catch (const std::invalid_argument& e) {
        err << "isores: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "isores: " << e.what() << '\n';
        return exit_mismatch;
    }
    out << buf.str();
    return code;
}

}  // namespace isores::cli
