#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "spinon/aminus.hpp"
#include "spinon/dispersion.hpp"
#include "spinon/dsf.hpp"
#include "spinon/errors.hpp"
#include "spinon/gfunction.hpp"
#include "spinon/kinematics.hpp"
#include "spinon/version.hpp"
#include "spinon_cli/cli.hpp"

namespace spinon::cli {

namespace {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
};

struct Failure {
    int code = 1;
    std::string message;
};

int exit_code(const std::exception& e) {
    if (dynamic_cast<const ConvergenceError*>(&e) || dynamic_cast<const DegeneracyError*>(&e)) return 2;
    return 1;
}

// Evaluates f(i) for i < n on up to `threads` workers. Rows come back in index
// order; the lowest failing index is reported.
template <class Row>
std::vector<Row> parallel_map(std::size_t n, int threads, const std::function<Row(std::size_t)>& f,
                              const std::function<std::string(std::size_t)>& where) {
    std::vector<Row> out(n);
    std::vector<std::optional<Failure>> failed(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = f(i);
            } catch (const std::exception& e) {
                failed[i] = Failure{exit_code(e), where(i) + ": " + e.what()};
            }
        }
    };
    int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), n));
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    for (const auto& fl : failed)
        if (fl) throw *fl;
    return out;
}

std::vector<double> linspace(double lo, double hi, long points, const char* name) {
    if (points < 1) throw DomainError(std::string(name) + ": need at least one point");
    if (!(lo <= hi)) throw DomainError(std::string(name) + ": range minimum exceeds maximum");
    std::vector<double> v;
    for (long i = 0; i < points; ++i)
        v.push_back(points == 1 ? lo : (i + 1 == points ? hi : lo + (hi - lo) * i / (points - 1)));
    return v;
}

std::vector<double> axis(const json& c, const std::string& name) {
    if (!c[name].is_null()) return {c[name].get<double>()};
    return linspace(c[name + "_min"].get<double>(), c[name + "_max"].get<double>(),
                    c[name + "_points"].get<long>(), name.c_str());
}

QuadratureSpec quad_of(const json& c) {
    QuadratureSpec q;
    q.abs_tol = c["abs_tol"];
    q.rel_tol = c["rel_tol"];
    q.max_subdivisions = c["max_subdivisions"];
    q.tail_truncation = c["tail_truncation"];
    q.validate();
    return q;
}

ResidueSpec residue_of(const json& c) {
    ResidueSpec r;
    r.m_max = c["m_max"];
    r.tail_tol = c["tail_tol"];
    r.consecutive_small = c["consecutive_small"];
    r.validate();
    return r;
}

std::vector<double> parse_list(const std::string& s, const char* name) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
            throw DomainError(std::string(name) + ": cannot parse '" + item + "'");
        v.push_back(x);
    }
    return v;
}

std::string eps_label(const SpinConfig& c) {
    std::string s;
    for (int e : c.eps) s += (s.empty() ? "" : " ") + std::string(e > 0 ? "+1" : "-1");
    return s;
}

std::string at_wk(double w, double k) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "at w=%.17g k=%.17g", w, k);
    return buf;
}

void check_dsf_point(double w, double k) {
    if (!(k >= 0.0 && k <= 2.0 * kPi)) throw DomainError("k must lie in [0, 2 pi]");
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("w must be finite and non-negative");
}

Table dispersion_table(const json& c) {
    double eps = c["epsilon"];
    if (eps < 0.0) throw DomainError("epsilon must be non-negative");
    Table t{{"beta", "p", "e"}, {}};
    std::optional<XxzParams> xxz;
    if (eps > 0.0) {
        xxz = XxzParams::from_epsilon(eps);
        for (const char* col : {"alpha", "e_xxz", "p_xxz"}) t.columns.push_back(col);
    }
    for (double b : linspace(c["beta_min"], c["beta_max"], c["points"], "beta")) {
        std::vector<json> row = {b, momentum_of_rapidity({b}).p, energy_of_rapidity({b})};
        if (xxz) {
            double alpha = -eps * b / kPi;
            row.insert(row.end(), {alpha, xxz_energy(alpha, *xxz), xxz_momentum(alpha, *xxz)});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table boundaries_table(const json& c) {
    Table t{{"k", "w_l", "w_u"}, {}};
    for (double k : linspace(c["k_min"], c["k_max"], c["k_points"], "k")) {
        Boundaries b = boundaries(k);
        t.rows.push_back({k, b.w_l, b.w_u});
    }
    return t;
}

Table aminus_table(const json& c) {
    QuadratureSpec q = quad_of(c);
    double y = c["y"];
    std::vector<double> xs = linspace(c["x_min"], c["x_max"], c["points"], "x");
    Table t{{"x", "y", "a_minus_sq"}, {}};
    t.rows = parallel_map<std::vector<json>>(
        xs.size(), c["threads"],
        [&](std::size_t i) { return std::vector<json>{xs[i], y, a_minus_sq({xs[i], y}, q)}; },
        [&](std::size_t i) { return "at x=" + json(xs[i]).dump() + " y=" + json(y).dump(); });
    return t;
}

Table gfun_table(const json& c) {
    ResidueSpec r = residue_of(c);
    std::vector<Rapidity> betas;
    for (double b : parse_list(c["betas"], "betas")) betas.push_back({b});
    std::vector<SpinConfig> configs;
    std::string eps = c["eps"];
    if (eps.empty()) {
        configs = admissible_configs(static_cast<int>(betas.size()));
    } else {
        SpinConfig one;
        for (double e : parse_list(eps, "eps")) one.eps.push_back(static_cast<int>(e));
        one.validate();
        configs.push_back(one);
    }
    Table t{{"eps", "re", "im", "abs_sq", "est_error", "depth"}, {}};
    for (const SpinConfig& cfg : configs) {
        GResult g = g_value_detailed(cfg, betas, r);
        t.rows.push_back({eps_label(cfg), g.value.real(), g.value.imag(), std::norm(g.value), g.est_error, g.depth});
    }
    return t;
}

Table dsf2_table(const json& c) {
    QuadratureSpec q = quad_of(c);
    std::string src = c["aminus"];
    if (src != "direct" && src != "table") throw DomainError("aminus must be 'direct' or 'table'");
    AminusSource source = src == "table" ? AminusSource::table : AminusSource::direct;
    std::vector<double> ws = axis(c, "w"), ks = axis(c, "k");
    Table t{{"w", "k", "S2_pm", "S2_zz"}, {}};
    t.rows = parallel_map<std::vector<json>>(
        ws.size() * ks.size(), c["threads"],
        [&](std::size_t i) {
            double w = ws[i % ws.size()], k = ks[i / ws.size()];
            check_dsf_point(w, k);
            double v = s2_pm(w, k, q, source);
            return std::vector<json>{w, k, v, 2.0 * v};
        },
        [&](std::size_t i) { return at_wk(ws[i % ws.size()], ks[i / ws.size()]); });
    return t;
}

Table dsf4_table(const json& c) {
    GridSpec g;
    g.quad = quad_of(c);
    g.residue = residue_of(c);
    g.outer_nodes = c["grid"];
    g.validate();
    std::vector<double> ws = axis(c, "w"), ks = axis(c, "k");
    Table t{{"w", "k", "value", "est_error"}, {}};
    t.rows = parallel_map<std::vector<json>>(
        ws.size() * ks.size(), c["threads"],
        [&](std::size_t i) {
            double w = ws[i % ws.size()], k = ks[i / ws.size()];
            check_dsf_point(w, k);
            DsfPoint p = s4_pm(w, k, g);
            return std::vector<json>{w, k, p.value, p.est_error};
        },
        [&](std::size_t i) { return at_wk(ws[i % ws.size()], ks[i / ws.size()]); });
    return t;
}

Table sumrule_table(const json& c) {
    GridSpec g;
    g.k_points = c["grid_k"];
    g.w_points = c["grid_w"];
    g.quad = quad_of(c);
    SumRuleReport r = sum_rule_fraction(g);
    return {{"integrated_intensity", "k_points", "w_points", "refinement_delta", "alternative_scheme", "fraction"},
            {{r.integrated_intensity, r.grid_resolution.first, r.grid_resolution.second, r.refinement_delta,
              r.alternative_scheme, r.fraction}}};
}

void put_number(std::ostream& os, const json& v) {
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
        os << buf;
    } else if (v.is_string()) {
        os << v.get<std::string>();
    } else {
        os << v.dump();
    }
}

void write_table(const Table& t, const json& c, std::ostream& os) {
    std::string hash = config_hash(c);
    if (c["format"] == "json") {
        json doc = {{"tool", "spinon-dsf"}, {"version", kVersion}, {"config_hash", hash}, {"config", c}};
        doc["columns"] = t.columns;
        json records = json::array();
        for (const auto& row : t.rows) {
            json rec = json::object();
            for (std::size_t i = 0; i < row.size(); ++i) rec[t.columns[i]] = row[i];
            records.push_back(rec);
        }
        doc["records"] = records;
        os << doc.dump(2) << '\n';
        return;
    }
    os << "# spinon-dsf " << kVersion << " config=" << hash << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            put_number(os, row[i]);
        }
        os << '\n';
    }
}

int run_selfcheck(std::ostream& out) {
    int failed = 0;
    std::vector<CheckLine> lines = selfcheck();
    for (const CheckLine& l : lines) {
        out << (l.pass ? "PASS " : "FAIL ") << l.name;
        if (!l.detail.empty()) out << "  " << l.detail;
        out << '\n';
        failed += l.pass ? 0 : 1;
    }
    out << "selfcheck: " << lines.size() - failed << "/" << lines.size() << " passed\n";
    return failed ? 3 : 0;
}

}  // namespace

int run(const json& config, std::ostream& out, std::ostream& err) {
    const std::string command = config.at("command");
    try {
        if (config["format"] != "csv" && config["format"] != "json")
            throw DomainError("format must be 'csv' or 'json'");
        if (config["threads"].get<long>() < 1) throw DomainError("threads must be at least 1");
        std::ofstream file;
        std::ostream* os = &out;
        std::string path = config["output"];
        if (path != "-") {
            file.open(path, std::ios::binary);
            if (!file) throw DomainError("cannot open output file '" + path + "'");
            os = &file;
        }
        if (command == "selfcheck") return run_selfcheck(*os);
        Table t;
        if (command == "dispersion") t = dispersion_table(config);
        else if (command == "boundaries") t = boundaries_table(config);
        else if (command == "aminus") t = aminus_table(config);
        else if (command == "gfun") t = gfun_table(config);
        else if (command == "dsf2") t = dsf2_table(config);
        else if (command == "dsf4") t = dsf4_table(config);
        else if (command == "sumrule") t = sumrule_table(config);
        else throw DomainError("unknown command '" + command + "'");
        write_table(t, config, *os);
        os->flush();
        if (!*os) throw DomainError("write failed");
        return 0;
    } catch (const Failure& f) {
        err << "spinon-dsf " << command << ": " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        err << "spinon-dsf " << command << ": " << e.what() << '\n';
        return exit_code(e);
    }
}

}  // namespace spinon::cli
