#include <cstdint>
#include <cstdio>

#include "spinon/errors.hpp"
#include "spinon/gfunction.hpp"
#include "spinon/numeric.hpp"
#include "spinon_cli/cli.hpp"

namespace spinon::cli {

namespace {

using K = Param::Kind;

std::vector<Param> common_params() {
    QuadratureSpec q;
    ResidueSpec r;
    return {
        {"output", K::text, "-", "output file, - for stdout"},
        {"format", K::text, "csv", "csv or json"},
        {"threads", K::integer, 1, "worker threads over grid points"},
        {"abs_tol", K::real, q.abs_tol, "quadrature absolute tolerance"},
        {"rel_tol", K::real, q.rel_tol, "quadrature relative tolerance"},
        {"max_subdivisions", K::integer, q.max_subdivisions, "adaptive quadrature interval cap"},
        {"tail_truncation", K::real, q.tail_truncation, "split point of the |A-|^2 integral"},
        {"m_max", K::integer, r.m_max, "residue depth cap"},
        {"tail_tol", K::real, r.tail_tol, "residue tail tolerance"},
        {"consecutive_small", K::integer, r.consecutive_small, "small increments before stopping"},
    };
}

std::vector<Param> grid_params(int w_points) {
    return {
        {"w", K::real, nullptr, "single energy transfer (overrides the w range)"},
        {"w_min", K::real, 0.0, "lowest w"},
        {"w_max", K::real, 2.0 * kPi, "highest w"},
        {"w_points", K::integer, w_points, "points in w"},
        {"k", K::real, nullptr, "single momentum transfer in [0, 2 pi] (overrides the k range)"},
        {"k_min", K::real, 0.0, "lowest k"},
        {"k_max", K::real, 2.0 * kPi, "highest k"},
        {"k_points", K::integer, 1, "points in k"},
    };
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {"dispersion", "boundaries", "aminus", "gfun",
                                                   "dsf2",       "dsf4",       "sumrule", "selfcheck"};
    return names;
}

std::vector<Param> params(const std::string& command) {
    std::vector<Param> p;
    if (command == "dispersion") {
        p = {{"beta_min", K::real, -5.0, "lowest rapidity"},
             {"beta_max", K::real, 5.0, "highest rapidity"},
             {"points", K::integer, 101, "rapidity samples"},
             {"epsilon", K::real, 0.0, "XXZ anisotropy parameter; 0 omits the XXZ columns"}};
    } else if (command == "boundaries") {
        p = {{"k_min", K::real, 0.0, "lowest k"},
             {"k_max", K::real, 2.0 * kPi, "highest k"},
             {"k_points", K::integer, 65, "points in k"}};
    } else if (command == "aminus") {
        p = {{"x_min", K::real, 0.0, "lowest rapidity difference"},
             {"x_max", K::real, 10.0, "highest rapidity difference"},
             {"points", K::integer, 101, "samples"},
             {"y", K::real, 0.0, "imaginary part of the argument, in [0, pi)"}};
    } else if (command == "gfun") {
        p = {{"betas", K::text, "0.3,-0.2,0.9,-1.1", "comma separated rapidities"},
             {"eps", K::text, "", "comma separated +1/-1 configuration; empty lists every admissible one"}};
    } else if (command == "dsf2") {
        p = grid_params(64);
        p.push_back({"aminus", K::text, "direct", "|A-|^2 source: direct or table"});
    } else if (command == "dsf4") {
        p = grid_params(1);
        p.push_back({"grid", K::integer, 48, "tanh-sinh nodes per axis of the outer integral"});
    } else if (command == "sumrule") {
        p = {{"grid_k", K::integer, 64, "nodes in k (multiple of 4)"},
             {"grid_w", K::integer, 64, "nodes in w (multiple of 4)"}};
    } else if (command != "selfcheck") {
        throw DomainError("unknown command '" + command + "'");
    }
    for (Param& c : common_params()) p.push_back(std::move(c));
    return p;
}

json effective_config(const std::string& command, const json& file, const json& flags) {
    json cfg = json::object();
    cfg["command"] = command;
    std::vector<Param> ps = params(command);
    for (const Param& p : ps) cfg[p.key] = p.fallback;
    auto overlay = [&](const json& layer, const char* what) {
        if (layer.is_null()) return;
        if (!layer.is_object()) throw DomainError(std::string(what) + " must be a JSON object");
        for (auto it = layer.begin(); it != layer.end(); ++it) {
            if (it.key() == "command") {
                if (it.value() != command)
                    throw DomainError(std::string(what) + " is for command " + it.value().dump());
                continue;
            }
            bool known = false;
            for (const Param& p : ps) {
                if (p.key != it.key()) continue;
                known = true;
                const json& v = it.value();
                bool ok = v.is_null() || (p.kind == K::text ? v.is_string()
                                          : p.kind == K::integer ? v.is_number_integer()
                                                                 : v.is_number());
                if (!ok) throw DomainError(std::string(what) + ": wrong type for '" + p.key + "'");
                cfg[p.key] = p.kind == K::real && v.is_number() ? json(v.get<double>()) : v;
            }
            if (!known) throw DomainError(std::string(what) + ": unknown key '" + it.key() + "'");
        }
    };
    overlay(file, "config file");
    overlay(flags, "flags");
    return cfg;
}

std::string config_hash(const json& config) {
    json c = config;
    for (const char* k : {"output", "format", "threads"}) c.erase(k);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(c.dump())));
    return buf;
}

}  // namespace spinon::cli
