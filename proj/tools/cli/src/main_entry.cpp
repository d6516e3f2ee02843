#include <deque>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "spinon/errors.hpp"
#include "spinon/version.hpp"
#include "spinon_cli/cli.hpp"

namespace spinon::cli {

namespace {

struct Slot {
    std::size_t command = 0;
    const Param* param = nullptr;
    CLI::Option* option = nullptr;
    double real = 0.0;
    long long integer = 0;
    std::string text;
};

std::string flag_name(std::string key) {
    for (char& ch : key)
        if (ch == '_') ch = '-';
    return "--" + key;
}

const char* summary(const std::string& command) {
    if (command == "dispersion") return "spinon momentum and energy against rapidity";
    if (command == "boundaries") return "two-spinon continuum edges w_l(k), w_u(k)";
    if (command == "aminus") return "|A-(x + i y)|^2";
    if (command == "gfun") return "g-function values for one set of rapidities";
    if (command == "dsf2") return "two-spinon S^{+-} and S^{zz} on a (w, k) grid";
    if (command == "dsf4") return "four-spinon S^{+-} with error estimate";
    if (command == "sumrule") return "integrated two-spinon intensity";
    return "invariant checks of every module";
}

json read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot read config file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("config file '" + path + "': " + e.what());
    }
}

}  // namespace

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact n-spinon dynamic structure factor of the spin-1/2 Heisenberg chain", "spinon-dsf"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::vector<std::vector<Param>> tables;
    for (const std::string& c : commands()) tables.push_back(params(c));
    std::deque<Slot> slots;
    std::vector<std::string> config_paths(commands().size());
    std::vector<CLI::App*> subs;
    for (std::size_t ci = 0; ci < commands().size(); ++ci) {
        const std::string& name = commands()[ci];
        CLI::App* sub = app.add_subcommand(name, summary(name));
        sub->add_option("--config", config_paths[ci], "JSON file with defaults for this command; flags win");
        for (const Param& p : tables[ci]) {
            Slot& s = slots.emplace_back();
            s.command = ci;
            s.param = &p;
            std::string help = p.help;
            if (!p.fallback.is_null()) help += " [" + p.fallback.dump() + "]";
            if (p.kind == Param::Kind::real)
                s.option = sub->add_option(flag_name(p.key), s.real, help);
            else if (p.kind == Param::Kind::integer)
                s.option = sub->add_option(flag_name(p.key), s.integer, help);
            else
                s.option = sub->add_option(flag_name(p.key), s.text, help);
        }
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    for (std::size_t ci = 0; ci < subs.size(); ++ci) {
        if (!subs[ci]->parsed()) continue;
        const std::string& name = commands()[ci];
        try {
            json flags = json::object();
            for (const Slot& s : slots) {
                if (s.command != ci || s.option->count() == 0) continue;
                if (s.param->kind == Param::Kind::real) flags[s.param->key] = s.real;
                else if (s.param->kind == Param::Kind::integer) flags[s.param->key] = s.integer;
                else flags[s.param->key] = s.text;
            }
            json file = config_paths[ci].empty() ? json() : read_config(config_paths[ci]);
            return run(effective_config(name, file, flags), out, err);
        } catch (const std::exception& e) {
            err << "spinon-dsf " << name << ": " << e.what() << '\n';
            return 1;
        }
    }
    return 1;
}

}  // namespace spinon::cli
