#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace spinon::cli {

using nlohmann::json;

// One tunable of a subcommand. `key` is the JSON config key; the flag is
// "--" + key with '_' replaced by '-'.
struct Param {
    enum class Kind { real, integer, text };
    std::string key;
    Kind kind;
    json fallback;  // null when the parameter is optional
    std::string help;
};

const std::vector<std::string>& commands();
std::vector<Param> params(const std::string& command);

// Defaults for `command`, overlaid by `file` (a parsed --config) and then by
// `flags`. Unknown keys in either layer are rejected with DomainError.
json effective_config(const std::string& command, const json& file, const json& flags);

// FNV-1a over the canonical dump, ignoring keys that do not change results
// (output, format, threads).
std::string config_hash(const json& config);

// Executes a fully resolved config. Exit status: 0 ok, 1 domain/pole error,
// 2 convergence/degeneracy error, 3 failed selfcheck.
int run(const json& config, std::ostream& out, std::ostream& err);

// argv front end: subcommand, flags, --config.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::vector<CheckLine> selfcheck();

}  // namespace spinon::cli
