#pragma once

#include <map>

#include "tracelab/module.hpp"

namespace tracelab {

// A parsed and validated ring document: the algebra plus named modules and
// named submodules. The regular module is always available as "R".
struct RingDoc {
    std::string id;
    AlgebraPtr algebra;
    std::map<std::string, Module> modules;
    std::map<std::string, Submodule> submodules;

    Module named_module(const std::string& name) const;
    Submodule named_submodule(const std::string& name) const;
};

// Preset families, instantiated as "name:p" for a prime p, or
// "dual_numbers:Q" over the rationals.
std::vector<std::string> builtin_presets();
bool is_preset_name(const std::string& name);
RingDoc make_preset(const std::string& name);

// JSON text -> validated RingDoc. Throws ParseError / ValidationError.
RingDoc parse_ring_doc(const std::string& json_text, const std::string& id);

// Preset name or path to a JSON file.
RingDoc load_ring_doc(const std::string& path_or_preset);

}  // namespace tracelab
