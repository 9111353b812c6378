#include "tracelab/ringdoc.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace tracelab {

using nlohmann::json;

Module RingDoc::named_module(const std::string& name) const {
    if (name == "R" || name == "regular") return regular_module(algebra);
    auto it = modules.find(name);
    if (it == modules.end()) throw ParseError("unknown module '" + name + "'");
    return it->second;
}

Submodule RingDoc::named_submodule(const std::string& name) const {
    if (name == "soc") return socle(regular_module(algebra));
    auto it = submodules.find(name);
    if (it == submodules.end()) throw ParseError("unknown submodule '" + name + "'");
    return it->second;
}

namespace {

struct PolyPreset {
    // Basis of a commutative monomial algebra: exponent vectors that survive,
    // with multiplication truncating to zero outside the basis.
    std::vector<std::string> names;
    std::vector<std::vector<int>> monomials;
    int nvars;
};

// Multiply two monomials; returns -1 when the product is zero in the quotient.
int mono_mul(const PolyPreset& P, int i, int j) {
    std::vector<int> e(P.nvars);
    for (int v = 0; v < P.nvars; ++v) e[v] = P.monomials[i][v] + P.monomials[j][v];
    for (std::size_t k = 0; k < P.monomials.size(); ++k)
        if (P.monomials[k] == e) return static_cast<int>(k);
    return -1;
}

AlgebraPtr monomial_algebra(const FieldSpec& F, const PolyPreset& P) {
    const int n = static_cast<int>(P.monomials.size());
    std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, zero_vec(F, n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int k = mono_mul(P, i, j);
            if (k >= 0) c[i][j][k] = F.one();
        }
    return std::make_shared<Algebra>(F, n, P.names, std::move(c), unit_vec(F, n, 0));
}

AlgebraPtr truncated_poly(const FieldSpec& F, int power) {
    // k[x]/(x^power)
    PolyPreset P;
    P.nvars = 1;
    for (int d = 0; d < power; ++d) {
        P.monomials.push_back({d});
        P.names.push_back(d == 0 ? "1" : (d == 1 ? "x" : "x^" + std::to_string(d)));
    }
    return monomial_algebra(F, P);
}

AlgebraPtr fat_point_algebra(const FieldSpec& F) {
    // k[x,y]/(x,y)^2
    PolyPreset P{{"1", "x", "y"}, {{0, 0}, {1, 0}, {0, 1}}, 2};
    return monomial_algebra(F, P);
}

AlgebraPtr ci4_algebra(const FieldSpec& F) {
    // k[x,y]/(x^2,y^2)
    PolyPreset P{{"1", "x", "y", "xy"}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, 2};
    return monomial_algebra(F, P);
}

AlgebraPtr product_field_algebra(const FieldSpec& F) {
    // k x k with the orthogonal idempotent basis
    const int n = 2;
    std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, zero_vec(F, n)));
    c[0][0][0] = F.one();
    c[1][1][1] = F.one();
    Vec unit(n, F.one());
    return std::make_shared<Algebra>(F, n, std::vector<std::string>{"e1", "e2"}, std::move(c),
                                     std::move(unit));
}

AlgebraPtr mat2_algebra(const FieldSpec& F) {
    // M_2(k) on the matrix units, radical supplied as zero (semisimple).
    const int n = 4;
    auto idx = [](int r, int c) { return 2 * r + c; };
    std::vector<std::vector<Vec>> cst(n, std::vector<Vec>(n, zero_vec(F, n)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) cst[idx(i, j)][idx(k, l)][idx(i, l)] = F.one();
    Vec unit = zero_vec(F, n);
    unit[idx(0, 0)] = F.one();
    unit[idx(1, 1)] = F.one();
    return std::make_shared<Algebra>(F, n, std::vector<std::string>{"E11", "E12", "E21", "E22"},
                                     std::move(cst), std::move(unit),
                                     std::vector<Vec>{});  // empty span: J = 0
}

const std::vector<std::string> kFamilies = {"dual_numbers", "jordan3", "fat_point",
                                            "ci4",          "ss2",     "mat2"};

}  // namespace

std::vector<std::string> builtin_presets() {
    std::vector<std::string> out;
    for (const auto& f : kFamilies) {
        out.push_back(f + ":2");
        out.push_back(f + ":3");
    }
    out.push_back("dual_numbers:Q");
    return out;
}

bool is_preset_name(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) return false;
    std::string family = name.substr(0, colon);
    for (const auto& f : kFamilies)
        if (f == family) return true;
    return false;
}

RingDoc make_preset(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) throw ParseError("preset name must look like family:p");
    std::string family = name.substr(0, colon);
    std::string param = name.substr(colon + 1);
    FieldSpec F = FieldSpec::rational();
    if (param != "Q" && param != "q") {
        std::int64_t p = 0;
        try {
            p = std::stoll(param);
        } catch (const std::exception&) {
            throw ParseError("bad preset parameter '" + param + "'");
        }
        F = FieldSpec::prime(p);
    }
    AlgebraPtr alg;
    if (family == "dual_numbers") alg = truncated_poly(F, 2);
    else if (family == "jordan3") alg = truncated_poly(F, 3);
    else if (family == "fat_point") alg = fat_point_algebra(F);
    else if (family == "ci4") alg = ci4_algebra(F);
    else if (family == "ss2") alg = product_field_algebra(F);
    else if (family == "mat2") alg = mat2_algebra(F);
    else throw ParseError("unknown preset family '" + family + "'");
    auto bad = validate_algebra(alg);
    if (!bad.empty()) throw ValidationError(bad);
    return RingDoc{name, std::move(alg), {}, {}};
}

namespace {

Scalar parse_scalar(const FieldSpec& F, const json& j, const std::string& where) {
    if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
    if (j.is_string()) return F.parse(j.get<std::string>());
    throw ParseError("expected integer or \"a/b\" scalar at " + where);
}

Vec parse_vec(const FieldSpec& F, const json& j, int n, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        throw ParseError("expected array of length " + std::to_string(n) + " at " + where);
    Vec v;
    for (int i = 0; i < n; ++i) v.push_back(parse_scalar(F, j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Matrix parse_matrix(const FieldSpec& F, const json& j, int rows, int cols, const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw ParseError("expected " + std::to_string(rows) + " rows at " + where);
    Matrix m(F, rows, cols);
    for (int r = 0; r < rows; ++r) {
        Vec row = parse_vec(F, j[r], cols, where + "[" + std::to_string(r) + "]");
        m.set_row(r, row);
    }
    return m;
}

FieldSpec parse_field(const json& j) {
    if (j.is_number_integer()) return FieldSpec::prime(j.get<std::int64_t>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Q" || s == "rational") return FieldSpec::rational();
        throw ParseError("unknown field '" + s + "'");
    }
    if (j.is_object()) {
        std::string kind = j.value("kind", "");
        if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::int64_t>());
        if (kind == "rational") return FieldSpec::rational();
        throw ParseError("field.kind must be 'prime' or 'rational'");
    }
    throw ParseError("bad field spec");
}

}  // namespace

RingDoc parse_ring_doc(const std::string& json_text, const std::string& id) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("ring document must be a JSON object");
    FieldSpec F = parse_field(doc.at("field"));
    const json& ja = doc.at("algebra");
    int n = ja.at("dim").get<int>();
    if (n < 0) throw ParseError("algebra.dim must be nonnegative");
    std::vector<std::string> names;
    if (ja.contains("basis_names")) {
        for (const auto& x : ja.at("basis_names")) names.push_back(x.get<std::string>());
        if (static_cast<int>(names.size()) != n) throw ParseError("basis_names length != dim");
    } else {
        for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    }
    const json& jc = ja.at("structure_constants");
    if (!jc.is_array() || static_cast<int>(jc.size()) != n)
        throw ParseError("structure_constants must have dim entries");
    std::vector<std::vector<Vec>> constants(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i) {
        if (!jc[i].is_array() || static_cast<int>(jc[i].size()) != n)
            throw ParseError("structure_constants[" + std::to_string(i) + "] must have dim entries");
        for (int j = 0; j < n; ++j)
            constants[i][j] = parse_vec(F, jc[i][j], n,
                                        "structure_constants[" + std::to_string(i) + "][" +
                                            std::to_string(j) + "]");
    }
    Vec unit = parse_vec(F, ja.at("unit"), n, "unit");
    std::optional<std::vector<Vec>> rad;
    if (ja.contains("radical")) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < ja.at("radical").size(); ++i)
            gens.push_back(parse_vec(F, ja.at("radical")[i], n, "radical[" + std::to_string(i) + "]"));
        rad = std::move(gens);
    }
    auto alg = std::make_shared<Algebra>(F, n, std::move(names), std::move(constants),
                                         std::move(unit), std::move(rad));
    auto bad = validate_algebra(alg);
    if (!bad.empty()) throw ValidationError(bad);

    RingDoc out{id, alg, {}, {}};
    if (doc.contains("modules")) {
        for (auto it = doc.at("modules").begin(); it != doc.at("modules").end(); ++it) {
            const json& jm = it.value();
            int d = jm.at("dim").get<int>();
            const json& jact = jm.at("action");
            if (!jact.is_array() || static_cast<int>(jact.size()) != n)
                throw ParseError("module '" + it.key() + "' needs one action matrix per basis element");
            std::vector<Matrix> action;
            for (int i = 0; i < n; ++i)
                action.push_back(parse_matrix(F, jact[i], d, d,
                                              "modules." + it.key() + ".action[" + std::to_string(i) + "]"));
            Module mod(alg, std::move(action));
            auto mv = validate_module(mod);
            if (!mv.empty()) {
                for (auto& s : mv) s = "module '" + it.key() + "': " + s;
                throw ValidationError(mv);
            }
            out.modules.emplace(it.key(), std::move(mod));
        }
    }
    if (doc.contains("submodules")) {
        for (auto it = doc.at("submodules").begin(); it != doc.at("submodules").end(); ++it) {
            const json& js = it.value();
            std::string ambient = js.at("ambient").get<std::string>();
            Module amb = out.named_module(ambient);
            std::vector<Vec> vecs;
            for (std::size_t i = 0; i < js.at("vectors").size(); ++i)
                vecs.push_back(parse_vec(F, js.at("vectors")[i], amb.dim(),
                                         "submodules." + it.key() + ".vectors[" + std::to_string(i) + "]"));
            out.submodules.emplace(it.key(), submodule_generated(amb, vecs));
        }
    }
    return out;
}

RingDoc load_ring_doc(const std::string& path_or_preset) {
    if (is_preset_name(path_or_preset)) return make_preset(path_or_preset);
    std::ifstream in(path_or_preset);
    if (!in) throw ParseError("cannot open ring document '" + path_or_preset + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ring_doc(ss.str(), path_or_preset);
}

}  // namespace tracelab
