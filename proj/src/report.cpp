#include "spherical/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace spherical {

std::vector<SimpleType> parse_type_string(const std::string& s) {
    std::string clean;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
    std::vector<SimpleType> out;
    std::size_t i = 0;
    while (i < clean.size()) {
        char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(clean[i])));
        ++i;
        std::size_t start = i;
        while (i < clean.size() && std::isdigit(static_cast<unsigned char>(clean[i]))) ++i;
        if (start == i) throw std::invalid_argument("type string: missing rank after letter");
        out.emplace_back(family_from_letter(letter), std::stoi(clean.substr(start, i - start)));
        if (i < clean.size()) {
            if (std::tolower(static_cast<unsigned char>(clean[i])) != 'x')
                throw std::invalid_argument("type string: factors must be separated by 'x'");
            ++i;
            if (i == clean.size()) throw std::invalid_argument("type string: trailing separator");
        }
    }
    if (out.empty()) throw std::invalid_argument("type string: no factors");
    return out;
}

namespace {

IntVec json_to_vec(const json& arr, std::size_t expected, const char* what) {
    if (!arr.is_array() || arr.size() != expected)
        throw std::invalid_argument(std::string(what) + ": expected an array of length " +
                                    std::to_string(expected));
    IntVec v;
    for (const auto& x : arr) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string(what) + ": entries must be integers");
        v.emplace_back(x.get<long long>());
    }
    return v;
}

json vec_to_json(const IntVec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

json vec_to_json_numeric(const IntVec& v) {
    json arr = json::array();
    for (const auto& x : v) {
        if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
            arr.push_back(static_cast<long long>(x));
        else
            arr.push_back(x.str());
    }
    return arr;
}

}  // namespace

ParsedInput parse_input(const json& doc) {
    if (!doc.is_object() || !doc.contains("group"))
        throw std::invalid_argument("input: missing \"group\"");
    const json& group = doc.at("group");
    std::size_t torus_rank = group.value("torus_rank", 0);
    std::string isogeny = "simply_connected";
    json custom;
    if (group.contains("isogeny")) {
        if (group.at("isogeny").is_string()) isogeny = group.at("isogeny").get<std::string>();
        else if (group.at("isogeny").is_object() && group.at("isogeny").contains("custom")) {
            isogeny = "custom";
            custom = group.at("isogeny").at("custom");
        } else {
            throw std::invalid_argument("input: unrecognized \"isogeny\"");
        }
    }

    BasedRootDatum datum;
    if (isogeny == "custom") {
        std::size_t rank = custom.value("torus_rank", 0);
        std::vector<IntVec> roots, coroots;
        for (const auto& r : custom.value("simple_roots", json::array()))
            roots.push_back(json_to_vec(r, rank, "simple_roots"));
        for (const auto& c : custom.value("simple_coroots", json::array()))
            coroots.push_back(json_to_vec(c, rank, "simple_coroots"));
        datum = custom_datum(std::move(roots), std::move(coroots), rank);
    } else {
        std::vector<SimpleType> types;
        for (const auto& f : group.value("factors", json::array())) {
            std::string letter = f.at("type").get<std::string>();
            if (letter.size() != 1) throw std::invalid_argument("input: factor type must be one letter");
            types.emplace_back(family_from_letter(static_cast<char>(std::toupper(letter[0]))),
                               f.at("rank").get<int>());
        }
        if (isogeny == "simply_connected") {
            datum = simply_connected(types, torus_rank);
        } else if (isogeny == "adjoint") {
            if (torus_rank != 0)
                throw std::invalid_argument("input: adjoint groups take torus_rank 0");
            datum = adjoint(types);
        } else {
            throw std::invalid_argument("input: unknown isogeny \"" + isogeny + "\"");
        }
    }

    ParsedInput out;
    std::vector<IntVec> gens;
    for (const auto& g : doc.value("generators", json::array()))
        gens.push_back(json_to_vec(g, datum.rank, "generators"));
    for (const auto& g : gens)
        if (!datum.is_dominant(g)) throw std::invalid_argument("input: generator is not dominant");
    out.datum = std::move(datum);
    out.generators = std::move(gens);
    return out;
}

std::string root_label(const BasedRootDatum& datum, int global_index) {
    for (std::size_t c = 0; c < datum.component_nodes.size(); ++c) {
        const auto& nodes = datum.component_nodes[c];
        for (std::size_t p = 0; p < nodes.size(); ++p)
            if (nodes[p] == global_index)
                return datum.component_types[c].str() + "#" + std::to_string(c + 1) + ".alpha" +
                       std::to_string(p + 1);
    }
    return "alpha?" + std::to_string(global_index);
}

json verdict_to_json(const WeightMonoid& wm, const Verdict& v) {
    json out;
    out["g_saturated"] = v.g_saturated;
    out["normal"] = v.normal;
    out["smooth"] = v.smooth.has_value() ? json(*v.smooth) : json(nullptr);
    json failed = json::array();
    for (char c : v.failed_conditions) failed.push_back(std::string(1, c));
    out["failed_conditions"] = failed;

    json cert;
    json labels = json::array();
    for (std::size_t i = 0; i < wm.datum().num_simple(); ++i)
        labels.push_back(root_label(wm.datum(), static_cast<int>(i)));
    cert["root_labels"] = labels;
    cert["lattice_rank"] = wm.lattice_rank();
    cert["s_p"] = json(v.s_p);
    json sigma = json::array();
    {
        auto sorted = v.sigma_n;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& s : sorted) {
            json e;
            e["coefficients"] = vec_to_json_numeric(s.coeffs);
            e["pattern"] = s.pattern;
            sigma.push_back(e);
        }
    }
    cert["sigma_N"] = sigma;
    cert["s_gamma"] = json(v.s_gamma);
    json coroots = json::array();
    for (const auto& r : v.restricted_coroots) coroots.push_back(vec_to_json_numeric(r));
    cert["restricted_coroots"] = coroots;
    cert["snf_divisors"] = vec_to_json_numeric(v.snf_divisors);
    json pairs = json::array();
    for (const auto& [a, b] : v.violating_pairs) pairs.push_back(json::array({a, b}));
    cert["violating_pairs"] = pairs;
    if (v.decomposition) {
        json pieces = json::array();
        for (const auto& p : v.decomposition->pieces) {
            json e;
            e["family"] = p.family;
            e["n"] = p.n;
            if (p.family == 4) e["k"] = p.k;
            e["nodes"] = json(p.bourbaki);
            pieces.push_back(e);
        }
        cert["decomposition"] = pieces;
    } else {
        cert["decomposition"] = nullptr;
    }
    out["certificate"] = cert;
    return out;
}

namespace {

std::string join_roots(const WeightMonoid& wm, const std::set<int>& s) {
    if (s.empty()) return "(none)";
    std::string out;
    for (int i : s) {
        if (!out.empty()) out += ", ";
        out += root_label(wm.datum(), i);
    }
    return out;
}

std::string root_combo_str(const WeightMonoid& wm, const IntVec& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (coeffs[i] != 1) out += coeffs[i].str() + "*";
        out += root_label(wm.datum(), static_cast<int>(i));
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string explain_verdict(const WeightMonoid& wm, const Verdict& v) {
    std::ostringstream os;
    os << "Monoid on " << wm.generators().size() << " generator(s); lattice rank "
       << wm.lattice_rank() << ".\n";
    os << "Normal: " << (v.normal ? "yes" : "no") << ".\n";
    os << "Saturated in the dominant weights: " << (v.g_saturated ? "yes" : "no") << ".\n";
    if (!v.g_saturated) {
        os << "No smoothness verdict: the engine only decides saturated monoids.\n";
        return os.str();
    }
    os << "Roots orthogonal to the monoid (S^p): " << join_roots(wm, v.s_p) << ".\n";
    os << "N-spherical roots:";
    if (v.sigma_n.empty()) os << " (none)";
    for (const auto& s : v.sigma_n) os << "\n  " << root_combo_str(wm, s.coeffs) << "  [" << s.pattern << "]";
    os << "\n";
    os << "Distinguished roots (S_Gamma): " << join_roots(wm, v.s_gamma) << ".\n";
    os << "Condition (a) basis extension: " << (v.failed_conditions.count('a') ? "fails" : "holds") << ".\n";
    os << "Condition (b) colliding coroots: " << (v.failed_conditions.count('b') ? "fails" : "holds");
    for (const auto& [x, y] : v.violating_pairs)
        os << "  [" << root_label(wm.datum(), x) << " + " << root_label(wm.datum(), y)
           << " outside the lattice]";
    os << ".\n";
    os << "Condition (c) catalogued decomposition: "
       << (v.failed_conditions.count('c') ? "fails" : "holds") << ".\n";
    os << "Smooth: " << (*v.smooth ? "yes" : "no") << ".\n";
    return os.str();
}

json sigma_sc_to_json(const BasedRootDatum& datum, const std::vector<SphericalRoot>& roots) {
    json labels = json::array();
    for (std::size_t i = 0; i < datum.num_simple(); ++i)
        labels.push_back(root_label(datum, static_cast<int>(i)));
    json arr = json::array();
    for (const auto& s : roots) {
        json e;
        e["coefficients"] = vec_to_json_numeric(s.coeffs);
        e["pattern"] = s.pattern;
        arr.push_back(e);
    }
    json out;
    out["root_labels"] = labels;
    out["spherical_roots"] = arr;
    return out;
}

}  // namespace spherical
