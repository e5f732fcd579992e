#include "spherical/admissibility.hpp"

#include <algorithm>
#include <functional>

namespace spherical {

AdmissibleTriple AdmissibleTriple::make(const BasedRootDatum& datum, std::vector<int> s_nodes,
                                        std::set<int> sp, std::vector<IntVec> sigma) {
    AdmissibleTriple t;
    t.s_nodes = std::move(s_nodes);
    std::sort(t.s_nodes.begin(), t.s_nodes.end());
    t.s_nodes.erase(std::unique(t.s_nodes.begin(), t.s_nodes.end()), t.s_nodes.end());
    std::set<int> nodes(t.s_nodes.begin(), t.s_nodes.end());
    for (int i : sp)
        if (!nodes.count(i)) throw std::invalid_argument("triple: sp not contained in s");
    t.sp = std::move(sp);
    for (auto& s : sigma) {
        if (s.size() != datum.num_simple()) throw std::invalid_argument("triple: bad sigma length");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0) throw std::invalid_argument("triple: negative sigma coefficient");
            if (s[i] != 0 && !nodes.count(static_cast<int>(i)))
                throw std::invalid_argument("triple: sigma support not contained in s");
        }
    }
    t.sigma = std::move(sigma);
    std::sort(t.sigma.begin(), t.sigma.end());
    t.sigma.erase(std::unique(t.sigma.begin(), t.sigma.end()), t.sigma.end());
    return t;
}

CatalogTriple catalog_instance(int family, int n, int k, const SimpleType* family1_type) {
    CatalogTriple c;
    auto slot_vec = [&](std::initializer_list<std::pair<int, int>> entries) {
        IntVec v(c.slots, 0);
        for (auto [slot, coef] : entries) v[slot] = coef;
        return v;
    };
    switch (family) {
        case 1: {
            if (!family1_type) throw std::invalid_argument("family 1 needs a type");
            c.slots = family1_type->rank;
            for (std::size_t p = 0; p < c.slots; ++p) c.sp.insert(static_cast<int>(p));
            return c;
        }
        case 2: {
            if (n < 1) throw std::invalid_argument("family 2 needs n >= 1");
            c.slots = n;
            for (int p = 1; p < n; ++p) c.sp.insert(p);
            return c;
        }
        case 3: {
            if (n < 4 || n % 2 != 0) throw std::invalid_argument("family 3 needs even n >= 4");
            c.slots = n;
            for (int p = 0; p + 1 < n; p += 2) c.sp.insert(p);
            for (int p = 0; p + 2 < n - 1; p += 2)
                c.sigma.push_back(slot_vec({{p, 1}, {p + 1, 2}, {p + 2, 1}}));
            return c;
        }
        case 4: {
            if (!(n > k && k >= 2)) throw std::invalid_argument("family 4 needs n > k >= 2");
            c.slots = n + k;
            for (int p = k + 1; p < n; ++p) c.sp.insert(p);
            for (int i = 0; i < k; ++i) c.sigma.push_back(slot_vec({{i, 1}, {n + i, 1}}));
            return c;
        }
        case 5: {
            if (n < 2) throw std::invalid_argument("family 5 needs n >= 2");
            c.slots = n;
            for (int p = 1; p < n; ++p) c.sp.insert(p);
            return c;
        }
        case 6: {
            c.slots = 5;
            c.sp = {1, 2, 3};
            c.sigma.push_back(slot_vec({{1, 1}, {2, 2}, {3, 1}, {4, 2}}));
            return c;
        }
    }
    throw std::invalid_argument("unknown primitive family");
}

namespace {

struct Component {
    std::vector<int> nodes;
    SimpleType type{Family::A, 1};
    std::vector<std::vector<int>> labelings;  // slot -> global node, all valid ones
};

Component analyze_component(const DynkinDiagram& comp) {
    Component c;
    c.nodes = comp.nodes;
    TypedLabeling tl = type_of(comp);
    c.type = tl.type;
    std::map<int, std::size_t> pos_of;
    for (std::size_t p = 0; p < comp.nodes.size(); ++p) pos_of[comp.nodes[p]] = p;
    for (const auto& perm : diagram_automorphisms(comp)) {
        std::vector<int> variant(tl.bourbaki.size());
        for (std::size_t s = 0; s < tl.bourbaki.size(); ++s)
            variant[s] = comp.nodes[perm[pos_of[tl.bourbaki[s]]]];
        c.labelings.push_back(std::move(variant));
    }
    std::sort(c.labelings.begin(), c.labelings.end());
    c.labelings.erase(std::unique(c.labelings.begin(), c.labelings.end()), c.labelings.end());
    return c;
}

struct Matcher {
    const AdmissibleTriple& triple;
    const BasedRootDatum& datum;

    std::set<int> local_sp(const std::vector<int>& nodes) const {
        std::set<int> out;
        for (int v : nodes)
            if (triple.sp.count(v)) out.insert(v);
        return out;
    }

    // expected global triple of a catalogued piece under a slot map
    static std::set<int> map_sp(const CatalogTriple& cat, const std::vector<int>& slot_to_node) {
        std::set<int> out;
        for (int p : cat.sp) out.insert(slot_to_node[p]);
        return out;
    }
    std::vector<IntVec> map_sigma(const CatalogTriple& cat, const std::vector<int>& slot_to_node) const {
        std::vector<IntVec> out;
        for (const auto& sv : cat.sigma) {
            IntVec v(datum.num_simple(), 0);
            for (std::size_t p = 0; p < sv.size(); ++p) v[slot_to_node[p]] = sv[p];
            out.push_back(std::move(v));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

std::vector<IntVec> sorted(std::vector<IntVec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::optional<Decomposition> is_admissible(const AdmissibleTriple& triple, const BasedRootDatum& datum) {
    DynkinDiagram diagram = subdiagram(datum, triple.s_nodes);
    std::vector<Component> comps;
    for (const auto& c : components(diagram)) comps.push_back(analyze_component(c));
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.nodes.size() > b.nodes.size(); });

    // locate each sigma's components
    std::map<int, int> comp_of_node;
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
        for (int v : comps[ci].nodes) comp_of_node[v] = static_cast<int>(ci);
    std::vector<std::vector<int>> sigma_comps;
    for (const auto& s : triple.sigma) {
        std::set<int> touched;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] != 0) touched.insert(comp_of_node.at(static_cast<int>(i)));
        sigma_comps.emplace_back(touched.begin(), touched.end());
        if (touched.size() > 2) return std::nullopt;
    }

    auto sigma_within = [&](const std::set<int>& comp_ids) {
        std::vector<IntVec> out;
        for (std::size_t i = 0; i < triple.sigma.size(); ++i) {
            bool inside = true;
            for (int c : sigma_comps[i])
                if (!comp_ids.count(c)) { inside = false; break; }
            if (inside) out.push_back(triple.sigma[i]);
        }
        return sorted(std::move(out));
    };
    auto has_cross_outside = [&](const std::set<int>& comp_ids) {
        for (std::size_t i = 0; i < triple.sigma.size(); ++i) {
            bool touches = false, inside = true;
            for (int c : sigma_comps[i]) {
                if (comp_ids.count(c)) touches = true;
                else inside = false;
            }
            if (touches && !inside) return true;
        }
        return false;
    };

    Matcher m{triple, datum};

    std::vector<bool> assigned(comps.size(), false);
    std::vector<PrimitivePiece> pieces;

    std::function<bool()> solve = [&]() -> bool {
        std::size_t x = comps.size();
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (!assigned[i]) { x = i; break; }
        if (x == comps.size()) return true;
        const Component& cx = comps[x];
        std::set<int> nodes_x(cx.nodes.begin(), cx.nodes.end());

        auto try_piece = [&](const CatalogTriple& cat, const std::vector<int>& slot_map,
                             const std::set<int>& comp_ids, const std::vector<int>& piece_nodes,
                             PrimitivePiece piece) -> bool {
            if (Matcher::map_sp(cat, slot_map) != m.local_sp(piece_nodes)) return false;
            if (m.map_sigma(cat, slot_map) != sigma_within(comp_ids)) return false;
            for (int c : comp_ids) assigned[c] = true;
            piece.bourbaki = slot_map;
            pieces.push_back(std::move(piece));
            if (solve()) return true;
            pieces.pop_back();
            for (int c : comp_ids) assigned[c] = false;
            return false;
        };

        // family 4 first: this component paired with another A component
        if (cx.type.family == Family::A) {
            for (std::size_t y = 0; y < comps.size(); ++y) {
                if (y == x || assigned[y]) continue;
                const Component& cy = comps[y];
                if (cy.type.family != Family::A) continue;
                int n = cx.type.rank, k = cy.type.rank;
                const Component *big = &cx, *small = &cy;
                if (n <= k) { std::swap(n, k); big = &cy; small = &cx; }
                if (!(n > k && k >= 2)) continue;
                if (has_cross_outside({static_cast<int>(x), static_cast<int>(y)})) continue;
                CatalogTriple cat = catalog_instance(4, n, k);
                std::vector<int> piece_nodes = big->nodes;
                piece_nodes.insert(piece_nodes.end(), small->nodes.begin(), small->nodes.end());
                for (const auto& lb : big->labelings)
                    for (const auto& ls : small->labelings) {
                        std::vector<int> slot_map = lb;
                        slot_map.insert(slot_map.end(), ls.begin(), ls.end());
                        PrimitivePiece piece{4, n, k, {}};
                        if (try_piece(cat, slot_map, {static_cast<int>(x), static_cast<int>(y)},
                                      piece_nodes, piece))
                            return true;
                    }
            }
        }

        if (has_cross_outside({static_cast<int>(x)})) return false;
        const int nx = cx.type.rank;

        // family 1, any irreducible type
        {
            CatalogTriple cat = catalog_instance(1, 0, 0, &cx.type);
            PrimitivePiece piece{1, nx, 0, {}};
            if (try_piece(cat, cx.labelings.front(), {static_cast<int>(x)}, cx.nodes, piece)) return true;
        }
        // family 2 and 3 on type A
        if (cx.type.family == Family::A) {
            CatalogTriple cat = catalog_instance(2, nx);
            for (const auto& l : cx.labelings) {
                PrimitivePiece piece{2, nx, 0, {}};
                if (try_piece(cat, l, {static_cast<int>(x)}, cx.nodes, piece)) return true;
            }
            if (nx >= 4 && nx % 2 == 0) {
                CatalogTriple cat3 = catalog_instance(3, nx);
                for (const auto& l : cx.labelings) {
                    PrimitivePiece piece{3, nx, 0, {}};
                    if (try_piece(cat3, l, {static_cast<int>(x)}, cx.nodes, piece)) return true;
                }
            }
        }
        // family 5 on type C, and on the canonical rank-2 doubly laced diagram
        if (cx.type.family == Family::C || (cx.type.family == Family::B && nx == 2)) {
            CatalogTriple cat = catalog_instance(5, nx);
            for (const auto& l : cx.labelings) {
                std::vector<int> slot_map = l;
                if (cx.type.family == Family::B) std::reverse(slot_map.begin(), slot_map.end());
                PrimitivePiece piece{5, nx, 0, {}};
                if (try_piece(cat, slot_map, {static_cast<int>(x)}, cx.nodes, piece)) return true;
            }
        }
        // family 6 on D5
        if (cx.type.family == Family::D && nx == 5) {
            CatalogTriple cat = catalog_instance(6, 5);
            for (const auto& l : cx.labelings) {
                PrimitivePiece piece{6, 5, 0, {}};
                if (try_piece(cat, l, {static_cast<int>(x)}, cx.nodes, piece)) return true;
            }
        }
        return false;
    };

    if (!solve()) return std::nullopt;
    Decomposition dec{pieces};
    return dec;
}

bool decomposition_matches(const Decomposition& dec, const AdmissibleTriple& triple,
                           const BasedRootDatum& datum) {
    std::set<int> covered;
    std::set<int> sp;
    std::vector<IntVec> sigma;
    for (const auto& piece : dec.pieces) {
        CatalogTriple cat;
        if (piece.family == 1) {
            DynkinDiagram d = subdiagram(datum, piece.bourbaki);
            SimpleType t = type_of(d).type;
            cat = catalog_instance(1, 0, 0, &t);
        } else {
            cat = catalog_instance(piece.family, piece.n, piece.k);
        }
        if (cat.slots != piece.bourbaki.size()) return false;
        for (int v : piece.bourbaki)
            if (!covered.insert(v).second) return false;  // overlap
        for (int p : cat.sp) sp.insert(piece.bourbaki[p]);
        for (const auto& sv : cat.sigma) {
            IntVec v(datum.num_simple(), 0);
            for (std::size_t p = 0; p < sv.size(); ++p) v[piece.bourbaki[p]] = sv[p];
            sigma.push_back(std::move(v));
        }
    }
    std::set<int> s_nodes(triple.s_nodes.begin(), triple.s_nodes.end());
    if (covered != s_nodes) return false;
    if (sp != triple.sp) return false;
    std::sort(sigma.begin(), sigma.end());
    return sigma == triple.sigma;
}

}  // namespace spherical
