#include "spherical/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace spherical {

char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::E: return 'E';
        case Family::F: return 'F';
        case Family::G: return 'G';
    }
    return '?';
}

Family family_from_letter(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
    }
    throw std::invalid_argument(std::string("unknown type letter: ") + c);
}

SimpleType::SimpleType(Family f, int r) : family(f), rank(r) {
    switch (family) {
        case Family::A:
            if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
            break;
        case Family::B:
            if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
            break;
        case Family::C:
            if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
            if (rank == 2) family = Family::B;  // one diagram, one canonical form
            break;
        case Family::D:
            if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
            if (rank == 3) family = Family::A;  // D3 = A3
            break;
        case Family::E:
            if (rank < 6 || rank > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
            break;
        case Family::F:
            if (rank != 4) throw std::invalid_argument("type F needs rank 4");
            break;
        case Family::G:
            if (rank != 2) throw std::invalid_argument("type G needs rank 2");
            break;
    }
}

std::string SimpleType::str() const { return family_letter(family) + std::to_string(rank); }

IntMatrix cartan_matrix(const SimpleType& t) {
    const int n = t.rank;
    IntMatrix c(n, n);
    auto path = [&](int i, int j) { c.a[i][j] = -1; c.a[j][i] = -1; };
    for (int i = 0; i < n; ++i) c.a[i][i] = 2;
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) path(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < n; ++i) path(i, i + 1);
            c.a[n - 1][n - 2] = -2;  // alpha_n short
            break;
        case Family::C:
            for (int i = 0; i + 1 < n; ++i) path(i, i + 1);
            c.a[n - 2][n - 1] = -2;  // alpha_n long
            break;
        case Family::D:
            for (int i = 0; i + 2 < n; ++i) path(i, i + 1);
            path(n - 3, n - 1);
            break;
        case Family::E:
            // chain 1-3-4-5-...-n, with 2 attached to 4
            path(0, 2);
            for (int i = 2; i + 1 < n; ++i) path(i, i + 1);
            path(1, 3);
            break;
        case Family::F:
            for (int i = 0; i + 1 < n; ++i) path(i, i + 1);
            c.a[2][1] = -2;  // alpha_3, alpha_4 short
            break;
        case Family::G:
            c.a[0][1] = -3;  // alpha_1 short
            c.a[1][0] = -1;
            break;
    }
    return c;
}

Int BasedRootDatum::pairing(std::size_t coroot_index, const IntVec& weight) const {
    return dot(simple_coroots.at(coroot_index), weight);
}

bool BasedRootDatum::is_dominant(const IntVec& weight) const {
    for (std::size_t i = 0; i < num_simple(); ++i)
        if (pairing(i, weight) < 0) return false;
    return true;
}

IntVec BasedRootDatum::root_combination(const IntVec& coeffs) const {
    if (coeffs.size() != num_simple()) throw std::invalid_argument("root_combination: bad size");
    IntVec v(rank, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) v = add(v, scale(coeffs[i], simple_roots[i]));
    return v;
}

namespace {

void derive_components(BasedRootDatum& d) {
    d.component_types.clear();
    d.component_nodes.clear();
    std::vector<int> all(d.num_simple());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    if (all.empty()) return;
    for (const auto& comp : components(subdiagram(d, all))) {
        TypedLabeling tl = type_of(comp);
        d.component_types.push_back(tl.type);
        d.component_nodes.push_back(tl.bourbaki);
    }
}

}  // namespace

BasedRootDatum simply_connected(const std::vector<SimpleType>& types, std::size_t torus_rank) {
    BasedRootDatum d;
    std::size_t total = torus_rank;
    for (const auto& t : types) total += t.rank;
    d.rank = total;
    std::size_t offset = 0;
    for (const auto& t : types) {
        IntMatrix c = cartan_matrix(t);
        for (int j = 0; j < t.rank; ++j) {
            IntVec root(total, 0), coroot(total, 0);
            for (int i = 0; i < t.rank; ++i) root[offset + i] = c.a[i][j];
            coroot[offset + j] = 1;
            d.simple_roots.push_back(std::move(root));
            d.simple_coroots.push_back(std::move(coroot));
        }
        offset += t.rank;
    }
    derive_components(d);
    return d;
}

BasedRootDatum adjoint(const std::vector<SimpleType>& types) {
    BasedRootDatum d;
    std::size_t total = 0;
    for (const auto& t : types) total += t.rank;
    d.rank = total;
    std::size_t offset = 0;
    for (const auto& t : types) {
        IntMatrix c = cartan_matrix(t);
        for (int i = 0; i < t.rank; ++i) {
            IntVec root(total, 0), coroot(total, 0);
            root[offset + i] = 1;
            for (int j = 0; j < t.rank; ++j) coroot[offset + j] = c.a[i][j];
            d.simple_roots.push_back(std::move(root));
            d.simple_coroots.push_back(std::move(coroot));
        }
        offset += t.rank;
    }
    derive_components(d);
    return d;
}

BasedRootDatum custom_datum(std::vector<IntVec> simple_roots, std::vector<IntVec> simple_coroots,
                            std::size_t rank) {
    BasedRootDatum d;
    d.rank = rank;
    d.simple_roots = std::move(simple_roots);
    d.simple_coroots = std::move(simple_coroots);
    if (d.simple_roots.size() != d.simple_coroots.size())
        throw std::invalid_argument("custom datum: root/coroot count mismatch");
    for (const auto& v : d.simple_roots)
        if (v.size() != rank) throw std::invalid_argument("custom datum: bad root length");
    for (const auto& v : d.simple_coroots)
        if (v.size() != rank) throw std::invalid_argument("custom datum: bad coroot length");
    const std::size_t n = d.num_simple();
    if (n > 0) {
        if (spherical::rank(IntMatrix(d.simple_roots)) != n)
            throw std::invalid_argument("custom datum: simple roots not linearly independent");
        if (spherical::rank(IntMatrix(d.simple_coroots)) != n)
            throw std::invalid_argument("custom datum: simple coroots not linearly independent");
    }
    derive_components(d);  // type_of validates the pairing matrix
    return d;
}

DynkinDiagram subdiagram(const BasedRootDatum& datum, const std::vector<int>& nodes) {
    DynkinDiagram d;
    d.nodes = nodes;
    std::sort(d.nodes.begin(), d.nodes.end());
    d.nodes.erase(std::unique(d.nodes.begin(), d.nodes.end()), d.nodes.end());
    const std::size_t n = d.nodes.size();
    d.pairing = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d.pairing.a[i][j] = datum.cartan(d.nodes[i], d.nodes[j]);
    return d;
}

std::vector<DynkinDiagram> components(const DynkinDiagram& d) {
    const std::size_t n = d.size();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w)
                if (comp[w] == -1 && d.adjacent(v, w)) { comp[w] = ncomp; stack.push_back(w); }
        }
        ++ncomp;
    }
    std::vector<DynkinDiagram> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < n; ++i)
            if (comp[i] == c) pos.push_back(i);
        DynkinDiagram sub;
        sub.pairing = IntMatrix(pos.size(), pos.size());
        for (std::size_t i = 0; i < pos.size(); ++i) {
            sub.nodes.push_back(d.nodes[pos[i]]);
            for (std::size_t j = 0; j < pos.size(); ++j) sub.pairing.a[i][j] = d.pairing.a[pos[i]][pos[j]];
        }
        out.push_back(std::move(sub));
    }
    return out;
}

namespace {

// All bijections position -> bourbaki slot matching the reference Cartan
// matrix exactly; returned as bourbaki-slot -> position.
std::vector<std::vector<int>> labelings_against(const DynkinDiagram& d, const IntMatrix& ref) {
    const std::size_t n = d.size();
    std::vector<std::vector<int>> found;
    std::vector<int> slot_to_pos(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(std::size_t)> rec = [&](std::size_t slot) {
        if (slot == n) {
            found.push_back(slot_to_pos);
            return;
        }
        for (std::size_t p = 0; p < n; ++p) {
            if (used[p]) continue;
            bool ok = true;
            for (std::size_t s = 0; s <= slot && ok; ++s) {
                int q = (s == slot) ? static_cast<int>(p) : slot_to_pos[s];
                if (q < 0) continue;
                if (d.pairing.a[p][q] != ref.a[slot][s] || d.pairing.a[q][p] != ref.a[s][slot]) ok = false;
            }
            if (!ok) continue;
            used[p] = true;
            slot_to_pos[slot] = static_cast<int>(p);
            rec(slot + 1);
            used[p] = false;
            slot_to_pos[slot] = -1;
        }
    };
    rec(0);
    return found;
}

std::vector<SimpleType> candidate_types(std::size_t n) {
    std::vector<SimpleType> c;
    c.emplace_back(Family::A, static_cast<int>(n));
    if (n >= 2) c.emplace_back(Family::B, static_cast<int>(n));
    if (n >= 3) c.emplace_back(Family::C, static_cast<int>(n));
    if (n >= 4) c.emplace_back(Family::D, static_cast<int>(n));
    if (n >= 6 && n <= 8) c.emplace_back(Family::E, static_cast<int>(n));
    if (n == 4) c.emplace_back(Family::F, 4);
    if (n == 2) c.emplace_back(Family::G, 2);
    return c;
}

}  // namespace

TypedLabeling type_of(const DynkinDiagram& d) {
    const std::size_t n = d.size();
    if (n == 0) throw std::invalid_argument("type_of: empty diagram");
    for (const auto& t : candidate_types(n)) {
        auto labelings = labelings_against(d, cartan_matrix(t));
        if (labelings.empty()) continue;
        std::vector<int> best;
        for (const auto& l : labelings) {
            std::vector<int> global(n);
            for (std::size_t s = 0; s < n; ++s) global[s] = d.nodes[l[s]];
            if (best.empty() || global < best) best = global;
        }
        return TypedLabeling{t, best};
    }
    throw std::invalid_argument("type_of: diagram is not of finite type");
}

std::vector<std::vector<int>> diagram_automorphisms(const DynkinDiagram& d) {
    const std::size_t n = d.size();
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            out.push_back(perm);
            return;
        }
        for (std::size_t p = 0; p < n; ++p) {
            if (used[p]) continue;
            bool ok = true;
            for (std::size_t j = 0; j <= i && ok; ++j) {
                int q = (j == i) ? static_cast<int>(p) : perm[j];
                if (d.pairing.a[i][j] != d.pairing.a[p][q] || d.pairing.a[j][i] != d.pairing.a[q][p]) ok = false;
            }
            if (!ok) continue;
            used[p] = true;
            perm[i] = static_cast<int>(p);
            rec(i + 1);
            used[p] = false;
            perm[i] = -1;
        }
    };
    rec(0);
    return out;
}

}  // namespace spherical
