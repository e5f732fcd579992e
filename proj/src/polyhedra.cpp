#include "spherical/polyhedra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace spherical {

namespace {

struct Row {
    RatVec coef;
    Rat cst;
    bool strict = false;
    RatVec mult;  // provenance over canonical rows; empty when not tracked
};

bool coef_all_zero(const Row& r) {
    for (const auto& c : r.coef)
        if (c != 0) return false;
    return true;
}

void scale_row(Row& r, const Rat& s) {
    for (auto& c : r.coef) c *= s;
    r.cst *= s;
    for (auto& m : r.mult) m *= s;
}

Row combine(const Row& a, const Rat& ca, const Row& b, const Rat& cb) {
    Row r;
    r.coef.resize(a.coef.size());
    for (std::size_t i = 0; i < a.coef.size(); ++i) r.coef[i] = ca * a.coef[i] + cb * b.coef[i];
    r.cst = ca * a.cst + cb * b.cst;
    r.strict = a.strict || b.strict;
    if (!a.mult.empty()) {
        r.mult.resize(a.mult.size());
        for (std::size_t i = 0; i < a.mult.size(); ++i) r.mult[i] = ca * a.mult[i] + cb * b.mult[i];
    }
    return r;
}

// true: trivially satisfied, drop; sets *contradiction when impossible
bool constant_row_status(const Row& r, bool* contradiction) {
    *contradiction = r.strict ? (r.cst <= 0) : (r.cst < 0);
    return !*contradiction;
}

// Keep, per coefficient direction, only the tightest constant.
void prune(std::vector<Row>& rows) {
    std::map<RatVec, std::size_t> best;
    std::vector<Row> out;
    for (auto& r : rows) {
        Rat lead = 0;
        for (const auto& c : r.coef)
            if (c != 0) { lead = abs(c); break; }
        if (lead != 0 && lead != 1) scale_row(r, Rat(1) / lead);
        auto it = best.find(r.coef);
        if (it == best.end()) {
            best.emplace(r.coef, out.size());
            out.push_back(std::move(r));
            continue;
        }
        Row& kept = out[it->second];
        if (r.cst < kept.cst || (r.cst == kept.cst && r.strict && !kept.strict)) kept = std::move(r);
    }
    rows = std::move(out);
}

struct Chain {
    std::size_t vars = 0;
    std::vector<std::vector<Row>> snapshots;  // snapshots[k] uses vars 0..k-1
    std::optional<RatVec> farkas;             // set when a contradiction appeared
    bool feasible = true;
};

// Eliminate variables vars-1 .. 0; snapshots[k] is the projection onto the
// first k variables.
Chain fm_chain(std::vector<Row> rows, std::size_t vars) {
    Chain ch;
    ch.vars = vars;
    ch.snapshots.assign(vars + 1, {});
    for (std::size_t level = vars; level + 1 > 0; --level) {
        std::vector<Row> cleaned;
        for (auto& r : rows) {
            bool zero_active = true;
            for (std::size_t j = 0; j < level; ++j)
                if (r.coef[j] != 0) { zero_active = false; break; }
            if (zero_active) {
                bool bad = false;
                if (!constant_row_status(r, &bad)) {
                    ch.feasible = false;
                    ch.farkas = r.mult;
                    return ch;
                }
                continue;
            }
            cleaned.push_back(std::move(r));
        }
        prune(cleaned);
        ch.snapshots[level] = cleaned;
        if (level == 0) break;
        const std::size_t j = level - 1;
        std::vector<Row> next;
        std::vector<const Row*> pos, neg;
        for (const auto& r : ch.snapshots[level]) {
            if (r.coef[j] > 0) pos.push_back(&r);
            else if (r.coef[j] < 0) neg.push_back(&r);
            else next.push_back(r);
        }
        for (const Row* p : pos)
            for (const Row* n : neg) next.push_back(combine(*p, -n->coef[j], *n, p->coef[j]));
        rows = std::move(next);
    }
    return ch;
}

struct Bounds {
    bool has_lo = false, has_hi = false;
    Rat lo, hi;
    bool lo_strict = false, hi_strict = false;
};

Bounds bounds_at(const std::vector<Row>& rows, std::size_t j, const RatVec& partial) {
    Bounds b;
    for (const auto& r : rows) {
        if (r.coef[j] == 0) continue;
        Rat rest = r.cst;
        for (std::size_t k = 0; k < j; ++k) rest += r.coef[k] * partial[k];
        Rat bound = -rest / r.coef[j];
        if (r.coef[j] > 0) {
            if (!b.has_lo || bound > b.lo) {
                b.lo = bound;
                b.lo_strict = r.strict;
                b.has_lo = true;
            } else if (bound == b.lo) {
                b.lo_strict = b.lo_strict || r.strict;
            }
        } else {
            if (!b.has_hi || bound < b.hi) {
                b.hi = bound;
                b.hi_strict = r.strict;
                b.has_hi = true;
            } else if (bound == b.hi) {
                b.hi_strict = b.hi_strict || r.strict;
            }
        }
    }
    return b;
}

Rat pick_value(const Bounds& b) {
    if (b.has_lo && b.has_hi) {
        if (b.lo == b.hi) return b.lo;  // only valid when both bounds are weak
        return (b.lo + b.hi) / 2;
    }
    if (b.has_lo) return b.lo_strict ? b.lo + 1 : b.lo;
    if (b.has_hi) return b.hi_strict ? b.hi - 1 : b.hi;
    return Rat(0);
}

Int rat_floor(const Rat& x) {
    Int n = boost::multiprecision::numerator(x), d = boost::multiprecision::denominator(x);
    Int q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

Int rat_ceil(const Rat& x) { return -rat_floor(-x); }

std::vector<Row> to_rows(const std::vector<LinearConstraint>& canon, bool track) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        Row r;
        r.coef = canon[i].coef;
        r.cst = canon[i].cst;
        r.strict = (canon[i].rel == Rel::Gt);
        if (track) {
            r.mult.assign(canon.size(), Rat(0));
            r.mult[i] = 1;
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

std::vector<LinearConstraint> canonical_rows(const InequalitySystem& sys) {
    std::vector<LinearConstraint> canon;
    for (const auto& row : sys.rows) {
        if (row.coef.size() != sys.vars) throw std::invalid_argument("InequalitySystem: bad row size");
        switch (row.rel) {
            case Rel::Ge:
            case Rel::Gt:
                canon.push_back(row);
                break;
            case Rel::Le: {
                LinearConstraint c{row.coef, -row.cst, Rel::Ge};
                for (auto& x : c.coef) x = -x;
                canon.push_back(std::move(c));
                break;
            }
            case Rel::Eq: {
                canon.push_back({row.coef, row.cst, Rel::Ge});
                LinearConstraint c{row.coef, -row.cst, Rel::Ge};
                for (auto& x : c.coef) x = -x;
                canon.push_back(std::move(c));
                break;
            }
        }
    }
    return canon;
}

FeasibilityResult feasible_strict(const InequalitySystem& sys) {
    auto canon = canonical_rows(sys);
    Chain ch = fm_chain(to_rows(canon, true), sys.vars);
    FeasibilityResult res;
    if (!ch.feasible) {
        res.farkas = ch.farkas;
        return res;
    }
    RatVec x(sys.vars, Rat(0));
    for (std::size_t j = 0; j < sys.vars; ++j) {
        Bounds b = bounds_at(ch.snapshots[j + 1], j, x);
        if (b.has_lo && b.has_hi && (b.lo > b.hi || (b.lo == b.hi && (b.lo_strict || b.hi_strict))))
            throw std::logic_error("feasible_strict: empty interval after elimination");
        x[j] = pick_value(b);
    }
    assert(check_witness(sys, x));
    res.witness = std::move(x);
    return res;
}

bool check_witness(const InequalitySystem& sys, const RatVec& x) {
    if (x.size() != sys.vars) return false;
    for (const auto& row : sys.rows) {
        Rat v = row.cst;
        for (std::size_t i = 0; i < sys.vars; ++i) v += row.coef[i] * x[i];
        switch (row.rel) {
            case Rel::Ge: if (v < 0) return false; break;
            case Rel::Gt: if (v <= 0) return false; break;
            case Rel::Le: if (v > 0) return false; break;
            case Rel::Eq: if (v != 0) return false; break;
        }
    }
    return true;
}

bool check_farkas(const InequalitySystem& sys, const RatVec& mult) {
    auto canon = canonical_rows(sys);
    if (mult.size() != canon.size()) return false;
    RatVec coef(sys.vars, Rat(0));
    Rat cst = 0;
    bool strict = false;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        if (mult[i] < 0) return false;
        if (mult[i] == 0) continue;
        for (std::size_t j = 0; j < sys.vars; ++j) coef[j] += mult[i] * canon[i].coef[j];
        cst += mult[i] * canon[i].cst;
        if (canon[i].rel == Rel::Gt) strict = true;
    }
    for (const auto& c : coef)
        if (c != 0) return false;
    return strict ? (cst <= 0) : (cst < 0);
}

namespace {

// Basis of {x in Q^dim : r . x = 0 for all rows}, primitive integer vectors.
std::vector<IntVec> rational_kernel(const std::vector<IntVec>& rows, std::size_t dim) {
    std::vector<RatVec> m;
    for (const auto& r : rows) {
        RatVec q(dim);
        for (std::size_t i = 0; i < dim; ++i) q[i] = r[i];
        m.push_back(std::move(q));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t top = 0;
    for (std::size_t col = 0; col < dim && top < m.size(); ++col) {
        std::size_t piv = top;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[top], m[piv]);
        Rat inv = Rat(1) / m[top][col];
        for (auto& x : m[top]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == top || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t k = 0; k < dim; ++k) m[i][k] -= f * m[top][k];
        }
        pivot_col.push_back(col);
        ++top;
    }
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<IntVec> basis;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(dim, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
        Int lcm = 1;
        for (const auto& x : v) lcm = lcm / gcd(lcm, boost::multiprecision::denominator(x)) * boost::multiprecision::denominator(x);
        IntVec w(dim);
        for (std::size_t i = 0; i < dim; ++i)
            w[i] = boost::multiprecision::numerator(v[i]) * (lcm / boost::multiprecision::denominator(v[i]));
        basis.push_back(primitive(std::move(w)));
    }
    return basis;
}

}  // namespace

std::vector<IntVec> inequality_cone_rays(const std::vector<IntVec>& normals_in, std::size_t dim) {
    if (dim == 0) return {};
    std::set<IntVec> seen;
    std::vector<IntVec> normals;
    for (const auto& n : normals_in) {
        if (n.size() != dim) throw std::invalid_argument("inequality_cone_rays: bad normal size");
        IntVec p = primitive(n);
        if (is_zero(p)) continue;
        if (seen.insert(p).second) normals.push_back(std::move(p));
    }
    if (!rational_kernel(normals, dim).empty())
        throw NonPointedCone("inequality cone contains a line");

    auto satisfies_all = [&](const IntVec& z) {
        for (const auto& n : normals)
            if (dot(n, z) < 0) return false;
        return true;
    };

    std::set<IntVec> rays;
    const std::size_t k = dim - 1;
    std::vector<std::size_t> idx(k);
    auto consider = [&](const std::vector<IntVec>& subset) {
        auto ker = rational_kernel(subset, dim);
        if (ker.size() != 1) return;
        IntVec z = ker[0];
        if (satisfies_all(z)) rays.insert(z);
        else {
            for (auto& x : z) x = -x;
            if (satisfies_all(z)) rays.insert(z);
        }
    };
    // all k-subsets of normals
    std::vector<IntVec> subset(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t chosen) {
        if (chosen == k) {
            consider(subset);
            return;
        }
        for (std::size_t i = start; i + (k - chosen) <= normals.size(); ++i) {
            subset[chosen] = normals[i];
            rec(i + 1, chosen + 1);
        }
    };
    if (k == 0) consider({});
    else rec(0, 0);
    return {rays.begin(), rays.end()};
}

std::vector<IntVec> dual_cone_rays(const std::vector<IntVec>& generators_in, std::size_t dim) {
    std::vector<IntVec> gens;
    for (const auto& g : generators_in) {
        if (g.size() != dim) throw std::invalid_argument("dual_cone_rays: bad generator size");
        if (!is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) return {};
    if (rank(IntMatrix(gens)) != dim)
        throw std::invalid_argument("dual_cone_rays: generators do not span the ambient space");
    return inequality_cone_rays(gens, dim);
}

std::vector<IntVec> cone_extreme_rays(const std::vector<IntVec>& generators, std::size_t dim) {
    std::vector<IntVec> gens;
    for (const auto& g : generators)
        if (!is_zero(g)) gens.push_back(g);
    if (gens.empty()) return {};
    auto facets = dual_cone_rays(gens, dim);
    if (facets.empty() || rank(IntMatrix(facets)) != dim)
        throw NonPointedCone("cone_extreme_rays: cone is not pointed");
    return inequality_cone_rays(facets, dim);
}

namespace {

// The generators expressed in the coordinates of the saturated lattice they
// span; full dimensional there by construction.
struct SpanCoords {
    Sublattice span;
    std::vector<IntVec> gens;
    std::size_t dim = 0;
};

SpanCoords restrict_to_span(const std::vector<IntVec>& generators, std::size_t dim) {
    SpanCoords sc;
    std::vector<IntVec> gens;
    for (const auto& g : generators) {
        if (g.size() != dim) throw std::invalid_argument("bad generator size");
        if (!is_zero(g)) gens.push_back(g);
    }
    sc.span = saturate(hermite_basis(gens, dim));
    sc.dim = sc.span.rank();
    for (const auto& g : gens) {
        auto c = sc.span.coordinates(g);
        assert(c.has_value());
        sc.gens.push_back(*c);
    }
    return sc;
}

std::vector<IntVec> pointed_facets(const SpanCoords& sc) {
    auto facets = dual_cone_rays(sc.gens, sc.dim);
    if (facets.empty() || rank(IntMatrix(facets)) != sc.dim)
        throw NonPointedCone("cone is not pointed");
    return facets;
}

// Lattice points x with facets.x >= 0 and grading.x <= bound, by recursive
// search over exact Fourier-Motzkin projections.
std::vector<IntVec> enumerate_graded_points(const std::vector<IntVec>& facets, const IntVec& grading,
                                            const Int& bound, std::size_t dim) {
    std::vector<Row> rows;
    for (const auto& f : facets) {
        Row r;
        r.coef.assign(f.begin(), f.end());
        r.cst = 0;
        rows.push_back(std::move(r));
    }
    Row cap;
    cap.coef.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) cap.coef[i] = -Rat(grading[i]);
    cap.cst = bound;
    rows.push_back(std::move(cap));

    Chain ch = fm_chain(std::move(rows), dim);
    std::vector<IntVec> out;
    if (!ch.feasible) return out;
    RatVec partial(dim, Rat(0));
    IntVec point(dim, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == dim) {
            out.push_back(point);
            return;
        }
        Bounds b = bounds_at(ch.snapshots[j + 1], j, partial);
        if (!b.has_lo || !b.has_hi) throw std::logic_error("unbounded enumeration region");
        Int lo = rat_ceil(b.lo), hi = rat_floor(b.hi);
        for (Int v = lo; v <= hi; ++v) {
            partial[j] = Rat(v);
            point[j] = v;
            rec(j + 1);
        }
        partial[j] = 0;
    };
    rec(0);
    return out;
}

}  // namespace

std::vector<IntVec> hilbert_basis(const std::vector<IntVec>& generators, std::size_t dim) {
    SpanCoords sc = restrict_to_span(generators, dim);
    if (sc.dim == 0) return {};
    auto facets = pointed_facets(sc);
    auto rays = inequality_cone_rays(facets, sc.dim);

    IntVec grading(sc.dim, 0);
    for (const auto& f : facets) grading = add(grading, f);
    Int bound = 0;
    for (const auto& r : rays) bound += dot(grading, r);

    auto points = enumerate_graded_points(facets, grading, bound, sc.dim);
    std::sort(points.begin(), points.end(), [&](const IntVec& a, const IntVec& b) {
        Int ga = dot(grading, a), gb = dot(grading, b);
        if (ga != gb) return ga < gb;
        return a < b;
    });
    std::set<IntVec> members(points.begin(), points.end());

    std::vector<IntVec> basis;
    for (const auto& x : points) {
        if (is_zero(x)) continue;
        bool reducible = false;
        for (const auto& h : basis) {
            IntVec y = sub(x, h);
            if (is_zero(y)) continue;
            if (members.count(y)) { reducible = true; break; }
        }
        if (!reducible) basis.push_back(x);
    }

    std::vector<IntVec> out;
    for (const auto& b : basis) out.push_back(sc.span.from_coordinates(b));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVec> hilbert_basis(const std::vector<IntVec>& generators, const Sublattice& lattice) {
    std::vector<IntVec> coords;
    for (const auto& g : generators) {
        auto c = lattice.coordinates(g);
        if (!c) throw std::invalid_argument("hilbert_basis: generator outside the lattice");
        coords.push_back(*c);
    }
    auto hb = hilbert_basis(coords, lattice.rank());
    std::vector<IntVec> out;
    for (const auto& h : hb) out.push_back(lattice.from_coordinates(h));
    std::sort(out.begin(), out.end());
    return out;
}

bool in_monoid(const IntVec& target, const std::vector<IntVec>& generators) {
    if (is_zero(target)) return true;
    std::vector<IntVec> gens;
    for (const auto& g : generators)
        if (!is_zero(g)) gens.push_back(g);
    if (gens.empty()) return false;
    SpanCoords sc = restrict_to_span(gens, target.size());
    auto facets = pointed_facets(sc);
    auto t = sc.span.coordinates(target);
    if (!t) return false;

    auto in_cone = [&](const IntVec& x) {
        for (const auto& f : facets)
            if (dot(f, x) < 0) return false;
        return true;
    };
    std::map<IntVec, bool> memo;
    std::function<bool(const IntVec&)> rec = [&](const IntVec& x) -> bool {
        if (is_zero(x)) return true;
        if (!in_cone(x)) return false;
        auto it = memo.find(x);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& g : sc.gens) {
            if (rec(sub(x, g))) { ok = true; break; }
        }
        memo[x] = ok;
        return ok;
    };
    return rec(*t);
}

}  // namespace spherical
