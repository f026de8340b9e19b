#include "polysum/polytope.hpp"

#include "polysum/error.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace polysum {

namespace {

using IVec = std::vector<ExactInteger>;

struct HullFacet {
    IVec a;
    ExactInteger b;
    VertexSet verts;
    bool alive = true;
};

ExactInteger dot(const IVec& a, const IVec& x) {
    ExactInteger s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
    return s;
}

std::size_t affine_rank_int(const std::vector<IVec>& pts, const std::vector<std::size_t>& idx) {
    if (idx.size() <= 1) return 0;
    std::vector<IVec> m;
    m.reserve(idx.size() - 1);
    const IVec& o = pts[idx[0]];
    for (std::size_t i = 1; i < idx.size(); ++i) {
        IVec r(o.size());
        for (std::size_t j = 0; j < o.size(); ++j) r[j] = pts[idx[i]][j] - o[j];
        m.push_back(std::move(r));
    }
    return rank_integer(m);
}

// Greedy choice of an affinely independent subset of maximal size.
std::vector<std::size_t> independent_subset(const std::vector<IVec>& pts,
                                            const std::vector<std::size_t>& idx,
                                            std::size_t want) {
    std::vector<std::size_t> chosen;
    for (std::size_t i : idx) {
        chosen.push_back(i);
        if (affine_rank_int(pts, chosen) + 1 != chosen.size()) chosen.pop_back();
        if (chosen.size() == want) break;
    }
    return chosen;
}

class Hull {
public:
    Hull(std::vector<IVec> pts, std::size_t D) : P(std::move(pts)), D(D), N(P.size()) {}

    void run() {
        std::vector<std::size_t> all(N);
        for (std::size_t i = 0; i < N; ++i) all[i] = i;
        auto simplex = independent_subset(P, all, D + 1);
        if (simplex.size() != D + 1) throw DegenerateInput("input points are not full-dimensional");

        interior.assign(D, 0);
        for (auto i : simplex)
            for (std::size_t j = 0; j < D; ++j) interior[j] += P[i][j];

        is_vertex.assign(N, false);
        for (auto i : simplex) is_vertex[i] = true;
        for (std::size_t skip = 0; skip <= D; ++skip) {
            std::vector<std::size_t> pts;
            for (std::size_t t = 0; t <= D; ++t)
                if (t != skip) pts.push_back(simplex[t]);
            VertexSet vs(N);
            for (auto i : pts) vs.insert(i);
            add_facet(make_facet(pts, vs));
        }
        std::vector<bool> in_simplex(N, false);
        for (auto i : simplex) in_simplex[i] = true;
        for (std::size_t p = 0; p < N; ++p)
            if (!in_simplex[p]) insert(p);
    }

    std::vector<IVec> P;
    std::size_t D, N;
    IVec interior;  // sum of the initial simplex, i.e. (D+1) * interior point
    std::vector<HullFacet> facets;
    std::vector<bool> is_vertex;

private:
    HullFacet make_facet(const std::vector<std::size_t>& base, const VertexSet& verts) {
        // base: D affinely independent points spanning the hyperplane
        std::vector<IVec> rows;
        for (std::size_t i = 1; i < D; ++i) {
            IVec r(D);
            for (std::size_t j = 0; j < D; ++j) r[j] = P[base[i]][j] - P[base[0]][j];
            rows.push_back(std::move(r));
        }
        HullFacet f;
        f.a.resize(D);
        for (std::size_t c = 0; c < D; ++c) {
            std::vector<IVec> m(D - 1, IVec(D - 1));
            for (std::size_t i = 0; i + 1 < D; ++i)
                for (std::size_t j = 0, jj = 0; j < D; ++j)
                    if (j != c) m[i][jj++] = rows[i][j];
            f.a[c] = det_integer(m);
            if (c % 2) f.a[c] = -f.a[c];
        }
        ExactInteger g = 0;
        for (auto& x : f.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 0) throw InternalInconsistency("hull: degenerate facet normal");
        for (auto& x : f.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        f.b = dot(f.a, P[base[0]]);
        ExactInteger side = dot(f.a, interior) - ExactInteger(D + 1) * f.b;
        if (side == 0) throw InternalInconsistency("hull: interior point on a facet");
        if (side < 0) {
            for (auto& x : f.a) x = -x;
            f.b = -f.b;
        }
        f.verts = verts;
        return f;
    }

    void add_facet(HullFacet f) { facets.push_back(std::move(f)); }

    void insert(std::size_t p) {
        const std::size_t F = facets.size();
        std::vector<int> side(F, 1);  // -1 visible, 0 coplanar, 1 beneath
        bool any_visible = false;
        for (std::size_t i = 0; i < F; ++i) {
            if (!facets[i].alive) continue;
            int s = sgn(dot(facets[i].a, P[p]) - facets[i].b);
            side[i] = s;
            if (s < 0) any_visible = true;
        }
        if (!any_visible) return;

        std::vector<std::size_t> visible, rest;
        for (std::size_t i = 0; i < F; ++i) {
            if (!facets[i].alive) continue;
            (side[i] < 0 ? visible : rest).push_back(i);
        }

        std::unordered_map<std::string, std::size_t> by_normal;
        auto key = [](const IVec& a) {
            std::string s;
            for (auto& x : a) s += x.get_str(16) + ",";
            return s;
        };
        std::vector<HullFacet> created;
        for (std::size_t g : rest)
            if (side[g] == 0) by_normal[key(facets[g].a)] = g;  // existing facet ids

        VertexSet touched(N);
        for (std::size_t fi : visible) {
            const HullFacet& f = facets[fi];
            touched |= f.verts;
            bool f_simplex = f.verts.size() == D;
            for (std::size_t gi : rest) {
                const HullFacet& g = facets[gi];
                std::size_t c = f.verts.intersection_size(g.verts);
                if (c < D - 1) continue;
                VertexSet ridge = f.verts & g.verts;
                std::vector<std::size_t> ridge_pts = ridge.elements();
                if (f_simplex || g.verts.size() == D) {
                    if (c != D - 1) continue;
                } else if (affine_rank_int(P, ridge_pts) != D - 2) {
                    continue;
                }
                if (side[gi] == 0) {
                    facets[gi].verts.insert(p);
                    touched |= facets[gi].verts;
                    continue;
                }
                std::vector<std::size_t> base =
                    ridge_pts.size() == D - 1 ? ridge_pts : independent_subset(P, ridge_pts, D - 1);
                base.push_back(p);
                VertexSet vs = ridge;
                vs.insert(p);
                HullFacet nf = make_facet(base, vs);
                std::string k = key(nf.a);
                auto it = by_normal.find(k);
                if (it != by_normal.end()) {
                    // only reachable if two horizon ridges share a hyperplane with p
                    if (it->second >= F)
                        created[it->second - F].verts |= vs;
                    else
                        facets[it->second].verts |= vs;
                    touched |= vs;
                    continue;
                }
                by_normal.emplace(k, F + created.size());
                created.push_back(std::move(nf));
            }
        }
        for (std::size_t fi : visible) facets[fi].alive = false;
        for (auto& nf : created) {
            touched |= nf.verts;
            facets.push_back(std::move(nf));
        }
        is_vertex[p] = true;
        touched.erase(p);

        // A previous vertex survives only if its incident facet normals span R^D.
        for (std::size_t w : touched.elements()) {
            if (!is_vertex[w]) continue;
            std::vector<IVec> normals;
            for (auto& f : facets)
                if (f.alive && f.verts.contains(w)) normals.push_back(f.a);
            if (normals.size() >= D && rank_integer(normals) == D) continue;
            is_vertex[w] = false;
            for (auto& f : facets)
                if (f.alive) f.verts.erase(w);
        }

        // compact dead facets from time to time
        if (facets.size() > 2 * F + 64) {
            std::vector<HullFacet> keep;
            for (auto& f : facets)
                if (f.alive) keep.push_back(std::move(f));
            facets = std::move(keep);
        }
    }
};

}  // namespace

Polytope convex_hull(const std::vector<Point>& points) {
    if (points.empty()) throw DegenerateInput("convex_hull: no points");
    const std::size_t D = points[0].size();
    if (D == 0) throw DimensionError("convex_hull: zero ambient dimension");
    for (auto& q : points)
        if (q.size() != D) throw DimensionError("convex_hull: mixed dimensions");

    // Per-coordinate scaling to integers is affine, so the combinatorics are unchanged.
    std::vector<ExactInteger> scale(D, 1);
    for (auto& q : points)
        for (std::size_t j = 0; j < D; ++j)
            mpz_lcm(scale[j].get_mpz_t(), scale[j].get_mpz_t(), q[j].get_den_mpz_t());
    std::vector<IVec> ip(points.size(), IVec(D));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < D; ++j)
            ip[i][j] = points[i][j].get_num() * (scale[j] / points[i][j].get_den());

    Hull h(std::move(ip), D);
    h.run();

    Polytope out;
    out.ambient_dim = D;
    out.dim = D;
    std::vector<std::size_t> new_index(points.size(), SIZE_MAX);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!h.is_vertex[i]) continue;
        new_index[i] = out.vertices.size();
        out.vertices.push_back(points[i]);
        out.source_index.push_back(i);
    }
    std::vector<std::pair<VertexSet, Facet>> fs;
    for (auto& f : h.facets) {
        if (!f.alive) continue;
        Facet facet;
        IVec a(D);
        ExactInteger g = 0;
        for (std::size_t j = 0; j < D; ++j) {
            a[j] = f.a[j] * scale[j];
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[j].get_mpz_t());
        }
        facet.normal.resize(D);
        for (std::size_t j = 0; j < D; ++j) facet.normal[j] = ExactScalar(a[j] / g);
        facet.offset = ExactScalar(f.b, g);
        facet.offset.canonicalize();
        VertexSet vs(out.vertices.size());
        for (auto i : f.verts.elements()) vs.insert(new_index[i]);
        fs.emplace_back(std::move(vs), std::move(facet));
    }
    std::sort(fs.begin(), fs.end(), [](const auto& x, const auto& y) { return x.first.elements() < y.first.elements(); });
    for (auto& [vs, facet] : fs) {
        out.incidence.push_back(std::move(vs));
        out.facets.push_back(std::move(facet));
    }
    return out;
}

FaceLattice face_lattice(const Polytope& p) {
    const int D = static_cast<int>(p.dim);
    const std::size_t n = p.vertices.size();
    FaceLattice l;
    l.dim = D;
    l.num_vertices = n;
    l.levels.assign(D + 2, {});
    VertexSet full(n);
    for (std::size_t i = 0; i < n; ++i) full.insert(i);
    l.levels[D + 1] = {full};
    l.levels[0] = {VertexSet(n)};
    if (D == 0) return l;
    l.levels[D] = p.incidence;

    for (int k = D - 1; k >= 1; --k) {
        std::unordered_set<VertexSet, VertexSetHash> next;
        for (const VertexSet& F : l.levels[k + 1]) {
            if (F.size() == static_cast<std::size_t>(k + 1)) {
                // a simplex: every vertex-deleted subset is a facet of F
                for (auto v : F.elements()) {
                    VertexSet s = F;
                    s.erase(v);
                    next.insert(std::move(s));
                }
                continue;
            }
            std::unordered_set<VertexSet, VertexSetHash> cand;
            for (const VertexSet& G : p.incidence) {
                if (F.subset_of(G)) continue;
                VertexSet I = F & G;
                if (!I.empty()) cand.insert(std::move(I));
            }
            std::vector<VertexSet> cs(cand.begin(), cand.end());
            std::sort(cs.begin(), cs.end(), [](const VertexSet& x, const VertexSet& y) { return x.size() > y.size(); });
            std::vector<VertexSet> maximal;
            for (auto& c : cs) {
                bool dominated = false;
                for (auto& m : maximal)
                    if (c.subset_of(m)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) maximal.push_back(c);
            }
            for (auto& m : maximal) next.insert(std::move(m));
        }
        l.levels[k].assign(next.begin(), next.end());
        std::sort(l.levels[k].begin(), l.levels[k].end());
    }
    return l;
}

CountVector f_vector(const FaceLattice& l) {
    CountVector f = CountVector::zeros(l.dim - 1);
    for (int k = -1; k <= l.dim - 1; ++k) f.set(k, static_cast<unsigned long>(l.faces(k).size()));
    return f;
}

bool is_k_neighborly(const FaceLattice& l, std::size_t k) {
    std::unordered_set<VertexSet, VertexSetHash> all;
    for (int j = -1; j < l.dim; ++j)
        for (auto& f : l.faces(j)) all.insert(f);
    const std::size_t n = l.num_vertices;
    if (k > n) return false;
    // walk all subsets of size 1..k in lexicographic order
    for (std::size_t s = 1; s <= k; ++s) {
        std::vector<std::size_t> c(s);
        for (std::size_t i = 0; i < s; ++i) c[i] = i;
        while (true) {
            VertexSet vs(n);
            for (auto i : c) vs.insert(i);
            if (!all.count(vs)) return false;
            std::size_t i = s;
            while (i > 0 && c[i - 1] == n - s + i - 1) --i;
            if (i == 0) break;
            ++c[i - 1];
            for (std::size_t j = i; j < s; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return true;
}

bool is_k_neighborly(const Polytope& p, std::size_t k) { return is_k_neighborly(face_lattice(p), k); }

Polytope minkowski_sum_direct(const std::vector<Polytope>& ps) {
    if (ps.empty()) throw DimensionError("minkowski_sum_direct: no summands");
    for (auto& p : ps)
        if (p.ambient_dim != ps[0].ambient_dim) throw DimensionError("minkowski_sum_direct: mixed dimensions");
    Polytope acc = ps[0];
    for (std::size_t s = 1; s < ps.size(); ++s) {
        std::vector<Point> sums;
        sums.reserve(acc.vertices.size() * ps[s].vertices.size());
        for (auto& v : acc.vertices)
            for (auto& w : ps[s].vertices) {
                Point q(v.size());
                for (std::size_t j = 0; j < v.size(); ++j) q[j] = v[j] + w[j];
                sums.push_back(std::move(q));
            }
        acc = convex_hull(sums);
    }
    return acc;
}

}  // namespace polysum
