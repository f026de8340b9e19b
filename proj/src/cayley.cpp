#include "polysum/cayley.hpp"

#include "polysum/error.hpp"

#include <bit>
#include <set>
#include <unordered_set>

namespace polysum {

int popcount(ColorMask m) { return std::popcount(m); }

ColorMask CayleyInstance::support(const VertexSet& face) const {
    ColorMask m = 0;
    for (std::size_t i = 0; i < r; ++i)
        if (face.intersection_size(color_sets[i])) m |= 1u << i;
    return m;
}

VertexSet CayleyInstance::vertices_of(ColorMask R) const {
    VertexSet s(embedded.size());
    for (std::size_t i = 0; i < r; ++i)
        if (R >> i & 1) s |= color_sets[i];
    return s;
}

CayleyInstance cayley_embed(const std::vector<Polytope>& summands) {
    const std::size_t r = summands.size();
    if (r < 2 || r > 3) throw DomainError("cayley_embed: need 2 or 3 summands");
    const std::size_t d = summands[0].ambient_dim;
    for (auto& p : summands)
        if (p.ambient_dim != d || p.dim != d) throw DimensionError("cayley_embed: summands must be full-dimensional d-polytopes in R^d");

    CayleyInstance c;
    c.d = d;
    c.r = r;
    c.summands = summands;
    for (std::size_t i = 0; i < r; ++i) {
        for (auto& v : summands[i].vertices) {
            // affine basis e_{r-1,i}: the origin, then unit vectors
            Point q(r - 1, 0);
            if (i > 0) q[i - 1] = 1;
            q.insert(q.end(), v.begin(), v.end());
            c.embedded.push_back(std::move(q));
            c.color.push_back(i);
        }
    }
    const std::size_t N = c.embedded.size();
    c.color_sets.assign(r, VertexSet(N));
    for (std::size_t v = 0; v < N; ++v) c.color_sets[c.color[v]].insert(v);

    c.hull = convex_hull(c.embedded);
    if (c.hull.vertices.size() != N) throw InvalidInstance("cayley_embed: an embedded vertex is not extreme");
    c.lattice = face_lattice(c.hull);
    return c;
}

FaceSet extract_F(const CayleyInstance& c, ColorMask R) {
    if (R == 0 || R > c.all_colors()) throw DomainError("extract_F: bad color subset");
    FaceSet fs;
    fs.colors = R;
    fs.dim = static_cast<int>(c.d) + popcount(R) - 2;
    fs.faces_by_dim.assign(fs.dim + 2, {});
    const VertexSet trivial = c.vertices_of(R);
    const int D = c.lattice.dim;
    for (int k = 0; k < D; ++k) {
        for (auto& F : c.lattice.faces(k)) {
            if (c.support(F) != R || F == trivial) continue;
            if (k > fs.dim) throw InternalInconsistency("extract_F: face above the expected dimension");
            fs.faces_by_dim[k + 1].push_back(F);
        }
    }
    fs.f = CountVector::zeros(fs.dim);
    fs.f.set(-1, popcount(R) % 2 ? 1 : -1);
    for (int k = 0; k <= fs.dim; ++k) fs.f.set(k, static_cast<unsigned long>(fs.faces_by_dim[k + 1].size()));
    return fs;
}

FaceSet closure_K(const FaceSet& fs, const CayleyInstance& c) {
    FaceSet k;
    k.colors = fs.colors;
    k.dim = fs.dim;
    k.faces_by_dim.assign(fs.dim + 2, {});
    std::vector<std::unordered_set<VertexSet, VertexSetHash>> seen(fs.dim + 2);
    const std::size_t N = c.embedded.size();
    for (int dim = 0; dim <= fs.dim; ++dim) {
        for (auto& F : fs.faces_by_dim[dim + 1]) {
            auto el = F.elements();
            if (el.size() != static_cast<std::size_t>(dim + 1))
                throw GenericityViolation("closure_K: face of F_R is not a simplex");
            for (unsigned long mask = 0; mask < (1ul << el.size()); ++mask) {
                VertexSet s(N);
                for (std::size_t b = 0; b < el.size(); ++b)
                    if (mask >> b & 1) s.insert(el[b]);
                std::size_t sz = std::popcount(mask);
                seen[sz].insert(std::move(s));
            }
        }
    }
    k.f = CountVector::zeros(fs.dim);
    for (int dim = -1; dim <= fs.dim; ++dim) {
        auto& bucket = seen[dim + 1];
        k.faces_by_dim[dim + 1].assign(bucket.begin(), bucket.end());
        k.f.set(dim, static_cast<unsigned long>(bucket.size()));
    }
    if (k.f.at(-1) == 0) k.f.set(-1, 1);  // the empty face belongs to K_R
    return k;
}

bool check_genericity(const CayleyInstance& c) {
    std::set<VertexSet> trivial;
    for (ColorMask S = 1; S < c.all_colors(); ++S) trivial.insert(c.vertices_of(S));
    const int D = c.lattice.dim;
    for (int k = 0; k < D; ++k)
        for (auto& F : c.lattice.faces(k)) {
            if (F.size() == static_cast<std::size_t>(k + 1)) continue;
            if (!trivial.count(F)) return false;
        }
    return true;
}

CountVector minkowski_counts_via_cayley(const CayleyInstance& c) {
    FaceSet top = extract_F(c, c.all_colors());
    const int d = static_cast<int>(c.d), r = static_cast<int>(c.r);
    CountVector f = CountVector::zeros(d - 1);
    f.set(-1, 1);
    for (int k = 1; k <= d; ++k) f.set(k - 1, top.f.at(k + r - 2));
    return f;
}

FaceSetCounts face_set_counts(const CayleyInstance& c) {
    FaceSetCounts out;
    out.d = static_cast<int>(c.d);
    out.r = static_cast<int>(c.r);
    for (ColorMask R = 1; R <= c.all_colors(); ++R) out.f[R] = extract_F(c, R).f;
    return out;
}

bool check_partition(const CayleyInstance& c) {
    const int D = c.lattice.dim;
    auto fc = face_set_counts(c);
    auto boundary = f_vector(c.lattice);
    for (int k = -1; k < D; ++k) {
        ExactInteger s = 0;
        for (auto& [R, f] : fc.f) s += f.at(k);
        for (ColorMask S = 1; S < c.all_colors(); ++S)
            if (static_cast<int>(c.d) + popcount(S) - 1 == k) s += 1;
        if (s != boundary.at(k)) return false;
    }
    return true;
}

}  // namespace polysum
