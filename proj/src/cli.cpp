#include "polysum/cli.hpp"

#include "polysum/bounds.hpp"
#include "polysum/cayley.hpp"
#include "polysum/construction.hpp"
#include "polysum/error.hpp"
#include "polysum/hg_algebra.hpp"
#include "polysum/polytope.hpp"
#include "polysum/vandermonde.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace polysum::cli {

namespace {

Json integer(const ExactInteger& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json rational(const ExactScalar& q) { return to_string(q); }

Json point(const Point& p) {
    Json a = Json::array();
    for (auto& c : p) a.push_back(rational(c));
    return a;
}

Json counts(const CountVector& f) {
    Json a = Json::array();
    for (auto& v : f.values) a.push_back(integer(v));
    return a;
}

Json hvec(const HVector& h) {
    Json a = Json::array();
    for (auto& v : h.values) a.push_back(h.integral() ? integer(v.get_num()) : rational(v));
    return a;
}

Json colors(ColorMask R) {
    Json a = Json::array();
    for (int i = 0; i < 3; ++i)
        if (R >> i & 1) a.push_back(i + 1);
    return a;
}

Json string_list(const std::vector<std::string>& v) {
    Json a = Json::array();
    for (auto& s : v) a.push_back(s);
    return a;
}

std::vector<Polytope> load(const std::vector<std::string>& files) {
    std::vector<Polytope> ps;
    for (auto& f : files) ps.push_back(convex_hull(read_vertex_file(f)));
    return ps;
}

CountVector sum_f_direct(const std::vector<Polytope>& ps) {
    return f_vector(face_lattice(minkowski_sum_direct(ps)));
}

// f_{-1}..f_{d-1} of the sum; direct hull output also carries f_d = 1
CountVector truncate(const CountVector& f, int top) {
    CountVector out(top, -1, {});
    for (int k = -1; k <= top; ++k) out.values.push_back(f.at(k));
    return out;
}

Json bound_table(const BoundReport& rep) {
    Json rows = Json::array();
    for (auto& [k, row] : rep.per_k) {
        Json r;
        r["k"] = k;
        r["bound"] = integer(row.bound);
        if (row.achieved) r["achieved"] = integer(*row.achieved);
        if (row.tight) r["tight"] = *row.tight;
        rows.push_back(r);
    }
    return rows;
}

std::vector<long> vertex_counts(const std::vector<Polytope>& ps) {
    std::vector<long> n;
    for (auto& p : ps) n.push_back(static_cast<long>(p.vertices.size()));
    return n;
}

Json failures_json(const std::vector<ConditionFailure>& fs) {
    Json a = Json::array();
    for (auto& f : fs) {
        Json j;
        j["colors"] = colors(f.colors);
        j["l"] = f.l;
        j["expected"] = integer(f.expected);
        j["actual"] = integer(f.actual);
        a.push_back(j);
    }
    return a;
}

void emit(const std::string& dir, const std::array<Polytope, 3>& P, Json& report) {
    std::filesystem::create_directories(dir);
    Json files = Json::array();
    for (int i = 0; i < 3; ++i) {
        auto path = (std::filesystem::path(dir) / ("P" + std::to_string(i + 1) + ".txt")).string();
        std::ofstream out(path);
        if (!out) throw DomainError("cannot write " + path);
        write_vertex_file(out, P[i].vertices);
        files.push_back(path);
    }
    report["emitted"] = files;
}

std::vector<long> as_longs(const Json& j) {
    std::vector<long> v;
    for (auto& e : j) v.push_back(e.get<long>());
    return v;
}

std::vector<ExactScalar> as_rationals(const Json& j) {
    std::vector<ExactScalar> v;
    for (auto& e : j) v.push_back(e.is_string() ? parse_rational(e.get<std::string>()) : ExactScalar(e.get<long>()));
    return v;
}

Json det2_json(const Det2Params& p) {
    Json j;
    j["n"] = p.n;
    j["m"] = p.m;
    j["I"] = p.I;
    j["J"] = p.J;
    j["mu"] = p.mu;
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    j["M"] = p.M;
    j["x"] = point(p.x);
    j["y"] = point(p.y);
    return j;
}

Json det3_json(const Det3Params& p) {
    Json j;
    j["n"] = p.n;
    j["m"] = p.m;
    j["k"] = p.k;
    j["mu"] = p.mu;
    j["M"] = p.M;
    j["x"] = point(p.x);
    j["y"] = point(p.y);
    j["z"] = point(p.z);
    return j;
}

}  // namespace

std::vector<Point> parse_vertex_file(std::istream& in) {
    std::string line;
    int line_no = 0;
    long D = -1;
    std::vector<Point> pts;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ss(line);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (D < 0) {
            if (tok.size() != 2 || tok[0] != "dim") throw ParseError("expected header 'dim <D>'", line_no);
            char* end = nullptr;
            D = std::strtol(tok[1].c_str(), &end, 10);
            if (*end || D < 1) throw ParseError("bad dimension '" + tok[1] + "'", line_no);
            continue;
        }
        if (static_cast<long>(tok.size()) != D)
            throw ParseError("expected " + std::to_string(D) + " coordinates, got " + std::to_string(tok.size()),
                             line_no);
        Point p;
        for (auto& t : tok) {
            try {
                p.push_back(parse_rational(t));
            } catch (const DomainError& e) {
                throw ParseError(e.what(), line_no);
            }
        }
        pts.push_back(std::move(p));
    }
    if (D < 0) throw ParseError("missing 'dim' header", line_no);
    if (pts.empty()) throw ParseError("no points", line_no);
    return pts;
}

std::vector<Point> read_vertex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    try {
        return parse_vertex_file(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + std::to_string(e.line) + ": " + e.what(), e.line);
    }
}

void write_vertex_file(std::ostream& out, const std::vector<Point>& pts) {
    out << "dim " << (pts.empty() ? 0 : pts[0].size()) << "\n";
    for (auto& p : pts) {
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << to_string(p[i]);
        out << "\n";
    }
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const InternalInconsistency*>(&e)) return 4;
    if (dynamic_cast<const SearchExhausted*>(&e)) return 5;
    return 3;
}

Outcome error_outcome(const std::string& command, const std::exception& e) {
    Outcome o;
    o.exit_code = exit_code_for(e);
    o.report["command"] = command;
    o.report["error"] = e.what();
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) o.report["line"] = pe->line;
    o.report["exit_code"] = o.exit_code;
    return o;
}

Outcome cmd_hull(const std::string& file) {
    return guarded("hull", [&] {
        auto P = convex_hull(read_vertex_file(file));
        Outcome o;
        Json& r = o.report;
        r["command"] = "hull";
        r["inputs"] = string_list({file});
        r["d"] = P.dim;
        Json verts = Json::array();
        for (auto& v : P.vertices) verts.push_back(point(v));
        r["vertices"] = verts;
        Json facets = Json::array();
        for (std::size_t i = 0; i < P.facets.size(); ++i) {
            Json f;
            f["normal"] = point(P.facets[i].normal);
            f["offset"] = rational(P.facets[i].offset);
            Json inc = Json::array();
            for (auto v : P.incidence[i].elements()) inc.push_back(v);
            f["vertices"] = inc;
            facets.push_back(f);
        }
        r["facets"] = facets;
        r["f_vector"] = counts(f_vector(face_lattice(P)));
        return o;
    });
}

Outcome cmd_minkowski(const std::vector<std::string>& files, Via via) {
    return guarded("minkowski", [&] {
        if (files.size() < 2 || files.size() > 3) throw DomainError("minkowski: need 2 or 3 input files");
        auto ps = load(files);
        const int d = static_cast<int>(ps[0].ambient_dim);
        Outcome o;
        Json& r = o.report;
        r["command"] = "minkowski";
        r["inputs"] = string_list(files);
        r["d"] = d;
        r["n"] = vertex_counts(ps);
        std::optional<CountVector> direct, cayley;
        if (via != Via::cayley) {
            direct = truncate(sum_f_direct(ps), d - 1);
            r["f_vector_direct"] = counts(*direct);
        }
        if (via != Via::direct) {
            cayley = minkowski_counts_via_cayley(cayley_embed(ps));
            if (std::getenv("POLYSUM_TEST_DISAGREE")) cayley->values.at(1) += 1;  // exercises exit code 4
            r["f_vector_cayley"] = counts(*cayley);
        }
        r["f_vector"] = counts(direct ? *direct : *cayley);
        if (via == Via::both) {
            const bool agree = *direct == *cayley;
            r["agree"] = agree;
            if (!agree) {
                r["error"] = "direct and Cayley routes disagree";
                o.exit_code = 4;
            }
        }
        return o;
    });
}

Outcome cmd_bounds(int d, const std::vector<long>& n, const std::vector<std::string>& achieved) {
    return guarded("bounds", [&] {
        for (long ni : n)
            if (ni <= d) throw DomainError("bounds: every n_i must exceed d");
        auto rep = bound_report(n, d);
        Outcome o;
        Json& r = o.report;
        r["command"] = "bounds";
        r["d"] = d;
        r["n"] = n;
        if (!achieved.empty()) {
            auto ps = load(achieved);
            if (vertex_counts(ps) != n) throw DomainError("bounds: vertex counts of the files differ from --n");
            for (auto& p : ps)
                if (static_cast<int>(p.ambient_dim) != d) throw DimensionError("bounds: file dimension differs from --d");
            r["inputs"] = string_list(achieved);
            attach_achieved(rep, sum_f_direct(ps));
            bool all = true;
            for (auto& [k, row] : rep.per_k) all = all && *row.tight;
            r["all_tight"] = all;
            r["consistent"] = rep.consistent();
            if (!rep.consistent()) o.exit_code = 4;
        }
        r["bounds"] = bound_table(rep);
        return o;
    });
}

Outcome cmd_construct(int d, const std::vector<long>& n, const std::optional<std::string>& tau,
                      const std::optional<std::string>& emit_dir, std::uint64_t seed) {
    return guarded("construct", [&]() -> Outcome {
        if (n.size() != 3) throw DomainError("construct: need three vertex counts");
        const std::array<long, 3> nn{n[0], n[1], n[2]};
        Outcome o;
        Json& r = o.report;
        r["command"] = "construct";
        r["d"] = d;
        r["n"] = n;
        if (d == 3)
            throw DomainError(
                "construct: no d=3 construction; tight 3-dimensional instances come from Weibel's construction, "
                "which is not implemented here");
        if (d == 2) {
            auto P = polygon_triple(nn, seed);
            r["seed"] = seed;
            std::vector<Polytope> ps(P.begin(), P.end());
            auto rep = bound_report(n, d);
            attach_achieved(rep, sum_f_direct(ps));
            r["f_vector"] = counts(truncate(sum_f_direct(ps), d - 1));
            r["bounds"] = bound_table(rep);
            if (emit_dir) emit(*emit_dir, P, r);
            return o;
        }
        if (d < 2) throw DomainError("construct: need d >= 2");

        ConstructionParams params;
        ConstructionInstance inst;
        ConditionReport cond;
        if (tau) {
            params = ConstructionParams::standard(d, nn, parse_rational(*tau));
            params.validate();
            inst = build_instance(params);
            cond = verify_conditions(inst.cayley, nn, d);
            r["tau"] = rational(params.tau);
        } else {
            auto found = find_tight_tau(d, nn, ConstructionParams::standard(d, nn, 1).x, d * (d + 1),
                                        default_j_max());
            params = found.params;
            inst = std::move(found.instance);
            cond = found.report;
            r["tau"] = rational(found.tau);
            r["j"] = found.j;
            Json att = Json::array();
            for (auto& a : found.attempts) att.push_back({{"j", a.j}, {"outcome", a.outcome}});
            r["attempts"] = att;
        }
        r["M"] = params.M;
        r["epsilon"] = rational(params.epsilon);
        r["certified"] = cond.satisfied;
        r["condition_failures"] = failures_json(cond.failures);
        auto sum_f = minkowski_counts_via_cayley(inst.cayley);
        auto rep = bound_report(n, d);
        attach_achieved(rep, sum_f);
        r["f_vector"] = counts(sum_f);
        r["bounds"] = bound_table(rep);
        if (emit_dir) emit(*emit_dir, inst.P, r);
        if (!cond.satisfied) {
            r["error"] = "conditions not satisfied at the given tau";
            o.exit_code = 5;
        }
        return o;
    });
}

Outcome cmd_verify(const std::vector<std::string>& files) {
    return guarded("verify", [&] {
        if (files.size() != 3) throw DomainError("verify: need three input files");
        auto ps = load(files);
        const int d = static_cast<int>(ps[0].ambient_dim);
        auto nv = vertex_counts(ps);
        const std::array<long, 3> n{nv[0], nv[1], nv[2]};
        Outcome o;
        Json& r = o.report;
        r["command"] = "verify";
        r["inputs"] = string_list(files);
        r["d"] = d;
        r["n"] = nv;
        auto c = cayley_embed(ps);
        const bool generic = check_genericity(c);
        Json checks;
        checks["genericity"] = generic;
        if (!generic) {
            r["checks"] = checks;
            r["skipped"] = "instance is not generic; simpliciality-dependent checks skipped";
            return o;
        }
        auto fs = face_set_counts(c);
        checks["partition"] = check_partition(c);
        checks["dsw"] = check_DSW(fs);

        bool fk = true;
        for (ColorMask R = 1; R <= 7; ++R) fk = fk && closure_K(extract_F(c, R), c).f == f_K_from_F(fs, R);
        checks["fk_KR"] = fk;

        auto hq = h_boundary_Q(fs);
        bool pal = hq == h_boundary_Q_from_f(fs);
        const int top = static_cast<int>(hq.values.size()) - 1;
        for (int k = 0; k <= top; ++k) pal = pal && hq.at(k) == hq.at(top - k);
        checks["boundary_Q_symmetric"] = pal;
        checks["r8"] = check_recurrence_r8(fs, n, d);

        auto hb = check_h_bounds(fs, n, d);
        checks["h_bounds"] = hb.all_hold();

        auto sum_f = minkowski_counts_via_cayley(c);
        auto rep = bound_report(nv, d);
        attach_achieved(rep, sum_f);
        checks["theorem_bound"] = rep.consistent();

        if (d == 3) {
            std::vector<CountVector> singles, pairs;
            for (auto& p : ps) singles.push_back(f_vector(face_lattice(p)));
            for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 2}}) pairs.push_back(sum_f_direct({ps[a], ps[b]}));
            bool w = true;
            for (int k = 0; k <= 2; ++k) w = w && weibel_identity_3d(singles, pairs, sum_f, k);
            checks["weibel_identity"] = w;
        }
        r["checks"] = checks;

        bool all = true;
        for (auto& [key, v] : checks.items()) all = all && v.get<bool>();
        r["all_pass"] = all;

        Json fR;
        for (ColorMask R = 1; R <= 7; ++R) fR[colors(R).dump()] = counts(fs.of(R));
        r["f_vectors_F"] = fR;
        r["h_boundary_Q"] = hvec(hq);
        r["f_vector"] = counts(sum_f);
        r["bounds"] = bound_table(rep);

        // which h/g bounds are attained with equality
        Json eq;
        for (auto& ch : hb.checks) {
            auto& slot = eq[ch.name];
            if (slot.is_null()) slot = {{"checked", 0}, {"equal", 0}};
            slot["checked"] = slot["checked"].get<int>() + 1;
            if (ch.equal()) slot["equal"] = slot["equal"].get<int>() + 1;
        }
        r["equality_pattern"] = eq;
        if (!all) o.exit_code = 4;
        return o;
    });
}

Outcome cmd_detasym(const std::string& lemma, const std::optional<std::string>& params, int random,
                    std::uint64_t seed) {
    return guarded("detasym", [&] {
        if (lemma != "det2" && lemma != "det3") throw DomainError("detasym: --lemma must be det2 or det3");
        if (params.has_value() == (random > 0)) throw DomainError("detasym: give exactly one of --params, --random");
        Outcome o;
        Json& r = o.report;
        r["command"] = "detasym";
        r["lemma"] = lemma;
        std::vector<Det2Params> d2;
        std::vector<Det3Params> d3;
        if (params) {
            Json j;
            try {
                j = Json::parse(*params);
            } catch (const std::exception& e) {
                throw ParseError(std::string("--params: ") + e.what(), 0);
            }
            try {
                if (lemma == "det2") {
                    Det2Params p;
                    p.n = j.at("n");
                    p.m = j.at("m");
                    p.I = j.at("I");
                    p.J = j.at("J");
                    p.mu = as_longs(j.at("mu"));
                    p.alpha = j.at("alpha");
                    p.beta = j.at("beta");
                    p.M = j.at("M");
                    p.x = as_rationals(j.at("x"));
                    p.y = as_rationals(j.at("y"));
                    d2.push_back(p);
                } else {
                    Det3Params p;
                    p.n = j.at("n");
                    p.m = j.at("m");
                    p.k = j.at("k");
                    p.mu = as_longs(j.at("mu"));
                    p.M = j.at("M");
                    p.x = as_rationals(j.at("x"));
                    p.y = as_rationals(j.at("y"));
                    p.z = as_rationals(j.at("z"));
                    d3.push_back(p);
                }
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(std::string("--params: ") + e.what(), 0);
            }
        } else {
            std::mt19937_64 rng(seed);
            r["seed"] = seed;
            for (int i = 0; i < random; ++i) {
                if (lemma == "det2") d2.push_back(random_det2(rng));
                else d3.push_back(random_det3(rng));
            }
        }
        Json inst = Json::array();
        int passed = 0;
        auto record = [&](Json p, const AsymptoticCheck& ck) {
            inst.push_back({{"params", std::move(p)},
                            {"xi_predicted", ck.xi_predicted},
                            {"xi_observed", ck.xi_observed},
                            {"leading_sign", ck.leading_sign},
                            {"pass", ck.pass()}});
            passed += ck.pass();
        };
        for (auto& p : d2) record(det2_json(p), check_det2(p));
        for (auto& p : d3) record(det3_json(p), check_det3(p));
        r["instances"] = inst;
        r["passed"] = passed;
        r["total"] = inst.size();
        if (passed != static_cast<int>(inst.size())) o.exit_code = 4;
        return o;
    });
}

}  // namespace polysum::cli
