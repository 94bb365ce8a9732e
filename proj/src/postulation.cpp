#include "halphen/postulation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "halphen/field_matrix.hpp"
#include "halphen/sequence.hpp"

namespace halphen {

namespace {

int pack(int e0, int e1, int e2) { return (e0 << 16) | (e1 << 8) | e2; }

/* degree-s monomials in x0..x3, lexicographic by descending (e0, e1, e2) */
struct MonBasis {
    int s;
    std::vector<std::array<int, 4>> mons;
    std::unordered_map<int, int> index;

    explicit MonBasis(int deg) : s(deg) {
        for (int e0 = s; e0 >= 0; --e0)
            for (int e1 = s - e0; e1 >= 0; --e1)
                for (int e2 = s - e0 - e1; e2 >= 0; --e2) {
                    index[pack(e0, e1, e2)] = int(mons.size());
                    mons.push_back({e0, e1, e2, s - e0 - e1 - e2});
                }
    }
    std::size_t dim() const { return mons.size(); }
};

using Poly = std::unordered_map<int, std::uint64_t>;  // degree implied by caller

Poly linear_form(const Coord& c) {
    Poly p;
    if (c[0]) p[pack(1, 0, 0)] = c[0];
    if (c[1]) p[pack(0, 1, 0)] = c[1];
    if (c[2]) p[pack(0, 0, 1)] = c[2];
    if (c[3]) p[pack(0, 0, 0)] = c[3];
    return p;
}

Poly mul_linear(const PrimeField& F, const Poly& p, const Coord& c) {
    Poly out;
    auto acc = [&](int key, std::uint64_t v) {
        auto [it, fresh] = out.try_emplace(key, v);
        if (!fresh) it->second = F.add(it->second, v);
    };
    for (const auto& [key, coef] : p) {
        int e0 = key >> 16, e1 = (key >> 8) & 0xff, e2 = key & 0xff;
        if (c[0]) acc(pack(e0 + 1, e1, e2), F.mul(coef, c[0]));
        if (c[1]) acc(pack(e0, e1 + 1, e2), F.mul(coef, c[1]));
        if (c[2]) acc(pack(e0, e1, e2 + 1), F.mul(coef, c[2]));
        if (c[3]) acc(pack(e0, e1, e2), F.mul(coef, c[3]));
    }
    return out;
}

/* determinant of a t x t matrix of linear forms by permutation expansion */
Poly det_poly(const PrimeField& F, const std::vector<std::vector<Coord>>& m,
              const std::vector<int>& cols) {
    std::size_t t = m.size();
    std::vector<int> perm(cols);
    std::sort(perm.begin(), perm.end());
    Poly det;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Poly term;
        term[pack(0, 0, 0)] = 1;
        for (std::size_t i = 0; i < t; ++i) term = mul_linear(F, term, m[i][perm[i]]);
        std::uint64_t sign = inversions % 2 ? F.neg(1) : 1;
        for (const auto& [key, coef] : term) {
            auto [it, fresh] = det.try_emplace(key, 0);
            it->second = F.add(it->second, F.mul(sign, coef));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<std::uint64_t> eval_powers(const PrimeField& F, std::uint64_t x, int s) {
    std::vector<std::uint64_t> p(s + 1);
    p[0] = 1;
    for (int i = 1; i <= s; ++i) p[i] = F.mul(p[i - 1], x % F.modulus());
    return p;
}

std::vector<std::uint64_t> point_row(const PrimeField& F, const MonBasis& B,
                                     const Coord& c) {
    std::array<std::vector<std::uint64_t>, 4> pw;
    for (int i = 0; i < 4; ++i) pw[i] = eval_powers(F, c[i], B.s);
    std::vector<std::uint64_t> row(B.dim());
    for (std::size_t i = 0; i < B.dim(); ++i) {
        const auto& e = B.mons[i];
        row[i] = F.mul(F.mul(pw[0][e[0]], pw[1][e[1]]), F.mul(pw[2][e[2]], pw[3][e[3]]));
    }
    return row;
}

/* value of the partial derivative with respect to x_j of each monomial */
std::vector<std::uint64_t> partial_row(const PrimeField& F, const MonBasis& B,
                                       const Coord& c, int j) {
    std::array<std::vector<std::uint64_t>, 4> pw;
    for (int i = 0; i < 4; ++i) pw[i] = eval_powers(F, c[i], B.s);
    std::vector<std::uint64_t> row(B.dim(), 0);
    for (std::size_t i = 0; i < B.dim(); ++i) {
        auto e = B.mons[i];
        if (e[j] == 0) continue;
        std::uint64_t coef = F.from_int(e[j]);
        --e[j];
        std::uint64_t v = F.mul(F.mul(pw[0][e[0]], pw[1][e[1]]), F.mul(pw[2][e[2]], pw[3][e[3]]));
        row[i] = F.mul(coef, v);
    }
    return row;
}

Coord ruling_point(const RulingLineSpec& rl, bool second) {
    /* two spanning points of the line */
    std::uint64_t u = rl.param[0], v = rl.param[1];
    if (rl.family == 1)
        return second ? Coord{0, u, 0, v} : Coord{u, 0, v, 0};
    return second ? Coord{0, 0, u, v} : Coord{u, v, 0, 0};
}

void line_rows(const PrimeField& F, const MonBasis& B, const Coord& p, const Coord& q,
               FieldMatrix& K) {
    for (int i = 0; i < B.s; ++i) {
        Coord pt;
        for (int c = 0; c < 4; ++c)
            pt[c] = F.add(p[c] % F.modulus(), F.mul(F.from_int(i), q[c]));
        K.append_row(point_row(F, B, pt));
    }
    K.append_row(point_row(F, B, q));
}

void double_point_rows(const PrimeField& F, const MonBasis& B, const Coord& c,
                       FieldMatrix& K) {
    K.append_row(point_row(F, B, c));
    int j = 0;
    while (j < 4 && c[j] % F.modulus() == 0) ++j;
    if (j == 4) throw std::domain_error("double point at the zero vector");
    for (int i = 0; i < 4; ++i)
        if (i != j) K.append_row(partial_row(F, B, c, i));
}

FieldMatrix det_curve_span(const PrimeField& F, const MonBasis& B,
                           const DetCurveSpec& cv) {
    long t = cv.t;
    if (long(cv.rows.size()) != t) throw std::domain_error("det curve: need t rows");
    for (const auto& r : cv.rows)
        if (long(r.size()) != t + 1) throw std::domain_error("det curve: need t+1 columns");
    MonBasis small{B.s - int(t)};
    FieldMatrix span(F, 0, B.dim());
    std::vector<int> all_cols(t + 1);
    std::iota(all_cols.begin(), all_cols.end(), 0);
    for (int drop = 0; drop <= t; ++drop) {
        std::vector<int> cols;
        for (int c : all_cols)
            if (c != drop) cols.push_back(c);
        Poly minor = det_poly(F, cv.rows, cols);
        for (const auto& mu : small.mons) {
            std::vector<std::uint64_t> row(B.dim(), 0);
            for (const auto& [key, coef] : minor) {
                int e0 = key >> 16, e1 = (key >> 8) & 0xff, e2 = key & 0xff;
                row[B.index.at(pack(e0 + mu[0], e1 + mu[1], e2 + mu[2]))] = coef;
            }
            span.append_row(row);
        }
    }
    return span;
}

bool on_param(const PrimeField& F, const Param& a, const Param& p) {
    /* projective equality in P^1 */
    return F.sub(F.mul(a[0] % F.modulus(), p[1] % F.modulus()),
                 F.mul(a[1] % F.modulus(), p[0] % F.modulus())) == 0;
}

}  // namespace

Coord segre(const QuadricPoint& qp, const PrimeField& F) {
    return {F.mul(qp.a[0], qp.b[0]), F.mul(qp.a[0], qp.b[1]),
            F.mul(qp.a[1], qp.b[0]), F.mul(qp.a[1], qp.b[1])};
}

Int det_curve_degree(long t) { return curve_degree(t); }
Int det_curve_genus(long t) { return curve_genus(t); }

Int det_curve_expected_h0(long t, long s) {
    if (s < t) return 0;
    return (t + 1) * binom3(Int(s - t) + 3) - t * binom3(Int(s - t) + 2);
}

long h0_ideal(const SchemeSpec& Z, long s) {
    if (s < 0) throw std::domain_error("h0_ideal: need s >= 0");
    PrimeField F(Z.prime);
    MonBasis B{int(s)};
    FieldMatrix K(F, 0, B.dim());
    std::vector<const DetCurveSpec*> curves;
    for (const auto& comp : Z.components) {
        if (auto* p = std::get_if<PointSpec>(&comp)) {
            K.append_row(point_row(F, B, p->c));
        } else if (auto* dp = std::get_if<DoublePointSpec>(&comp)) {
            double_point_rows(F, B, dp->c, K);
        } else if (auto* l = std::get_if<LineSpec>(&comp)) {
            line_rows(F, B, l->p, l->q, K);
        } else if (auto* rl = std::get_if<RulingLineSpec>(&comp)) {
            line_rows(F, B, ruling_point(*rl, false), ruling_point(*rl, true), K);
        } else if (auto* g = std::get_if<GridSpec>(&comp)) {
            for (const auto& pr : g->fam1)
                line_rows(F, B, Coord{pr[0], 0, pr[1], 0}, Coord{0, pr[0], 0, pr[1]}, K);
            for (const auto& pr : g->fam2)
                line_rows(F, B, Coord{pr[0], pr[1], 0, 0}, Coord{0, 0, pr[0], pr[1]}, K);
        } else if (auto* cv = std::get_if<DetCurveSpec>(&comp)) {
            if (cv->t > s) return 0;  // the ideal is generated in degree t
            curves.push_back(cv);
        }
    }
    if (curves.empty()) return long(B.dim()) - long(K.rank());
    FieldMatrix V = det_curve_span(F, B, *curves[0]).row_basis();
    for (std::size_t i = 1; i < curves.size(); ++i)
        V = intersect_subspaces(V, det_curve_span(F, B, *curves[i]).row_basis());
    if (K.rows() == 0) return long(V.rows());
    return long(V.rows()) - long(K.multiply(V.transpose()).rank());
}

long h0_quadric(const std::vector<QuadricPoint>& pts, const GridSpec& grid,
                long a, long b, std::uint64_t prime,
                std::vector<std::string>* notes) {
    PrimeField F(prime);
    long e = long(grid.fam1.size()), f = long(grid.fam2.size());
    if (a < e || b < f)
        throw std::domain_error("h0_quadric: grid bidegree exceeds (a, b)");
    long ra = a - e, rb = b - f;
    FieldMatrix K(F, 0, std::size_t((ra + 1) * (rb + 1)));
    for (const auto& pt : pts) {
        bool absorbed = false;
        for (const auto& pr : grid.fam1)
            if (on_param(F, pt.a, pr)) absorbed = true;
        for (const auto& pr : grid.fam2)
            if (on_param(F, pt.b, pr)) absorbed = true;
        if (absorbed) {
            if (notes)
                notes->push_back("point ([" + std::to_string(pt.a[0]) + ":" +
                                 std::to_string(pt.a[1]) + "],[" + std::to_string(pt.b[0]) +
                                 ":" + std::to_string(pt.b[1]) + "]) lies on a grid line");
            continue;
        }
        auto pu = eval_powers(F, pt.a[0], int(ra)), pv = eval_powers(F, pt.a[1], int(ra));
        auto pw = eval_powers(F, pt.b[0], int(rb)), pz = eval_powers(F, pt.b[1], int(rb));
        std::vector<std::uint64_t> row;
        row.reserve((ra + 1) * (rb + 1));
        for (long i = ra; i >= 0; --i)
            for (long j = rb; j >= 0; --j)
                row.push_back(F.mul(F.mul(pu[i], pv[ra - i]), F.mul(pw[j], pz[rb - j])));
        K.append_row(row);
    }
    return (ra + 1) * (rb + 1) - long(K.rank());
}

SchemeSpec residual_scheme(const HoraceConfig& cfg) {
    PrimeField F(cfg.off_quadric.prime);
    SchemeSpec out = cfg.off_quadric;
    for (const auto& comp : out.components)
        if (auto* dp = std::get_if<DoublePointSpec>(&comp)) {
            const Coord& c = dp->c;
            if (F.sub(F.mul(c[0] % F.modulus(), c[3] % F.modulus()),
                      F.mul(c[1] % F.modulus(), c[2] % F.modulus())) == 0)
                throw std::domain_error(
                    "residual_scheme: double point on the quadric away from a grid node");
        }
    for (const auto& node : cfg.chi) {
        if (node[0] < 0 || node[0] >= int(cfg.grid.fam1.size()) || node[1] < 0 ||
            node[1] >= int(cfg.grid.fam2.size()))
            throw std::domain_error("residual_scheme: nilpotent not at a grid node");
        QuadricPoint qp{cfg.grid.fam1[node[0]], cfg.grid.fam2[node[1]]};
        out.components.push_back(PointSpec{segre(qp, F)});
    }
    return out;
}

SchemeSpec full_scheme(const HoraceConfig& cfg) {
    PrimeField F(cfg.off_quadric.prime);
    SchemeSpec out = cfg.off_quadric;
    for (const auto& pr : cfg.grid.fam1)
        out.components.push_back(RulingLineSpec{1, pr});
    for (const auto& pr : cfg.grid.fam2)
        out.components.push_back(RulingLineSpec{2, pr});
    for (const auto& node : cfg.chi) {
        QuadricPoint qp{cfg.grid.fam1.at(node[0]), cfg.grid.fam2.at(node[1])};
        out.components.push_back(DoublePointSpec{segre(qp, F)});
    }
    for (const auto& pt : cfg.extra) out.components.push_back(PointSpec{segre(pt, F)});
    return out;
}

HoraceReport horace_check(const HoraceConfig& cfg, std::optional<long> expected_trace,
                          std::optional<long> expected_residual) {
    HoraceReport rep;
    std::vector<QuadricPoint> pts = cfg.marked;
    pts.insert(pts.end(), cfg.extra.begin(), cfg.extra.end());
    rep.h0_trace = h0_quadric(pts, cfg.grid, cfg.level, cfg.level,
                              cfg.off_quadric.prime, &rep.notes);
    rep.h0_residual = h0_ideal(residual_scheme(cfg), cfg.level - 2);
    rep.h0_full = h0_ideal(full_scheme(cfg), cfg.level);
    rep.additive = (rep.h0_full == rep.h0_trace + rep.h0_residual);
    if (expected_trace) rep.trace_matches = (rep.h0_trace == *expected_trace);
    if (expected_residual) rep.residual_matches = (rep.h0_residual == *expected_residual);
    return rep;
}

ConditionCounts condition_counts(const HoraceConfig& cfg) {
    long s = cfg.level;
    ConditionCounts cc{0, 0, 0, false};
    for (const auto& comp : cfg.off_quadric.components) {
        if (std::holds_alternative<PointSpec>(comp)) {
            cc.full += 1;
            cc.residual += 1;
        } else if (std::holds_alternative<DoublePointSpec>(comp)) {
            cc.full += 4;
            cc.residual += 4;
        } else if (std::holds_alternative<LineSpec>(comp)) {
            /* a transversal line carries its two quadric points to the trace */
            cc.full += s + 1;
            cc.residual += s - 1;
            cc.trace += 2;
        } else {
            throw std::domain_error(
                "condition_counts: off-quadric part must be points, double points or lines");
        }
    }
    Int e(cfg.grid.fam1.size()), f(cfg.grid.fam2.size());
    cc.full += (e + f) * (s + 1) - e * f;  // the e*f nodes lie on two lines each
    cc.trace += Int(s + 1) * (s + 1) - (s + 1 - e) * (s + 1 - f);
    cc.full += Int(cfg.chi.size());      // unit beyond the node neighborhood in the grid
    cc.residual += Int(cfg.chi.size());  // one reduced point each
    cc.full += Int(cfg.extra.size());
    cc.trace += Int(cfg.extra.size());
    cc.additive = (cc.full == cc.residual + cc.trace);
    return cc;
}

DetCurveSpec random_det_curve(long t, const PrimeField& F, std::mt19937_64& rng) {
    DetCurveSpec cv;
    cv.t = t;
    cv.rows.assign(t, std::vector<Coord>(t + 1));
    for (auto& row : cv.rows)
        for (auto& entry : row)
            for (auto& c : entry) c = F.random(rng);
    return cv;
}

QuadricPoint random_quadric_point(const PrimeField& F, std::mt19937_64& rng) {
    return {{F.random_nonzero(rng), 1}, {F.random_nonzero(rng), 1}};
}

}  // namespace halphen
