#include "halphen/lemmas.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "halphen/planner.hpp"
#include "halphen/sequence.hpp"

namespace halphen {

namespace {

using Rng = std::mt19937_64;

long rl(Rng& rng, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng);
}

Int ri(Rng& rng, const Int& lo, const Int& hi) {
    Int span = hi - lo;
    if (span < 0) throw std::invalid_argument("ri: empty range");
    std::size_t bits = mpz_sizeinbase(span.get_mpz_t(), 2);
    while (true) {
        Int v = 0;
        for (std::size_t got = 0; got < bits; got += 32) {
            v <<= 32;
            v += (unsigned long)(rng() & 0xffffffffu);
        }
        v >>= (32 - bits % 32) % 32;
        if (v <= span) return lo + v;
    }
}

struct Rec {
    LemmaReport& rep;
    void fail(const std::string& w) {
        if (rep.failures.size() < 20) rep.failures.push_back(w);
        ++rep.failure_count;
    }
    void info(const std::string& w) {
        if (rep.informational.size() < 20) rep.informational.push_back(w);
        ++rep.informational_count;
    }
};

struct GContext {
    Int m, d, g;
    long t = 0, k = 0, y = 0;
    BaseCurveParams bp;
};

/* draw (m, d) in the lower part of range A, set g to the sharp bound and run
 * the selection chain; false when no admissible context shows up */
bool draw_context(Rng& rng, const Int& m_lo, const Int& m_hi, const Int& g_min,
                  bool need_y, GContext& out) {
    for (int tries = 0; tries < 40; ++tries) {
        Int m = ri(rng, m_lo, m_hi);
        Int q = m * m + 4 * m + 6;
        Int d_lo = fdiv_q(q + 5, Int(6));          // ceil(q/6)
        Int d_hi = fdiv_q(q - 1, Int(4));          // largest d with 4d < q
        if (d_hi < d_lo) continue;
        Int d = ri(rng, d_lo, d_hi);
        Int g = 1 + (m - 1) * d - binom3(m + 2);
        if (g < g_min) continue;
        long t = select_t(g);
        if (t < 1) continue;
        long k = select_k(g, t, m);
        if (k < 1) continue;
        out = {m, d, g, t, k, 0, BaseCurveParams::make(t, k)};
        if (need_y) {
            if (t + k < 1000) continue;
            out.y = select_y_bisect(out.bp, g, 202);
        }
        return true;
    }
    return false;
}

std::string ctx_witness(const GContext& c) {
    return "m=" + c.m.get_str() + ",d=" + c.d.get_str() + ",g=" + c.g.get_str() +
           ",t=" + std::to_string(c.t) + ",k=" + std::to_string(c.k) +
           (c.y ? ",y=" + std::to_string(c.y) : "");
}

std::string tka_witness(long t, long k, const Int& alpha, long s) {
    return "t=" + std::to_string(t) + ",k=" + std::to_string(k) +
           ",alpha=" + alpha.get_str() + ",s=" + std::to_string(s);
}

/* ---- individual checks ------------------------------------------------ */

bool check_I_identities(long t, long k, long u, std::string* why) {
    BaseCurveParams p = BaseCurveParams::make(t, k);
    long s = t + k - 1 + 2 * u;
    Int lhs = big_I(p, s + 2) - big_I(p, s);
    Int rhs = Int(s + 3) * (s + 3) - (Int(t) * t + Int(k) * k + t + k);
    if (lhs != rhs) {
        *why = "increment";
        return false;
    }
    Int U(u), tk(t + k), prod = Int(6) * k * t;
    Int cubic = 4 * U * U * U + (18 + 6 * tk) * U * U + (26 + 15 * tk + prod) * U +
                12 + 9 * tk + prod;
    if (3 * big_I(p, t + k + 1 + 2 * u) != cubic) {
        *why = "cubic";
        return false;
    }
    return true;
}

bool check_psi(long t, long k, const Int& alpha, long u) {
    BaseCurveParams p = BaseCurveParams::make(t, k);
    long s = t + k + 1 + 2 * u;
    SeqRow r = closed_form_row(p, alpha, s);
    Int tk(t + k);
    return 6 * r.a <= Int(s) * s + 7 * s - tk * tk - 3 * tk - 8;
}

bool check_delta_lower(long t, long k, const Int& alpha, long s, long num, long den) {
    /* delta(s) > s/den - alpha/(s+1), cross-multiplied; num unused placeholder */
    (void)num;
    BaseCurveParams p = BaseCurveParams::make(t, k);
    Int delta = closed_form_row(p, alpha, s + 2).a - closed_form_row(p, alpha, s).a;
    return den * Int(s + 1) * delta > Int(s) * (s + 1) - den * alpha;
}

std::optional<long> min_scan_at(const BaseCurveParams& p, const Int& alpha, long s,
                                int offset) {
    SeqRow r = closed_form_row(p, alpha, s);
    Int delta = closed_form_row(p, alpha, s + 2).a - r.a;
    return grid_e(r.b, delta, GridEVariant::MinScan, offset);
}

}  // namespace

const std::vector<LemmaSpec>& lemma_catalog() {
    static const std::vector<LemmaSpec> cat = {
        {"L5.1",
         "I(s+2) - I(s) = (s+3)^2 - (t^2+k^2+t+k); 3 I(t+k+1+2u) = 4u^3 + "
         "(18+6(t+k))u^2 + (26+15(t+k)+6tk)u + 12+9(t+k)+6tk",
         "", false, true},
        {"L5.2",
         "t >= k >= 4, alpha >= 0  ==>  6 a(s) <= s^2 + 7s - (t+k)^2 - 3(t+k) - 8",
         "", false, true},
        {"L5.3",
         "4 <= k <= t <= 200k, s+1 > alpha  ==>  102(s+1) delta(s) > s(s+1) - 102 alpha",
         "", false, false},
        {"XFAIL-L5.3",
         "weakened variant with 1/10 in place of 1/102; must produce witnesses",
         "soundness self-test: a clean pass here would mean the harness cannot "
         "detect false lemmas",
         true, false},
        {"L5.4-rec",
         "A, B positive rationals, t+k >= 4A+2B, (s-1)d_tk + I(s) >= As^2+Bs  ==>  "
         "(s+1)d_tk + I(s+2) >= A(s+2)^2 + B(s+2)",
         "", false, false},
        {"L5.5",
         "C > 0, t >= k >= 2C, t+k >= 4C + 2|D-C+alpha+2|  ==>  a(s) + d_tk >= Cs + D",
         "", false, false},
        {"C5.6",
         "M > 0, t >= k >= M+6, t+k >= 2M + alpha + 18  ==>  delta(s) < s - M",
         "", false, false},
        {"L5.4a",
         "4 <= k <= t <= 200k, alpha <= -1+(t+k)/102, t+k >= 1113636  ==>  "
         "102 a(t+k+1) >= t+k, delta_0 <= 1 + 2 a(t+k+1), and the minimal e with "
         "b(t+k+1) <= (e-1)(delta_0-e-1) satisfies e <= 104",
         "", false, false},
        {"L5.4b",
         "4 <= k <= t <= 200k, alpha <= -1+(t+k)/102, t+k >= 42040  ==>  e <= 201",
         "", false, false},
        {"L5.7",
         "4 <= k <= t <= 200k, s+1 > alpha, s >= 1157520  ==>  minimal e with "
         "b(s) <= (e-1)(delta(s)-e-1) satisfies e <= 104",
         "", false, false},
        {"L5.7=",
         "4 <= k <= t <= 200k, s+1 > alpha, s >= 42674  ==>  e <= 201",
         "", false, false},
        {"L5.8",
         "t >= k, k^2 >= (alpha+5)(k+2)  ==>  2tk >= (alpha+5)(t+k+4)",
         "", false, false},
        {"L5.9",
         "k <= t <= 200k, 2tk >= (alpha+5)(t+k+4), alpha <= -1+(t+k)/102  ==>  "
         "a(s+2)-a(s) <= 2a(s) - alpha and a(s+4)-a(s+2) <= 2a(s) + alpha - 1",
         "conclusion tested exactly as stated; the recursive estimate behind it "
         "only forces the weaker bounds 2a(s)-alpha+1 and 2a(s)+alpha+1, so this "
         "entry also guards the tighter printed constants",
         false, false},
        {"L5.10",
         "t >= k >= t/200, t+k >= 102(alpha+27)  ==>  g(s) >= 26 for s >= t+k+3",
         "", false, false},
        {"L8.1", "sharp-genus context, t >= 250  ==>  100 m > 158 t", "", false, false},
        {"L8.2", "sharp-genus context, t >= 1000^5  ==>  30 k <= t", "", false, false},
        {"L8.3", "sharp-genus context, t >= 4000  ==>  200 k > t", "", false, false},
        {"L8.4",
         "context with t+k >= 23358, x >= y+2  ==>  102(x+2)(u(x+2)-u(x)+2) >= x(x+1) "
         "and u(x+2)-u(x) >= 202",
         "", false, false},
        {"L8.5",
         "context with t+k >= 23358  ==>  102(y+2)(u(y+2)-a(y)+2) >= y(y+1) and "
         "u(y+2)-a(y) >= 202",
         "", false, false},
        {"L8.6",
         "context with t+k >= 23358, x >= y+2  ==>  the minimal e with "
         "(e-1)(delta-e) <= v(x+2) exists and e <= 201, delta = u(x+2)-u(x)",
         "", false, false},
        {"L8.7",
         "context with t+k >= 23358, x >= y+2  ==>  2u(x) >= u(x+4)-u(x+2)+202 and "
         "2u(x) >= u(x+2)-u(x)+202",
         "", false, false},
        {"L8.8",
         "context with t+k >= 23358  ==>  2a(y) >= u(y+2)-a(y)+202 and "
         "2a(y) >= u(y+4)-u(y+2)+202",
         "", false, false},
        {"L8.9",
         "context with y >= 44310  ==>  the minimal e with (e-1)(delta-e) <= v(y+2) "
         "and the minimal f with (f-1)(tau-f) <= v(y+4) exist and are <= 201",
         "", false, false},
        {"L8.10", "sharp-genus context, k <= t <= 200k, t >= 30000  ==>  y <= m-7",
         "", false, false},
        {"EQ13", "sharp-genus context  ==>  g_tk <= g <= g_tk + 2k^2 + 2k",
         "", false, false},
    };
    return cat;
}

LemmaReport verify_lemma(const std::string& id, const LemmaBudget& budget) {
    const LemmaSpec* spec = nullptr;
    for (const auto& c : lemma_catalog())
        if (c.id == id) spec = &c;
    if (!spec) throw std::invalid_argument("verify_lemma: unknown id " + id);

    LemmaReport rep;
    rep.id = spec->id;
    rep.statement = spec->statement;
    rep.notes = spec->notes;
    rep.seed = budget.seed;
    rep.self_test = spec->self_test;
    Rec rec{rep};

    std::seed_seq sq{budget.seed, (std::uint64_t)std::hash<std::string>{}(id)};
    Rng rng(sq);
    long n = budget.samples;
    long n_probe = std::max<long>(1, n / 10);

    auto run = [&](const std::function<void()>& one) {
        for (long i = 0; i < n; ++i) one();
    };

    if (id == "L5.1") {
        if (budget.exhaustive) {
            for (long t = budget.box_t_lo; t <= budget.box_t_hi; ++t)
                for (long k = budget.box_k_lo; k <= t; ++k)
                    for (long u = 0; u < budget.box_steps; ++u) {
                        ++rep.tested;
                        std::string why;
                        if (!check_I_identities(t, k, u, &why))
                            rec.fail(tka_witness(t, k, 0, t + k - 1 + 2 * u) + " " + why);
                    }
        } else {
            run([&] {
                long t = rl(rng, 4, 500), k = rl(rng, 4, t), u = rl(rng, 0, 200);
                ++rep.tested;
                std::string why;
                if (!check_I_identities(t, k, u, &why))
                    rec.fail(tka_witness(t, k, 0, t + k - 1 + 2 * u) + " " + why);
            });
        }
    } else if (id == "L5.2") {
        if (budget.exhaustive) {
            for (long t = budget.box_t_lo; t <= budget.box_t_hi; ++t)
                for (long k = budget.box_k_lo; k <= t; ++k)
                    for (long u = 0; u < budget.box_steps; ++u)
                        for (long a : {0L, 2L, 202L}) {
                            ++rep.tested;
                            if (!check_psi(t, k, a, u))
                                rec.fail(tka_witness(t, k, a, t + k + 1 + 2 * u));
                        }
        } else {
            run([&] {
                long t = rl(rng, 4, 400), k = rl(rng, 4, t);
                Int a(rl(rng, 0, 400));
                long u = rl(rng, 0, 300);
                ++rep.tested;
                if (!check_psi(t, k, a, u)) rec.fail(tka_witness(t, k, a, t + k + 1 + 2 * u));
            });
            for (long i = 0; i < n_probe; ++i) {
                long k = rl(rng, 1, 3), t = rl(rng, k, 50);
                Int a(rl(rng, 0, 400));
                long u = rl(rng, 0, 100);
                ++rep.probed;
                if (!check_psi(t, k, a, u)) rec.info(tka_witness(t, k, a, t + k + 1 + 2 * u));
            }
        }
    } else if (id == "L5.3" || id == "XFAIL-L5.3") {
        long den = (id == "L5.3") ? 102 : 10;
        run([&] {
            long k = rl(rng, 4, 400);
            long t = rl(rng, k, std::min(200 * k, 20000L));
            Int a(rl(rng, 0, 240));
            long u0 = std::max(0L, (to_long(a) - t - k) / 2 + 1);
            long s = t + k + 1 + 2 * (u0 + rl(rng, 0, 500));
            ++rep.tested;
            if (!check_delta_lower(t, k, a, s, 1, den)) rec.fail(tka_witness(t, k, a, s));
        });
        if (id == "L5.3")
            for (long i = 0; i < n_probe; ++i) {
                long k = rl(rng, 4, 200);
                long t = 200 * k + rl(rng, 1, 100 * k);  // just past t <= 200k
                long s = t + k + 1 + 2 * rl(rng, 101, 400);
                ++rep.probed;
                if (!check_delta_lower(t, k, 202, s, 1, 102))
                    rec.info(tka_witness(t, k, 202, s));
            }
    } else if (id == "L5.4-rec") {
        run([&] {
            Rat A(rl(rng, 1, 60), rl(rng, 1, 12)), B(rl(rng, 1, 60), rl(rng, 1, 12));
            A.canonicalize();
            B.canonicalize();
            Rat th = 4 * A + 2 * B;
            long TH = to_long(fdiv_q(th.get_num() + th.get_den() - 1, th.get_den()));
            long k = rl(rng, 1, 400);
            long t = std::max(rl(rng, k, k + 800), TH - k);
            if (t < k) t = k;
            BaseCurveParams p = BaseCurveParams::make(t, k);
            long s = t + k - 1 + 2 * rl(rng, 0, 200);
            Rat lhs = Rat(Int(s - 1) * p.d_tk + big_I(p, s));
            if (lhs < A * s * s + B * s) return;  // premise not satisfied
            ++rep.tested;
            Rat l2 = Rat(Int(s + 1) * p.d_tk + big_I(p, s + 2));
            if (l2 < A * (s + 2) * (s + 2) + B * (s + 2))
                rec.fail(tka_witness(t, k, 0, s) + ",A=" + A.get_str() + ",B=" + B.get_str());
        });
    } else if (id == "L5.5") {
        run([&] {
            Rat C(rl(rng, 1, 40), rl(rng, 1, 8));
            Rat D(rl(rng, -60, 60), rl(rng, 1, 8));
            C.canonicalize();
            D.canonicalize();
            Int alpha(rl(rng, 0, 300));
            Rat th = 4 * C + 2 * abs(D - C + alpha + 2);
            long TH = to_long(fdiv_q(th.get_num() + th.get_den() - 1, th.get_den()));
            Rat twoC = 2 * C;
            long k_lo = to_long(fdiv_q(twoC.get_num() + twoC.get_den() - 1, twoC.get_den()));
            long k = rl(rng, std::max(1L, k_lo), std::max(1L, k_lo) + 300);
            long t = std::max(rl(rng, k, k + 600), TH - k);
            BaseCurveParams p = BaseCurveParams::make(t, k);
            long s = t + k + 1 + 2 * rl(rng, 0, 300);
            SeqRow r = closed_form_row(p, alpha, s);
            ++rep.tested;
            if (Rat(r.a + p.d_tk) < C * s + D)
                rec.fail(tka_witness(t, k, alpha, s) + ",C=" + C.get_str() + ",D=" + D.get_str());
        });
    } else if (id == "C5.6") {
        run([&] {
            Rat M(rl(rng, 1, 50), rl(rng, 1, 6));
            M.canonicalize();
            Int alpha(rl(rng, 0, 300));
            Rat kk = M + 6, th = 2 * M + alpha + 18;
            long k_lo = to_long(fdiv_q(kk.get_num() + kk.get_den() - 1, kk.get_den()));
            long TH = to_long(fdiv_q(th.get_num() + th.get_den() - 1, th.get_den()));
            long k = rl(rng, k_lo, k_lo + 300);
            long t = std::max(rl(rng, k, k + 600), TH - k);
            BaseCurveParams p = BaseCurveParams::make(t, k);
            long s = t + k + 1 + 2 * rl(rng, 0, 300);
            Int delta = closed_form_row(p, alpha, s + 2).a - closed_form_row(p, alpha, s).a;
            ++rep.tested;
            if (!(Rat(delta) < Rat(s) - M))
                rec.fail(tka_witness(t, k, alpha, s) + ",M=" + M.get_str());
        });
    } else if (id == "L5.4a" || id == "L5.4b") {
        long S_lo = (id == "L5.4a") ? 1113636 : 42040;
        long e_cap = (id == "L5.4a") ? 104 : 201;
        auto one = [&](long S, bool probe) {
            long k = rl(rng, (S + 200) / 201, S / 2);
            long t = S - k;
            Int alpha(rl(rng, 0, std::min(2000L, S / 102 - 1)));
            BaseCurveParams p = BaseCurveParams::make(t, k);
            SeqRow r0 = closed_form_row(p, alpha, S + 1);
            Int delta0 = closed_form_row(p, alpha, S + 3).a - r0.a;
            auto e = grid_e(r0.b, delta0, GridEVariant::MinScan, 0);
            bool ok = 102 * r0.a >= S && delta0 <= 1 + 2 * r0.a && e && *e <= e_cap;
            std::string w = tka_witness(t, k, alpha, S + 1);
            if (probe) {
                ++rep.probed;
                if (!ok) rec.info(w);
            } else {
                ++rep.tested;
                if (!ok) rec.fail(w);
            }
        };
        run([&] { one(rl(rng, S_lo, S_lo + 300000), false); });
        for (long i = 0; i < n_probe; ++i) one(rl(rng, S_lo * 7 / 10, S_lo - 1), true);
    } else if (id == "L5.7" || id == "L5.7=") {
        long s_lo = (id == "L5.7") ? 1157520 : 42674;
        long e_cap = (id == "L5.7") ? 104 : 201;
        auto one = [&](long s_floor, bool probe) {
            long k = rl(rng, 4, 3000);
            long t = rl(rng, k, std::min(200 * k, 300000L));
            long u0 = std::max(0L, (s_floor - (t + k + 1) + 1) / 2);
            long s = t + k + 1 + 2 * (u0 + rl(rng, 0, 20000));
            Int alpha(rl(rng, 0, 2000));
            BaseCurveParams p = BaseCurveParams::make(t, k);
            auto e = min_scan_at(p, alpha, s, 0);
            bool ok = e && *e <= e_cap;
            std::string w = tka_witness(t, k, alpha, s);
            if (probe) {
                ++rep.probed;
                if (!ok) rec.info(w);
            } else {
                ++rep.tested;
                if (!ok) rec.fail(w);
            }
        };
        run([&] { one(s_lo, false); });
        for (long i = 0; i < n_probe; ++i) {
            long k = rl(rng, 4, 100);
            long t = rl(rng, k, 200 * k);
            long s_hi = s_lo - 1, s_base = t + k + 1;
            if (s_base > s_hi) continue;
            long u = rl(rng, 0, (s_hi - s_base) / 2);
            Int alpha(rl(rng, 0, 2000));
            BaseCurveParams p = BaseCurveParams::make(t, k);
            auto e = min_scan_at(p, alpha, s_base + 2 * u, 0);
            ++rep.probed;
            if (!(e && *e <= e_cap)) rec.info(tka_witness(t, k, alpha, s_base + 2 * u));
        }
    } else if (id == "L5.8") {
        run([&] {
            long k = rl(rng, 7, 1000000);
            Int amax = fdiv_q(Int(k) * k, Int(k + 2)) - 5;
            if (amax < 0) return;
            Int alpha = ri(rng, 0, amax);
            long t = rl(rng, k, 3000000);
            ++rep.tested;
            if (!(2 * Int(t) * k >= (alpha + 5) * (Int(t) + k + 4)))
                rec.fail(tka_witness(t, k, alpha, 0));
        });
        for (long i = 0; i < n_probe; ++i) {
            long k = rl(rng, 7, 1000);
            Int alpha = fdiv_q(Int(k) * k, Int(k + 2)) - 5 + 1 + rl(rng, 0, 10);
            long t = rl(rng, k, 100000);
            ++rep.probed;
            if (!(2 * Int(t) * k >= (alpha + 5) * (Int(t) + k + 4)))
                rec.info(tka_witness(t, k, alpha, 0));
        }
    } else if (id == "L5.9") {
        run([&] {
            Int alpha(rl(rng, 0, 500));
            long S = 102 * (to_long(alpha) + 1) + rl(rng, 0, 100000);
            long k = rl(rng, std::max((S + 200) / 201, (S + 3) / 4), S / 2);
            long t = S - k;
            if (!(2 * Int(t) * k >= (alpha + 5) * (Int(S) + 4))) return;
            BaseCurveParams p = BaseCurveParams::make(t, k);
            long s = S + 1 + 2 * rl(rng, 0, 500);
            SeqRow r = closed_form_row(p, alpha, s);
            Int a2 = closed_form_row(p, alpha, s + 2).a;
            Int a4 = closed_form_row(p, alpha, s + 4).a;
            ++rep.tested;
            if (!(a2 - r.a <= 2 * r.a - alpha && a4 - a2 <= 2 * r.a + alpha - 1))
                rec.fail(tka_witness(t, k, alpha, s));
        });
    } else if (id == "L5.10") {
        auto one = [&](long S, const Int& alpha, bool probe) {
            long k = rl(rng, (S + 200) / 201, S / 2);
            long t = S - k;
            BaseCurveParams p = BaseCurveParams::make(t, k);
            long s = S + 3 + 2 * rl(rng, 0, 500);
            bool ok = closed_form_row(p, alpha, s).g >= 26;
            std::string w = tka_witness(t, k, alpha, s);
            if (probe) {
                ++rep.probed;
                if (!ok) rec.info(w);
            } else {
                ++rep.tested;
                if (!ok) rec.fail(w);
            }
        };
        run([&] {
            Int alpha(rl(rng, 0, 500));
            one(102 * (to_long(alpha) + 27) + rl(rng, 0, 100000), alpha, false);
        });
        for (long i = 0; i < n_probe; ++i) {
            Int alpha(rl(rng, 0, 500));
            long TH = 102 * (to_long(alpha) + 27);
            one(TH - rl(rng, 1, 3000), alpha, true);
        }
    } else if (id == "L8.1") {
        run([&] {
            GContext c;
            if (!draw_context(rng, 2500, 200000, kReferenceGenusFloor, false, c)) return;
            if (c.t < 250) return;
            ++rep.tested;
            if (!(100 * c.m > 158 * c.t)) rec.fail(ctx_witness(c));
        });
        for (long i = 0; i < n_probe; ++i) {
            GContext c;
            if (!draw_context(rng, 300, 2400, 1, false, c)) continue;
            if (c.t >= 250) continue;
            ++rep.probed;
            if (!(100 * c.m > 158 * c.t)) rec.info(ctx_witness(c));
        }
    } else if (id == "L8.2") {
        run([&] {
            GContext c;
            if (!draw_context(rng, Int("1600000000000000"), Int("2400000000000000"),
                              kReferenceGenusFloor, false, c))
                return;
            if (Int(c.t) < Int("1000000000000000")) return;
            ++rep.tested;
            if (!(30 * Int(c.k) <= c.t)) rec.fail(ctx_witness(c));
        });
        for (long i = 0; i < n_probe; ++i) {
            GContext c;
            if (!draw_context(rng, 100000, 1000000, kReferenceGenusFloor, false, c)) continue;
            ++rep.probed;
            if (!(30 * Int(c.k) <= c.t)) rec.info(ctx_witness(c));
        }
    } else if (id == "L8.3") {
        run([&] {
            GContext c;
            if (!draw_context(rng, 7000, 300000, kReferenceGenusFloor, false, c)) return;
            if (c.t < 4000) return;
            ++rep.tested;
            if (!(200 * c.k > c.t)) rec.fail(ctx_witness(c));
        });
        for (long i = 0; i < n_probe; ++i) {
            GContext c;
            if (!draw_context(rng, 500, 6999, 1, false, c)) continue;
            if (c.t >= 4000) continue;
            ++rep.probed;
            if (!(200 * c.k > c.t)) rec.info(ctx_witness(c));
        }
    } else if (id == "L8.4" || id == "L8.6" || id == "L8.7") {
        run([&] {
            GContext c;
            if (!draw_context(rng, 70000, 700000, kReferenceGenusFloor, true, c)) return;
            if (c.t + c.k < 23358 || c.y < 23310) return;
            long x = c.y + 2 + 2 * rl(rng, 0, 2000);
            Int ux = uv_row(c.bp, c.g, x).u;
            Int ux2 = uv_row(c.bp, c.g, x + 2).u;
            ++rep.tested;
            if (id == "L8.4") {
                Int du = ux2 - ux;
                if (!(102 * Int(x + 2) * (du + 2) >= Int(x) * (x + 1) && du >= 202))
                    rec.fail(ctx_witness(c) + ",x=" + std::to_string(x));
            } else if (id == "L8.6") {
                auto e = grid_e(uv_row(c.bp, c.g, x + 2).v, ux2 - ux,
                                GridEVariant::MinScan, 1);
                if (!(e && *e <= 201)) rec.fail(ctx_witness(c) + ",x=" + std::to_string(x));
            } else {
                Int ux4 = uv_row(c.bp, c.g, x + 4).u;
                if (!(2 * ux >= ux4 - ux2 + 202 && 2 * ux >= ux2 - ux + 202))
                    rec.fail(ctx_witness(c) + ",x=" + std::to_string(x));
            }
        });
    } else if (id == "L8.5" || id == "L8.8" || id == "L8.9") {
        run([&] {
            GContext c;
            if (!draw_context(rng, 70000, 700000, kReferenceGenusFloor, true, c)) return;
            if (c.t + c.k < 23358) return;
            if (id == "L8.9" && c.y < 44310) return;
            Int ay = closed_form_row(c.bp, 202, c.y).a;
            UVRow r2 = uv_row(c.bp, c.g, c.y + 2);
            UVRow r4 = uv_row(c.bp, c.g, c.y + 4);
            ++rep.tested;
            if (id == "L8.5") {
                Int du = r2.u - ay;
                if (!(102 * Int(c.y + 2) * (du + 2) >= Int(c.y) * (c.y + 1) && du >= 202))
                    rec.fail(ctx_witness(c));
            } else if (id == "L8.8") {
                if (!(2 * ay >= r2.u - ay + 202 && 2 * ay >= r4.u - r2.u + 202))
                    rec.fail(ctx_witness(c));
            } else {
                auto e = grid_e(r2.v, r2.u - ay, GridEVariant::MinScan, 1);
                auto f = grid_e(r4.v, r4.u - r2.u, GridEVariant::MinScan, 1);
                if (!(e && *e <= 201 && f && *f <= 201)) rec.fail(ctx_witness(c));
            }
        });
    } else if (id == "L8.10") {
        run([&] {
            GContext c;
            if (!draw_context(rng, 165000, 490000, kSmallGenusThreshold, true, c)) return;
            if (c.t < 30000 || c.t > 200 * c.k) return;
            ++rep.tested;
            if (!(Int(c.y) <= c.m - 7)) rec.fail(ctx_witness(c));
        });
        for (long i = 0; i < n_probe; ++i) {
            GContext c;
            if (!draw_context(rng, 40000, 80000, kReferenceGenusFloor, true, c)) continue;
            if (c.t >= 30000) continue;
            ++rep.probed;
            if (!(Int(c.y) <= c.m - 7)) rec.info(ctx_witness(c));
        }
    } else if (id == "EQ13") {
        run([&] {
            GContext c;
            if (!draw_context(rng, 2000, 200000, kReferenceGenusFloor, false, c)) return;
            ++rep.tested;
            if (!(c.bp.g_tk <= c.g && c.g <= c.bp.g_tk + 2 * Int(c.k) * c.k + 2 * c.k))
                rec.fail(ctx_witness(c));
        });
    } else {
        throw std::logic_error("verify_lemma: unhandled id " + id);
    }
    return rep;
}

}  // namespace halphen
