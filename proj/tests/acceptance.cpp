// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "halphen/lemmas.hpp"
#include "halphen/planner.hpp"
#include "halphen/postulation.hpp"
#include "halphen/range_genus.hpp"
#include "halphen/sequence.hpp"

using namespace halphen;

namespace {

int failures = 0;

void report(int n, const std::string& what, bool pass, double secs) {
    std::printf("[%s] criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", n, what.c_str(),
                secs);
    if (!pass) ++failures;
}

template <typename Fn>
void criterion(int n, const std::string& what, double budget_secs, Fn&& body) {
    auto start = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = body();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
        pass = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_secs) {
        std::printf("  over budget: %.2f s > %.0f s\n", secs, budget_secs);
        pass = false;
    }
    report(n, what, pass, secs);
}

Int boundary_degree(const Int& m) { return -fdiv_q(-(m * m + 4 * m + 6), Int(6)); }

bool row_invariant_sweep() {
    std::mt19937_64 rng(0);
    const Int alphas[3] = {0, 2, 202};
    for (int trial = 0; trial < 1000; ++trial) {
        long t = 4 + long(rng() % 497);
        long k = 4 + long(rng() % (t - 3));
        const Int& alpha = alphas[rng() % 3];
        BaseCurveParams p = BaseCurveParams::make(t, k);
        SequenceTable tab(p, alpha);  // the invariant is asserted inside every row
        Int binom = binom3(Int(t + k + 1) + 3);
        for (long s = t + k + 1; s <= t + k + 41; s += 2) {
            const SeqRow& r = tab.row(s);
            if (Int(s) * (p.d_tk + r.a) + 3 - p.g_tk - r.g + r.b != binom) return false;
            binom += Int(s + 3) * (s + 3);
        }
    }
    return true;
}

bool identity_box() {
    LemmaBudget b;
    b.exhaustive = true;
    b.box_t_lo = 4;
    b.box_t_hi = 40;
    b.box_k_lo = 4;
    b.box_steps = 20;  // rows up to s = t+k+39
    LemmaReport r = verify_lemma("L5.1", b);
    return r.tested > 0 && r.failure_count == 0;
}

bool full_scale_plans() {
    for (long mm : {1380000L, 1380001L}) {
        Int m(mm);
        Int d = boundary_degree(m);
        Int g = genus_bound_A(d, m);
        ConstructionPlan P = plan(d, m, g, PlanMode::Strict);
        if (!P.all_green()) {
            for (const auto& c : P.validity)
                if (!c.pass && !c.informational)
                    std::printf("  m=%ld: %s (%s)\n", mm, c.name.c_str(), c.witness.c_str());
            return false;
        }
    }
    return true;
}

bool lemma_sweep() {
    bool ok = true;
    for (const auto& spec : lemma_catalog()) {
        for (std::uint64_t seed = 0; seed <= 2; ++seed) {
            LemmaBudget b;
            b.samples = 10000;
            b.seed = seed;
            LemmaReport r = verify_lemma(spec.id, b);
            if (spec.self_test) {
                if (r.failure_count < 1) {
                    std::printf("  %s produced no witness at seed %llu\n", spec.id.c_str(),
                                (unsigned long long)seed);
                    ok = false;
                }
            } else if (r.failure_count != 0) {
                std::printf("  %s: %ld failures at seed %llu, first: %s\n", spec.id.c_str(),
                            r.failure_count, (unsigned long long)seed,
                            r.failures.empty() ? "?" : r.failures[0].c_str());
                ok = false;
            }
        }
    }
    return ok;
}

bool postulation_counts() {
    for (std::uint64_t seed = 0; seed <= 2; ++seed) {
        PrimeField F;
        std::mt19937_64 rng(seed);
        for (long t = 2; t <= 5; ++t) {
            DetCurveSpec cv = random_det_curve(t, F, rng);
            SchemeSpec Z;
            Z.components.push_back(cv);
            if (h0_ideal(Z, t - 1) != 0) {
                std::printf("  t=%ld: nonzero below the critical level\n", t);
                return false;
            }
            for (long s = t; s <= t + 3; ++s)
                if (Int(h0_ideal(Z, s)) != det_curve_expected_h0(t, s)) {
                    std::printf("  t=%ld s=%ld: resolution count mismatch\n", t, s);
                    return false;
                }
        }
        const long pairs[][2] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}};
        for (auto [t, k] : pairs) {
            SchemeSpec Z;
            Z.components.push_back(random_det_curve(t, F, rng));
            Z.components.push_back(random_det_curve(k, F, rng));
            if (h0_ideal(Z, t + k - 1) != 0) {
                std::printf("  pair (%ld,%ld): nonzero at level t+k-1\n", t, k);
                return false;
            }
        }
    }
    return true;
}

bool horace_bookkeeping() {
    PrimeField F;
    std::mt19937_64 rng(0);
    for (int trial = 0; trial < 100; ++trial) {
        HoraceConfig cfg;
        cfg.level = 3 + long(rng() % 6);  // s in [3, 8]
        long nlines = rng() % 3, ndp = rng() % 3, npts = rng() % 3;
        for (long i = 0; i < nlines; ++i) {
            QuadricPoint q1 = random_quadric_point(F, rng);
            QuadricPoint q2 = random_quadric_point(F, rng);
            cfg.off_quadric.components.push_back(LineSpec{segre(q1, F), segre(q2, F)});
            cfg.marked.push_back(q1);
            cfg.marked.push_back(q2);
        }
        for (long i = 0; i < ndp; ++i) {
            Coord c;
            for (auto& x : c) x = F.random(rng);
            cfg.off_quadric.components.push_back(DoublePointSpec{c});
        }
        for (long i = 0; i < npts; ++i) {
            Coord c;
            for (auto& x : c) x = F.random(rng);
            cfg.off_quadric.components.push_back(PointSpec{c});
        }
        long e = rng() % 3, f = rng() % 3;
        for (long i = 0; i < e; ++i) cfg.grid.fam1.push_back({F.random_nonzero(rng), 1});
        for (long i = 0; i < f; ++i) cfg.grid.fam2.push_back({F.random_nonzero(rng), 1});
        if (e > 0 && f > 0 && rng() % 2)
            cfg.chi.push_back({int(rng() % e), int(rng() % f)});
        long extra = rng() % 3;
        for (long i = 0; i < extra; ++i) cfg.extra.push_back(random_quadric_point(F, rng));

        ConditionCounts cc = condition_counts(cfg);
        if (!cc.additive) {
            std::printf("  trial %d: condition counts not additive\n", trial);
            return false;
        }
    }
    std::mt19937_64 rng2(1);
    for (int trial = 0; trial < 1000; ++trial) {
        long t = 2 + long(rng2() % 80);
        long k = 1 + long(rng2() % t);
        Int alpha(long(rng2() % 250));
        long s = t + k + 1 + 2 * long(rng2() % 40);
        long e = 1 + long(rng2() % 30);
        BaseCurveParams p = BaseCurveParams::make(t, k);
        char cases[3] = {'a', 'b', 'c'};
        if (!claim1_identity(p, alpha, s, e, cases[rng2() % 3])) {
            std::printf("  counting identity failed at t=%ld k=%ld s=%ld e=%ld\n", t, k, s, e);
            return false;
        }
    }
    return true;
}

bool range_partition() {
    for (long m = 3; m <= 200; ++m)
        for (long d = 1; d <= m * m + 1; ++d)
            if ((classify(d, m).tag == Range::Empty) != (genus_bound_A(d, m) < 0)) {
                std::printf("  partition mismatch at d=%ld m=%ld\n", d, m);
                return false;
            }
    for (long m = 3; m <= 100; ++m)
        for (long d = m * m - m + 1; d <= m * m + 3 * m; ++d) {
            GenusBoundC b = genus_bound_C(d, m);  // throws if the division is inexact
            if (b.r < 0 || b.r >= m) {
                std::printf("  remainder out of range at d=%ld m=%ld\n", d, m);
                return false;
            }
        }
    return true;
}

}  // namespace

int main() {
    criterion(1, "row invariant on 1000 random tables", 10, row_invariant_sweep);
    criterion(2, "closed form vs telescoped increments, exhaustive box", 5, identity_box);
    criterion(3, "full-scale plans at m = 1380000 and 1380001 all green", 60,
              full_scale_plans);
    criterion(4, "lemma catalog sweep, 10^4 samples, seeds 0-2, plus self-test", 300,
              lemma_sweep);
    criterion(5, "determinantal postulation and pairwise zero-h0 counts", 120,
              postulation_counts);
    criterion(6, "specialization bookkeeping and counting identity", 60, horace_bookkeeping);
    criterion(7, "range partition and range-C integrality sweeps", 10, range_partition);
    return failures == 0 ? 0 : 1;
}
