#include "halphen/planner.hpp"

#include <algorithm>
#include <stdexcept>

#include "halphen/range_genus.hpp"

namespace halphen {

const Int kSmallGenusThreshold = Int("340000000000000");
const Int kReferenceGenusFloor = Int("665665002");

bool ConstructionPlan::all_green() const {
    for (const auto& c : validity)
        if (!c.informational && !c.pass) return false;
    return true;
}

long select_t(const Int& g) {
    if (g < 0) return 0;
    auto ok = [&](long t) { return 1000000 * curve_genus(t) <= 999999 * g; };
    long lo = 1, hi = 2;
    while (ok(hi)) { lo = hi; hi *= 2; }
    while (lo < hi) {
        long mid = lo + (hi - lo + 1) / 2;
        if (ok(mid)) lo = mid;
        else hi = mid - 1;
    }
    return ok(lo) ? lo : 0;
}

long select_k(const Int& g, long t, const Int& m) {
    if (t < 1) return 0;
    Int rem = g - curve_genus(t);
    if (rem < 0) return 0;
    long lo = 1, hi = t;
    if (curve_genus(lo) > rem) return 0;
    while (lo < hi) {
        long mid = lo + (hi - lo + 1) / 2;
        if (curve_genus(mid) <= rem) lo = mid;
        else hi = mid - 1;
    }
    bool m_odd = mpz_odd_p(m.get_mpz_t());
    auto parity_ok = [&](long k) { return (((t + k) % 2 != 0) == m_odd); };
    if (parity_ok(lo)) return lo;
    return lo > 1 ? lo - 1 : 0;
}

long select_y_scan(const BaseCurveParams& p, const Int& g, const Int& alpha,
                   long scan_cap, bool* capped) {
    if (capped) *capped = false;
    Int target = g - p.g_tk;
    if (target < 0) throw std::domain_error("select_y_scan: g below g_tk");
    SequenceTable tab(p, alpha);
    long s = tab.s_min(), y = s;
    int misses = 0;  // rows past the last qualifying one (toy tables wobble)
    while (s + 2 <= scan_cap && misses < 200) {
        s += 2;
        if (tab.row(s).g <= target) { y = s; misses = 0; }
        else ++misses;
    }
    if (capped && s + 2 > scan_cap && misses < 200) *capped = true;
    return y;
}

long select_y_bisect(const BaseCurveParams& p, const Int& g, const Int& alpha) {
    if (p.t + p.k < 1000 || alpha < 0)
        throw std::domain_error("select_y_bisect: outside the monotone regime");
    Int target = g - p.g_tk;
    if (target < 0) throw std::domain_error("select_y_bisect: g below g_tk");
    long s_min = p.t + p.k + 1;
    auto gval = [&](long s) { return closed_form_row(p, alpha, s).g; };
    long step = 2;
    long hi = s_min;
    while (gval(hi + step) <= target) {
        hi += step;
        step *= 2;
    }
    long lo = hi;
    hi = hi + step;  // gval(hi) > target
    while (hi - lo > 2) {
        long mid = lo + (hi - lo) / 2;
        if (mid % 2 != lo % 2) ++mid;
        if (gval(mid) <= target) lo = mid;
        else hi = mid;
    }
    return lo;
}

namespace {

void add_check(std::vector<ValidityCheck>& v, std::string name, bool pass,
               std::string witness = "", bool informational = false) {
    v.push_back({std::move(name), pass, informational, pass ? "" : std::move(witness)});
}

void add_note(std::vector<ValidityCheck>& v, std::string name, std::string note) {
    v.push_back({std::move(name), true, true, std::move(note)});
}

/* U(x) and v(x) at level x from g alone: (x) U + v = binom(x+3,3) - 3 + g */
void level_division(const Int& g, const Int& x, Int& U, Int& v) {
    Int rhs = binom3(x + 3) - 3 + g;
    fdiv_qr(rhs, x, U, v);
}

}  // namespace

ConstructionPlan plan(const Int& d, const Int& m, const Int& g, PlanMode mode,
                      const Int& alpha) {
    ConstructionPlan P;
    P.mode = mode;
    P.ctx = {d, m, g, genus_bound_A(d, m), alpha, false};
    auto& V = P.validity;

    RangeClass rc = classify(d, m);
    add_check(V, "range-a-membership", rc.tag == Range::A,
              "classified as " + range_name(rc.tag));
    add_check(V, "below-quarter-bound", 4 * d < m * m + 4 * m + 6, "d=" + d.get_str());
    add_check(V, "genus-in-range", g >= 0 && g <= P.ctx.g_max_a, "g=" + g.get_str());

    bool is_sharp = (g == P.ctx.g_max_a);
    Int Um1, vm1;
    level_division(g, m - 1, Um1, vm1);

    if (mode == PlanMode::Strict && g < kSmallGenusThreshold) {
        P.ctx.small_genus = true;
        add_note(V, "small-genus-delegation",
                 "genus below 0.34e15: covered by the separate small-genus construction");
        if (is_sharp) {
            add_check(V, "final-degree-match", Um1 == d - 1, "U(m-1)=" + Um1.get_str());
            add_check(V, "final-v-match", vm1 == m - 3, "v(m-1)=" + vm1.get_str());
        } else {
            add_note(V, "final-degree-match", "skipped: g below the range-A bound");
            add_note(V, "final-v-match", "skipped: g below the range-A bound");
        }
        return P;
    }

    add_check(V, "genus-above-reference", g >= kReferenceGenusFloor, "g=" + g.get_str());
    add_check(V, "genus-above-small-threshold", g >= kSmallGenusThreshold,
              "g=" + g.get_str());
    add_check(V, "large-m", m >= 1380000, "m=" + m.get_str());

    P.t = select_t(g);
    add_check(V, "t-found", P.t >= 1, "no t with 10^6 g_t <= 999999 g");
    if (P.t < 1) return P;
    P.k = select_k(g, P.t, m);
    add_check(V, "k-found", P.k >= 1, "no matching k");
    if (P.k < 1) return P;
    P.base = BaseCurveParams::make(P.t, P.k);
    const BaseCurveParams& bp = P.base;

    bool m_odd = mpz_odd_p(m.get_mpz_t());
    add_check(V, "parity-tk-m", ((P.t + P.k) % 2 != 0) == m_odd,
              "t+k=" + std::to_string(P.t + P.k));
    add_check(V, "eq13-bracket",
              bp.g_tk <= g && g <= bp.g_tk + 2 * Int(P.k) * P.k + 2 * P.k,
              "g_tk=" + bp.g_tk.get_str());
    add_check(V, "k-upper-ratio", 30 * P.k <= P.t, "k=" + std::to_string(P.k), true);
    add_check(V, "k-lower-ratio", 200 * P.k > P.t, "k=" + std::to_string(P.k), true);

    long m_l = to_long(m);
    long s_min = P.t + P.k + 1;
    long cap = std::max(m_l + 1001, s_min + 2001);
    bool capped = false;
    SequenceTable tab(bp, alpha);
    {
        Int target = g - bp.g_tk;
        long s = s_min;
        P.y = s;
        int misses = 0;
        while (s + 2 <= cap && misses < 200) {
            s += 2;
            if (tab.row(s).g <= target) { P.y = s; misses = 0; }
            else ++misses;
        }
        capped = (s + 2 > cap && misses < 200);
    }
    add_check(V, "y-search-capped", !capped, "scan cap " + std::to_string(cap));
    add_check(V, "parity-y", (P.y % 2 != 0) == !m_odd, "y=" + std::to_string(P.y));
    add_check(V, "y-upper-bound", Int(P.y) <= m - 7, "y=" + std::to_string(P.y));

    tab.extend_to(P.y + 2);

    std::string delta_fail, genus_fail, ebound_fail, case_fail;
    auto note_first = [](std::string& slot, long s) {
        if (slot.empty()) slot = "s=" + std::to_string(s);
    };

    for (long s = s_min; s <= P.y; s += 2) {
        const SeqRow& r = tab.row(s);
        PlanStep st;
        st.s = s;
        st.kind = 'A';
        st.a = r.a;
        st.b = r.b;
        st.g = r.g;
        st.delta = tab.delta(s);
        if (st.delta < 202) note_first(delta_fail, s);
        if (s >= s_min + 2 && r.g < 26) note_first(genus_fail, s);
        if (r.b == 0) {
            st.case_tag = "empty-grid";
        } else {
            st.e = grid_e(r.b, st.delta, GridEVariant::AMax, 0);
            if (!st.e) {
                st.case_tag = "unclassified";
                note_first(case_fail, s);
            } else {
                long e = *st.e;
                if (e > 201) note_first(ebound_fail, s);
                Int thr = Int(e - 1) * (st.delta - e - 1);
                if (r.b >= thr + alpha - e && r.b <= e * (st.delta - e - 1))
                    st.case_tag = "a";
                else if (r.b >= thr + e - 1 && r.b <= thr + alpha - 1 - e)
                    st.case_tag = "b";
                else if (r.b > thr && r.b <= thr + e - 2)
                    st.case_tag = "c";
                else {
                    st.case_tag = "unclassified";
                    note_first(case_fail, s);
                }
            }
        }
        P.a_steps.push_back(std::move(st));
    }

    for (long x = P.y + 2; x <= m_l - 3; x += 2) {
        UVRow r = uv_row(bp, g, x);
        UVRow r2 = uv_row(bp, g, x + 2);
        PlanStep st;
        st.s = x;
        st.kind = 'B';
        st.a = r.u;
        st.b = r.v;
        st.g = g - bp.g_tk;
        st.delta = r2.u - r.u;
        if (r.v > 0) {
            st.e = grid_e(r.v, st.delta, GridEVariant::BMax, 1);
            if (st.e && *st.e > 201) note_first(ebound_fail, x);
        } else {
            st.case_tag = "empty-grid";
        }
        P.b_steps.push_back(std::move(st));
    }

    {
        UVRow rm3 = uv_row(bp, g, m_l - 3);
        PlanStep st;
        st.s = m_l - 3;
        st.kind = 'F';
        st.a = rm3.u;
        st.b = rm3.v;
        st.g = g - bp.g_tk;
        st.delta = d - (bp.d_tk + rm3.u);
        add_check(V, "final-delta-positive", st.delta >= 1, "delta=" + st.delta.get_str());
        if (st.delta >= 1) {
            st.e = grid_e(rm3.v, st.delta, GridEVariant::BMax, 1);
            if (st.e) {
                if (*st.e > 201) note_first(ebound_fail, m_l - 3);
                P.attach_t_index = to_long(st.delta) - *st.e - 1;
                P.attach_k_index = to_long(st.delta) - *st.e;
            }
        }
        add_check(V, "degree-total", bp.d_tk + rm3.u + st.delta == d, "");
        P.final_step = std::move(st);
    }

    if (is_sharp) {
        add_check(V, "final-degree-match", Um1 == d - 1, "U(m-1)=" + Um1.get_str());
        add_check(V, "final-v-match", vm1 == m - 3, "v(m-1)=" + vm1.get_str());
    } else {
        add_note(V, "final-degree-match", "skipped: g below the range-A bound");
        add_note(V, "final-v-match", "skipped: g below the range-A bound");
    }

    add_check(V, "a-step-delta-min", delta_fail.empty(), delta_fail);
    add_check(V, "a-step-genus-min", genus_fail.empty(), genus_fail);
    add_check(V, "a-step-case-classified", case_fail.empty(), case_fail);
    add_check(V, "grid-e-bound", ebound_fail.empty(), ebound_fail);
    add_check(V, "genus-total", (g - bp.g_tk) + bp.g_t + bp.g_k == g, "");
    return P;
}

}  // namespace halphen
