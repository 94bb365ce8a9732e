#include "halphen/sequence.hpp"

#include <stdexcept>
#include <string>

namespace halphen {

Int curve_degree(long t) { return Int(t) * (t + 1) / 2; }

Int curve_genus(long t) {
    Int tt(t);
    return 1 + exact_div(tt * (tt + 1) * (2 * tt - 5), Int(6), "curve_genus");
}

BaseCurveParams BaseCurveParams::make(long t, long k) {
    if (k < 1 || t < k) throw std::domain_error("BaseCurveParams: need t >= k >= 1");
    BaseCurveParams p;
    p.t = t;
    p.k = k;
    p.d_tk = curve_degree(t) + curve_degree(k);
    p.g_t = curve_genus(t);
    p.g_k = curve_genus(k);
    p.g_tk = p.g_t + p.g_k;
    return p;
}

SequenceTable::SequenceTable(BaseCurveParams p, Int alpha)
    : p_(std::move(p)), alpha_(std::move(alpha)), s_min_(p_.t + p_.k + 1) {
    binom_next_ = binom3(Int(s_min_) + 3);
    push_next_row();
}

void SequenceTable::push_next_row() {
    long s = s_min_ + 2 * long(rows_.size());
    SeqRow r;
    if (rows_.empty()) {
        Int rhs = binom_next_ - 3 + p_.g_tk - Int(s) * p_.d_tk;
        fdiv_qr(rhs, Int(s), r.a, r.b);
        r.g = 0;
    } else {
        const SeqRow& prev = rows_.back();
        Int m = Int(s + 1) * (s + 1) - 2 * (p_.d_tk + prev.a) - alpha_ + prev.b;
        Int da, b;
        fdiv_qr(m, Int(s - 1), da, b);
        r.a = prev.a + da;
        r.b = b;
        r.g = prev.g + da - alpha_;
    }
    if (r.a < 0) r.out_of_model = true;
    Int lhs = Int(s) * (p_.d_tk + r.a) + 3 - p_.g_tk - r.g + r.b;
    if (lhs != binom_next_)
        throw std::logic_error("SequenceTable: row invariant violated at s=" +
                               std::to_string(s));
    rows_.push_back(std::move(r));
    binom_next_ += Int(s + 3) * (s + 3);  // binom(s+5,3) = binom(s+3,3) + (s+3)^2
}

void SequenceTable::extend_to(long s) {
    while (s_max() < s) push_next_row();
}

const SeqRow& SequenceTable::row(long s) {
    if (s < s_min_ || (s - s_min_) % 2 != 0)
        throw std::domain_error("SequenceTable::row: s must be t+k+1 plus an even step");
    extend_to(s);
    return rows_[(s - s_min_) / 2];
}

Int SequenceTable::delta(long s) { return row(s + 2).a - row(s).a; }

SeqRow closed_form_row(const BaseCurveParams& p, const Int& alpha, long s) {
    long s_min = p.t + p.k + 1;
    if (s < s_min || (s - s_min) % 2 != 0)
        throw std::domain_error("closed_form_row: s must be t+k+1 plus an even step");
    Int base_rhs = binom3(Int(s_min) + 3) - 3 + p.g_tk - Int(s_min) * p.d_tk;
    SeqRow r;
    if (s == s_min) {
        fdiv_qr(base_rhs, Int(s_min), r.a, r.b);
        r.g = 0;
    } else {
        Int a0 = fdiv_q(base_rhs, Int(s_min));
        Int u((s - s_min) / 2);
        Int rhs = binom3(Int(s) + 3) - 3 + p.g_tk - Int(s) * p.d_tk - a0 - alpha * u;
        fdiv_qr(rhs, Int(s - 1), r.a, r.b);
        r.g = r.a - a0 - alpha * u;
    }
    if (r.a < 0) r.out_of_model = true;
    return r;
}

Int big_I(const BaseCurveParams& p, long s) {
    long tk = p.t + p.k;
    if (s < tk - 1) throw std::domain_error("big_I: need s >= t+k-1");
    Int w(s - tk);
    Int num = (w + 1) * ((w + 3) * (w + 2) + 3 * Int(tk) * (w + 2) + 6 * Int(p.k) * p.t);
    return exact_div(num, Int(6), "big_I");
}

UVRow uv_row(const BaseCurveParams& p, const Int& g, long x) {
    if (x < 1) throw std::domain_error("uv_row: need x >= 1");
    Int rhs = binom3(Int(x) + 3) - 3 + g - Int(x) * p.d_tk;
    UVRow r;
    fdiv_qr(rhs, Int(x), r.u, r.v);
    return r;
}

Int total_degree_at(const BaseCurveParams& p, const Int& g, long x) {
    return p.d_tk + uv_row(p, g, x).u;
}

namespace {

Int grid_threshold(long e, const Int& delta, int offset) {
    return Int(e - 1) * (delta - e - 1 + offset);
}

}  // namespace

std::optional<long> grid_e(const Int& b, const Int& delta, GridEVariant variant,
                           int offset) {
    if (offset != 0 && offset != 1) throw std::domain_error("grid_e: offset must be 0 or 1");
    if (delta < 1) return std::nullopt;
    long d = to_long(delta);
    if (variant == GridEVariant::MinScan) {
        /* threshold is nondecreasing up to its vertex near (delta+offset)/2 and
         * symmetric beyond it, so the minimal qualifying e sits in the rising
         * part; binary search there */
        long hi = std::min(d, (d + offset) / 2);
        if (hi < 1) hi = 1;
        /* the vertex value is the maximum over all of [1, delta] */
        if (b > grid_threshold(hi, delta, offset)) return std::nullopt;
        long lo = 1;
        while (lo < hi) {
            long mid = lo + (hi - lo) / 2;
            if (b <= grid_threshold(mid, delta, offset)) hi = mid;
            else lo = mid + 1;
        }
        return lo;
    }
    long hi = variant == GridEVariant::AMax ? d / 2 : (d - 1) / 2;
    if (hi < 1) return std::nullopt;
    if (!(b > grid_threshold(1, delta, offset))) return std::nullopt;  // b = 0
    long lo = 1;
    /* condition b > threshold(e) holds on a prefix; find its end */
    while (lo < hi) {
        long mid = lo + (hi - lo + 1) / 2;
        if (b > grid_threshold(mid, delta, offset)) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

bool claim1_identity(const BaseCurveParams& p, const Int& alpha, long s, long e,
                     char case_tag) {
    SeqRow r = closed_form_row(p, alpha, s);
    SeqRow r2 = closed_form_row(p, alpha, s + 2);
    Int delta = r2.a - r.a;
    Int ep, psi;
    if (case_tag == 'a') {
        ep = e + 1;
        psi = 2 * r.a - r.b + Int(e - 1) * delta - Int(e) * e - 2 * e + alpha - 1;
    } else if (case_tag == 'b' || case_tag == 'c') {
        ep = e;
        psi = 2 * r.a - r.b + Int(e - 2) * delta - Int(e) * e + alpha;
    } else {
        throw std::domain_error("claim1_identity: case must be 'a', 'b' or 'c'");
    }
    Int lhs = 2 * p.d_tk + psi + r2.b;
    Int rhs = (Int(s) + 3 - ep) * (Int(s) + 3 - delta + ep);
    return lhs == rhs;
}

}  // namespace halphen
