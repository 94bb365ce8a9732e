#include "halphen/range_genus.hpp"

namespace halphen {

std::string range_name(Range r) {
    switch (r) {
        case Range::Empty: return "Empty";
        case Range::A: return "A";
        case Range::B: return "B";
        case Range::C: return "C";
    }
    return "?";
}

RangeClass classify(const Int& d, const Int& m) {
    if (m < 3) throw std::domain_error("classify: need m >= 3");
    if (d < 1) throw std::domain_error("classify: need d >= 1");
    Int q = m * m + 4 * m + 6;
    RangeClass rc;
    rc.lower_a = Rat(q, 6);
    rc.lower_b = Rat(q, 3);
    rc.lower_c = m * m - m;
    rc.lower_a.canonicalize();
    rc.lower_b.canonicalize();
    if (6 * d < q)
        rc.tag = Range::Empty;
    else if (3 * d < q)
        rc.tag = Range::A;
    else if (d <= rc.lower_c)
        rc.tag = Range::B;
    else
        rc.tag = Range::C;
    return rc;
}

Int genus_bound_A(const Int& d, const Int& m) {
    return 1 + (m - 1) * d - binom3(m + 2);
}

GenusBoundC genus_bound_C(const Int& d, const Int& m) {
    if (m < 1) throw std::domain_error("genus_bound_C: need m >= 1");
    GenusBoundC out;
    out.r = (m - d % m) % m;
    Int num = d * (d + m * m - 4 * m) - out.r * (m - out.r) * (m - 1);
    out.genus = 1 + exact_div(num, 2 * m, "genus_bound_C numerator not divisible by 2m");
    return out;
}

}  // namespace halphen
