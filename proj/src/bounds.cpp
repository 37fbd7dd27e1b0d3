#include "etalab/bounds.hpp"

#include "etalab/error.hpp"

namespace etalab {

std::string rat_to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

const char* relation_symbol(Relation r) {
    switch (r) {
        case Relation::Ge: return ">=";
        case Relation::Le: return "<=";
        case Relation::Eq: return "=";
        case Relation::Divides: return "divides";
    }
    return "?";
}

bool relation_holds(const Rat& lhs, Relation rel, const Rat& rhs) {
    switch (rel) {
        case Relation::Ge: return lhs >= rhs;
        case Relation::Le: return lhs <= rhs;
        case Relation::Eq: return lhs == rhs;
        case Relation::Divides: {
            if (denominator(lhs) != 1 || denominator(rhs) != 1) return false;
            const Int a = numerator(lhs), b = numerator(rhs);
            if (a == 0) return b == 0;
            return b % a == 0;
        }
    }
    return false;
}

namespace {

Int int_pow(Int base, std::int64_t exp) {
    Int r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

void require_positive(std::int64_t v, const char* name) {
    if (v < 1) throw UsageError(std::string(name) + " must be >= 1");
}

}  // namespace

Int g_p(std::int64_t p, std::int64_t a, std::int64_t b) {
    if (p < 2) throw UsageError("g_p requires a prime p >= 2");
    require_positive(a, "a");
    require_positive(b, "b");
    const std::int64_t hi = std::max(a, b), lo = std::min(a, b);
    return int_pow(p, lo - 1) * (Int(hi - lo) * (p - 1) + p + 1);
}

Int euler_phi_prime_power(std::int64_t p, std::int64_t k) {
    if (p < 2) throw UsageError("euler_phi_prime_power requires p >= 2");
    if (k < 0) throw UsageError("euler_phi_prime_power requires k >= 0");
    if (k == 0) return 1;
    return int_pow(p, k - 1) * (p - 1);
}

Int abelian_bound(std::int64_t p, std::int64_t n) {
    if (n < 2) throw UsageError("abelian_bound requires n >= 2");
    return Int(p - 1) * (n - 2) + p + 1;
}

Rat odd_abelian_bound(std::int64_t p, std::int64_t n) {
    if (p == 2) throw UsageError("odd_abelian_bound requires an odd prime");
    if (n < 2) throw UsageError("odd_abelian_bound requires n >= 2");
    return Rat(Int(p + 1) * n, 2);
}

Rat class_bound(std::int64_t p, std::int64_t n, std::int64_t l) {
    require_positive(l, "l");
    // (p-1)(n/l - 2) + p + 1 with n/l exact
    return Rat(p - 1) * (Rat(n, l) - 2) + p + 1;
}

Int product_bound(std::int64_t a, std::int64_t eta_h) {
    return Int(a + 1) * eta_h + 1;
}

BoundCheck check_gp_minimum(std::int64_t p, std::int64_t n) {
    if (n < 2) throw UsageError("check_gp_minimum requires n >= 2");
    Int min_value;
    std::int64_t argmin = 0;
    for (std::int64_t b = 1; b <= n / 2; ++b) {
        Int v = g_p(p, n - b, b);
        if (argmin == 0 || v < min_value) {
            min_value = v;
            argmin = b;
        }
    }
    const Int bound = abelian_bound(p, n);
    const bool min_at_one = (min_value == g_p(p, n - 1, 1));

    BoundCheck check;
    check.label = "gp-minimum";
    check.lhs = Rat(min_value);
    check.rhs = Rat(bound);
    check.relation = Relation::Ge;
    check.pass = min_at_one && min_value >= bound;
    check.context.p = p;
    check.context.n = n;
    check.context.note = "min over b in [1," + std::to_string(n / 2) +
                         "] attained at b=" + std::to_string(argmin);
    return check;
}

bool critical_point_positivity(std::int64_t p) {
    if (p < 2) throw UsageError("critical_point_positivity requires p >= 2");
    // Positivity of (p+1)/(2(p-1)) - 1/ln p  <=>  ln p > 2(p-1)/(p+1),
    // since all factors are positive for p >= 2.  Truncated partial sums
    // of 2*atanh(z) with z = (p-1)/(p+1) are strict lower bounds on ln p,
    // so exceeding the target with finitely many terms is a proof.
    const Rat z(p - 1, p + 1);
    const Rat target = 2 * z;
    const Rat z2 = z * z;
    Rat lower = 0;
    Rat zpow = z;
    for (int j = 0; j < 8; ++j) {
        lower += 2 * zpow / (2 * j + 1);
        if (lower > target) return true;
        zpow *= z2;
    }
    return false;
}

Rat size_bound_from_eta(std::int64_t p, std::int64_t eta, std::int64_t l) {
    if (p < 2) throw UsageError("size_bound_from_eta requires p >= 2");
    require_positive(l, "l");
    return (Rat(eta - p - 1, p - 1) + 2) * l;
}

}  // namespace etalab
