#pragma once

// Exact-arithmetic closed forms and inequalities relating eta, order and
// nilpotence class.  Everything here is pure integer/rational arithmetic;
// no group objects and no floating point anywhere.

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace etalab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "7/3"; integers print without the denominator.
std::string rat_to_string(const Rat& q);

enum class Relation { Ge, Le, Eq, Divides };

const char* relation_symbol(Relation r);

// Parameters an inequality instance was evaluated at; only those that
// apply are set.
struct ParamSet {
    std::optional<std::int64_t> p, n, l, a, b;
    std::string note;
};

// One exactly-evaluated inequality instance: pass holds iff
// `lhs relation rhs` holds in exact rational arithmetic.
struct BoundCheck {
    std::string label;
    Rat lhs;
    Rat rhs;
    Relation relation = Relation::Ge;
    bool pass = false;
    ParamSet context;
};

// Evaluates `lhs relation rhs` exactly.  Divides requires both sides to
// be integers with lhs | rhs.
bool relation_holds(const Rat& lhs, Relation rel, const Rat& rhs);

// eta of the direct product of cyclic groups of orders p^a and p^b:
// p^(min-1) * ((max-min)(p-1) + p + 1).  Symmetric in (a, b).
Int g_p(std::int64_t p, std::int64_t a, std::int64_t b);

// phi(p^k); phi(1) = 1.
Int euler_phi_prime_power(std::int64_t p, std::int64_t k);

// Lower bound for eta of a noncyclic abelian group of order p^n:
// (p-1)(n-2) + p + 1.
Int abelian_bound(std::int64_t p, std::int64_t n);

// Sharper odd-p abelian lower bound (p+1)n/2.  Requires p odd.
Rat odd_abelian_bound(std::int64_t p, std::int64_t n);

// Lower bound for eta of a noncyclic p-group of order p^n and nilpotence
// class l: (p-1)(n/l - 2) + p + 1, as an exact rational.
Rat class_bound(std::int64_t p, std::int64_t n, std::int64_t l);

// Lower bound for eta(H x C_{p^a}) given eta(H): (a+1) eta(H) + 1.
Int product_bound(std::int64_t a, std::int64_t eta_h);

// Exhaustive scan of b in [1, n/2]: the minimum of g_p(n-b, b) must be
// attained at b = 1 and be >= abelian_bound(p, n).  Replaces a calculus
// argument by a finite integer scan.
BoundCheck check_gp_minimum(std::int64_t p, std::int64_t n);

// Proves (p+1)/(2(p-1)) - 1/ln(p) > 0 for this p, using an exact rational
// lower bound on ln(p): truncating the positive series
// ln p = 2 sum_{j>=0} z^(2j+1)/(2j+1), z = (p-1)/(p+1), only undershoots,
// and positivity is equivalent to ln(p) > 2(p-1)/(p+1).
bool critical_point_positivity(std::int64_t p);

// Upper bound for n = log_p|G| in terms of eta and the class:
// ((eta - p - 1)/(p - 1) + 2) * l, as an exact rational.
Rat size_bound_from_eta(std::int64_t p, std::int64_t eta, std::int64_t l);

}  // namespace etalab
