#include "nicomach/cfrac.hpp"

#include <map>
#include <stdexcept>

namespace nicomach {

std::string CFExpansion::str() const {
    if (quotients.empty()) return "[]";
    std::size_t pstart = period ? period->first : quotients.size();
    std::string s = "[";
    for (std::size_t i = 0; i < quotients.size(); ++i) {
        if (i > 0) s += i == 1 ? "; " : ", ";
        if (i == pstart) s += "(";
        s += quotients[i].get_str();
    }
    if (period) s += ")*";
    else if (!terminated) s += ", ...";
    s += "]";
    return s;
}

CFExpansion cf_rational(const Rational& q, std::size_t maxQuotients) {
    CFExpansion e;
    Integer n = q.num(), d = q.den();
    while (e.quotients.size() < maxQuotients) {
        Integer a = floor_div(n, d);
        e.quotients.push_back(a);
        Integer r = Integer(n - a * d);
        if (r == 0) {
            e.terminated = true;
            break;
        }
        n = d;
        d = r;
    }
    return e;
}

CFExpansion cf_quadratic(const Surd& s, std::size_t maxQuotients) {
    if (s.is_rational()) throw std::domain_error("cf_quadratic: rational input");
    // Write s = (P + sqrt(D)) / Q over integers with Q | D - P^2.
    const Rational& ra = s.rational_part();
    const Rational& rb = s.surd_part();
    Integer L = Integer(ra.den() * rb.den() / gcd(ra.den(), rb.den()));
    Integer P = Integer(ra.num() * (L / ra.den()));
    Integer B = Integer(rb.num() * (L / rb.den()));
    Integer Q = L;
    if (B < 0) {
        P = -P;
        B = -B;
        Q = -Q;
    }
    Integer D = Integer(B * B * s.radicand());
    if (Integer(D - P * P) % Q != 0) {
        P *= abs(Q);
        D *= Q * Q;
        Q *= abs(Q);
    }

    CFExpansion e;
    std::map<std::pair<Integer, Integer>, std::size_t> seen;
    while (e.quotients.size() < maxQuotients) {
        auto it = seen.find({P, Q});
        if (it != seen.end()) {
            e.period = {it->second, e.quotients.size() - it->second};
            break;
        }
        seen.emplace(std::make_pair(P, Q), e.quotients.size());
        Integer sq = isqrt(D).root;  // D is never a perfect square here
        Integer a = Q > 0 ? floor_div(Integer(P + sq), Q)
                          : Integer(-floor_div(Integer(P + sq), Integer(-Q)) - 1);
        e.quotients.push_back(a);
        Integer P2 = Integer(a * Q - P);
        Q = Integer((D - P2 * P2) / Q);
        P = P2;
    }
    return e;
}

std::vector<Convergent> convergents(const std::vector<Integer>& quotients) {
    std::vector<Convergent> out;
    out.reserve(quotients.size());
    Integer p1(1), p0(0), q1(0), q0(1);  // (p_{k-1}, p_{k-2}), (q_{k-1}, q_{k-2})
    for (const Integer& a : quotients) {
        Integer p = Integer(a * p1 + p0), q = Integer(a * q1 + q0);
        out.push_back({p, q});
        p0 = p1;
        p1 = p;
        q0 = q1;
        q1 = q;
    }
    return out;
}

bool convergent_determinants_ok(const std::vector<Integer>& quotients) {
    auto cv = convergents(quotients);
    for (std::size_t k = 1; k < cv.size(); ++k) {
        Integer det = Integer(cv[k].p * cv[k - 1].q - cv[k - 1].p * cv[k].q);
        if (det != (k % 2 == 1 ? 1 : -1)) return false;
    }
    return true;
}

}  // namespace nicomach
