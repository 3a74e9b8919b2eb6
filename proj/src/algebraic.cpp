#include "nicomach/algebraic.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nicomach {

namespace {

// Thrown when a probe lands exactly on a root of the working polynomial.
// The search deflates that (rational) root out and restarts, so probe sites
// never coincide with roots of the polynomial being bisected.
struct RootHit {
    Rational r;
};

int probe(const IPoly& w, const Rational& t) {
    int s = w.sign_at(t);
    if (s == 0) throw RootHit{t};
    return s;
}

Rational mid(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

int left_sign(const IPoly& w, const Rational& lo) {
    int s = w.sign_at(lo);
    if (s == 0) throw std::runtime_error("root search: endpoint invariant lost");
    return s;
}

// (lo, hi) holds exactly one simple root of w; shrink to the half with the
// sign change.
void halve(const IPoly& w, Rational& lo, Rational& hi) {
    int sa = left_sign(w, lo);
    Rational m = mid(lo, hi);
    if (probe(w, m) == sa) lo = m;
    else hi = m;
}

// Push the interior point t out of (lo, hi), keeping the root inside.
void exclude_point(const IPoly& w, Rational& lo, Rational& hi, const Rational& t) {
    int sa = left_sign(w, lo);
    if (probe(w, t) == sa) lo = t;
    else hi = t;
}

// Isolate the largest of the c roots of w in (lo, hi).
std::array<Rational, 2> rightmost(const IPoly& w, const SturmChain& sc, Rational lo, Rational hi,
                                  int c) {
    while (c > 1) {
        Rational m = mid(lo, hi);
        probe(w, m);
        int cr = sc.count_open(m, hi);
        if (cr >= 1) {
            lo = m;
            c = cr;
        } else {
            hi = m;
        }
    }
    return {lo, hi};
}

// Isolate the smallest of the c roots of w in (lo, hi).
std::array<Rational, 2> leftmost(const IPoly& w, const SturmChain& sc, Rational lo, Rational hi,
                                 int c) {
    while (c > 1) {
        Rational m = mid(lo, hi);
        probe(w, m);
        int cl = sc.count_open(lo, m);
        if (cl >= 1) {
            hi = m;
            c = cl;
        } else {
            lo = m;
        }
    }
    return {lo, hi};
}

// Nearest root on one side of target: either a known rational root or the
// isolated extreme root of `work` on that side.
struct SideWinner {
    bool isExact;
    Rational e;        // exact position when isExact
    Rational a, b;     // isolating interval otherwise
};

// Exact root e and interval candidate on the same side: one probe decides.
// `belowTarget` says which direction counts as nearer (larger wins below
// target, smaller wins above).
SideWinner reconcile_side(const IPoly& work, const Rational& e, std::array<Rational, 2> iv,
                          bool belowTarget) {
    auto [a, b] = iv;
    if (e > a && e < b) exclude_point(work, a, b, e);  // e is never the interval's root
    bool exactWins = belowTarget ? e >= b : e <= a;
    if (exactWins) return {true, e, {}, {}};
    return {false, {}, a, b};
}

AlgebraicReal finalize_interval(const IPoly& base, const IPoly& work,
                                const std::vector<Rational>& exact, Rational a, Rational b) {
    for (int guard = 0; guard < 100000; ++guard) {
        bool bad = base.sign_at(a) == 0 || base.sign_at(b) == 0;
        if (!bad)
            for (const Rational& e : exact)
                if (a < e && e < b) {
                    bad = true;
                    break;
                }
        if (!bad) {
            if (SturmChain(base).count_open(a, b) != 1)
                throw std::runtime_error("isolate_root_near: certification failed");
            return {base, a, b};
        }
        int sa = left_sign(work, a);
        Rational m = mid(a, b);
        int s = work.sign_at(m);
        if (s == 0) return {base, m, m};  // the root itself is rational
        if (s == sa) a = m;
        else b = m;
    }
    throw std::runtime_error("isolate_root_near: certification failed");
}

}  // namespace

AlgebraicReal isolate_root_near(const IPoly& p, const Rational& target) {
    if (p.deg() < 1) throw std::domain_error("isolate_root_near: nonconstant polynomial required");
    IPoly base = p.primitive();
    if (gcd_ipoly(base, base.derivative()).deg() != 0)
        throw std::domain_error("isolate_root_near: polynomial must be squarefree");
    if (base.sign_at(target) == 0) return {base, target, target};

    const Rational wlo = target - Rational(1), whi = target + Rational(1);
    IPoly work = base;
    std::vector<Rational> exact;  // rational roots of base found in [wlo, whi]
    for (const Rational& ept : {wlo, whi})
        if (work.sign_at(ept) == 0) {
            exact.push_back(ept);
            work = work.deflate_root(ept);
        }

    // Every probe that lands on a root restarts the search with that root
    // deflated, so each pass below runs with root-free probe sites. The
    // degree drops on every restart, which bounds the number of passes.
    for (int attempt = 0; attempt <= p.deg() + 1; ++attempt) {
        try {
            std::optional<Rational> exB, exA;
            for (const Rational& e : exact) {
                if (e < target && (!exB || e > *exB)) exB = e;
                if (e > target && (!exA || e < *exA)) exA = e;
            }

            std::optional<std::array<Rational, 2>> ivB, ivA;
            if (work.deg() >= 1) {
                SturmChain sc(work);
                int c1 = sc.count_open(wlo, target);
                int c2 = sc.count_open(target, whi);
                if (c1 > 0) ivB = rightmost(work, sc, wlo, target, c1);
                if (c2 > 0) ivA = leftmost(work, sc, target, whi, c2);
            }

            std::optional<SideWinner> below, above;
            if (ivB && exB) below = reconcile_side(work, *exB, *ivB, true);
            else if (ivB) below = SideWinner{false, {}, (*ivB)[0], (*ivB)[1]};
            else if (exB) below = SideWinner{true, *exB, {}, {}};
            if (ivA && exA) above = reconcile_side(work, *exA, *ivA, false);
            else if (ivA) above = SideWinner{false, {}, (*ivA)[0], (*ivA)[1]};
            else if (exA) above = SideWinner{true, *exA, {}, {}};

            if (!below && !above)
                throw std::domain_error("isolate_root_near: no real root within distance 1");
            if (below && !above)
                return below->isExact ? AlgebraicReal{base, below->e, below->e}
                                      : finalize_interval(base, work, exact, below->a, below->b);
            if (above && !below)
                return above->isExact ? AlgebraicReal{base, above->e, above->e}
                                      : finalize_interval(base, work, exact, above->a, above->b);

            if (below->isExact && above->isExact) {
                Rational db = target - below->e, da = above->e - target;
                if (db == da)
                    throw std::domain_error("isolate_root_near: two roots equidistant from target");
                const Rational& e = db < da ? below->e : above->e;
                return {base, e, e};
            }
            if (below->isExact != above->isExact) {
                // Mirror the exact root across target; one probe places the
                // interval's root relative to it. A probe hitting the mirror
                // exactly restarts, after which the tie (if any) is between
                // two exact roots and is caught above.
                bool exactBelow = below->isExact;
                const Rational& e = exactBelow ? below->e : above->e;
                SideWinner& iv = exactBelow ? *above : *below;
                Rational mirror = Rational(2) * target - e;
                while (mirror > iv.a && mirror < iv.b) exclude_point(work, iv.a, iv.b, mirror);
                bool intervalWins = exactBelow ? mirror >= iv.b : mirror <= iv.a;
                if (intervalWins) return finalize_interval(base, work, exact, iv.a, iv.b);
                return {base, e, e};
            }

            // Interval on both sides. An exact tie means the two roots mirror
            // each other across target, i.e. gcd(work(x), work(2t - x)) has a
            // root in each isolating interval; anything else is a race that
            // bisection settles in finitely many steps.
            Rational &a1 = below->a, &b1 = below->b, &a2 = above->a, &b2 = above->b;
            IPoly refl = compose_linear(work, Rational(-1), Rational(2) * target);
            IPoly g = gcd_ipoly(work, refl);
            if (g.deg() >= 1) {
                SturmChain sg(g);
                if (sg.count_open(a1, b1) >= 1 && sg.count_open(a2, b2) >= 1)
                    throw std::domain_error("isolate_root_near: two roots equidistant from target");
            }
            for (int guard = 0; guard < 100000; ++guard) {
                if (target - a1 <= a2 - target)
                    return finalize_interval(base, work, exact, a1, b1);
                if (b2 - target <= target - b1)
                    return finalize_interval(base, work, exact, a2, b2);
                halve(work, a1, b1);
                halve(work, a2, b2);
            }
            throw std::runtime_error("isolate_root_near: nearest-root race failed to settle");
        } catch (const RootHit& h) {
            exact.push_back(h.r);
            work = work.deflate_root(h.r);
        }
    }
    throw std::runtime_error("isolate_root_near: restart overrun");
}

AlgebraicReal isolate_root_near(const QPoly& p, const Rational& target, const std::string& var) {
    return isolate_root_near(IPoly::from_mpoly(p, var), target);
}

namespace {

// Largest integer <= the single root of w in (lo, hi), or the root itself
// when it is an integer (second member true). slo is sign(w(lo)).
std::pair<Integer, bool> floor_or_root(const IPoly& w, const Rational& lo, const Rational& hi,
                                       int slo) {
    // -1: n below the root, +1: above, 0: n is the root.
    auto classify = [&](const Integer& n) -> int {
        Rational rn{n};
        if (rn <= lo) return -1;
        if (rn >= hi) return +1;
        int s = w.sign_at(rn);
        if (s == 0) return 0;
        return s == slo ? -1 : +1;
    };
    Integer a = lo.floor(), b = hi.floor();  // floor of the root is in [a, b]
    int cb = classify(b);
    if (cb == 0) return {b, true};
    if (cb < 0) return {b, false};
    // classify(a) == -1 since a <= lo; bisect the sign boundary. An integer
    // root never slips through: it stays strictly inside (a, b) until
    // b - a == 2 forces the midpoint onto it.
    while (Integer(b - a) > 1) {
        Integer m = Integer((a + b) / 2);
        int cm = classify(m);
        if (cm == 0) return {m, true};
        if (cm < 0) a = m;
        else b = m;
    }
    return {a, false};
}

}  // namespace

CFExpansion cf_algebraic(const AlgebraicReal& r, std::size_t k) {
    if (r.degenerate()) return cf_rational(r.lo, k);
    IPoly work = r.poly.primitive();
    if (work.deg() < 1) throw std::domain_error("cf_algebraic: nonconstant polynomial required");
    Rational lo = r.lo, hi = r.hi;
    if (SturmChain(work).count_open(lo, hi) != 1)
        throw std::domain_error("cf_algebraic: interval is not a certified isolation");
    int slo = work.sign_at(lo), shi = work.sign_at(hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::domain_error("cf_algebraic: interval is not a certified isolation");

    CFExpansion e;
    while (e.quotients.size() < k) {
        auto [a, isRoot] = floor_or_root(work, lo, hi, slo);
        if (!e.quotients.empty() && a < 1)
            throw std::runtime_error("cf_algebraic: partial quotient below 1");
        e.quotients.push_back(a);
        if (isRoot) {
            e.terminated = true;
            break;
        }
        if (e.quotients.size() >= k) break;

        // Need lo strictly above a before inverting; walk a midpoint down
        // into the root-free zone (a, root).
        Rational ra{a};
        if (lo <= ra) {
            int guard = 0;
            while (true) {
                if (++guard > 100000)
                    throw std::runtime_error("cf_algebraic: floor separation failed");
                Rational m = mid(ra, hi);
                int s = work.sign_at(m);
                if (s == slo) {
                    lo = m;
                    break;
                }
                if (s == 0) {
                    // m is the root; (a, m) is root-free, so its midpoint
                    // sits strictly between the floor and the root.
                    lo = mid(ra, m);
                    if (work.sign_at(lo) != slo)
                        throw std::runtime_error("cf_algebraic: floor separation failed");
                    break;
                }
                hi = m;
            }
        }

        // Mobius step x = a + 1/y: the tail root lands in the inverted image
        // of the bracket.
        Rational nlo = (hi - ra).inverse(), nhi = (lo - ra).inverse();
        work = work.mobius(a);
        lo = nlo;
        hi = nhi;
        slo = work.sign_at(lo);
        shi = work.sign_at(hi);
        if (slo == 0 || shi == 0 || slo == shi)
            throw std::runtime_error("cf_algebraic: bracket invariant lost");
    }
    return e;
}

}  // namespace nicomach
