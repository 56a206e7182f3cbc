#include "congruence.hpp"

#include "barrett.hpp"
#include "modint.hpp"

#include <array>
#include <tuple>
#include <cctype>
#include <vector>

namespace quatring::congruence {

namespace {

using detail::Barrett;
using modint::normalize;

constexpr uint32_t kMaxLiftLevels = 62;
constexpr uint64_t kModulusCeiling = uint64_t(1) << 31;  // p^{j+1} must stay below this
constexpr uint64_t kBaseEnumerationCap = uint64_t(1) << 24;
constexpr uint64_t kBaseMemoMaxPrime = 13;

// Everything that depends only on (p, s) for the chained odd lift: moduli
// per level, Barrett constants, exact-division helpers, and the inverse
// table mod p. Cached per thread keyed by (p, s) since the oracle sweeps
// call the solver millions of times per group.
struct LiftChain {
    uint64_t p = 0;
    uint32_t s = 0;
    uint64_t pk = 0;
    std::array<uint64_t, kMaxLiftLevels + 1> power{};   // p^j
    std::array<Barrett, kMaxLiftLevels + 1> level{};    // mod p^{j+1}, index j
    std::array<uint64_t, kMaxLiftLevels + 1> inv64{};   // p^j inverse mod 2^64
    std::array<uint64_t, kMaxLiftLevels + 1> divlim{};  // divisibility limit for p^j
    Barrett modp;
    std::vector<uint64_t> inv_mod_p;  // filled when p <= 64

    void build(uint64_t prime, uint32_t exponent)
    {
        p = 0;  // stay invalid until fully built
        unsigned __int128 guard = 1;
        for (uint32_t j = 0; j < exponent; ++j) {
            guard *= prime;
            if (guard >= kModulusCeiling)
                throw std::domain_error("congruence: p^s exceeds the supported ceiling");
        }
        power[0] = 1;
        for (uint32_t j = 1; j <= exponent; ++j) power[j] = power[j - 1] * prime;
        pk = power[exponent];
        for (uint32_t j = 1; j < exponent; ++j) level[j] = Barrett(power[j + 1]);
        for (uint32_t j = 1; j < exponent; ++j) {
            inv64[j] = detail::inv64_odd(power[j]);
            divlim[j] = ~uint64_t(0) / power[j];
        }
        if (prime == 2) {
            // exact division by 2^j is a shift; the odd-inverse trick does
            // not apply
            for (uint32_t j = 1; j < exponent; ++j) inv64[j] = 0;
        }
        modp = Barrett(prime);
        inv_mod_p.clear();
        if (prime <= 64) {
            inv_mod_p.assign(prime, 0);
            if (prime > 1) inv_mod_p[1] = 1;
            for (uint64_t i = 2; i < prime; ++i)
                inv_mod_p[i] = prime - (prime / i) * inv_mod_p[prime % i] % prime;
        }
        p = prime;
        s = exponent;
    }

    uint64_t inv_p(uint64_t v) const
    {
        if (!inv_mod_p.empty()) return inv_mod_p[v];
        return modint::inverse_mod(v, p);
    }
};

const LiftChain& chain_for(uint64_t p, uint32_t s)
{
    thread_local LiftChain cache;
    if (cache.p != p || cache.s != s) cache.build(p, s);
    return cache;
}

// Coefficients of a quadratic, canonical mod the chain's p^s.
struct ReducedQuadratic {
    uint64_t xx, yy, xy, x, y, c;

    static ReducedQuadratic from(const BivariateQuadratic& f, uint64_t m)
    {
        return {normalize(f.xx, m), normalize(f.yy, m), normalize(f.xy, m),
                normalize(f.x, m),  normalize(f.y, m),  normalize(f.c, m)};
    }
};

// The two partial derivatives mod p, precomputed once per solve:
// df/dx = 2*xx*X + xy*Y + x and df/dy = 2*yy*Y + xy*X + y.
struct PartialCoeffs {
    uint64_t a2, b2, xyp, xp, yp;

    static PartialCoeffs from(const ReducedQuadratic& f, const Barrett& modp)
    {
        return {modp.reduce(2 * modp.reduce(f.xx)), modp.reduce(2 * modp.reduce(f.yy)),
                modp.reduce(f.xy), modp.reduce(f.x), modp.reduce(f.y)};
    }
};

// f(X, Y) mod p^{j+1}. Small moduli accumulate lazily with a single final
// reduction; larger ones reduce per term.
template <bool Diagonal>
uint64_t eval_quadratic(const ReducedQuadratic& f, const Barrett& mod, uint64_t X, uint64_t Y)
{
    if (mod.m < (uint64_t(1) << 15)) {
        uint64_t acc = f.xx * (X * X) + f.yy * (Y * Y) + f.c;
        if constexpr (!Diagonal) acc += f.xy * (X * Y) + f.x * X + f.y * Y;
        return mod.reduce(acc);
    }
    uint64_t acc = mod.reduce(f.xx * mod.reduce(X * X));
    acc += mod.reduce(f.yy * mod.reduce(Y * Y));
    if constexpr (!Diagonal) {
        acc = mod.reduce(acc + mod.reduce(f.xy * mod.reduce(X * Y)));
        acc += mod.reduce(f.x * X);
        acc += mod.reduce(f.y * Y);
    }
    return mod.reduce(acc + f.c);
}

// One Hensel level: point (X, Y) with f == 0 (mod p^j); rewrites (X, Y)
// to a root mod p^{j+1}. The offsets solve t1*df/dx + t2*df/dy ==
// -f(X,Y)/p^j (mod p) with the second offset fixed to zero whenever
// df/dx is a unit. In the chained solver (Chained = true) the point is
// known to satisfy X, Y < p^j, so the updates stay below p^{j+1} without
// a reduction; the standalone entry point only guarantees canonicity mod
// p^{j+1} and reduces.
template <bool Diagonal, bool Chained = Diagonal>
void lift_level(const LiftChain& ch, const ReducedQuadratic& f, const PartialCoeffs& pc,
                uint32_t j, uint64_t& X, uint64_t& Y)
{
    const Barrett& mod = ch.level[j];
    uint64_t fv = eval_quadratic<Diagonal>(f, mod, X, Y);

    uint64_t quot;  // fv / p^j < p
    if (ch.p == 2) {
        if ((fv & (ch.power[j] - 1)) != 0)
            throw std::domain_error("lift_step: point is not a root modulo p^j");
        quot = fv >> j;
    } else {
        quot = fv * ch.inv64[j];
        if (quot > ch.divlim[j])
            throw std::domain_error("lift_step: point is not a root modulo p^j");
    }
    uint64_t rhs = quot == 0 ? 0 : ch.p - quot;

    uint64_t Xp = ch.modp.reduce(X);
    uint64_t fx = pc.a2 * Xp;
    if constexpr (!Diagonal) fx += pc.xyp * ch.modp.reduce(Y) + pc.xp;
    fx = ch.modp.reduce(fx);
    if (fx != 0) {
        uint64_t t = ch.modp.reduce(rhs * ch.inv_p(fx));
        uint64_t shifted = X + t * ch.power[j];
        X = Chained ? shifted : mod.reduce(shifted);
        return;
    }
    uint64_t fy = pc.b2 * ch.modp.reduce(Y);
    if constexpr (!Diagonal) fy += pc.xyp * Xp + pc.yp;
    fy = ch.modp.reduce(fy);
    if (fy != 0) {
        uint64_t t = ch.modp.reduce(rhs * ch.inv_p(fy));
        uint64_t shifted = Y + t * ch.power[j];
        Y = Chained ? shifted : mod.reduce(shifted);
        return;
    }
    throw NonSmoothPointError("lift_step: both partial derivatives vanish mod p");
}

void require_prime(uint64_t p, const char* who)
{
    if (!modint::is_prime(p)) throw std::domain_error(std::string(who) + ": p must be prime");
}

// Smallest y realizing each value of b*y^2 mod p, then scan x upward: the
// first hit is the x-major smallest solution. Shared by the memo builder
// and the direct large-p path.
std::pair<uint64_t, uint64_t> base_mitm(uint64_t an, uint64_t bn, uint64_t cn, uint64_t p,
                                        const Barrett& bp)
{
    if (p <= 64) {
        std::array<int8_t, 64> min_y;
        min_y.fill(-1);
        for (uint64_t y = 0; y < p; ++y) {
            uint64_t t = bp.reduce(bn * bp.reduce(y * y));
            if (min_y[t] < 0) min_y[t] = static_cast<int8_t>(y);
        }
        for (uint64_t x = 0; x < p; ++x) {
            uint64_t need = bp.reduce(cn + p - bp.reduce(an * bp.reduce(x * x)));
            if (min_y[need] >= 0) return {x, static_cast<uint64_t>(min_y[need])};
        }
    } else {
        std::vector<int64_t> min_y(p, -1);
        for (uint64_t y = 0; y < p; ++y) {
            uint64_t t = bp.reduce(bn * bp.reduce(y * y));
            if (min_y[t] < 0) min_y[t] = static_cast<int64_t>(y);
        }
        for (uint64_t x = 0; x < p; ++x) {
            uint64_t need = bp.reduce(cn + p - bp.reduce(an * bp.reduce(x * x)));
            if (min_y[need] >= 0) return {x, static_cast<uint64_t>(min_y[need])};
        }
    }
    throw std::logic_error("solve_binary_form_mod_p: no solution found (impossible)");
}

// All base solutions for one prime, indexed by (a, b, c) mod p and built
// eagerly with base_mitm. One slot per thread keyed by p; the sweeps
// stay within a prime for long stretches.
struct BaseTable {
    uint64_t p = 0;
    Barrett bp;
    std::vector<uint16_t> packed;  // x * 64 + y + 1; 0 marks invalid entries

    void build(uint64_t prime)
    {
        p = prime;
        bp = Barrett(prime);
        packed.assign(p * p * p, 0);
        for (uint64_t a = 1; a < p; ++a)
            for (uint64_t b = 1; b < p; ++b)
                for (uint64_t c = 0; c < p; ++c) {
                    auto [x, y] = base_mitm(a, b, c, p, bp);
                    packed[(a * p + b) * p + c] = static_cast<uint16_t>(x * 64 + y + 1);
                }
    }
};

const BaseTable& base_table_for(uint64_t p)
{
    thread_local BaseTable cache;
    if (cache.p != p) cache.build(p);
    return cache;
}

}  // namespace

std::pair<uint64_t, uint64_t> lift_step(const BivariateQuadratic& f, uint64_t p, uint32_t j,
                                        std::pair<int64_t, int64_t> point)
{
    require_prime(p, "lift_step");
    if (j < 1 || j >= kMaxLiftLevels) throw std::domain_error("lift_step: exponent out of range");

    // chain_for validates that p^{j+1} stays below the product-safety ceiling
    const LiftChain& ch = chain_for(p, j + 1);
    ReducedQuadratic rq = ReducedQuadratic::from(f, ch.pk);
    PartialCoeffs pc = PartialCoeffs::from(rq, ch.modp);
    uint64_t X = normalize(point.first, ch.pk);
    uint64_t Y = normalize(point.second, ch.pk);
    lift_level<false, false>(ch, rq, pc, j, X, Y);
    return {X, Y};
}

std::pair<uint64_t, uint64_t> solve_binary_form_mod_p(int64_t a, int64_t b, int64_t c, uint64_t p)
{
    require_prime(p, "solve_binary_form_mod_p");
    if (p == 2) throw std::domain_error("solve_binary_form_mod_p: p must be odd");
    if (p > kBaseEnumerationCap)
        throw std::domain_error("solve_binary_form_mod_p: prime exceeds enumeration cap");

    if (p <= kBaseMemoMaxPrime) {
        const BaseTable& table = base_table_for(p);
        uint64_t an = a >= 0 ? table.bp.reduce(static_cast<uint64_t>(a)) : normalize(a, p);
        uint64_t bn = b >= 0 ? table.bp.reduce(static_cast<uint64_t>(b)) : normalize(b, p);
        uint64_t cn = c >= 0 ? table.bp.reduce(static_cast<uint64_t>(c)) : normalize(c, p);
        if (an == 0 || bn == 0)
            throw std::domain_error("solve_binary_form_mod_p: a and b must be coprime to p");
        uint16_t hit = table.packed[(an * p + bn) * p + cn];
        return {hit == 0 ? 0 : (hit - 1) / 64, hit == 0 ? 0 : (hit - 1) % 64};
    }

    Barrett bp(p);
    uint64_t an = normalize(a, p);
    uint64_t bn = normalize(b, p);
    uint64_t cn = normalize(c, p);
    if (an == 0 || bn == 0)
        throw std::domain_error("solve_binary_form_mod_p: a and b must be coprime to p");
    return base_mitm(an, bn, cn, p, bp);
}

std::pair<uint64_t, uint64_t> solve_binary_form_odd(int64_t a, int64_t b, int64_t c, uint64_t p,
                                                    uint32_t s)
{
    require_prime(p, "solve_binary_form_odd");
    if (p == 2) throw std::domain_error("solve_binary_form_odd: p must be odd");
    if (s < 1) throw std::domain_error("solve_binary_form_odd: s must be at least 1");

    const LiftChain& ch = chain_for(p, s);
    uint64_t cn_p = c >= 0 ? ch.modp.reduce(static_cast<uint64_t>(c)) : normalize(c, p);
    if (cn_p == 0)
        throw std::domain_error("solve_binary_form_odd: c must be coprime to p");

    // Base solution mod p; for memoized primes read the table directly
    // (the same lookup solve_binary_form_mod_p performs).
    uint64_t X, Y;
    if (p <= kBaseMemoMaxPrime) {
        const BaseTable& table = base_table_for(p);
        uint64_t an_p = a >= 0 ? ch.modp.reduce(static_cast<uint64_t>(a)) : normalize(a, p);
        uint64_t bn_p = b >= 0 ? ch.modp.reduce(static_cast<uint64_t>(b)) : normalize(b, p);
        if (an_p == 0 || bn_p == 0)
            throw std::domain_error("solve_binary_form_odd: a and b must be coprime to p");
        uint16_t hit = table.packed[(an_p * p + bn_p) * p + cn_p];
        X = static_cast<uint64_t>(hit - 1) / 64;
        Y = static_cast<uint64_t>(hit - 1) % 64;
    } else {
        std::tie(X, Y) = solve_binary_form_mod_p(a, b, c, p);
    }
    if (s == 1) return {X, Y};

    uint64_t an = normalize(a, ch.pk);
    uint64_t bn = normalize(b, ch.pk);
    uint64_t cn = normalize(c, ch.pk);
    uint64_t rc = cn == 0 ? 0 : ch.pk - cn;

    // Each lift step adds a multiple of p^j >= p to the active coordinate,
    // so both coordinates are constant mod p across the whole chain: the
    // partial derivative that selects the branch, its inverse mod p, and
    // the inactive coordinate's contribution to f can all be hoisted.
    // This loop performs exactly the lift_step recurrence, one level at a
    // time, with those invariants factored out.
    if (ch.pk < (uint64_t(1) << 20)) {
        uint64_t a2 = ch.modp.reduce(2 * ch.modp.reduce(an));
        uint64_t fx0 = ch.modp.reduce(a2 * ch.modp.reduce(X));
        bool x_branch = fx0 != 0;
        uint64_t partial = fx0;
        if (!x_branch) {
            uint64_t b2 = ch.modp.reduce(2 * ch.modp.reduce(bn));
            partial = ch.modp.reduce(b2 * ch.modp.reduce(Y));
            if (partial == 0)
                throw NonSmoothPointError("lift_step: both partial derivatives vanish mod p");
        }
        uint64_t inv_partial = ch.inv_p(partial);
        uint64_t active = x_branch ? X : Y;
        uint64_t active_coeff = x_branch ? an : bn;
        uint64_t rest = (x_branch ? bn * (Y * Y) : an * (X * X)) + rc;
        for (uint32_t j = 1; j < s; ++j) {
            uint64_t fv = ch.level[j].reduce(active_coeff * (active * active) + rest);
            uint64_t quot = fv * ch.inv64[j];
            if (quot > ch.divlim[j])
                throw std::domain_error("lift_step: point is not a root modulo p^j");
            uint64_t rhs = quot == 0 ? 0 : ch.p - quot;
            uint64_t t = ch.modp.reduce(rhs * inv_partial);
            active += t * ch.power[j];
        }
        return x_branch ? std::pair<uint64_t, uint64_t>{active, Y}
                        : std::pair<uint64_t, uint64_t>{X, active};
    }

    ReducedQuadratic rq{an, bn, 0, 0, 0, rc};
    PartialCoeffs pc = PartialCoeffs::from(rq, ch.modp);
    for (uint32_t j = 1; j < s; ++j) lift_level<true>(ch, rq, pc, j, X, Y);
    return {X, Y};
}

uint64_t solve_scalar_square_2adic(int64_t a, int64_t b, uint32_t s)
{
    if (s < 1 || s > 62) throw std::domain_error("solve_scalar_square_2adic: s out of range");
    if (normalize(a, 2) != 1 || normalize(b, 2) != 1)
        throw std::domain_error("solve_scalar_square_2adic: a and b must be odd");
    if (normalize(a, 8) != normalize(b, 8))
        throw NoSolutionError("solve_scalar_square_2adic: requires a == b (mod 8)");

    uint64_t n = uint64_t(1) << s;
    uint64_t an = normalize(a, n);
    uint64_t bn = normalize(b, n);
    if (s <= 2) {
        for (uint64_t x = 0; x < n; ++x)
            if (an * x * x % n == bn) return x;
        throw std::logic_error("solve_scalar_square_2adic: unreachable");
    }

    // x^2 == u (mod 2^s) with u = b/a == 1 (mod 8); lift a root one bit at
    // a time, then take the smallest of the four roots {±r, 2^{s-1} ± r}.
    uint64_t u = modint::mul_mod(bn, modint::inverse_mod(an, n), n);
    uint64_t r = 1;
    for (uint32_t t = 3; t < s; ++t) {
        if (((r * r - u) >> t) & 1) r += uint64_t(1) << (t - 1);
    }
    uint64_t half = n >> 1;
    uint64_t best = r % n;
    for (uint64_t cand : {n - r, (r + half) % n, (n - r + half) % n}) {
        if (cand < best) best = cand;
    }
    return best;
}

std::pair<uint64_t, uint64_t> solve_sum_two_squares_2adic(int64_t c, uint32_t s)
{
    if (s < 1 || s > 24) throw std::domain_error("solve_sum_two_squares_2adic: s out of range");
    if (normalize(c, 2) != 1) throw std::domain_error("solve_sum_two_squares_2adic: c must be odd");
    uint64_t n = uint64_t(1) << s;
    uint64_t cn = normalize(c, n);

    uint32_t seed = s < 3 ? s : 3;
    uint64_t seed_mod = uint64_t(1) << seed;
    std::vector<std::pair<uint32_t, uint32_t>> frontier;
    for (uint64_t x = 0; x < seed_mod; ++x)
        for (uint64_t y = 0; y < seed_mod; ++y)
            if (((x * x + y * y - cn) & (seed_mod - 1)) == 0)
                frontier.emplace_back(static_cast<uint32_t>(x), static_cast<uint32_t>(y));

    // Every root mod 2^{t+1} reduces to a root mod 2^t, so extending each
    // coordinate by {0, 2^t} keeps the frontier complete. A fully
    // constructive alternative exists (shifting an odd coordinate x by
    // 2^{t-1} * x^{-1} bumps the represented value by exactly 2^t), but
    // breadth-first lifting is simpler at these sizes.
    std::vector<std::pair<uint32_t, uint32_t>> next;
    for (uint32_t t = seed; t < s; ++t) {
        uint64_t step = uint64_t(1) << t;
        uint64_t mask = (step << 1) - 1;
        next.clear();
        next.reserve(frontier.size() * 2);
        for (auto [x, y] : frontier) {
            for (uint64_t dx = 0; dx <= step; dx += step) {
                for (uint64_t dy = 0; dy <= step; dy += step) {
                    uint64_t X = x + dx, Y = y + dy;
                    if (((X * X + Y * Y - cn) & mask) == 0)
                        next.emplace_back(static_cast<uint32_t>(X), static_cast<uint32_t>(Y));
                }
            }
        }
        frontier.swap(next);
        if (frontier.empty()) break;
    }

    if (frontier.empty())
        throw NoSolutionError("solve_sum_two_squares_2adic: no solution mod 2^" + std::to_string(s));
    auto best = frontier.front();
    for (auto pr : frontier)
        if (pr < best) best = pr;
    return {best.first, best.second};
}

uint64_t inverse_of_five(uint32_t s)
{
    if (s < 1 || s > 62) throw std::domain_error("inverse_of_five: s out of range");
    return modint::inverse_mod(5, uint64_t(1) << s);
}

namespace {

struct FormParser {
    const std::string& text;
    size_t pos = 0;

    explicit FormParser(const std::string& t) : text(t) {}

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char ch)
    {
        skip_ws();
        if (pos < text.size() && text[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }

    int64_t parse_integer()
    {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw std::invalid_argument("form: expected integer");
        return std::stoll(text.substr(start, pos - start));
    }
};

}  // namespace

BinaryForm parse_binary_form(const std::string& text)
{
    size_t eq = text.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("form: missing '='");
    std::string lhs = text.substr(0, eq);
    std::string rhs = text.substr(eq + 1);

    BinaryForm form;
    FormParser right(rhs);
    form.c = right.parse_integer();
    right.skip_ws();
    if (right.pos != rhs.size()) throw std::invalid_argument("form: trailing input after constant");

    FormParser p(lhs);
    bool saw_x = false, saw_y = false;
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos == lhs.size()) break;
        int64_t sign = 1;
        if (p.eat('+')) {
            sign = 1;
        } else if (p.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("form: expected '+' or '-' between terms");
        }
        first = false;
        p.skip_ws();
        int64_t coeff = 1;
        if (p.pos < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[p.pos]))) {
            coeff = p.parse_integer();
            p.eat('*');
        }
        p.skip_ws();
        if (p.pos >= lhs.size()) throw std::invalid_argument("form: expected x^2 or y^2 term");
        char var = lhs[p.pos];
        if (var != 'x' && var != 'y') throw std::invalid_argument("form: expected x^2 or y^2 term");
        ++p.pos;
        bool caret = p.eat('^');
        p.skip_ws();
        if (!(caret && p.pos < lhs.size() && lhs[p.pos] == '2'))
            throw std::invalid_argument("form: variables must be squared (x^2, y^2)");
        ++p.pos;
        if (var == 'x') {
            if (saw_x) throw std::invalid_argument("form: duplicate x^2 term");
            saw_x = true;
            form.a = sign * coeff;
        } else {
            if (saw_y) throw std::invalid_argument("form: duplicate y^2 term");
            saw_y = true;
            form.b = sign * coeff;
        }
    }
    if (!saw_x && !saw_y) throw std::invalid_argument("form: no quadratic terms");
    return form;
}

PrimePower parse_prime_power(const std::string& text)
{
    size_t caret = text.find('^');
    PrimePower out;
    if (caret != std::string::npos) {
        FormParser base(text);
        int64_t p = base.parse_integer();
        base.skip_ws();
        if (base.pos != caret) throw std::invalid_argument("modulus: malformed p^s");
        std::string exp_text = text.substr(caret + 1);
        FormParser exp(exp_text);
        int64_t s = exp.parse_integer();
        exp.skip_ws();
        if (exp.pos != exp_text.size()) throw std::invalid_argument("modulus: trailing input");
        if (p < 2 || !modint::is_prime(static_cast<uint64_t>(p)))
            throw std::invalid_argument("modulus: base must be prime");
        if (s < 1 || s > 62) throw std::invalid_argument("modulus: exponent out of range");
        out.p = static_cast<uint64_t>(p);
        out.s = static_cast<uint32_t>(s);
        unsigned __int128 v = 1;
        for (uint32_t i = 0; i < out.s; ++i) {
            v *= out.p;
            if (v > (static_cast<unsigned __int128>(1) << 62))
                throw std::invalid_argument("modulus: p^s too large");
        }
        out.value = static_cast<uint64_t>(v);
        return out;
    }

    FormParser num(text);
    int64_t v = num.parse_integer();
    num.skip_ws();
    if (num.pos != text.size()) throw std::invalid_argument("modulus: trailing input");
    if (v < 2) throw std::invalid_argument("modulus: must be at least 2");
    modint::Modulus m = modint::factorize(static_cast<uint64_t>(v));
    if (m.factors.size() != 1) throw std::invalid_argument("modulus: must be a prime power");
    out.p = m.factors[0].first;
    out.s = m.factors[0].second;
    out.value = static_cast<uint64_t>(v);
    return out;
}

}  // namespace quatring::congruence
