#include "subreg/unary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "subreg/ops.hpp"

namespace subreg {

Progression::Progression(std::uint64_t t, std::uint64_t p) : offset(t), period(p) {
    if (p == 0)
        throw std::invalid_argument("progression period must be >= 1");
}

SemilinearSet SemilinearSet::of(std::vector<std::uint64_t> finite,
                                std::vector<Progression> progs) {
    std::sort(progs.begin(), progs.end());
    progs.erase(std::unique(progs.begin(), progs.end()), progs.end());
    SemilinearSet s;
    s.progressions = std::move(progs);
    std::sort(finite.begin(), finite.end());
    finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
    for (std::uint64_t n : finite) {
        bool covered = std::any_of(s.progressions.begin(), s.progressions.end(),
                                   [&](const Progression& p) { return p.contains(n); });
        if (!covered)
            s.finite_part.push_back(n);
    }
    return s;
}

std::optional<std::uint64_t> SemilinearSet::smallest() const {
    std::optional<std::uint64_t> best;
    if (!finite_part.empty())
        best = finite_part.front();
    for (const Progression& p : progressions)
        if (!best || p.offset < *best)
            best = p.offset;
    return best;
}

bool semilinear_member(const SemilinearSet& s, std::uint64_t n) {
    if (std::binary_search(s.finite_part.begin(), s.finite_part.end(), n))
        return true;
    return std::any_of(s.progressions.begin(), s.progressions.end(),
                       [&](const Progression& p) { return p.contains(n); });
}

namespace {

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Intersection of two progressions by CRT: solvable iff the offsets agree
// modulo gcd of the periods; then the result has period lcm and offset equal
// to the least common element >= max of the offsets.
std::optional<Progression> intersect_progressions(const Progression& x, const Progression& y) {
    using I = __int128;
    const std::uint64_t g = gcd64(x.period, y.period);
    if (x.offset % g != y.offset % g)
        return std::nullopt;
    const std::uint64_t lcm = x.period / g * y.period;

    // Extended Euclid on (p1/g, p2/g) to combine the congruences.
    auto ext_gcd = [](I a, I b, I& s, I& t) {
        I old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
        while (b != 0) {
            I q = a / b;
            I tmp = a - q * b;
            a = b;
            b = tmp;
            tmp = old_s - q * cur_s;
            old_s = cur_s;
            cur_s = tmp;
            tmp = old_t - q * cur_t;
            old_t = cur_t;
            cur_t = tmp;
        }
        s = old_s;
        t = old_t;
        return a;
    };
    I s, t;
    ext_gcd(static_cast<I>(x.period) / g, static_cast<I>(y.period) / g, s, t);
    // x.offset + k * x.period == y.offset (mod y.period), with
    // k = (diff / g) * s mod (y.period / g).
    I diff = static_cast<I>(y.offset) - static_cast<I>(x.offset);
    I mod = static_cast<I>(y.period) / g;
    I k = ((diff / g) % mod * (s % mod)) % mod;
    if (k < 0)
        k += mod;
    I sol = static_cast<I>(x.offset) + k * static_cast<I>(x.period);

    I lo = std::max(x.offset, y.offset);
    I L = static_cast<I>(lcm);
    I rem = ((sol - lo) % L + L) % L;
    return Progression(static_cast<std::uint64_t>(lo + rem), lcm);
}

} // namespace

SemilinearSet semilinear_intersect(const SemilinearSet& x, const SemilinearSet& y) {
    std::vector<std::uint64_t> finite;
    for (std::uint64_t n : x.finite_part)
        if (semilinear_member(y, n))
            finite.push_back(n);
    for (std::uint64_t n : y.finite_part)
        if (semilinear_member(x, n))
            finite.push_back(n);
    std::vector<Progression> progs;
    for (const Progression& p : x.progressions)
        for (const Progression& q : y.progressions)
            if (auto r = intersect_progressions(p, q))
                progs.push_back(*r);
    return SemilinearSet::of(std::move(finite), std::move(progs));
}

TailCycle to_tail_cycle(const Automaton& a, std::size_t state_cap) {
    if (a.alphabet().size() != 1)
        throw std::invalid_argument("to_tail_cycle: alphabet must be unary");
    DfaView d = determinize(a, state_cap);

    std::vector<std::int64_t> first_seen(d.state_count(), -1);
    std::vector<bool> accept_at;
    State q = d.initial();
    std::int64_t pos = 0;
    while (first_seen[q] < 0) {
        first_seen[q] = pos++;
        accept_at.push_back(d.is_final(q));
        q = d.next(q, 0);
    }
    const std::size_t tail_len = static_cast<std::size_t>(first_seen[q]);

    TailCycle tc;
    tc.tail_accept.assign(accept_at.begin(), accept_at.begin() + tail_len);
    tc.cycle_accept.assign(accept_at.begin() + tail_len, accept_at.end());
    tc.tail_exceeds_quadratic_bound = tail_len > a.state_count() * a.state_count();
    return tc;
}

SemilinearSet unary_lengths(const Automaton& a, std::size_t state_cap) {
    TailCycle tc = to_tail_cycle(a, state_cap);
    std::vector<std::uint64_t> finite;
    for (std::size_t i = 0; i < tc.tail_accept.size(); ++i)
        if (tc.tail_accept[i])
            finite.push_back(i);
    std::vector<Progression> progs;
    const std::uint64_t period = tc.cycle_accept.size();
    for (std::size_t i = 0; i < tc.cycle_accept.size(); ++i)
        if (tc.cycle_accept[i])
            progs.emplace_back(tc.tail_accept.size() + i, period);
    return SemilinearSet::of(std::move(finite), std::move(progs));
}

std::optional<std::uint64_t> star_free_threshold(const Automaton& a, std::size_t state_cap) {
    TailCycle tc = to_tail_cycle(a, state_cap);
    const bool consensus = tc.cycle_accept.front();
    for (bool bit : tc.cycle_accept)
        if (bit != consensus)
            return std::nullopt; // mixed cycle: not star-free
    std::uint64_t n = tc.tail_accept.size();
    while (n > 0 && tc.tail_accept[n - 1] == consensus)
        --n;
    return n;
}

std::optional<std::uint64_t> progression_threshold(std::span<const Progression> progs,
                                                   std::span<const std::uint64_t> extras,
                                                   std::uint64_t probe) {
    if (progs.empty())
        return std::nullopt;
    std::uint64_t lcm = 1;
    for (const Progression& p : progs)
        lcm = lcm / gcd64(lcm, p.period) * p.period;

    // X is cofinite iff every residue class mod lcm is hit by a progression;
    // extras are finite and cannot sustain coverage.
    for (std::uint64_t r = 0; r < lcm; ++r) {
        bool hit = std::any_of(progs.begin(), progs.end(), [&](const Progression& p) {
            return r % p.period == p.offset % p.period;
        });
        if (!hit)
            return std::nullopt;
    }
    std::uint64_t t_max = 0;
    for (const Progression& p : progs)
        t_max = std::max(t_max, p.offset);

    // Verifying scan of X over one full period from max(T_max, probe).
    auto in_x = [&](std::uint64_t n) {
        if (std::find(extras.begin(), extras.end(), n) != extras.end())
            return true;
        return std::any_of(progs.begin(), progs.end(),
                           [&](const Progression& p) { return p.contains(n); });
    };
    const std::uint64_t from = std::max(t_max, probe);
    for (std::uint64_t n = from; n <= from + lcm; ++n)
        if (!in_x(n))
            return std::nullopt;
    return t_max;
}

std::optional<std::uint64_t> unary_ine(std::span<const Automaton> list, std::size_t state_cap) {
    if (list.empty())
        throw std::invalid_argument("unary_ine: empty instance");
    for (const Automaton& a : list)
        if (!(a.alphabet() == list.front().alphabet()))
            throw std::invalid_argument("unary_ine: automata use different letters");
    SemilinearSet acc = unary_lengths(list.front(), state_cap);
    for (std::size_t i = 1; i < list.size() && !acc.empty(); ++i)
        acc = semilinear_intersect(acc, unary_lengths(list[i], state_cap));
    return acc.smallest();
}

} // namespace subreg
