#include "primat/primality.hpp"

#include <algorithm>
#include <array>

namespace primat {

namespace {

// Deterministic witness bound for the first 12 prime bases (Sorenson & Webster).
const Int kDeterministicBound("3317044064679887385961981");

constexpr std::array<unsigned, 40> kWitnesses = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};

// One Miller-Rabin round; n odd, n > 3, d * 2^s = n - 1.
bool witness_passes(const Int& n, const Int& d, unsigned long s, unsigned base) {
    Int a(base);
    if (a >= n) a %= n;
    if (a == 0) return true;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Int nm1 = n - 1;
    if (x == 1 || x == nm1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = (x * x) % n;
        if (x == nm1) return true;
    }
    return false;
}

Int pollard_rho(const Int& n) {
    // Brent's cycle variant; c is bumped until a proper factor appears.
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        Int q = 1;
        unsigned long checks = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? Int(x - y) : Int(y - x);
            if (diff == 0) break;
            q = (q * diff) % n;
            if (++checks % 64 == 0) {
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                if (d > 1) break;
            }
        }
        if (d == 1) {
            mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        if (d > 1 && d < n) return d;
    }
}

void factor_rec(const Int& n, std::vector<Int>& out) {
    if (n == 1) return;
    if (is_rational_prime(n)) {
        out.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(Int(n / d), out);
}

}  // namespace

PrimalityResult classify_prime(const Int& n) {
    Int m = abs(n);
    if (m < 2) return {false, Certainty::definite};
    if (m == 2 || m == 3) return {true, Certainty::definite};
    if (mpz_even_p(m.get_mpz_t())) return {false, Certainty::definite};
    for (unsigned p : kWitnesses) {
        if (m == p) return {true, Certainty::definite};
        if (mpz_divisible_ui_p(m.get_mpz_t(), p))
            return {false, Certainty::definite};
    }
    Int d = m - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    bool deterministic = m < kDeterministicBound;
    std::size_t rounds = deterministic ? 12 : kWitnesses.size();
    for (std::size_t i = 0; i < rounds; ++i)
        if (!witness_passes(m, d, s, kWitnesses[i]))
            return {false, Certainty::definite};
    return {true, deterministic ? Certainty::definite : Certainty::probable};
}

bool is_rational_prime(const Int& n) {
    return classify_prime(n).is_prime;
}

std::vector<Int> factor_integer(const Int& n) {
    if (n < 1)
        throw ValueError("factor_integer: argument must be >= 1");
    std::vector<Int> out;
    Int m = n;
    for (unsigned long p = 2; p < 100000ul && m > 1; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out.emplace_back(p);
            m /= p;
        }
    }
    factor_rec(m, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace primat
