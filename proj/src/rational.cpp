#include "rational.hpp"

#include <algorithm>

#include "error.hpp"

namespace mwplet {

Rational parse_rational(const std::string& text) {
    if (text.empty()) fail(Err::Parse, "empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            fail(Err::Parse, "bad character in rational literal: " + text);
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) fail(Err::Parse, "unparsable rational: " + text);
    if (q.get_den() == 0) fail(Err::Parse, "zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string rational_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_perfect_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt_floor(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (!is_perfect_square(q.get_num()) || !is_perfect_square(q.get_den())) return std::nullopt;
    return Rational(isqrt_floor(q.get_num()), isqrt_floor(q.get_den()));
}

void split_square_part(const Integer& n, Integer& square_part, Integer& squarefree_part) {
    if (n == 0) {
        square_part = 1;
        squarefree_part = 0;
        return;
    }
    Integer m = abs(n);
    square_part = 1;
    squarefree_part = (n < 0) ? -1 : 1;
    for (Integer p = 2; p * p <= m; p += (p == 2) ? 1 : 2) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_part *= p;
        if (e % 2) squarefree_part *= p;
    }
    squarefree_part *= m; // residual factor is prime, exponent one
}

std::vector<Integer> positive_divisors(const Integer& n) {
    Integer m = abs(n);
    if (m == 0) fail(Err::Domain, "divisors of zero requested");
    std::vector<std::pair<Integer, int>> fact;
    const long trial_bound = 1000000;
    for (Integer p = 2; p * p <= m && p <= trial_bound; p += (p == 2) ? 1 : 2) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        fact.emplace_back(p, e);
    }
    if (m > 1) {
        if (m > trial_bound && !(mpz_probab_prime_p(m.get_mpz_t(), 30) > 0))
            fail(Err::UnsupportedPlace, "integer too hard to factor for root search: " + m.get_str());
        fact.emplace_back(m, 1);
    }
    std::vector<Integer> divs{1};
    for (const auto& [p, e] : fact) {
        size_t base = divs.size();
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
        if (divs.size() > 100000) fail(Err::UnsupportedPlace, "too many divisors in root search");
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace mwplet
