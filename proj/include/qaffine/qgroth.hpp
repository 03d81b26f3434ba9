#pragma once

#include <map>
#include <string>
#include <vector>

#include "qaffine/laurent.hpp"

namespace qaffine::qgroth {

// Coefficient ring Z[t^{1/2}, t^{-1/2}]; keys count half-powers of t.
class THalf {
public:
    THalf() = default;
    THalf(Int c);                      // constant
    static THalf tpow(int half);       // t^{half/2}

    const std::map<int, Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    THalf operator+(const THalf& o) const;
    THalf operator-(const THalf& o) const;
    THalf operator*(const THalf& o) const;
    THalf operator-() const;
    bool operator==(const THalf& o) const { return c_ == o.c_; }

    THalf bar() const;                 // t^{1/2} -> t^{-1/2}
    THalf shift(int half) const;       // multiply by t^{half/2}
    Int eval_one() const;              // t^{1/2} -> 1
    bool negative_powers_only() const; // lies in t^{-1} Z[t^{-1}]
    std::string str() const;

    THalf& add(int half, const Int& v);

private:
    std::map<int, Int> c_;
};

// Normal-ordered words: ascending lists of generator shifts g_r = [V(q^r)]_t.
using Word = std::vector<int>;

class KtElement {
public:
    KtElement() = default;
    static KtElement unit();
    static KtElement generator(int r);

    const std::map<Word, THalf>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    KtElement& add_term(const Word& w, const THalf& c);
    KtElement operator+(const KtElement& o) const;
    KtElement operator-(const KtElement& o) const;
    KtElement scale(const THalf& c) const;
    bool operator==(const KtElement& o) const { return t_ == o.t_; }

    std::string str() const;

private:
    std::map<Word, THalf> t_;
};

// The commutation exponent of the quantum torus.
int npair(int r);

// Product with rewriting to normal order.
KtElement star(const KtElement& a, const KtElement& b);

// t-inverting anti-automorphism fixing the generators.
KtElement bar(const KtElement& x);

// Standard class of a dominant multiset: the star-product of generators in
// decreasing spectral order, normalized by the half-integer t-power that
// makes it bar-symmetric up to lower terms.
KtElement standard_class(const Word& shifts);

// The unique bar-invariant element equal to the standard class plus lower
// terms with coefficients in t^{-1} Z[t^{-1}].
KtElement canonical_class(const Word& shifts);

// Evaluation t^{1/2} -> 1 into the sl2 Grothendieck ring: words map to
// products of fundamental q-characters.
Laurent eval_t1(const KtElement& x);

}  // namespace qaffine::qgroth
