#pragma once

// Tensor-word polynomials: real linear combinations of w_A (x) w_B where each
// factor is a finite word over two involutive generators, written "u" and "v".
// The empty word is the identity.  This is the common input type of the whole
// library; nothing here knows about matrices yet.

#include <string>
#include <vector>

#include "biquad/errors.hpp"

namespace biquad {

// A word over the alphabet {u, v}; "" is the identity.
struct Word {
    std::string letters;

    Word() = default;
    Word(std::string l) : letters(std::move(l)) {}
    Word(const char* l) : letters(l) {}

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }

    // Throws InputError when a character outside {u, v} appears.
    void validate() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

struct Term {
    double coeff = 0.0;
    Word alice;
    Word bob;
};

struct BiasPolynomial {
    std::vector<Term> terms;
};

// Merges duplicate (alice, bob) pairs, drops exact-zero coefficients and
// orders terms lexicographically by (alice, bob).  Also validates letters and
// that every coefficient is finite.  The result is the unique normal form
// used for serialization and hashing-style comparisons.
BiasPolynomial canonicalize(const BiasPolynomial& p);

} // namespace biquad
