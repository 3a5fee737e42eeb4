#include "biquad/word.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace biquad {

void Word::validate() const {
    for (char c : letters) {
        if (c != 'u' && c != 'v') {
            throw InputError(std::string("word contains letter '") + c +
                             "'; only 'u' and 'v' are allowed");
        }
    }
}

BiasPolynomial canonicalize(const BiasPolynomial& p) {
    std::map<std::pair<std::string, std::string>, double> acc;
    for (const Term& t : p.terms) {
        t.alice.validate();
        t.bob.validate();
        if (!std::isfinite(t.coeff)) {
            throw InputError("non-finite coefficient in polynomial");
        }
        acc[{t.alice.letters, t.bob.letters}] += t.coeff;
    }
    BiasPolynomial out;
    out.terms.reserve(acc.size());
    for (const auto& [key, coeff] : acc) {
        if (coeff == 0.0) continue;
        out.terms.push_back(Term{coeff, Word(key.first), Word(key.second)});
    }
    return out;
}

} // namespace biquad
