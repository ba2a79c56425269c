#include "tracedyn/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tracedyn {

namespace {

void check_generator_count(int k) {
    if (k < 0 || k > GrassmannNumber::max_generators)
        throw std::invalid_argument("GrassmannNumber: generator count must be in [0, " +
                                    std::to_string(GrassmannNumber::max_generators) + "], got " +
                                    std::to_string(k));
}

void check_same_algebra(const GrassmannNumber &a, const GrassmannNumber &b) {
    if (a.num_generators() != b.num_generators())
        throw std::invalid_argument("GrassmannNumber: mismatched generator counts " +
                                    std::to_string(a.num_generators()) + " vs " +
                                    std::to_string(b.num_generators()));
}

} // namespace

GrassmannNumber::GrassmannNumber(int num_generators) : num_generators_(num_generators) {
    check_generator_count(num_generators);
}

GrassmannNumber::GrassmannNumber(int num_generators, Complex scalar)
    : num_generators_(num_generators) {
    check_generator_count(num_generators);
    if (scalar != Complex(0.0, 0.0)) terms_.emplace_back(Word{0}, scalar);
}

GrassmannNumber GrassmannNumber::scalar(int num_generators, Complex value) {
    return GrassmannNumber(num_generators, value);
}

GrassmannNumber GrassmannNumber::generator(int num_generators, int index) {
    check_generator_count(num_generators);
    if (index < 0 || index >= num_generators)
        throw std::invalid_argument("GrassmannNumber::generator: index " + std::to_string(index) +
                                    " out of range for " + std::to_string(num_generators) +
                                    " generators");
    return basis_word(num_generators, Word{1} << index);
}

GrassmannNumber GrassmannNumber::basis_word(int num_generators, Word word, Complex coeff) {
    check_generator_count(num_generators);
    if (num_generators < max_generators && (word >> num_generators) != 0)
        throw std::invalid_argument("GrassmannNumber::basis_word: word uses generators beyond " +
                                    std::to_string(num_generators));
    GrassmannNumber out(num_generators);
    if (coeff != Complex(0.0, 0.0)) out.terms_.emplace_back(word, coeff);
    return out;
}

bool GrassmannNumber::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
}

Complex GrassmannNumber::scalar_part() const { return coefficient(0); }

Complex GrassmannNumber::coefficient(Word word) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                               [](const auto &term, Word w) { return term.first < w; });
    if (it != terms_.end() && it->first == word) return it->second;
    return Complex(0.0, 0.0);
}

Parity GrassmannNumber::parity() const {
    bool has_even = false;
    bool has_odd = false;
    for (const auto &[word, coeff] : terms_) {
        if (std::popcount(word) % 2 == 0)
            has_even = true;
        else
            has_odd = true;
    }
    if (has_even && has_odd) return Parity::Mixed;
    if (has_odd) return Parity::Odd;
    return Parity::Even; // zero counts as even
}

double GrassmannNumber::max_abs_coeff() const {
    double m = 0.0;
    for (const auto &[word, coeff] : terms_) m = std::max(m, std::abs(coeff));
    return m;
}

GrassmannNumber GrassmannNumber::pruned(double eps) const {
    GrassmannNumber out(num_generators_);
    for (const auto &[word, coeff] : terms_)
        if (std::abs(coeff) > eps) out.terms_.emplace_back(word, coeff);
    return out;
}

GrassmannNumber GrassmannNumber::conjugated() const {
    GrassmannNumber out(num_generators_);
    out.terms_.reserve(terms_.size());
    for (const auto &[word, coeff] : terms_) {
        const int m = std::popcount(word);
        const double sign = (m * (m - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        out.terms_.emplace_back(word, sign * std::conj(coeff));
    }
    return out;
}

void GrassmannNumber::insert_term(Word word, Complex coeff) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), word,
                               [](const auto &term, Word w) { return term.first < w; });
    if (it != terms_.end() && it->first == word) {
        it->second += coeff;
        if (it->second == Complex(0.0, 0.0)) terms_.erase(it);
    } else if (coeff != Complex(0.0, 0.0)) {
        terms_.emplace(it, word, coeff);
    }
}

GrassmannNumber &GrassmannNumber::operator+=(const GrassmannNumber &rhs) {
    check_same_algebra(*this, rhs);
    for (const auto &[word, coeff] : rhs.terms_) insert_term(word, coeff);
    return *this;
}

GrassmannNumber &GrassmannNumber::operator-=(const GrassmannNumber &rhs) {
    check_same_algebra(*this, rhs);
    for (const auto &[word, coeff] : rhs.terms_) insert_term(word, -coeff);
    return *this;
}

GrassmannNumber &GrassmannNumber::operator*=(Complex factor) {
    if (factor == Complex(0.0, 0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto &[word, coeff] : terms_) coeff *= factor;
    return *this;
}

GrassmannNumber operator-(const GrassmannNumber &x) {
    GrassmannNumber out = x;
    for (auto &[word, coeff] : out.terms_) coeff = -coeff;
    return out;
}

int GrassmannNumber::merge_sign(Word lhs, Word rhs) {
    int inversions = 0;
    Word b = rhs;
    while (b != 0) {
        const int j = std::countr_zero(b);
        inversions += std::popcount(lhs >> (j + 1));
        b &= b - 1;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

GrassmannNumber operator*(const GrassmannNumber &lhs, const GrassmannNumber &rhs) {
    check_same_algebra(lhs, rhs);
    GrassmannNumber out(lhs.num_generators());
    for (const auto &[wa, ca] : lhs.terms_) {
        for (const auto &[wb, cb] : rhs.terms_) {
            if ((wa & wb) != 0) continue; // repeated generator annihilates
            const double sign = GrassmannNumber::merge_sign(wa, wb);
            out.insert_term(wa | wb, sign * ca * cb);
        }
    }
    return out;
}

std::string GrassmannNumber::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[word, coeff] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff.real() << (coeff.imag() < 0 ? "" : "+") << coeff.imag() << "i)";
        Word w = word;
        while (w != 0) {
            const int j = std::countr_zero(w);
            os << "*t" << j;
            w &= w - 1;
        }
    }
    return os.str();
}

GrassmannNumber gmul(const GrassmannNumber &a, const GrassmannNumber &b) { return a * b; }

GrassmannNumber gconj(const GrassmannNumber &a) { return a.conjugated(); }

Parity grade(const GrassmannNumber &a) { return a.parity(); }

} // namespace tracedyn
