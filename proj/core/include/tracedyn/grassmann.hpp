#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tracedyn {

using Complex = std::complex<double>;

enum class Parity { Even, Odd, Mixed };

/// Element of the exterior algebra over a fixed number of anticommuting
/// generators theta_0 .. theta_{K-1}, with complex coefficients.
///
/// A basis word is stored as a bitmask: bit i set means theta_i is present,
/// and the canonical order of a word is ascending generator index. Terms are
/// kept sorted by mask with exact-zero coefficients removed, so equality is
/// plain structural comparison.
class GrassmannNumber {
  public:
    using Word = std::uint32_t;
    static constexpr int max_generators = 30;

    /// Zero element over zero generators.
    GrassmannNumber() = default;

    /// Zero element over `num_generators` generators.
    explicit GrassmannNumber(int num_generators);

    /// Grade-0 element: a complex scalar embedded in the algebra.
    GrassmannNumber(int num_generators, Complex scalar);

    static GrassmannNumber scalar(int num_generators, Complex value);
    static GrassmannNumber generator(int num_generators, int index);
    static GrassmannNumber basis_word(int num_generators, Word word,
                                      Complex coeff = Complex(1.0, 0.0));

    int num_generators() const { return num_generators_; }
    const std::vector<std::pair<Word, Complex>> &terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// True when only the empty word carries a coefficient (or zero).
    bool is_scalar() const;
    /// Coefficient of the empty word.
    Complex scalar_part() const;
    Complex coefficient(Word word) const;

    Parity parity() const;

    /// Largest coefficient magnitude over all stored words.
    double max_abs_coeff() const;

    /// Copy with every coefficient of magnitude <= eps removed.
    GrassmannNumber pruned(double eps) const;

    /// Reversal anti-automorphism combined with complex conjugation of the
    /// coefficients: a length-m word picks up (-1)^{m(m-1)/2}.
    GrassmannNumber conjugated() const;

    GrassmannNumber &operator+=(const GrassmannNumber &rhs);
    GrassmannNumber &operator-=(const GrassmannNumber &rhs);
    GrassmannNumber &operator*=(Complex factor);
    GrassmannNumber &operator*=(double factor) { return *this *= Complex(factor, 0.0); }

    friend GrassmannNumber operator+(GrassmannNumber lhs, const GrassmannNumber &rhs) {
        lhs += rhs;
        return lhs;
    }
    friend GrassmannNumber operator-(GrassmannNumber lhs, const GrassmannNumber &rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend GrassmannNumber operator-(const GrassmannNumber &x);
    friend GrassmannNumber operator*(GrassmannNumber lhs, Complex factor) {
        lhs *= factor;
        return lhs;
    }
    friend GrassmannNumber operator*(Complex factor, GrassmannNumber rhs) {
        rhs *= factor;
        return rhs;
    }
    friend GrassmannNumber operator*(GrassmannNumber lhs, double factor) {
        lhs *= factor;
        return lhs;
    }
    friend GrassmannNumber operator*(double factor, GrassmannNumber rhs) {
        rhs *= factor;
        return rhs;
    }

    /// Exterior product.
    friend GrassmannNumber operator*(const GrassmannNumber &lhs, const GrassmannNumber &rhs);

    bool operator==(const GrassmannNumber &rhs) const {
        return num_generators_ == rhs.num_generators_ && terms_ == rhs.terms_;
    }
    bool operator!=(const GrassmannNumber &rhs) const { return !(*this == rhs); }

    std::string to_string() const;

    /// Sign of reordering the concatenation of two disjoint ascending words
    /// into one ascending word: parity of the number of generator pairs
    /// (i in lhs, j in rhs) with i > j.
    static int merge_sign(Word lhs, Word rhs);

  private:
    void insert_term(Word word, Complex coeff);

    int num_generators_ = 0;
    std::vector<std::pair<Word, Complex>> terms_;
};

GrassmannNumber gmul(const GrassmannNumber &a, const GrassmannNumber &b);
GrassmannNumber gconj(const GrassmannNumber &a);
Parity grade(const GrassmannNumber &a);

} // namespace tracedyn
