#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tracedyn/grassmann.hpp"

namespace tracedyn {

/// Grassmann parity tag for a matrix degree of freedom. Bosonic matrices hold
/// even-grade entries, fermionic matrices odd-grade entries; General is the
/// closure of the other two under addition (mixed-grade entries show up in
/// boosted coordinates and charge sums).
enum class Grading { Bosonic, Fermionic, General };

Grading product_grading(Grading a, Grading b);
Grading sum_grading(Grading a, Grading b);

/// Square matrix with GrassmannNumber entries. All entries share one
/// generator count; pure-complex matrices are the zero-generator (or grade-0)
/// special case.
class OperatorMatrix {
  public:
    OperatorMatrix() = default;
    OperatorMatrix(int dim, int num_generators, Grading grading = Grading::Bosonic);

    static OperatorMatrix zeros(int dim, int num_generators, Grading grading = Grading::Bosonic);
    static OperatorMatrix identity(int dim, int num_generators);
    /// Row-major complex entries, embedded at grade 0.
    static OperatorMatrix from_complex(int dim, const std::vector<Complex> &entries,
                                       int num_generators = 0,
                                       Grading grading = Grading::Bosonic);
    static OperatorMatrix scalar_multiple_of_identity(int dim, int num_generators, Complex value);

    int dim() const { return dim_; }
    int num_generators() const { return num_generators_; }
    Grading grading() const { return grading_; }

    const GrassmannNumber &at(int row, int col) const;
    GrassmannNumber &at(int row, int col);
    const GrassmannNumber &operator()(int row, int col) const { return at(row, col); }
    GrassmannNumber &operator()(int row, int col) { return at(row, col); }

    /// Checks the entries against the grading tag; throws on violation.
    void validate_grading() const;

    OperatorMatrix &operator+=(const OperatorMatrix &rhs);
    OperatorMatrix &operator-=(const OperatorMatrix &rhs);
    OperatorMatrix &operator*=(Complex factor);
    OperatorMatrix &operator*=(double factor) { return *this *= Complex(factor, 0.0); }

    friend OperatorMatrix operator+(OperatorMatrix lhs, const OperatorMatrix &rhs) {
        lhs += rhs;
        return lhs;
    }
    friend OperatorMatrix operator-(OperatorMatrix lhs, const OperatorMatrix &rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend OperatorMatrix operator-(const OperatorMatrix &x);
    friend OperatorMatrix operator*(OperatorMatrix lhs, Complex f) {
        lhs *= f;
        return lhs;
    }
    friend OperatorMatrix operator*(Complex f, OperatorMatrix rhs) {
        rhs *= f;
        return rhs;
    }
    friend OperatorMatrix operator*(OperatorMatrix lhs, double f) {
        lhs *= f;
        return lhs;
    }
    friend OperatorMatrix operator*(double f, OperatorMatrix rhs) {
        rhs *= f;
        return rhs;
    }

    friend OperatorMatrix operator*(const OperatorMatrix &lhs, const OperatorMatrix &rhs);

    bool operator==(const OperatorMatrix &rhs) const;
    bool operator!=(const OperatorMatrix &rhs) const { return !(*this == rhs); }

    /// Entrywise left multiplication by a Grassmann scalar.
    OperatorMatrix scaled_left(const GrassmannNumber &s) const;

    /// Conjugate transpose: transpose plus Grassmann conjugation of entries.
    OperatorMatrix adjoint() const;

    GrassmannNumber trace() const;

    /// sqrt of the sum over entries and basis words of |coefficient|^2.
    double frobenius_norm() const;
    double max_abs_coeff() const;
    bool all_finite() const;

    bool is_hermitian(double tol) const;
    bool is_anti_hermitian(double tol) const;

    std::string to_string() const;

  private:
    void check_index(int row, int col) const;

    int dim_ = 0;
    int num_generators_ = 0;
    Grading grading_ = Grading::Bosonic;
    std::vector<GrassmannNumber> entries_;
};

OperatorMatrix matmul(const OperatorMatrix &a, const OperatorMatrix &b);
OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b);
OperatorMatrix anticommutator(const OperatorMatrix &a, const OperatorMatrix &b);
GrassmannNumber trace(const OperatorMatrix &m);
OperatorMatrix adjoint(const OperatorMatrix &m);

/// Largest |coefficient| of the entrywise difference.
double max_entry_distance(const OperatorMatrix &a, const OperatorMatrix &b);

} // namespace tracedyn
