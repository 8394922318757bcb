#pragma once

#include <utility>
#include <vector>

#include "fcon/approx.hpp"
#include "fcon/contraction.hpp"

namespace fcon {

/// Normalise pairwise-orthogonal exact columns; the only approximation is
/// the inverse square root of each exact squared norm.
inline ApproxMatrix normaliseOrthogonalColumns(const Matrix& b, unsigned prec) {
    const unsigned guard = prec + 16;
    ApproxMatrix out(b.rows(), b.cols(), prec);
    for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational nsq = frobeniusSq(column(b, j));
        const BigReal invNorm = sqrtPos(Rational(1) / nsq, guard);
        for (std::size_t i = 0; i < b.rows(); ++i)
            out(i, j) = round(scale(BigComplex::fromGaussian(b(i, j), guard), invNorm), prec + 8);
    }
    return out;
}

/// Orthonormal basis of ker A. The kernel subspace and its orthogonalisation
/// are exact; only the normalisation is approximate. Column count equals the
/// exact nullity.
inline ApproxMatrix daggerKernel(const Matrix& a, unsigned precision) {
    const Matrix basis = orthogonalColumns(kernelBasis(a));
    return normaliseOrthogonalColumns(basis, precision);
}

/// Dagger equaliser of f and g: the dagger kernel of f - g.
inline ApproxMatrix daggerEqualiser(const Matrix& f, const Matrix& g, unsigned precision) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw DimensionMismatch("daggerEqualiser expects parallel morphisms");
    return daggerKernel(f - g, precision);
}

/// Factorise A ~ m . e with m dagger monic and e of full row rank equal to
/// the exact rank of A.
struct EpiMonoFactorisation {
    ApproxMatrix mono; // isometry onto the column space of A
    ApproxMatrix epi;  // m^dag A
    std::size_t innerDim;
};

inline EpiMonoFactorisation epiDaggerMonoFactorise(const Matrix& a, unsigned precision) {
    const Matrix basis = orthogonalColumns(a);
    const ApproxMatrix m = normaliseOrthogonalColumns(basis, precision + 8);
    EpiMonoFactorisation out{m, dagger(m) * ApproxMatrix::fromExact(a, precision + 8),
                             basis.cols()};
    out.epi = out.epi.rounded(precision);
    return out;
}

/// Complete a pairwise-orthogonal family of exact isometries I -> X to a
/// unitary X -> I^{(+)n}. The given columns must be exactly orthonormal; the
/// completion is exact Gram-Schmidt against standard basis vectors followed
/// by approximate normalisation. The first rows of the result are the
/// daggers of the inputs, exactly.
inline ApproxMatrix orthonormalDecompose(const std::vector<Matrix>& system, std::size_t dim,
                                         unsigned precision) {
    Matrix cols(dim, 0);
    for (const Matrix& m : system) {
        if (m.cols() != 1 || m.rows() != dim)
            throw NotOrthonormalSystem("system elements must be columns into the object");
        if (frobeniusSq(m) != 1)
            throw NotOrthonormalSystem("system element is not an exact isometry");
        cols = hstack(cols, m);
    }
    for (std::size_t i = 0; i < system.size(); ++i)
        for (std::size_t j = i + 1; j < system.size(); ++j)
            if (!innerProduct(system[i], system[j]).isZero())
                throw NotOrthonormalSystem("system elements are not pairwise orthogonal");

    // exact orthogonal complement spanning directions
    Matrix candidates = hstack(cols, Matrix::identity(dim));
    const Matrix full = orthogonalColumns(candidates);
    if (full.cols() != dim) throw NotOrthonormalSystem("completion failed to span");
    // first columns of `full` are the system itself (already orthonormal)
    ApproxMatrix uDagger(dim, dim, precision);
    for (std::size_t j = 0; j < system.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i)
            uDagger(i, j) = BigComplex::fromGaussian(full(i, j), precision + 16);
    Matrix tail(dim, dim - system.size());
    for (std::size_t j = system.size(); j < dim; ++j)
        for (std::size_t i = 0; i < dim; ++i) tail(i, j - system.size()) = full(i, j);
    const ApproxMatrix tailNorm = normaliseOrthogonalColumns(tail, precision);
    for (std::size_t j = 0; j < tail.cols(); ++j)
        for (std::size_t i = 0; i < dim; ++i)
            uDagger(i, system.size() + j) = tailNorm(i, j);
    return dagger(uDagger);
}

/// Unitary dilation of a certified contraction: the block unitary
///   U = [ f, (I - f f^dag)^{1/2} ; (I - f^dag f)^{1/2}, -f^dag ],
/// with m the exact embedding of the domain and e the first block row of U,
/// so that e . m ~ f, m^dag m = I exactly, and e e^dag ~ I.
struct Dilation {
    ApproxMatrix unitary;
    ApproxMatrix mono; // i_1, exact entries
    ApproxMatrix epi;  // p_1 U
};

inline Dilation halmosDilation(const ConMorphism& f, unsigned precision) {
    const Matrix& a = f.matrix();
    const std::size_t x = a.cols(), y = a.rows();
    const unsigned guard = precision + 16;
    const Matrix defectDomain = Matrix::identity(x) - dagger(a) * a;   // (I - f^dag f)
    const Matrix defectCodomain = Matrix::identity(y) - a * dagger(a); // (I - f f^dag)
    const ApproxMatrix df = matrixSqrtPSD(defectDomain, guard);
    const ApproxMatrix dft = matrixSqrtPSD(defectCodomain, guard);
    const ApproxMatrix af = ApproxMatrix::fromExact(a, guard);

    ApproxMatrix u(y + x, x + y, precision);
    for (std::size_t i = 0; i < y; ++i) {
        for (std::size_t j = 0; j < x; ++j) u(i, j) = af(i, j);
        for (std::size_t j = 0; j < y; ++j) u(i, x + j) = dft(i, j);
    }
    const ApproxMatrix negAdj = dagger(af);
    for (std::size_t i = 0; i < x; ++i) {
        for (std::size_t j = 0; j < x; ++j) u(y + i, j) = df(i, j);
        for (std::size_t j = 0; j < y; ++j) u(y + i, x + j) = -negAdj(i, j);
    }

    Dilation out;
    out.unitary = u.rounded(precision);
    out.mono = ApproxMatrix::fromExact(inj1(x, y), precision);
    ApproxMatrix e(y, x + y, precision);
    for (std::size_t i = 0; i < y; ++i)
        for (std::size_t j = 0; j < x + y; ++j) e(i, j) = out.unitary(i, j);
    out.epi = e;
    return out;
}

} // namespace fcon
