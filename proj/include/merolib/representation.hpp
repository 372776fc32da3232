#pragma once

// Finite-dimensional quiver representations and the trace pairing: a
// Hochschild 0-chain evaluates on a representation as the trace of the
// walk's composed linear map, and on an idempotent as the vertex dimension.
//
// Composition convention, fixed once: a walk a1 a2 ... am is read left to
// right as a path, and matrices apply right to left, so its linear map is
// M(am) * ... * M(a1). Traces of closed walks are rotation invariant, so
// results on cycle classes do not depend on this choice.

#include "merolib/laurent.hpp"
#include "merolib/quiver.hpp"
#include "merolib/ring.hpp"

#include <string>
#include <vector>

namespace mero::quiverhh {

using exactalg::CoordinateRing;
using exactalg::LaurentPoly;

template <class E>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<E> a;  // row-major

  Matrix() = default;
  Matrix(int r, int c, const E& fill) : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {}

  E& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const E& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

template <class E>
Matrix<E> matmul(const Matrix<E>& x, const Matrix<E>& y, const E& zero) {
  if (x.cols != y.rows) throw exactalg::PreconditionError("matmul: shape mismatch");
  Matrix<E> r(x.rows, y.cols, zero);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const E& xv = x.at(i, k);
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = r.at(i, j) + xv * y.at(k, j);
    }
  return r;
}

template <class E>
E mat_trace(const Matrix<E>& m, const E& zero) {
  if (m.rows != m.cols) throw exactalg::PreconditionError("trace: non-square matrix");
  E t = zero;
  for (int i = 0; i < m.rows; ++i) t = t + m.at(i, i);
  return t;
}

// Determinant by cofactor expansion; the matrices in scope are tiny.
template <class E>
E mat_det(const Matrix<E>& m, const E& zero, const E& one) {
  if (m.rows != m.cols) throw exactalg::PreconditionError("det: non-square matrix");
  int n = m.rows;
  if (n == 0) return one;
  if (n == 1) return m.at(0, 0);
  E det = zero;
  bool negate = false;
  for (int j = 0; j < n; ++j, negate = !negate) {
    Matrix<E> minor(n - 1, n - 1, zero);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    E term = m.at(0, j) * mat_det(minor, zero, one);
    det = negate ? det - term : det + term;
  }
  return det;
}

template <class E>
struct Representation {
  Quiver quiver;
  std::vector<int> dims;           // per vertex, 1-based in dims[v-1]
  std::vector<Matrix<E>> mats;     // one per arrow, shape dim(tgt) x dim(src)

  void validate() const {
    quiver.validate();
    if (dims.size() != static_cast<size_t>(quiver.n))
      throw exactalg::PreconditionError("Representation: dims size mismatch");
    if (mats.size() != quiver.arrows.size())
      throw exactalg::PreconditionError("Representation: matrix count mismatch");
    for (size_t i = 0; i < mats.size(); ++i) {
      const Arrow& a = quiver.arrows[i];
      if (mats[i].rows != dims[static_cast<size_t>(a.tgt - 1)] ||
          mats[i].cols != dims[static_cast<size_t>(a.src - 1)])
        throw exactalg::PreconditionError("Representation: matrix shape mismatch at " + a.label);
    }
  }
};

namespace detail {

template <class E>
E walk_trace(const Representation<E>& rep, const std::vector<int>& walk, const E& zero,
             const E& one) {
  // Matrices compose right to left along the walk.
  int v0 = rep.quiver.arrows[static_cast<size_t>(walk.front())].src;
  int d0 = rep.dims[static_cast<size_t>(v0 - 1)];
  Matrix<E> acc(d0, d0, zero);
  for (int i = 0; i < d0; ++i) acc.at(i, i) = one;
  for (int a : walk) acc = matmul(rep.mats[static_cast<size_t>(a)], acc, zero);
  return mat_trace(acc, zero);
}

}  // namespace detail

// Trace of the composed map of one walk, without rotation canonicalization.
template <class E>
E walk_map_trace(const Representation<E>& rep, const std::vector<int>& walk, const E& zero,
                 const E& one) {
  if (walk.empty()) throw exactalg::PreconditionError("walk_map_trace: empty walk");
  return detail::walk_trace(rep, walk, zero, one);
}

// Trace pairing against a numeric representation. Idempotents pair to the
// vertex dimension, cycle classes to the trace of the composed map. Linear
// in the chain.
inline Scalar ho_trace(const TraceChain& chain, const Representation<Scalar>& rep) {
  rep.validate();
  bool fp = false;
  std::uint32_t q = 0;
  for (const auto& m : rep.mats)
    for (const auto& e : m.a)
      if (e.is_fp()) { fp = true; q = e.modulus(); }
  Scalar zero = fp ? Scalar::fp(0, q) : Scalar(0);
  Scalar one = fp ? Scalar::fp(1, q) : Scalar(1);

  Scalar acc = zero;
  for (const auto& [coeff, cls] : chain.terms) {
    Scalar c = fp ? coeff.to_fp(q) : coeff;
    if (cls.is_idempotent()) {
      if (cls.vertex < 1 || cls.vertex > rep.quiver.n)
        throw exactalg::PreconditionError("ho_trace: idempotent vertex out of range");
      Scalar dim = fp ? Scalar::fp(static_cast<std::uint64_t>(
                                       rep.dims[static_cast<size_t>(cls.vertex - 1)]),
                                   q)
                      : Scalar(rep.dims[static_cast<size_t>(cls.vertex - 1)]);
      acc = acc + c * dim;
    } else {
      acc = acc + c * detail::walk_trace(rep, cls.arrows, zero, one);
    }
  }
  return acc;
}

// Symbolic variant over a polynomial coefficient ring.
inline LaurentPoly ho_trace_symbolic(const TraceChain& chain,
                                     const Representation<LaurentPoly>& rep) {
  rep.validate();
  if (rep.mats.empty()) throw exactalg::PreconditionError("ho_trace: empty representation");
  const auto& vars = rep.mats.front().a.front().vars();
  LaurentPoly zero = LaurentPoly::zero(vars);
  LaurentPoly one = LaurentPoly::one(vars);

  LaurentPoly acc = zero;
  for (const auto& [coeff, cls] : chain.terms) {
    if (cls.is_idempotent()) {
      acc = acc + LaurentPoly::constant(
                      vars, coeff * Scalar(rep.dims[static_cast<size_t>(cls.vertex - 1)]));
    } else {
      acc = acc + detail::walk_trace(rep, cls.arrows, zero, one).scale(coeff);
    }
  }
  return acc;
}

// Variable name for one matrix entry of an arrow: bare label for 1x1 blocks,
// label_rc otherwise.
inline std::string entry_var_name(const std::string& label, int r, int c, bool scalar_block) {
  if (scalar_block) return label;
  return label + "_" + std::to_string(r) + std::to_string(c);
}

// Symbolic representation variety of a quiver at the given dimension vector:
// one variable per matrix entry, no relations. The invertible-locus chart
// adds each square arrow matrix's determinant as a distinguished unit.
inline CoordinateRing rep_moduli_chart(const Quiver& quiver, const std::vector<int>& dims,
                                       bool invertible_chart = true,
                                       std::uint64_t var_cap = 512) {
  quiver.validate();
  if (dims.size() != static_cast<size_t>(quiver.n))
    throw exactalg::PreconditionError("rep_moduli_chart: dims size mismatch");

  std::vector<std::string> vars;
  for (const auto& a : quiver.arrows) {
    int rows = dims[static_cast<size_t>(a.tgt - 1)];
    int cols = dims[static_cast<size_t>(a.src - 1)];
    bool scalar_block = rows == 1 && cols == 1;
    for (int r = 1; r <= rows; ++r)
      for (int c = 1; c <= cols; ++c)
        vars.push_back(entry_var_name(a.label, r, c, scalar_block));
  }
  if (vars.size() > var_cap)
    throw exactalg::CapExceededError("rep_moduli_chart: symbolic variable cap exceeded");

  CoordinateRing ring = CoordinateRing::polynomial_ring(vars);
  if (invertible_chart) {
    for (const auto& a : quiver.arrows) {
      int rows = dims[static_cast<size_t>(a.tgt - 1)];
      int cols = dims[static_cast<size_t>(a.src - 1)];
      if (rows != cols) continue;  // only square blocks have determinants
      bool scalar_block = rows == 1 && cols == 1;
      Matrix<LaurentPoly> m(rows, cols, LaurentPoly::zero(vars));
      for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
          m.at(r - 1, c - 1) =
              LaurentPoly::variable(vars, entry_var_name(a.label, r, c, scalar_block));
      ring.units.push_back(mat_det(m, LaurentPoly::zero(vars), LaurentPoly::one(vars)));
    }
  }
  return ring;
}

// The symbolic representation living on the chart above.
inline Representation<LaurentPoly> symbolic_representation(const Quiver& quiver,
                                                           const std::vector<int>& dims,
                                                           const CoordinateRing& chart) {
  Representation<LaurentPoly> rep;
  rep.quiver = quiver;
  rep.dims = dims;
  for (const auto& a : quiver.arrows) {
    int rows = dims[static_cast<size_t>(a.tgt - 1)];
    int cols = dims[static_cast<size_t>(a.src - 1)];
    bool scalar_block = rows == 1 && cols == 1;
    Matrix<LaurentPoly> m(rows, cols, LaurentPoly::zero(chart.vars));
    for (int r = 1; r <= rows; ++r)
      for (int c = 1; c <= cols; ++c)
        m.at(r - 1, c - 1) =
            LaurentPoly::variable(chart.vars, entry_var_name(a.label, r, c, scalar_block));
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

}  // namespace mero::quiverhh
