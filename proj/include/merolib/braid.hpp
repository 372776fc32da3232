#pragma once

// Positive braid words, Demazure products, symbolic braid matrices and
// braid-variety presentations with finite-field point counts.
//
// Convention, the single one supported: the letter sigma_i with variable z
// contributes B_i(z), the identity except for the 2x2 block [[z,1],[1,0]]
// at rows/columns (i, i+1), and the word maps to the ordered product
// B_{i_1}(z_1) ... B_{i_l}(z_l). The variety presentation puts this product
// in the opposite-Borel position relative to the antidiagonal flip: entries
// strictly above the antidiagonal are relations (= 0) and the antidiagonal
// entries are recorded as distinguished units. Since each det B_i(z) = -1,
// those entries are automatically invertible on the cut locus. Point counts
// over F_q are the presentation-independent fingerprint used to validate
// this choice.

#include "merolib/laurent.hpp"
#include "merolib/representation.hpp"
#include "merolib/ring.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace mero::braidvar {

using exactalg::CoordinateRing;
using exactalg::LaurentPoly;
using exactalg::PreconditionError;
using exactalg::Scalar;
using quiverhh::Matrix;

inline constexpr const char* kConventionTag =
    "B(z)=[[z,1],[1,0]];rel:above-antidiag=0;units:antidiag";

struct BraidWord {
  int strands = 2;
  std::vector<int> letters;  // generator indices in [1, strands-1]

  void validate() const {
    if (strands < 2) throw PreconditionError("BraidWord: need at least 2 strands");
    for (int l : letters)
      if (l < 1 || l >= strands)
        throw PreconditionError("BraidWord: letter out of range: " + std::to_string(l));
  }

  size_t length() const { return letters.size(); }
};

struct Permutation {
  std::vector<int> img;  // 1-based images, img[i-1] = w(i)

  static Permutation identity(int n) {
    Permutation p;
    p.img.resize(static_cast<size_t>(n));
    std::iota(p.img.begin(), p.img.end(), 1);
    return p;
  }

  static Permutation longest(int n) {
    Permutation p;
    for (int i = n; i >= 1; --i) p.img.push_back(i);
    return p;
  }

  int n() const { return static_cast<int>(img.size()); }

  void validate() const {
    std::vector<bool> seen(img.size(), false);
    for (int v : img) {
      if (v < 1 || v > n() || seen[static_cast<size_t>(v - 1)])
        throw PreconditionError("Permutation: not a bijection");
      seen[static_cast<size_t>(v - 1)] = true;
    }
  }

  long length() const {  // inversion count
    long inv = 0;
    for (size_t i = 0; i < img.size(); ++i)
      for (size_t j = i + 1; j < img.size(); ++j)
        if (img[i] > img[j]) ++inv;
    return inv;
  }

  bool is_longest() const { return length() == static_cast<long>(img.size()) *
                                                  (static_cast<long>(img.size()) - 1) / 2; }

  bool operator==(const Permutation& o) const { return img == o.img; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
};

// Monoid fold w * s_i: apply the letter only when it increases length.
inline Permutation demazure(const BraidWord& word) {
  word.validate();
  Permutation w = Permutation::identity(word.strands);
  for (int l : word.letters) {
    size_t i = static_cast<size_t>(l - 1);
    if (w.img[i] < w.img[i + 1]) std::swap(w.img[i], w.img[i + 1]);
  }
  return w;
}

// Some reduced word for a permutation (bubble sort by descents).
inline std::vector<int> reduced_word(Permutation w) {
  std::vector<int> out;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.img.size(); ++i) {
      if (w.img[i] > w.img[i + 1]) {
        std::swap(w.img[i], w.img[i + 1]);
        out.push_back(static_cast<int>(i + 1));
        changed = true;
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

inline std::vector<std::string> braid_vars(size_t count, size_t offset = 0,
                                           const std::string& prefix = "z") {
  std::vector<std::string> vars;
  vars.reserve(count);
  for (size_t i = 1; i <= count; ++i) vars.push_back(prefix + std::to_string(offset + i));
  return vars;
}

inline Matrix<LaurentPoly> braid_letter_matrix(int strands, int letter, const LaurentPoly& z) {
  const auto& vars = z.vars();
  Matrix<LaurentPoly> m(strands, strands, LaurentPoly::zero(vars));
  for (int i = 0; i < strands; ++i) m.at(i, i) = LaurentPoly::one(vars);
  int i = letter - 1;
  m.at(i, i) = z;
  m.at(i, i + 1) = LaurentPoly::one(vars);
  m.at(i + 1, i) = LaurentPoly::one(vars);
  m.at(i + 1, i + 1) = LaurentPoly::zero(vars);
  return m;
}

// Ordered product over fresh variables z_{offset+1} .. z_{offset+l}; pass
// `vars` to embed into a larger variable list (used for split tests).
inline Matrix<LaurentPoly> braid_matrix_product(const BraidWord& word,
                                                std::vector<std::string> vars = {},
                                                size_t offset = 0) {
  word.validate();
  if (vars.empty()) vars = braid_vars(word.length());
  Matrix<LaurentPoly> acc(word.strands, word.strands, LaurentPoly::zero(vars));
  for (int i = 0; i < word.strands; ++i) acc.at(i, i) = LaurentPoly::one(vars);
  for (size_t k = 0; k < word.letters.size(); ++k) {
    LaurentPoly z = LaurentPoly::variable(vars, "z" + std::to_string(offset + k + 1));
    acc = quiverhh::matmul(acc, braid_letter_matrix(word.strands, word.letters[k], z),
                           LaurentPoly::zero(vars));
  }
  return acc;
}

struct VarietyPresentation {
  int strands = 0;
  std::vector<int> word;
  CoordinateRing ring;
  std::string convention = kConventionTag;
};

// Presentation of the braid variety attached to a word with full Demazure
// product. Relations: product entries strictly above the antidiagonal.
// Units: the antidiagonal entries. Emitted verbatim; consistency is judged
// by point counts.
inline VarietyPresentation variety_presentation(const BraidWord& word) {
  word.validate();
  if (demazure(word) != Permutation::longest(word.strands))
    throw PreconditionError(
        "variety_presentation: Demazure product is not the longest element");

  Matrix<LaurentPoly> m = braid_matrix_product(word);
  const auto& vars = m.a.front().vars();

  VarietyPresentation pres;
  pres.strands = word.strands;
  pres.word = word.letters;
  pres.ring = CoordinateRing::polynomial_ring(vars);
  const int n = word.strands;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (r + c < n + 1) pres.ring.relations.push_back(m.at(r - 1, c - 1));
      if (r + c == n + 1) pres.ring.units.push_back(m.at(r - 1, c - 1));
    }
  }
  return pres;
}

inline std::uint64_t count_points(const VarietyPresentation& pres, std::uint32_t q,
                                  std::uint64_t cap = Caps().enumeration) {
  return exactalg::count_points(pres.ring, q, cap);
}

// Fit counts against (q-1)^a * (q^2-q+1), the arithmetic shape expected for
// 2-strand words whose associated link is Hopf-type. Returns the measured
// exponent, or nullopt when no single integer fits all samples.
inline std::optional<int> fit_torus_exponent(const std::vector<std::uint32_t>& qs,
                                             const std::vector<std::uint64_t>& counts) {
  std::optional<int> a;
  for (size_t i = 0; i < qs.size(); ++i) {
    std::uint64_t q = qs[i];
    std::uint64_t core = q * q - q + 1;
    if (counts[i] == 0 || counts[i] % core != 0) return std::nullopt;
    std::uint64_t ratio = counts[i] / core;
    if (q == 2) {
      // (q-1)^a == 1 for every a: the count must equal the core exactly.
      if (ratio != 1) return std::nullopt;
      continue;
    }
    int e = 0;
    std::uint64_t r = ratio;
    while (r % (q - 1) == 0) { r /= (q - 1); ++e; }
    if (r != 1) return std::nullopt;
    if (a && *a != e) return std::nullopt;
    a = e;
  }
  return a ? a : std::optional<int>(0);
}

}  // namespace mero::braidvar
