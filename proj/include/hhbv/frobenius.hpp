#pragma once

// Frobenius structure of a finite-dimensional algebra: a linear functional
// lambda whose associated bilinear form <x,y> = lambda(xy) is nonsingular, the
// Nakayama automorphism N defined by <a,x> = <x,N(a)>, its spectral
// classification, and the passage to a splitting extension when N is
// semisimple but its eigenvalues live outside the base field.
//
// Matrix conventions: operators act on coordinate columns, so N(b_j) is
// column j of the Nakayama matrix, and <b_i,b_j> = G_ij gives G^T = G N.

#include <optional>
#include <vector>

#include "hhbv/algebra.hpp"

namespace hhbv {

// the functional that is 1 on basis vectors lying in the right socle and 0 on
// the others; the standard Frobenius functional for the catalog algebras
inline std::vector<FieldElement> socle_trace_functional(const Algebra& A) {
  if (!A.quiver_born())
    throw hhbv_error("no-quiver",
                     "the socle-trace functional needs a path basis");
  Subspace soc = A.socle_right();
  std::vector<FieldElement> lam;
  for (int k = 0; k < A.dim(); ++k)
    lam.push_back(soc.contains(svec_unit(A.field(), k)) ? A.field()->one()
                                                        : A.field()->zero());
  return lam;
}

struct FrobeniusData {
  std::vector<FieldElement> functional;
  Matrix gram;
  bool frobenius = false;
  Subspace form_radical;  // kernel of the form; zero when frobenius

  // present exactly when the form is nonsingular
  std::optional<Matrix> nakayama;
  std::optional<OperatorClassification> cls;

  // permutation-with-scalars criterion (quiver-born algebras only):
  // basis closed under multiplication up to scalars, every basis vector has a
  // unique socle partner, and the characteristic is zero or exceeds the
  // number of arrows; together these force a semisimple Nakayama map
  bool criterion_applicable = false;
  bool basis_multiplicative = false;
  bool unique_socle_partner = false;
  bool characteristic_ok = false;
  bool criterion = false;
  // closed form N(b) = (lambda(b b*) / lambda(b* b**)) b** available whenever
  // the two structural conditions hold
  std::optional<Matrix> nakayama_from_partners;

  FrobeniusData(FieldRef F, int d)
      : gram(F, d, d), form_radical(F, d) {}
};

inline FieldElement apply_functional(const std::vector<FieldElement>& lam,
                                     const SVec& v, FieldRef F) {
  FieldElement acc = F->zero();
  for (const auto& [i, a] : v) acc += a * lam[static_cast<std::size_t>(i)];
  return acc;
}

inline FrobeniusData analyze_frobenius(const Algebra& A,
                                       const std::vector<FieldElement>& lam) {
  FieldRef F = A.field();
  const int d = A.dim();
  if (static_cast<int>(lam.size()) != d)
    throw hhbv_error("bad-argument", "functional has the wrong length");
  FrobeniusData out(F, d);
  out.functional = lam;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out.gram.set(i, j, apply_functional(lam, A.mul_basis(i, j), F));

  auto rki = rank_kernel_image(out.gram);
  out.frobenius = rki.rank == d;
  if (!out.frobenius) {
    out.form_radical = rki.kernel;
  } else {
    Matrix N = inverse(out.gram).multiply(out.gram.transpose());
    // N must satisfy the defining identity, fix the unit, and be an
    // automorphism; these certify the derivation rather than assuming it
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        FieldElement lhs = out.gram.get(i, j);
        FieldElement rhs = apply_functional(
            lam, A.mul(svec_unit(F, j), N.col(i)), F);
        if (lhs != rhs)
          throw hhbv_error("internal", "Nakayama defining identity fails");
      }
    if (N.apply(A.unit()) != A.unit())
      throw hhbv_error("internal", "Nakayama map does not fix the unit");
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        SVec lhs = N.apply(A.mul_basis(i, j));
        SVec rhs = A.mul(N.col(i), N.col(j));
        if (lhs != rhs)
          throw hhbv_error("internal", "Nakayama map is not multiplicative");
      }
    out.cls = classify_operator(N);
    out.nakayama = std::move(N);
  }

  if (A.quiver_born()) {
    out.criterion_applicable = true;
    out.basis_multiplicative = true;
    for (int i = 0; i < d && out.basis_multiplicative; ++i)
      for (int j = 0; j < d; ++j)
        if (A.mul_basis(i, j).size() > 1) {
          out.basis_multiplicative = false;
          break;
        }
    std::vector<int> partner(static_cast<std::size_t>(d), -1);
    out.unique_socle_partner = true;
    for (int i = 0; i < d; ++i) {
      int found = -1;
      for (int j = 0; j < d; ++j) {
        if (out.gram.get(i, j).is_zero()) continue;
        if (found >= 0) {
          found = -2;  // second partner
          break;
        }
        found = j;
      }
      if (found < 0) {
        out.unique_socle_partner = false;
        break;
      }
      partner[static_cast<std::size_t>(i)] = found;
    }
    std::int64_t p = F->characteristic();
    out.characteristic_ok =
        p == 0 || p > static_cast<std::int64_t>(A.arrow_names().size());
    out.criterion = out.basis_multiplicative && out.unique_socle_partner &&
                    out.characteristic_ok;
    if (out.basis_multiplicative && out.unique_socle_partner) {
      Matrix Np(F, d, d);
      for (int i = 0; i < d; ++i) {
        int ps = partner[static_cast<std::size_t>(i)];
        int pss = partner[static_cast<std::size_t>(ps)];
        FieldElement c =
            out.gram.get(i, ps) / out.gram.get(ps, pss);
        Np.set(pss, i, c);
      }
      out.nakayama_from_partners = std::move(Np);
    }
  }
  return out;
}

// joint check that the in-field spectrum is closed under inversion with
// matching multiplicities, that eigenspaces pair perfectly against the
// eigenspace of the inverse eigenvalue, and that all other pairs of
// eigenspaces are orthogonal under the form
struct SpectrumPairingReport {
  bool inverse_closed = true;
  bool pairings_perfect = true;
  bool off_pairs_orthogonal = true;
  bool ok() const {
    return inverse_closed && pairings_perfect && off_pairs_orthogonal;
  }
};

inline SpectrumPairingReport check_spectrum_pairing(const Algebra& A,
                                                    const FrobeniusData& fd) {
  if (!fd.frobenius)
    throw hhbv_error("bad-argument", "spectrum pairing needs a Frobenius form");
  FieldRef F = A.field();
  SpectrumPairingReport rep;
  const auto& spec = fd.cls->spectrum_in_field;
  auto find_mult = [&](const FieldElement& v) {
    for (const auto& [x, m] : spec)
      if (x == v) return m;
    return 0;
  };
  std::vector<Subspace> spaces;
  for (const auto& [mu, mult] : spec) {
    if (find_mult(mu.inverse()) != mult) rep.inverse_closed = false;
    spaces.push_back(eigenspace(*fd.nakayama, mu));
  }
  auto form = [&](const SVec& x, const SVec& y) {
    return apply_functional(fd.functional, A.mul(x, y), F);
  };
  for (std::size_t s = 0; s < spec.size(); ++s) {
    for (std::size_t t = 0; t < spec.size(); ++t) {
      bool dual = spec[t].first == spec[s].first.inverse();
      const auto& U = spaces[s].basis();
      const auto& W = spaces[t].basis();
      if (dual) {
        if (U.size() != W.size()) {
          rep.pairings_perfect = false;
          continue;
        }
        Matrix P(F, static_cast<int>(U.size()), static_cast<int>(W.size()));
        for (std::size_t i = 0; i < U.size(); ++i)
          for (std::size_t j = 0; j < W.size(); ++j)
            P.set(static_cast<int>(i), static_cast<int>(j), form(U[i], W[j]));
        if (matrix_rank(P) != static_cast<int>(U.size()))
          rep.pairings_perfect = false;
      } else {
        for (const auto& u : U)
          for (const auto& w : W)
            if (!form(u, w).is_zero()) rep.off_pairs_orthogonal = false;
      }
    }
  }
  return rep;
}

// Eigenbasis of A under a diagonalizable Nakayama map, with blocks in the
// canonical eigenvalue order, the unit leading its (weight-one) block, and a
// weight attached to every vector.  The vectors other than the unit are the
// reduced slots of the weight-graded bar complexes.
struct WeightedBasis {
  std::vector<SVec> vectors;
  std::vector<FieldElement> weights;
  int unit_index = -1;
};

inline WeightedBasis eigen_adapted_basis(const Algebra& A,
                                         const FrobeniusData& fd) {
  if (!fd.frobenius || !fd.cls->diagonalizable_in_field)
    throw hhbv_error("hypothesis-unmet",
                     "eigenbasis needs a diagonalizable Nakayama map");
  FieldRef F = A.field();
  WeightedBasis wb;
  int total = 0;
  for (const auto& [mu, mult] : fd.cls->spectrum_in_field) {
    Subspace E = eigenspace(*fd.nakayama, mu);
    if (E.dim() != mult)
      throw hhbv_error("internal", "eigenspace dimension mismatch");
    if (mu.is_one()) {
      wb.unit_index = static_cast<int>(wb.vectors.size());
      wb.vectors.push_back(A.unit());
      wb.weights.push_back(mu);
      Subspace one(F, A.dim(), {A.unit()});
      for (const auto& r : quotient_representatives(E, one)) {
        wb.vectors.push_back(r);
        wb.weights.push_back(mu);
      }
    } else {
      for (const auto& r : E.basis()) {
        wb.vectors.push_back(r);
        wb.weights.push_back(mu);
      }
    }
    total += mult;
  }
  if (total != A.dim() || static_cast<int>(wb.vectors.size()) != A.dim())
    throw hhbv_error("internal", "eigenbasis does not fill the algebra");
  if (wb.unit_index < 0)
    throw hhbv_error("internal", "unit weight missing from the spectrum");
  return wb;
}

// Smallest field over which a semisimple Nakayama map becomes diagonalizable,
// together with the algebra carried over.  Finite fields extend to the
// splitting field of the minimal polynomial; over the rationals this is
// reported as a typed error since no canonical finite extension exists here.
struct DiagonalizedOverExtension {
  Algebra algebra;
  FrobeniusData frob;
  FieldRef extension;
};

inline DiagonalizedOverExtension diagonalize_over_extension(
    const Algebra& A, const FrobeniusData& fd) {
  if (!fd.frobenius)
    throw hhbv_error("bad-argument", "no Frobenius form to extend");
  if (!fd.cls->semisimple)
    throw hhbv_error("hypothesis-unmet",
                     "Nakayama map is not semisimple; no extension helps");
  if (fd.cls->diagonalizable_in_field) {
    return {A, fd, A.field()};
  }
  if (A.field()->is_rationals())
    throw hhbv_error("extension-required",
                     "Nakayama eigenvalues lie outside Q; a field extension "
                     "is required");
  FieldRef E = splitting_extension(fd.cls->min_poly);
  Algebra B = A.base_change(E);
  auto emb = field_embedding(A.field(), E);
  std::vector<FieldElement> lam;
  for (const auto& c : fd.functional) lam.push_back(emb(c));
  FrobeniusData fdE = analyze_frobenius(B, lam);
  if (!fdE.frobenius || !fdE.cls->diagonalizable_in_field)
    throw hhbv_error("internal",
                     "extension did not diagonalize the Nakayama map");
  return {std::move(B), std::move(fdE), E};
}

}  // namespace hhbv
