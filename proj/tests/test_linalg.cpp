#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hhbv/field.hpp"
#include "hhbv/linalg.hpp"
#include "hhbv/polynomial.hpp"

using namespace hhbv;

namespace {

Matrix random_matrix(FieldRef F, int rows, int cols, std::mt19937& rng) {
  Matrix M(F, rows, cols);
  std::uniform_int_distribution<int> val(-4, 4), fill(0, 2);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      if (fill(rng) == 0) M.set(i, j, F->from_int(val(rng)));
  return M;
}

SVec random_vec(FieldRef F, int dim, std::mt19937& rng) {
  std::uniform_int_distribution<int> val(-4, 4);
  SVec v;
  for (int i = 0; i < dim; ++i) {
    FieldElement x = F->from_int(val(rng));
    if (!x.is_zero()) v.emplace_back(i, x);
  }
  return v;
}

Matrix from_rows(FieldRef F, const std::vector<std::vector<int>>& rows) {
  Matrix M(F, static_cast<int>(rows.size()),
           rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j]) M.set(static_cast<int>(i), static_cast<int>(j),
                            F->from_int(rows[i][j]));
  return M;
}

// evaluate p at the square matrix M
Matrix eval_at_matrix(const Polynomial& p, const Matrix& M) {
  FieldRef F = M.field();
  Matrix acc(F, M.rows(), M.cols());
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc.multiply(M);
    Matrix c = Matrix::identity(F, M.rows()).scaled(p[static_cast<std::size_t>(i)]);
    acc = acc + c;
  }
  return acc;
}

}  // namespace

TEST_CASE("sparse vector primitives") {
  FieldRef Q = Field::rationals();
  SVec a{{0, Q->from_int(1)}, {2, Q->from_int(3)}};
  SVec b{{1, Q->from_int(2)}, {2, Q->from_int(-3)}};
  SVec s = svec_add(a, b, Q);
  REQUIRE(s.size() == 2);  // index 2 cancelled
  CHECK(s[0].first == 0);
  CHECK(s[1].first == 1);
  CHECK(svec_get(s, 2, Q).is_zero());
  CHECK(svec_axpy(a, Q->zero(), b) == a);
  CHECK(svec_scale(a, Q->zero()).empty());
}

TEST_CASE("matrix transpose and product") {
  FieldRef F = Field::finite(7);
  std::mt19937 rng(42u);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix A = random_matrix(F, 5, 4, rng), B = random_matrix(F, 4, 6, rng);
    Matrix AB = A.multiply(B);
    CHECK(AB.transpose() == B.transpose().multiply(A.transpose()));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 6; ++j) {
        FieldElement s = F->zero();
        for (int k = 0; k < 4; ++k) s += A.get(i, k) * B.get(k, j);
        CHECK(AB.get(i, j) == s);
      }
  }
}

TEST_CASE("echelon reduce/insert bookkeeping identity") {
  // convention under test: reduce(v, &tail) returns rem with
  //   rem = v + sum_j tail[j] * generator_j
  std::mt19937 rng(7u);
  for (FieldRef F : {Field::rationals(), Field::finite(5)}) {
    for (int trial = 0; trial < 50; ++trial) {
      const int dim = 6;
      Echelon ech(F, dim);
      std::vector<SVec> gens;
      for (int g = 0; g < 4; ++g) {
        SVec v = random_vec(F, dim, rng);
        ech.insert(v, svec_unit(F, g));
        gens.push_back(v);
      }
      SVec probe = random_vec(F, dim, rng);
      SVec tail;
      SVec rem = ech.reduce(probe, &tail);
      SVec reconstructed = probe;
      for (const auto& [j, c] : tail)
        reconstructed = svec_axpy(reconstructed, c, gens[static_cast<std::size_t>(j)]);
      CHECK(reconstructed == rem);
      // rows themselves satisfy row = sum tail[j] * gen_j
      for (std::size_t r = 0; r < ech.rows().size(); ++r) {
        SVec acc;
        for (const auto& [j, c] : ech.tails()[r])
          acc = svec_axpy(acc, c, gens[static_cast<std::size_t>(j)]);
        CHECK(acc == ech.rows()[r]);
      }
    }
  }
}

TEST_CASE("subspace canonical form is insertion-order independent") {
  FieldRef Q = Field::rationals();
  std::mt19937 rng(99u);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SVec> gens;
    for (int g = 0; g < 5; ++g) gens.push_back(random_vec(Q, 6, rng));
    Subspace s1(Q, 6, gens);
    std::vector<SVec> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    // also rescale and mix generators; the subspace must not change
    if (shuffled.size() >= 2)
      shuffled[0] = svec_axpy(svec_scale(shuffled[0], Q->from_int(3)),
                              Q->from_int(-2), shuffled[1]);
    Subspace s2(Q, 6, shuffled);
    if (s1.dim() == s2.dim()) {
      CHECK(s1 == s2);
      CHECK(s1.basis() == s2.basis());  // canonical RREF rows coincide
    }
    for (const auto& g : gens) CHECK(s1.contains(g));
  }
}

TEST_CASE("rank, kernel, image on a known matrix") {
  FieldRef Q = Field::rationals();
  // rank 2; kernel spanned by (1,-2,1)
  Matrix M = from_rows(Q, {{1, 2, 3}, {2, 4, 6}, {1, 0, -1}});
  auto rki = rank_kernel_image(M);
  CHECK(rki.rank == 2);
  REQUIRE(rki.kernel.dim() == 1);
  SVec k{{0, Q->from_int(1)}, {1, Q->from_int(-2)}, {2, Q->from_int(1)}};
  CHECK(rki.kernel.contains(k));
  CHECK(rki.image.dim() == 2);
  for (int j = 0; j < 3; ++j) CHECK(rki.image.contains(M.col(j)));
}

TEST_CASE("rank-nullity and kernel correctness, randomized") {
  std::mt19937 rng(1234u);
  for (FieldRef F : {Field::rationals(), Field::finite(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Matrix M = random_matrix(F, 5, 7, rng);
      auto rki = rank_kernel_image(M);
      CHECK(rki.rank + rki.kernel.dim() == 7);
      CHECK(rki.image.dim() == rki.rank);
      for (const auto& k : rki.kernel.basis()) CHECK(M.apply(k).empty());
      CHECK(matrix_rank(M) == rki.rank);
      // transpose has the same rank
      CHECK(matrix_rank(M.transpose()) == rki.rank);
    }
  }
}

TEST_CASE("solver and inverse") {
  std::mt19937 rng(777u);
  FieldRef F = Field::finite(11);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix M = random_matrix(F, 5, 5, rng);
    Solver s(M);
    SVec b = random_vec(F, 5, rng);
    auto x = s.solve(b);
    if (x) {
      CHECK(M.apply(*x) == b);
    } else {
      // b outside the column space: rank must be deficient
      CHECK(s.rank() < 5);
    }
    if (s.invertible()) {
      Matrix inv = inverse(M);
      CHECK(M.multiply(inv) == Matrix::identity(F, 5));
      CHECK(inv.multiply(M) == Matrix::identity(F, 5));
    }
  }
  // singular matrix must throw on inverse
  Matrix S = from_rows(Field::rationals(), {{1, 2}, {2, 4}});
  CHECK_THROWS_AS(inverse(S), hhbv_error);
}

TEST_CASE("quotient representatives") {
  FieldRef Q = Field::rationals();
  SECTION("diagonal of the plane") {
    Subspace total(Q, 2, {svec_unit(Q, 0), svec_unit(Q, 1)});
    Subspace sub(Q, 2, {SVec{{0, Q->one()}, {1, Q->one()}}});
    auto reps = quotient_representatives(total, sub);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0] == svec_unit(Q, 0));  // greedy takes the first echelon row
  }
  SECTION("sub not inside total is rejected") {
    Subspace total(Q, 2, {svec_unit(Q, 0)});
    Subspace sub(Q, 2, {svec_unit(Q, 1)});
    CHECK_THROWS_AS(quotient_representatives(total, sub), hhbv_error);
  }
  SECTION("classes form a basis of the quotient, randomized") {
    std::mt19937 rng(3141u);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<SVec> tg, sg;
      for (int g = 0; g < 6; ++g) tg.push_back(random_vec(Q, 6, rng));
      Subspace total(Q, 6, tg);
      for (int g = 0; g < 2; ++g)
        sg.push_back(total.dim() ? total.basis()[static_cast<std::size_t>(g) %
                                                 total.basis().size()]
                                 : SVec{});
      Subspace sub(Q, 6, sg);
      auto reps = quotient_representatives(total, sub);
      CHECK(static_cast<int>(reps.size()) == total.dim() - sub.dim());
      Subspace span = sub;
      for (const auto& r : reps) {
        CHECK_FALSE(span.contains(r));  // each rep independent modulo the rest
        span.insert(r);
      }
      CHECK(span == total);
    }
  }
}

TEST_CASE("minimal and characteristic polynomials on known operators") {
  FieldRef Q = Field::rationals();
  SECTION("identity") {
    Matrix I = Matrix::identity(Q, 3);
    CHECK(minimal_polynomial(I) == Polynomial::linear_root(Q, Q->one()));
    Polynomial chi = char_polynomial(I);
    CHECK(chi.degree() == 3);
    CHECK(chi == Polynomial::linear_root(Q, Q->one()) *
                     Polynomial::linear_root(Q, Q->one()) *
                     Polynomial::linear_root(Q, Q->one()));
  }
  SECTION("nilpotent Jordan block") {
    Matrix N = from_rows(Q, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    Polynomial mp = minimal_polynomial(N);
    CHECK(mp == Polynomial::x(Q) * Polynomial::x(Q) * Polynomial::x(Q));
    CHECK(char_polynomial(N) == mp);
  }
  SECTION("companion matrix: min = char") {
    // companion of x^3 - 2x + 5
    Matrix C = from_rows(Q, {{0, 0, -5}, {1, 0, 2}, {0, 1, 0}});
    Polynomial f(Q, {Q->from_int(5), Q->from_int(-2), Q->zero(), Q->one()});
    CHECK(minimal_polynomial(C) == f);
    CHECK(char_polynomial(C) == f);
  }
  SECTION("diagonal with repetition") {
    Matrix D = from_rows(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
    Polynomial mp = minimal_polynomial(D);
    CHECK(mp == Polynomial::linear_root(Q, Q->one()) *
                    Polynomial::linear_root(Q, Q->from_int(2)));
    Polynomial chi = char_polynomial(D);
    CHECK((chi % mp).is_zero());
    CHECK(chi.degree() == 3);
  }
}

TEST_CASE("Cayley-Hamilton and min | char, randomized") {
  std::mt19937 rng(2718u);
  for (FieldRef F : {Field::rationals(), Field::finite(5)}) {
    for (int trial = 0; trial < 25; ++trial) {
      Matrix M = random_matrix(F, 5, 5, rng);
      Polynomial chi = char_polynomial(M);
      Polynomial mp = minimal_polynomial(M);
      CHECK(chi.degree() == 5);
      CHECK(chi.leading().is_one());
      CHECK((chi % mp).is_zero());
      CHECK(eval_at_matrix(chi, M).is_zero());
      CHECK(eval_at_matrix(mp, M).is_zero());
    }
  }
}

TEST_CASE("operator classification") {
  FieldRef Q = Field::rationals();
  SECTION("diagonalizable over Q") {
    auto c = classify_operator(from_rows(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    CHECK(c.semisimple);
    CHECK(c.diagonalizable_in_field);
    REQUIRE(c.spectrum_in_field.size() == 2);
    CHECK(c.spectrum_in_field[0].first == Q->one());
    CHECK(c.spectrum_in_field[0].second == 2);
    CHECK(c.spectrum_in_field[1].first == Q->from_int(2));
    CHECK(c.spectrum_in_field[1].second == 1);
  }
  SECTION("Jordan block is not semisimple") {
    auto c = classify_operator(from_rows(Q, {{1, 1}, {0, 1}}));
    CHECK_FALSE(c.semisimple);
    CHECK_FALSE(c.diagonalizable_in_field);
  }
  SECTION("rotation: semisimple but not diagonalizable over Q") {
    Matrix R = from_rows(Q, {{0, -1}, {1, 0}});
    auto c = classify_operator(R);
    CHECK(c.semisimple);  // min poly x^2+1 is squarefree
    CHECK_FALSE(c.diagonalizable_in_field);
    CHECK(c.spectrum_in_field.empty());
  }
  SECTION("same rotation splits over GF(5)") {
    FieldRef F5 = Field::finite(5);
    auto c = classify_operator(from_rows(F5, {{0, -1}, {1, 0}}));
    CHECK(c.semisimple);
    CHECK(c.diagonalizable_in_field);  // x^2+1 = (x-2)(x-3) over GF(5)
    CHECK(c.spectrum_in_field.size() == 2);
  }
  SECTION("rotation over GF(2) is a Jordan block in disguise") {
    FieldRef F2 = Field::finite(2);
    auto c = classify_operator(from_rows(F2, {{0, 1}, {1, 0}}));
    // min poly x^2+1 = (x+1)^2 in characteristic 2
    CHECK_FALSE(c.semisimple);
    CHECK_FALSE(c.diagonalizable_in_field);
  }
}

TEST_CASE("eigenspaces") {
  FieldRef F5 = Field::finite(5);
  Matrix M = from_rows(F5, {{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(eigenspace(M, F5->from_int(2)).dim() == 2);
  CHECK(eigenspace(M, F5->from_int(3)).dim() == 1);
  CHECK(eigenspace(M, F5->from_int(1)).dim() == 0);
  // eigenvectors actually satisfy the eigenvalue equation
  Subspace E2 = eigenspace(M, F5->from_int(2));
  for (const auto& v : E2.basis())
    CHECK(M.apply(v) == svec_scale(v, F5->from_int(2)));
}
