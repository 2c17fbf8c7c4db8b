#include <doctest.h>

#include <algorithm>

#include "contractkit/subspace.hpp"
#include "support/generators.hpp"

using namespace contractkit;
namespace t = contractkit::testing;

namespace {

Subspace axis(std::size_t n, std::size_t i) {
  Matrix b(n, 1);
  b(i, 0) = 1;
  return Subspace::span(b);
}

const Matrix kSpacingRow{{-1, 0, 1, 1}};  // H^g with h = 1

}  // namespace

TEST_CASE("kernel") {
  CHECK(kernel(Matrix::identity(3)).dim() == 0);
  CHECK(kernel(Matrix::identity(3)).ambient_dim() == 3);
  CHECK(kernel(Matrix(1, 4)).dim() == 4);

  // hand basis: (1,0,1,0), (0,1,0,0), (1,0,0,1)
  const Subspace k = kernel(kSpacingRow);
  CHECK(k.dim() == 3);
  const Matrix hand{{1, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(equals(k, Subspace::span(hand)));
}

TEST_CASE("image") {
  CHECK(equals(image(Matrix::identity(2)), Subspace::full(2)));
  CHECK(image(Matrix(3, 2)).is_zero());
  const DVSystem a = t::assumptions_system();
  const Subspace img = image(a.G);
  CHECK(img.dim() == 3);
  CHECK(equals(img, sum(sum(axis(4, 1), axis(4, 2)), axis(4, 3))));
}

TEST_CASE("sum") {
  const Subspace v = axis(3, 1);
  CHECK(equals(sum(v, Subspace::zero(3)), v));
  CHECK(equals(sum(axis(2, 0), axis(2, 1)), Subspace::full(2)));
  // brute rank of concatenated spanning sets
  const Matrix gens = hstack(nullspace(kSpacingRow), Matrix::identity(4));
  CHECK(t::brute_dim(gens) == 4);
  CHECK(equals(sum(kernel(kSpacingRow), image(Matrix::identity(4))), Subspace::full(4)));
  CHECK_THROWS_AS(sum(axis(2, 0), axis(3, 0)), DimensionMismatch);
}

TEST_CASE("intersect") {
  const Subspace v = axis(3, 2);
  CHECK(equals(intersect(v, v), v));
  CHECK(intersect(axis(2, 0), axis(2, 1)).is_zero());

  // dimension formula on explicit hand bases: 3 + 3 - rank([B_V B_W]) = 2
  const Matrix img_ga{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const Matrix ker_hg{{1, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const std::size_t expected = 3 + 3 - t::brute_dim(hstack(img_ga, ker_hg));
  CHECK(expected == 2);
  const Subspace cap = intersect(image(img_ga), kernel(kSpacingRow));
  CHECK(cap.dim() == expected);
  CHECK(contains(image(img_ga), cap));
  CHECK(contains(kernel(kSpacingRow), cap));
  CHECK_THROWS_AS(intersect(axis(2, 0), axis(3, 0)), DimensionMismatch);
}

TEST_CASE("preimage") {
  const Subspace v = axis(3, 0);
  CHECK(equals(preimage(Matrix::identity(3), v), v));
  Matrix m{{1, 2}, {3, 4}, {5, 6}};
  CHECK(equals(preimage(m, Subspace::full(3)), Subspace::full(2)));
  CHECK(equals(preimage(Matrix{{1, 0}, {0, 0}}, axis(2, 0)), Subspace::full(2)));
  CHECK_THROWS_AS(preimage(m, axis(2, 0)), DimensionMismatch);
}

TEST_CASE("apply") {
  const Subspace v = sum(axis(3, 0), axis(3, 2));
  CHECK(equals(apply(Matrix::identity(3), v), v));
  CHECK(apply(Matrix(3, 3), v).is_zero());
  CHECK(equals(apply(t::assumptions_system().A, Subspace::full(4)), axis(4, 0)));
  CHECK_THROWS_AS(apply(Matrix(2, 2), v), DimensionMismatch);
}

TEST_CASE("contains") {
  CHECK(contains(axis(2, 0), Subspace::zero(2)));
  CHECK_FALSE(contains(Subspace::zero(2), axis(2, 0)));
  CHECK(contains(kernel(kSpacingRow), Subspace::span(Matrix{{1}, {0}, {1}, {0}})));
  CHECK_THROWS_AS(contains(axis(2, 0), axis(3, 0)), DimensionMismatch);
}

TEST_CASE("equals") {
  const Subspace v = axis(2, 1);
  CHECK(equals(v, v));
  CHECK_FALSE(equals(Subspace::full(1), Subspace::zero(1)));
  CHECK(equals(kernel(Matrix{{1, 1}}), Subspace::span(Matrix{{1}, {-1}})));
  CHECK_THROWS_AS(equals(axis(2, 0), axis(3, 0)), DimensionMismatch);
}

TEST_CASE("project") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Subspace diag = t::diagonal_of(Subspace::full(n));
    CHECK(equals(project(diag, CoordRange{0, n}), Subspace::full(n)));
  }
  CHECK(project(Subspace::zero(6), CoordRange{2, 3}).is_zero());

  const Subspace vg = kernel(kSpacingRow);
  const Subspace rel = t::triple_diagonal_of(vg);
  const Subspace proj = project(rel, CoordRange{0, 8});
  CHECK(proj.ambient_dim() == 8);
  CHECK(proj.dim() == 3);
  CHECK(equals(proj, t::diagonal_of(vg)));
  CHECK_THROWS_AS(project(vg, CoordRange{2, 3}), DimensionMismatch);
}

TEST_CASE("canonical basis has identity rows at the pivots") {
  t::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Subspace v = Subspace::span(t::random_matrix(rng, 4, 3));
    for (std::size_t k = 0; k < v.dim(); ++k)
      for (std::size_t j = 0; j < v.dim(); ++j) CHECK(v.basis()(v.pivot_rows()[j], k) == (j == k ? 1 : 0));
  }
}

TEST_CASE("subspace lattice properties on random pairs") {
  t::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(t::uniform_int(rng, 1, 5));
    const Subspace v = t::random_subspace(rng, n, 4);
    const Subspace w = t::random_subspace(rng, n, 4);

    // modular law instance
    CHECK(v.dim() + w.dim() == sum(v, w).dim() + intersect(v, w).dim());
    CHECK(contains(sum(v, w), v));
    CHECK(contains(v, intersect(v, w)));

    // kernel/image duality
    const Matrix m = t::random_matrix(rng, static_cast<std::size_t>(t::uniform_int(rng, 0, 4)), n);
    CHECK(kernel(m).dim() + image(m).dim() == n);

    // preimage contains the kernel and maps back inside V
    const Matrix sq = t::random_matrix(rng, n, n);
    const Subspace pre = preimage(sq, v);
    CHECK(contains(pre, kernel(sq)));
    CHECK(contains(v, apply(sq, pre)));

    // permuting spanning columns changes nothing
    Matrix b = v.basis();
    std::vector<std::size_t> order(b.cols());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    Matrix permuted(n, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c)
      for (std::size_t r = 0; r < n; ++r) permuted(r, c) = b(r, order[c]);
    CHECK(equals(Subspace::span(permuted), v));
    CHECK(equals(intersect(Subspace::span(permuted), w), intersect(v, w)));

    // equals is symmetric and agrees with two-sided containment
    CHECK(equals(v, w) == equals(w, v));
    CHECK(equals(v, w) == (contains(v, w) && contains(w, v)));
  }
}
