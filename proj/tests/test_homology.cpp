#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "beireg/homology.hpp"
#include "beireg/initial_ideal.hpp"
#include "beireg/prufer.hpp"

using namespace beireg;

namespace {

HomologyDims dims(VarSet vertices, std::vector<VarSet> nonfaces, FieldSpec f = {}) {
  return reduced_homology(vertices, nonfaces, f);
}

long long euler_from_homology(const HomologyDims& d) {
  long long chi = 0;
  for (std::size_t k = 0; k < d.size(); ++k) chi += (k % 2 == 1 ? 1 : -1) * d[k];
  return chi;  // sum_h (-1)^h dim H~_h, h = k - 1
}

long long euler_from_faces(const std::vector<long long>& f) {
  long long chi = 0;
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 1 ? 1 : -1) * f[k];
  return chi;  // sum over faces of (-1)^(dim), dim = k - 1
}

}  // namespace

TEST_CASE("hollow triangle") {
  auto d = dims(0b111, {0b111});
  CHECK(d == HomologyDims{0, 0, 1, 0});
}

TEST_CASE("full simplex") {
  auto d = dims(0b111, {});
  for (auto x : d) CHECK(x == 0);
}

TEST_CASE("two points") {
  auto d = dims(0b11, {0b11});
  CHECK(d == HomologyDims{0, 1, 0});
}

TEST_CASE("empty complex") {
  // Every vertex is a non-face: only the empty face, H~_{-1} = k.
  auto d = dims(0b11, {0b01, 0b10});
  CHECK(d[0] == 1);
  auto e = dims(0, {});
  CHECK(e == HomologyDims{1});
}

TEST_CASE("octahedral sphere") {
  // Boundary of the cross-polytope: non-faces are the three antipodal pairs.
  auto d = dims(0b111111, {0b000011, 0b001100, 0b110000});
  CHECK(d == HomologyDims{0, 0, 0, 1, 0, 0, 0});
}

TEST_CASE("projective plane detects the characteristic") {
  // Six-vertex RP^2: H_1 = Z/2, so H~_1 and H~_2 are k over GF(2) and 0 otherwise.
  const int tri[10][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                          {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  // Non-faces: every triple that is not a facet (all edges are present).
  std::vector<VarSet> facets;
  for (auto& t : tri) facets.push_back(VarSet{1} << (t[0] - 1) | VarSet{1} << (t[1] - 1) | VarSet{1} << (t[2] - 1));
  std::vector<VarSet> nonfaces;
  for (VarSet s = 0; s < 64; ++s)
    if (std::popcount(s) == 3 && std::find(facets.begin(), facets.end(), s) == facets.end()) nonfaces.push_back(s);
  REQUIRE(nonfaces.size() == 10);
  auto odd = reduced_homology(0b111111, nonfaces, FieldSpec{});
  auto two = reduced_homology(0b111111, nonfaces, FieldSpec(2));
  CHECK(odd[2] == 0);
  CHECK(odd[3] == 0);
  CHECK(two[2] == 1);
  CHECK(two[3] == 1);
  CHECK(reduced_homology_direct(0b111111, nonfaces, FieldSpec(2)) == two);
}

TEST_CASE("reductions agree with plain boundary ranks") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 400; ++k) {
    const int nv = uniform_int(rng, 2, 9);
    const VarSet all = (VarSet{1} << nv) - 1;
    std::vector<VarSet> nonfaces;
    const int m = uniform_int(rng, 0, 7);
    for (int j = 0; j < m; ++j) {
      VarSet s = 0;
      while (std::popcount(s) < 2) s |= VarSet{1} << uniform_int(rng, 0, nv - 1);
      if (uniform_int(rng, 0, 1)) s |= VarSet{1} << uniform_int(rng, 0, nv - 1);
      nonfaces.push_back(s & all);
    }
    const FieldSpec f(uniform_int(rng, 0, 1) ? 2 : 32003);
    const auto fast = reduced_homology(all, nonfaces, f);
    const auto slow = reduced_homology_direct(all, nonfaces, f);
    CHECK(fast == slow);
    CHECK(euler_from_homology(fast) == euler_from_faces(face_counts(all, nonfaces)));
  }
}

TEST_CASE("Euler characteristic on initial-ideal complexes") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 20; ++k) {
    const Tree t = random_tree(uniform_int(rng, 2, 6), rng);
    const auto ideal = initial_ideal(t.graph());
    const auto& gens = ideal.generators();
    // Every union of two generators, as a sample of lcm-lattice elements.
    for (VarSet a : gens)
      for (VarSet b : gens) {
        const VarSet w = a | b;
        const auto d = reduced_homology(w, gens, FieldSpec{});
        CHECK(euler_from_homology(d) == euler_from_faces(face_counts(w, gens)));
        CHECK(d == reduced_homology_direct(w, gens, FieldSpec{}));
      }
  }
}

TEST_CASE("sparse rank") {
  // [[1, 1], [1, 1]] has rank 1; [[1, 1], [1, -1]] has rank 2 unless p = 2.
  CHECK(sparse_rank({{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}}, 7) == 1);
  CHECK(sparse_rank({{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}}, 7) == 2);
  CHECK(sparse_rank({{{0, 1}, {1, 1}}, {{0, 1}, {1, -1}}}, 2) == 1);
  CHECK(sparse_rank({}, 5) == 0);
}
