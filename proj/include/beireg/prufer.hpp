#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "beireg/graph.hpp"

namespace beireg {

/// Decodes a Prüfer sequence of length n-2 (labels in 1..n) into the labelled
/// tree on n vertices. Throws GraphError on a bad label or length.
Tree prufer_decode(int n, std::span<const Vertex> seq);
/// Sequence of length n-2; empty for n <= 2.
std::vector<Vertex> prufer_encode(const Tree& t);

/// Uniform integer in [lo, hi] by rejection, so the stream is the same on
/// every standard library.
int uniform_int(std::mt19937_64& rng, int lo, int hi);

/// Uniform labelled tree on n vertices; the same seed gives the same tree.
Tree random_tree(int n, std::uint64_t seed);
Tree random_tree(int n, std::mt19937_64& rng);

/// Calls `visit` with every labelled tree on n vertices (n^(n-2) of them),
/// in lexicographic order of Prüfer sequences.
void for_each_labelled_tree(int n, const std::function<void(const Tree&)>& visit);

}  // namespace beireg
