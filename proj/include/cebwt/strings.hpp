// strings.hpp — cyclic-string primitives on byte strings: border arrays,
// primitive-root decomposition, conjugates, omega-order comparison, and
// the conjugate-array plumbing shared by every eBWT path.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cebwt/types.hpp"

namespace cebwt {

// Border array of t: result[i] is the length of the longest proper border
// of the prefix t[0..i] (0-based; classic failure function).
std::vector<std::uint32_t> border_array(std::string_view t);

// Decomposes t = root^exponent with root primitive. t must be non-empty.
RootDecomposition root_and_exponent(std::string_view t);

// The i-th conjugate t[i..n] t[1..i-1], with i 1-based in [1, |t|].
// Throws std::out_of_range otherwise.
std::string conjugate(std::string_view t, std::size_t i);

// Omega-order: s < t iff s^omega < t^omega lexicographically, or both
// share a primitive root and s has the smaller exponent. Decided after at
// most |s|+|t| cyclic characters.
std::strong_ordering omega_compare(std::string_view s, std::string_view t);

// Lifts the GCA of the multiset of primitive roots to the GCA of the
// original collection: each root entry (j, d) expands in place to the run
// (j, d), (j + |root_d|, d), ..., (j + (e_d - 1)|root_d|, d). Inputs are
// indexed by document: exponents[d-1] and root_lengths[d-1]. Throws if the
// root GCA's shape disagrees with the declared lengths.
Gca expand_gca(const Gca& roots_gca,
               const std::vector<std::uint32_t>& exponents,
               const std::vector<std::uint32_t>& root_lengths);

// Reads the eBWT off a full GCA of `coll`: bwt[i] is the byte cyclically
// preceding conjugate gca[i], and index_set collects the ranks of (1, d)
// entries. With `with_samples`, also records the GCA entry at the first
// and last position of every maximal equal-byte run.
EbwtResult ebwt_from_gca(const SeqCollection& coll, const Gca& gca,
                         bool with_samples = false);

}  // namespace cebwt
