#pragma once

#include <vector>

// Brute-force simplicity oracle that shares no code with the library: a
// cyclic word is simple iff some product of at most `depth` Whitehead
// automorphisms sends it to a word missing a generator. Intermediate images
// longer than `length_cap` are discarded.
namespace oracle
{

bool is_simple(int rank, std::vector<int> const &word, int depth = 6, int length_cap = 0);

// Every cyclically reduced word of length 1..max_len, as signed letters.
std::vector<std::vector<int>> cyclically_reduced_words(int rank, int max_len);

} // namespace oracle
