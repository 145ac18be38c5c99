#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gridlab {

// A word is a finite sequence of positive integer letters. Words may be
// empty, and letters may repeat.
using Word = std::vector<int>;

// Sorted set of distinct letters occurring in w.
std::vector<int> alphabet(const Word& w);

// Subsequence of w formed by the letters that belong to keep, in order.
// Letters of keep that do not occur in w are simply absent from the result.
Word restrict_to(const Word& w, const std::vector<int>& keep);

// Order-preserving relabeling of w onto {1..k} where k is the number of
// distinct letters: the i-th smallest letter becomes i.
Word reduce(const Word& w);

// True iff some subsequence of w reduces to the pattern u. The pattern must
// already be reduced (reduce(u) == u), otherwise std::invalid_argument is
// thrown. When witness is non-null and the pattern occurs, the
// lexicographically smallest witness position vector is stored there.
bool contains_pattern(const Word& w, const Word& u,
                      std::vector<std::size_t>* witness = nullptr);

// Reverse w and replace every letter c by n + 1 - c. All letters of w must
// lie in {1..n}, otherwise std::invalid_argument is thrown.
Word reverse_complement(const Word& w, int n);

// One-line serialization: letters in decimal separated by single spaces.
std::string word_to_string(const Word& w);

// Parses the serialization format above (leading/trailing blanks allowed).
// Throws std::invalid_argument on malformed input or non-positive letters.
Word parse_word(const std::string& text);

}  // namespace gridlab
