#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace ctconfig {

/* Kozsul sign conventions for words of graded letters. A word is a vector of
 * letter ids; degrees are supplied alongside. Letters of odd degree
 * anticommute and square to zero, letters of even degree commute. */

/* Sign of rearranging the letters of a word so that letter i lands at
 * position pos[i]: product of (-1)^{d_i d_j} over inverted pairs. */
inline int graded_rearrangement_sign(const std::vector<int>& degs, const std::vector<int>& pos)
{
    int sign = 1;
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i] > pos[j] && (degs[i] & 1) && (degs[j] & 1))
                sign = -sign;
    return sign;
}

/* Sign of a block rearrangement, blocks treated as single letters with their
 * total degree. */
inline int block_rearrangement_sign(const std::vector<int>& block_degs,
                                    const std::vector<int>& pos)
{
    return graded_rearrangement_sign(block_degs, pos);
}

/* Sorts a word by the (degree, id) order, tracking the Koszul sign. Returns
 * nothing when an odd letter repeats (the word vanishes). */
inline std::optional<std::pair<std::vector<int>, int>> canonical_word(
    std::vector<int> word, const std::vector<int>& letter_degs)
{
    auto key = [&](int id) { return std::pair(letter_degs[id], id); };
    int sign = 1;
    for (size_t i = 1; i < word.size(); ++i) {
        int v = word[i];
        size_t j = i;
        while (j > 0 && key(word[j - 1]) > key(v)) {
            word[j] = word[j - 1];
            if ((letter_degs[word[j]] & 1) && (letter_degs[v] & 1))
                sign = -sign;
            --j;
        }
        word[j] = v;
    }
    for (size_t i = 1; i < word.size(); ++i)
        if (word[i - 1] == word[i] && (letter_degs[word[i]] & 1))
            return std::nullopt;
    return std::pair(std::move(word), sign);
}

/* All canonical words of the given length: letter ids nondecreasing in the
 * (degree, id) order, odd letters without repeats. */
inline std::vector<std::vector<int>> graded_words(const std::vector<int>& letter_degs,
                                                  int length)
{
    std::vector<int> order(letter_degs.size());
    for (size_t i = 0; i < order.size(); ++i)
        order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(letter_degs[a], a) < std::pair(letter_degs[b], b);
    });

    std::vector<std::vector<int>> out;
    std::vector<int> word;
    auto rec = [&](auto&& self, int min_pos, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(word);
            return;
        }
        for (int p = min_pos; p < (int)order.size(); ++p) {
            int id = order[p];
            bool odd = letter_degs[id] & 1;
            if (odd && !word.empty() && word.back() == id)
                continue;
            word.push_back(id);
            self(self, odd ? p + 1 : p, remaining - 1);
            word.pop_back();
        }
    };
    rec(rec, 0, length);
    return out;
}

}  // namespace ctconfig
