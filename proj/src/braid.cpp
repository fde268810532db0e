#include "skein/braid.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace skein {

BraidWord::BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    if (strands < 1) throw std::invalid_argument("BraidWord: strand count must be >= 1");
    for (int l : letters) {
        if (l == 0 || std::abs(l) >= strands)
            throw std::invalid_argument("BraidWord: generator index out of range");
    }
}

BraidWord BraidWord::parse(int n, const std::string& text) {
    std::vector<int> letters;
    std::istringstream is(text);
    std::string token;
    while (is >> token) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("BraidWord: malformed letter '" + token + "'");
        }
        if (pos != token.size())
            throw std::invalid_argument("BraidWord: malformed letter '" + token + "'");
        letters.push_back(value);
    }
    return BraidWord(n, std::move(letters));
}

int BraidWord::writhe() const {
    int w = 0;
    for (int l : letters) w += l > 0 ? 1 : -1;
    return w;
}

Permutation BraidWord::permutation() const {
    Permutation p = Permutation::identity(strands);
    for (int l : letters) p = p.swap_values(std::abs(l));
    return p;
}

}  // namespace skein
