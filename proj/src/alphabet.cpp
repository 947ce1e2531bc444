#include "wordsym/alphabet.hpp"

#include "wordsym/errors.hpp"

namespace wordsym {

std::vector<std::string> utf8_split(const std::string& text) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        size_t len = 1;
        if ((c & 0x80u) == 0)
            len = 1;
        else if ((c & 0xE0u) == 0xC0u)
            len = 2;
        else if ((c & 0xF0u) == 0xE0u)
            len = 3;
        else if ((c & 0xF8u) == 0xF0u)
            len = 4;
        else
            throw ParseError("invalid UTF-8 byte in word");
        if (i + len > text.size()) throw ParseError("truncated UTF-8 sequence");
        out.push_back(text.substr(i, len));
        i += len;
    }
    return out;
}

Alphabet::Alphabet(std::vector<std::string> letters) {
    for (auto& l : letters) add(l);
}

int Alphabet::index(const std::string& letter) const {
    auto it = index_.find(letter);
    if (it == index_.end()) throw ParseError("unknown letter '" + letter + "'");
    return it->second;
}

int Alphabet::add(const std::string& letter) {
    auto it = index_.find(letter);
    if (it != index_.end()) return it->second;
    if (letters_.size() >= 255) throw ParseError("alphabet too large");
    int idx = static_cast<int>(letters_.size());
    letters_.push_back(letter);
    index_.emplace(letter, idx);
    return idx;
}

Word Alphabet::parse(const std::string& text) const {
    Word w;
    for (const auto& l : utf8_split(text)) w.push_back(static_cast<char>(index(l)));
    return w;
}

std::string Alphabet::display(const Word& w) const {
    std::string out;
    for (char c : w) out += letter(static_cast<unsigned char>(c));
    return out;
}

}  // namespace wordsym
