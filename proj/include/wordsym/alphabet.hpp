#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wordsym {

// Internal words are byte strings of letter indices 0..k-1.
using Word = std::string;

// Maps display letters (UTF-8 scalars, e.g. "0", "a", "β") to indices.
// Letter order is the order of first appearance in the defining morphism.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::string& letter(int i) const { return letters_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& letters() const { return letters_; }
    bool has(const std::string& letter) const { return index_.count(letter) != 0; }
    int index(const std::string& letter) const;

    int add(const std::string& letter);  // returns existing index when present

    // Parse a displayed word into indices; throws ParseError on unknown letters.
    Word parse(const std::string& text) const;
    std::string display(const Word& w) const;

private:
    std::vector<std::string> letters_;
    std::map<std::string, int> index_;
};

// Splits UTF-8 text into scalar-value units.
std::vector<std::string> utf8_split(const std::string& text);

}  // namespace wordsym
