#pragma once

#include "wordsym/alphabet.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace wordsym {

// A morphism over its own alphabet, given by the images of the letters.
class Morphism {
public:
    Morphism(Alphabet alphabet, std::vector<Word> images);

    const Alphabet& alphabet() const { return alphabet_; }
    int alphabet_size() const { return alphabet_.size(); }
    const Word& image(int letter) const { return images_.at(static_cast<size_t>(letter)); }
    const std::vector<Word>& images() const { return images_; }

    size_t min_image_length() const;
    size_t max_image_length() const;
    bool is_nonerasing() const;

    Word apply(const Word& w) const;
    Morphism compose(const Morphism& inner) const;  // this ∘ inner
    Morphism power(int k) const;

    // Letters a with phi(a) starting in a and |phi(a)| >= 2 (fixed point seeds).
    std::vector<int> fixed_point_seeds() const;

    // Prefix of the fixed point starting from `seed`, of length >= min_length.
    // Iterates phi at most `max_iterations` times; throws HypothesisError when
    // the prefix cannot be grown that far.
    Word fixed_point_prefix(int seed, size_t min_length, int max_iterations = 64) const;

    // Smallest power t with every |phi^t(a)| >= 2, together with that power.
    std::pair<int, Morphism> power_normalize() const;

    std::string to_text() const;

    // Text format, one rule per line: "<letter> -> <image>".
    static Morphism parse(const std::string& text);
    static Morphism parse_stream(std::istream& in);

private:
    Alphabet alphabet_;
    std::vector<Word> images_;
};

}  // namespace wordsym
