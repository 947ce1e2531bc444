#include "wordsym/morphism.hpp"

#include "wordsym/errors.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace wordsym {

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

Morphism::Morphism(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != alphabet_.size())
        throw ParseError("morphism must define an image for every letter");
    for (const Word& im : images_)
        for (char c : im)
            if (static_cast<unsigned char>(c) >= images_.size())
                throw ParseError("image uses a letter without a rule");
}

size_t Morphism::min_image_length() const {
    size_t m = images_.empty() ? 0 : images_[0].size();
    for (const Word& im : images_) m = std::min(m, im.size());
    return m;
}

size_t Morphism::max_image_length() const {
    size_t m = 0;
    for (const Word& im : images_) m = std::max(m, im.size());
    return m;
}

bool Morphism::is_nonerasing() const { return min_image_length() >= 1; }

Word Morphism::apply(const Word& w) const {
    Word out;
    for (char c : w) out += images_[static_cast<unsigned char>(c)];
    return out;
}

Morphism Morphism::compose(const Morphism& inner) const {
    if (alphabet_size() != inner.alphabet_size())
        throw ParseError("composition requires a common alphabet");
    std::vector<Word> imgs;
    imgs.reserve(images_.size());
    for (int a = 0; a < inner.alphabet_size(); ++a) imgs.push_back(apply(inner.image(a)));
    return Morphism(alphabet_, std::move(imgs));
}

Morphism Morphism::power(int k) const {
    if (k < 1) throw InvariantError("morphism power must be >= 1");
    Morphism acc = *this;
    for (int i = 1; i < k; ++i) acc = acc.compose(*this);
    return acc;
}

std::vector<int> Morphism::fixed_point_seeds() const {
    std::vector<int> seeds;
    for (int a = 0; a < alphabet_size(); ++a) {
        const Word& im = image(a);
        if (im.size() >= 2 && im[0] == static_cast<char>(a)) seeds.push_back(a);
    }
    return seeds;
}

Word Morphism::fixed_point_prefix(int seed, size_t min_length, int max_iterations) const {
    if (seed < 0 || seed >= alphabet_size()) throw ParseError("seed letter out of range");
    const Word& im = image(seed);
    if (im.empty() || im[0] != static_cast<char>(seed) || im.size() < 2)
        throw HypothesisError("morphism is not prolongable on the chosen letter");
    Word w(1, static_cast<char>(seed));
    for (int it = 0; it < max_iterations && w.size() < min_length; ++it) {
        Word next = apply(w);
        if (next.size() == w.size())
            throw HypothesisError("fixed point prefix stopped growing");
        w = std::move(next);
    }
    if (w.size() < min_length)
        throw HypothesisError("fixed point prefix did not reach the requested length");
    return w;
}

std::pair<int, Morphism> Morphism::power_normalize() const {
    if (!is_nonerasing()) throw HypothesisError("erasing morphisms are not supported");
    Morphism cur = *this;
    for (int t = 1; t <= 64; ++t) {
        if (cur.min_image_length() >= 2) return {t, cur};
        cur = cur.compose(*this);
    }
    throw HypothesisError("no power with all image lengths >= 2 (non-growing letter)");
}

std::string Morphism::to_text() const {
    std::ostringstream os;
    for (int a = 0; a < alphabet_size(); ++a)
        os << alphabet_.letter(a) << " -> " << alphabet_.display(image(a)) << "\n";
    return os.str();
}

Morphism Morphism::parse(const std::string& text) {
    std::istringstream in(text);
    return parse_stream(in);
}

Morphism Morphism::parse_stream(std::istream& in) {
    Alphabet alphabet;
    std::vector<std::string> image_texts;
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        size_t arrow = line.find("->");
        if (arrow == std::string::npos) throw ParseError("morphism rule needs '->': " + line);
        std::string lhs = strip(line.substr(0, arrow));
        std::string rhs = strip(line.substr(arrow + 2));
        auto lhs_letters = utf8_split(lhs);
        if (lhs_letters.size() != 1)
            throw ParseError("left side of a rule must be a single letter: " + line);
        if (rhs.empty()) throw ParseError("empty image for letter '" + lhs + "'");
        if (alphabet.has(lhs_letters[0]))
            throw ParseError("duplicate rule for letter '" + lhs + "'");
        alphabet.add(lhs_letters[0]);
        image_texts.push_back(rhs);
    }
    if (image_texts.empty()) throw ParseError("empty morphism");
    // Image letters may extend the alphabet only if they have rules; check.
    std::vector<Word> images;
    for (const auto& t : image_texts) images.push_back(alphabet.parse(t));
    return Morphism(std::move(alphabet), std::move(images));
}

}  // namespace wordsym
