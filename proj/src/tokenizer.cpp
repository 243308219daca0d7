#include "mull/tokenizer.hpp"

#include <sstream>

namespace mull {

namespace {

// Every question/trace pattern the generators can produce. Keeping these in
// one list means the vocabulary is always closed over generator output.
const char* kSeedTexts[] = {
    "which patch completes the grid",
    "which grid comes next in the progression",
    "how many filled cells are in the top half of the grid",
    "how many filled cells are in the bottom half of the grid",
    "how many filled cells are in the left half of the grid",
    "how many filled cells are in the right half of the grid",
    "options",
    "try candidate",
    "the answer is",
    "the count is",
    "<think> </think>",
};

}  // namespace

Tokenizer::Tokenizer() {
    add("<pad>");
    add("<eos>");
    add("<qend>");
    add("<answer>");
    add("</answer>");
    add("<im>");
    add("<mull>");

    letter_base_ = static_cast<int>(words_.size());
    for (char c = 'A'; c <= 'Z'; ++c) add(std::string(1, c));

    number_base_ = static_cast<int>(words_.size());
    for (int n = 0; n <= kMaxNumberToken; ++n) add(std::to_string(n));

    for (const char* t : kSeedTexts) add_text(t);
    add_text(prompts::kDirectBody);
    add_text(prompts::kLatentBody);
    add_text(prompts::kTextReasoningBody);
    add_text(prompts::kForceImagePrefix);
    add_text(prompts::kChoiceSuffix);
    add_text(prompts::kNumericSuffix);
}

void Tokenizer::add(const std::string& word) {
    if (index_.count(word)) return;
    index_.emplace(word, static_cast<int>(words_.size()));
    words_.push_back(word);
}

void Tokenizer::add_text(const std::string& text) {
    std::istringstream in(text);
    std::string w;
    while (in >> w) add(w);
}

int Tokenizer::id_of(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) throw DataError("tokenizer: word not in vocabulary: '" + word + "'");
    return it->second;
}

const std::string& Tokenizer::word_of(int id) const {
    if (id < 0 || id >= vocab_size())
        throw DataError("tokenizer: token id out of range: " + std::to_string(id));
    return words_[static_cast<size_t>(id)];
}

int Tokenizer::letter_id(char letter) const {
    if (letter < 'A' || letter > 'Z') throw DataError("tokenizer: choice label must be A-Z");
    return letter_base_ + (letter - 'A');
}

int Tokenizer::number_id(int n) const {
    if (n < 0 || n > kMaxNumberToken)
        throw DataError("tokenizer: number out of token range: " + std::to_string(n));
    return number_base_ + n;
}

std::vector<int> Tokenizer::encode(const std::string& text) const {
    std::vector<int> out;
    std::istringstream in(text);
    std::string w;
    while (in >> w) out.push_back(id_of(w));
    return out;
}

std::string Tokenizer::decode(const std::vector<int>& ids) const {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out.push_back(' ');
        out += word_of(ids[i]);
    }
    return out;
}

const Tokenizer& Tokenizer::instance() {
    static const Tokenizer tok;
    return tok;
}

}  // namespace mull
