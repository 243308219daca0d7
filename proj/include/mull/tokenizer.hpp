#pragma once

#include "mull/common.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace mull {

// Special token ids. Everything else is a word in a closed vocabulary.
enum SpecialToken : int {
    kPad = 0,
    kEos = 1,
    kQEnd = 2,
    kAnsStart = 3,  // "<answer>"
    kAnsEnd = 4,    // "</answer>"
    kImMark = 5,    // "<im>"
    kMull = 6,      // "<mull>"
    kNumSpecials = 7,
};

// Highest integer with a dedicated vocabulary entry ("0" .. "36").
constexpr int kMaxNumberToken = 36;

// Whitespace-delimited closed vocabulary: specials, choice letters A-Z,
// integers 0-36, then every word the task generators and prompt templates emit.
class Tokenizer {
  public:
    Tokenizer();

    int vocab_size() const { return static_cast<int>(words_.size()); }

    int id_of(const std::string& word) const;
    const std::string& word_of(int id) const;

    int letter_id(char letter) const;  // 'A'..'Z'
    int number_id(int n) const;        // 0..kMaxNumberToken

    std::vector<int> encode(const std::string& text) const;
    std::string decode(const std::vector<int>& ids) const;

    static const Tokenizer& instance();

  private:
    void add(const std::string& word);
    void add_text(const std::string& text);

    std::vector<std::string> words_;
    std::unordered_map<std::string, int> index_;
    int letter_base_ = 0;
    int number_base_ = 0;
};

// Prompt template bodies (shared between training sequence construction and
// the evaluation harness so the prompt format never drifts between the two).
namespace prompts {

const std::string kDirectBody =
    "Provide your final answer between the <answer> </answer> tags.";

const std::string kLatentBody =
    "Please think about this question deeply. It's encouraged to include self-reflection or "
    "verification in the reasoning process. Provide your final answer between the <answer> "
    "</answer> tags.";

const std::string kTextReasoningBody =
    "Please think about this question as if you were a human pondering deeply. Engage in an "
    "internal dialogue using expressions such as 'let me think', 'wait', 'Hmm', 'oh, I see', "
    "'let's break it down', etc, or other natural language thought expressions. It's encouraged "
    "to include self-reflection or verification in the reasoning process. Provide your detailed "
    "reasoning between the <think> </think> tags, and then give your final answer between the "
    "<answer> </answer> tags.";

const std::string kForceImagePrefix = "think using both text and images.";

const std::string kChoiceSuffix =
    "Please provide only the single option letter (e.g., A, B, C, D, etc.) within the <answer> "
    "</answer> tags.";

const std::string kNumericSuffix =
    "Please provide the numerical value (e.g., 42 or 3.14) within the <answer> </answer> tags.";

}  // namespace prompts

}  // namespace mull
