#pragma once

#include "mull/image.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mull {

enum class Family { Jigsaw, IqProgression, Count };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

enum class StepKind { Text, Image };

struct Step {
    StepKind kind;
    std::string text;  // Text steps only
    ToyImage image;    // Image steps only

    static Step make_text(std::string t) { return Step{StepKind::Text, std::move(t), {}}; }
    static Step make_image(ToyImage img) { return Step{StepKind::Image, {}, std::move(img)}; }
};

struct Choice {
    std::string label;  // single uppercase letter
    std::optional<ToyImage> image;
    std::optional<std::string> text;
};

enum class AnswerKind { Choice, Numeric };

struct Sample {
    std::string id;
    Family family;
    std::vector<ToyImage> context_images;
    std::string question;
    std::vector<Choice> choices;  // empty means "no choices" (serialized as null)
    std::vector<Step> trace;
    std::string answer;
    AnswerKind answer_kind;

    void validate() const;
};

enum class IqTransform { Rotate90, Shift };

struct TaskConfig {
    int grid_h = 6;
    int grid_w = 6;
    int hole_h = 2;
    int hole_w = 2;
    int tile_h = 3;  // jigsaw tiling period
    int tile_w = 3;
    int jigsaw_candidates = 3;
    int iq_candidates = 4;
    std::vector<IqTransform> iq_transforms = {IqTransform::Rotate90, IqTransform::Shift};
    double fill_prob = 0.5;

    void validate() const;
};

// All generators are pure functions of (seed, index, config).
Sample generate_jigsaw(uint64_t seed, uint64_t index, const TaskConfig& config);
Sample generate_iq_progression(uint64_t seed, uint64_t index, const TaskConfig& config);
Sample generate_count(uint64_t seed, uint64_t index, const TaskConfig& config);
Sample generate_sample(Family family, uint64_t seed, uint64_t index, const TaskConfig& config);

// Brute-force solver used to certify that every generated sample is solvable
// from its serialized fields alone.
std::string solve_sample(const Sample& sample, const TaskConfig& config);

std::string sample_to_json_line(const Sample& sample);
Sample sample_from_json_line(const std::string& line, size_t line_number);

struct DatasetManifest {
    uint64_t seed = 0;
    std::vector<std::pair<std::string, int>> counts;  // family -> count, sorted by name
    std::string sha256;

    std::string to_json() const;
    static DatasetManifest from_json(const std::string& text);
};

// Writes one JSON object per line plus "<path>.manifest.json" alongside.
DatasetManifest write_dataset(const std::vector<Sample>& samples, const std::string& path,
                              uint64_t seed);
std::vector<Sample> read_dataset(const std::string& path);

}  // namespace mull
