#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cpctaxo/taxonomy.hpp"

namespace cpctaxo {

enum class Direction { Hypernym, Hyponym };

Direction parse_direction(std::string_view s);
const char* to_string(Direction d);

struct DatasetExample {
  Direction direction = Direction::Hypernym;
  char section = 'A';
  std::string input_text;
  std::string target_text;

  bool operator==(const DatasetExample&) const = default;
};

// "predict hypernym: <G> audio feedback"
std::string model_input(Direction direction, char section, std::string_view term);

DatasetExample make_example(const TermHypernymPair& pair, Direction direction);

struct DatasetSplit {
  std::vector<DatasetExample> train;
  std::vector<DatasetExample> test;
  // Positions of the source pairs, in output order.
  std::vector<std::size_t> train_index;
  std::vector<std::size_t> test_index;
};

// Seeded shuffle, then the first ceil(ratio * n) examples go to train. With
// stratify, each section is shuffled and split on its own.
// Throws EmptyInput, std::invalid_argument for ratio outside (0, 1).
DatasetSplit make_dataset(const std::vector<TermHypernymPair>& pairs, Direction direction,
                          double ratio = 0.8, std::uint64_t seed = 42, bool stratify = false);

// Portable Fisher-Yates permutation of 0..n-1 driven by mt19937_64.
std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed);

// "input_text\ttarget_text" rows.
void write_dataset_tsv(const std::vector<DatasetExample>& examples, std::ostream& out);

struct RankedPredictionRecord {
  std::string input_text;
  std::string gold;
  std::vector<std::string> candidates;  // rank 1 first
};

// 1-based rank of the first candidate equal to gold after trimming and case
// folding; 0 when absent.
std::size_t gold_rank(const RankedPredictionRecord& record);

// Throws EmptyInput, std::invalid_argument for k < 1.
double hits_at_k(const std::vector<RankedPredictionRecord>& records, int k);
double mrr(const std::vector<RankedPredictionRecord>& records);

struct EvalReport {
  std::size_t n = 0;
  std::vector<int> ks;
  std::vector<double> hits;  // parallel to ks
  double mrr = 0.0;

  double hits_at(int k) const;
  double hits_at_1() const { return hits_at(1); }
  double hits_at_3() const { return hits_at(3); }
  double hits_at_10() const { return hits_at(10); }

  // Tab separated lines, values rounded to 4 decimals.
  std::string to_text() const;
};

// Parses "input\tgold\tcand1\tcand2..." lines.
// Throws MalformedPredictionFile or EmptyInput.
std::vector<RankedPredictionRecord> parse_predictions(std::string_view text);

EvalReport evaluate(const std::vector<RankedPredictionRecord>& records,
                    const std::vector<int>& ks = {1, 3, 10});
EvalReport evaluate(const std::filesystem::path& prediction_file,
                    const std::vector<int>& ks = {1, 3, 10});

// Fixed-point rendering with 4 decimals, e.g. "0.2986".
std::string format_metric(double value);

}  // namespace cpctaxo
