#include "cpctaxo/eval.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>

#include "cpctaxo/error.hpp"
#include "cpctaxo/text.hpp"
#include "fs_util.hpp"

namespace cpctaxo {

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::size_t train_size(std::size_t n, double ratio) {
  const double exact = ratio * static_cast<double>(n);
  const double nearest = std::round(exact);
  // Products such as 0.7 * 10 land a hair above the integer.
  if (std::abs(exact - nearest) < 1e-9 * std::max<double>(1.0, static_cast<double>(n)))
    return static_cast<std::size_t>(nearest);
  return static_cast<std::size_t>(std::ceil(exact));
}

std::string normalize(std::string_view s) { return text::casefold(text::trim(s)); }

void require_records(const std::vector<RankedPredictionRecord>& records) {
  if (records.empty()) throw EmptyInput("no prediction records");
}

}  // namespace

Direction parse_direction(std::string_view s) {
  if (text::iequals(s, "hypernym")) return Direction::Hypernym;
  if (text::iequals(s, "hyponym")) return Direction::Hyponym;
  throw std::invalid_argument("direction must be hypernym or hyponym, got '" + std::string(s) + "'");
}

const char* to_string(Direction d) { return d == Direction::Hypernym ? "hypernym" : "hyponym"; }

std::string model_input(Direction direction, char section, std::string_view term) {
  std::string out = "predict ";
  out += to_string(direction);
  out += ": <";
  out += section;
  out += "> ";
  out += term;
  return out;
}

DatasetExample make_example(const TermHypernymPair& pair, Direction direction) {
  DatasetExample ex;
  ex.direction = direction;
  ex.section = pair.section;
  const std::string& source = direction == Direction::Hypernym ? pair.hyponym : pair.hypernym;
  ex.target_text = direction == Direction::Hypernym ? pair.hypernym : pair.hyponym;
  ex.input_text = model_input(direction, pair.section, source);
  return ex;
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded(rng, i));
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

DatasetSplit make_dataset(const std::vector<TermHypernymPair>& pairs, Direction direction,
                          double ratio, std::uint64_t seed, bool stratify) {
  if (pairs.empty()) throw EmptyInput("no term-hypernym pairs to split");
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("ratio must lie in (0, 1)");

  std::vector<std::vector<std::size_t>> groups;
  if (stratify) {
    std::map<char, std::vector<std::size_t>> by_section;
    for (std::size_t i = 0; i < pairs.size(); ++i) by_section[pairs[i].section].push_back(i);
    for (auto& [section, members] : by_section) groups.push_back(std::move(members));
  } else {
    groups.emplace_back(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) groups.back()[i] = i;
  }

  DatasetSplit split;
  for (const auto& members : groups) {
    auto order = seeded_permutation(members.size(), seed);
    std::size_t cut = train_size(members.size(), ratio);
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::size_t source = members[order[k]];
      if (k < cut) {
        split.train.push_back(make_example(pairs[source], direction));
        split.train_index.push_back(source);
      } else {
        split.test.push_back(make_example(pairs[source], direction));
        split.test_index.push_back(source);
      }
    }
  }
  return split;
}

void write_dataset_tsv(const std::vector<DatasetExample>& examples, std::ostream& out) {
  for (const auto& ex : examples) out << ex.input_text << '\t' << ex.target_text << '\n';
}

std::size_t gold_rank(const RankedPredictionRecord& record) {
  const std::string gold = normalize(record.gold);
  for (std::size_t i = 0; i < record.candidates.size(); ++i)
    if (normalize(record.candidates[i]) == gold) return i + 1;
  return 0;
}

double hits_at_k(const std::vector<RankedPredictionRecord>& records, int k) {
  require_records(records);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  std::size_t hits = 0;
  for (const auto& r : records) {
    std::size_t rank = gold_rank(r);
    if (rank != 0 && rank <= static_cast<std::size_t>(k)) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(records.size());
}

double mrr(const std::vector<RankedPredictionRecord>& records) {
  require_records(records);
  // Counting per rank and summing in rank order makes the result independent
  // of record order.
  std::map<std::size_t, std::size_t> per_rank;
  for (const auto& r : records)
    if (std::size_t rank = gold_rank(r)) ++per_rank[rank];
  long double sum = 0.0L;
  for (auto [rank, count] : per_rank)
    sum += static_cast<long double>(count) / static_cast<long double>(rank);
  return static_cast<double>(sum / static_cast<long double>(records.size()));
}

double EvalReport::hits_at(int k) const {
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (ks[i] == k) return hits[i];
  throw std::out_of_range("report has no Hits@" + std::to_string(k));
}

std::string format_metric(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

std::string EvalReport::to_text() const {
  std::string out = "n\t" + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < ks.size(); ++i)
    out += "hits@" + std::to_string(ks[i]) + "\t" + format_metric(hits[i]) + "\n";
  out += "mrr\t" + format_metric(mrr) + "\n";
  return out;
}

std::vector<RankedPredictionRecord> parse_predictions(std::string_view text) {
  std::vector<RankedPredictionRecord> records;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (text::trim(line).empty()) continue;
    auto fields = text::split(line, '\t');
    if (fields.size() < 3)
      throw MalformedPredictionFile(line_no, "expected input, gold and at least one candidate");
    RankedPredictionRecord rec;
    rec.input_text = fields[0];
    rec.gold = fields[1];
    if (text::trim(rec.gold).empty()) throw MalformedPredictionFile(line_no, "empty gold");
    bool any = false;
    for (std::size_t i = 2; i < fields.size(); ++i) {
      any = any || !text::trim(fields[i]).empty();
      rec.candidates.push_back(std::move(fields[i]));
    }
    if (!any) throw MalformedPredictionFile(line_no, "empty candidate list");
    records.push_back(std::move(rec));
  }
  if (records.empty()) throw EmptyInput("prediction file has no records");
  return records;
}

EvalReport evaluate(const std::vector<RankedPredictionRecord>& records, const std::vector<int>& ks) {
  EvalReport report;
  report.n = records.size();
  report.ks = ks;
  for (int k : ks) report.hits.push_back(hits_at_k(records, k));
  report.mrr = mrr(records);
  return report;
}

EvalReport evaluate(const std::filesystem::path& prediction_file, const std::vector<int>& ks) {
  return evaluate(parse_predictions(read_file(prediction_file)), ks);
}

}  // namespace cpctaxo
