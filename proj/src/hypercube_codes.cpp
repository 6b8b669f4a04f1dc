#include "ballsearch/hypercube_codes.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

namespace ballsearch {

std::uint64_t v_ball(unsigned n, unsigned r) {
  if (n > 63) throw std::invalid_argument("v_ball supports n <= 63");
  if (r >= n) return std::uint64_t{1} << n;
  std::uint64_t binom = 1;  // C(n, i)
  std::uint64_t sum = 1;
  for (unsigned i = 1; i <= r; ++i) {
    binom = binom * (n - i + 1) / i;
    sum += binom;
  }
  return sum;
}

std::uint64_t sphere_covering_lower(unsigned n, unsigned r) {
  const auto total = std::uint64_t{1} << n;
  const auto v = v_ball(n, r);
  return (total + v - 1) / v;
}

std::string to_string(CodeProvenance p) {
  switch (p) {
    case CodeProvenance::Greedy: return "greedy";
    case CodeProvenance::Exact: return "exact";
    case CodeProvenance::Hamming: return "hamming";
    case CodeProvenance::User: return "user";
  }
  return "user";
}

QuerySet CoveringCode::queries() const {
  QuerySet q;
  for (auto c : codewords) q.push_back({c, r});
  return q;
}

namespace {

// Every vector of weight <= r, i.e. the ball around 0.
std::vector<Codeword> ball_offsets(unsigned n, unsigned r) {
  std::vector<Codeword> out;
  for (Codeword x = 0; x < (Codeword{1} << n); ++x)
    if (static_cast<unsigned>(std::popcount(x)) <= r) out.push_back(x);
  return out;
}

void check_dimension(unsigned n, unsigned limit) {
  if (n > limit) throw std::invalid_argument("dimension " + std::to_string(n) + " exceeds " + std::to_string(limit));
}

}  // namespace

bool covers(unsigned n, unsigned r, const std::vector<Codeword>& codewords) {
  check_dimension(n, 24);
  const auto offsets = ball_offsets(n, r);
  std::vector<bool> hit(std::size_t{1} << n, false);
  for (auto c : codewords) {
    if (c >= (Codeword{1} << n)) return false;
    for (auto o : offsets) hit[c ^ o] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

CoveringCode greedy_covering(unsigned n, unsigned r) {
  check_dimension(n, 20);
  const auto offsets = ball_offsets(n, r);
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint32_t> gain(total, static_cast<std::uint32_t>(offsets.size()));
  std::vector<bool> covered(total, false);

  struct Entry {
    std::uint32_t gain;
    Codeword word;
  };
  auto worse = [](const Entry& a, const Entry& b) { return a.gain != b.gain ? a.gain < b.gain : a.word > b.word; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (Codeword c = 0; c < total; ++c) heap.push({gain[c], c});

  CoveringCode code{n, r, {}, CodeProvenance::Greedy, false};
  std::size_t uncovered = total;
  while (uncovered > 0) {
    const auto top = heap.top();
    heap.pop();
    // Gains only decrease, so a stale entry overstates; re-queue it at its true value.
    if (top.gain != gain[top.word]) {
      heap.push({gain[top.word], top.word});
      continue;
    }
    code.codewords.push_back(top.word);
    for (auto o : offsets) {
      const auto x = top.word ^ o;
      if (covered[x]) continue;
      covered[x] = true;
      --uncovered;
      for (auto o2 : offsets) --gain[x ^ o2];
    }
  }
  code.verified = covers(n, r, code.codewords);
  return code;
}

namespace {

struct BudgetExhausted {};

class CoverSearch {
 public:
  CoverSearch(unsigned n, unsigned r, std::vector<Codeword> incumbent, std::uint64_t budget)
      : offsets_(ball_offsets(n, r)),
        lower_(sphere_covering_lower(n, r)),
        best_(std::move(incumbent)),
        budget_(budget),
        count_(std::size_t{1} << n, 0),
        uncovered_(std::size_t{1} << n) {}

  void run() {
    if (best_.size() <= lower_) return;
    add(0);
    dfs();
  }

  const std::vector<Codeword>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void add(Codeword c) {
    code_.push_back(c);
    for (auto o : offsets_)
      if (count_[c ^ o]++ == 0) --uncovered_;
  }
  void remove() {
    const auto c = code_.back();
    code_.pop_back();
    for (auto o : offsets_)
      if (--count_[c ^ o] == 0) ++uncovered_;
  }
  std::size_t new_coverage(Codeword c) const {
    std::size_t k = 0;
    for (auto o : offsets_) k += count_[c ^ o] == 0;
    return k;
  }

  // Returns true once an optimal (sphere-bound) cover is known.
  bool dfs() {
    if (++nodes_ > budget_) throw BudgetExhausted{};
    if (uncovered_ == 0) {
      if (code_.size() < best_.size()) best_ = code_;
      return best_.size() <= lower_;
    }
    const auto v = offsets_.size();
    if (code_.size() + (uncovered_ + v - 1) / v >= best_.size()) return false;

    Codeword u = 0;
    while (count_[u] != 0) ++u;
    std::vector<std::pair<std::size_t, Codeword>> choices;
    for (auto o : offsets_) choices.emplace_back(new_coverage(u ^ o), u ^ o);
    std::sort(choices.begin(), choices.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (const auto& [gain, c] : choices) {
      add(c);
      const bool done = dfs();
      remove();
      if (done) return true;
    }
    return false;
  }

  std::vector<Codeword> offsets_;
  std::uint64_t lower_;
  std::vector<Codeword> best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> count_;
  std::size_t uncovered_;
  std::vector<Codeword> code_;
};

}  // namespace

ExactCoveringResult exact_K(unsigned n, unsigned r, const SearchOptions& opts) {
  check_dimension(n, 20);
  const auto budget = opts.effective_budget(n);
  auto greedy = greedy_covering(n, r);
  CoverSearch search(n, r, greedy.codewords, budget);
  ExactCoveringResult result;
  try {
    search.run();
  } catch (const BudgetExhausted&) {
    result.status = SearchStatus::BudgetExceeded;
  }
  result.nodes_explored = search.nodes();
  auto words = search.best();
  std::sort(words.begin(), words.end());
  result.code = CoveringCode{n, r, std::move(words), CodeProvenance::Exact, false};
  result.code.verified = covers(n, r, result.code.codewords);
  result.meets_sphere_bound = result.code.size() == sphere_covering_lower(n, r);
  if (result.status != SearchStatus::Solved) result.code.provenance = CodeProvenance::Greedy;
  return result;
}

CoveringCode hamming_code(unsigned n) {
  if (n != 7) throw std::invalid_argument("hamming_code is defined for n = 7 only");
  CoveringCode code{7, 1, {}, CodeProvenance::Hamming, false};
  for (Codeword v = 0; v < 128; ++v) {
    unsigned syndrome = 0;
    for (unsigned i = 0; i < 7; ++i)
      if ((v >> i) & 1) syndrome ^= i + 1;
    if (syndrome == 0) code.codewords.push_back(v);
  }
  code.verified = covers(7, 1, code.codewords);
  return code;
}

FanoCode fano_code() {
  // Lines over points 1..7; point p is bit p-1.
  constexpr int lines[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
  FanoCode f;
  for (int i = 0; i < 7; ++i)
    for (int p : lines[i]) f.lines[i] |= Codeword{1} << (p - 1);
  return f;
}

QuerySet fano_queries() {
  QuerySet q;
  for (auto line : fano_code().lines) q.push_back({line, 3});
  return q;
}

std::uint8_t fano_signature(Codeword u) {
  std::uint8_t s = 0;
  const auto f = fano_code();
  for (int i = 0; i < 7; ++i)
    if (std::popcount((u ^ f.lines[i]) & 0x7Fu) <= 3) s |= std::uint8_t(1u << i);
  return s;
}

std::string to_string(FanoCase c) {
  switch (c) {
    case FanoCase::Empty: return "empty";
    case FanoCase::Point: return "point";
    case FanoCase::Pair: return "pair";
    case FanoCase::Line: return "line";
    case FanoCase::NonLine: return "non-line";
    case FanoCase::Complement: return "complement";
  }
  return "unknown";
}

FanoPrediction fano_case_analysis(Codeword u) {
  u &= 0x7F;
  const auto f = fano_code();
  const int weight = std::popcount(u);
  FanoPrediction p;
  auto select = [&](auto keep) {
    std::uint8_t s = 0;
    for (int i = 0; i < 7; ++i)
      if (keep(std::popcount(f.lines[i] & u))) s |= std::uint8_t(1u << i);
    return s;
  };
  switch (weight) {
    case 0:
      p.label = FanoCase::Empty;
      p.predicted_balls = 0x7F;
      break;
    case 1:
      p.label = FanoCase::Point;
      p.predicted_balls = select([](int meet) { return meet == 1; });
      break;
    case 2:
      p.label = FanoCase::Pair;
      p.predicted_balls = select([](int meet) { return meet >= 1; });
      break;
    case 3:
      if (std::find(f.lines.begin(), f.lines.end(), u) != f.lines.end()) {
        p.label = FanoCase::Line;
        p.predicted_balls = select([](int meet) { return meet == 3; });
      } else {
        p.label = FanoCase::NonLine;
        p.predicted_balls = select([](int meet) { return meet == 2; });
      }
      break;
    default: {
      const auto inner = fano_case_analysis(~u & 0x7F);
      p.label = FanoCase::Complement;
      p.complement_label = inner.label;
      p.predicted_balls = static_cast<std::uint8_t>(~inner.predicted_balls & 0x7F);
    }
  }
  p.predicted_size = static_cast<unsigned>(std::popcount(p.predicted_balls));
  return p;
}

FanoVerification fano_verify() {
  FanoVerification v;
  std::array<int, 128> owner;
  owner.fill(-1);
  v.separating = true;
  v.complement_partition = true;
  v.high_weight_even = true;
  for (Codeword u = 0; u < 128; ++u) {
    const auto s = fano_signature(u);
    if (owner[s] >= 0) v.separating = false;
    owner[s] = static_cast<int>(u);
    if (s == 0) v.empty_signature_vertices.push_back(u);

    const auto p = fano_case_analysis(u);
    if (p.predicted_balls != s || p.predicted_size != static_cast<unsigned>(std::popcount(s)))
      v.case_table_mismatches.push_back(u);

    const auto sc = fano_signature(~u & 0x7F);
    if ((s & sc) != 0 || (s | sc) != 0x7F) v.complement_partition = false;
    if (std::popcount(u) > 3 && std::popcount(s) % 2 != 0) v.high_weight_even = false;
  }
  return v;
}

}  // namespace ballsearch
