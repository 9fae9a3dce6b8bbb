#include "weylstat/genfun.hpp"

#include <atomic>
#include <bit>
#include <cctype>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

namespace weylstat {

std::string_view character_name(Character c) {
  switch (c) {
    case Character::trivial: return "trivial";
    case Character::sign_length: return "sign_length";
    case Character::sign_neg: return "sign_neg";
    case Character::sign_length_neg: return "sign_length_neg";
  }
  return "?";
}

Character parse_character(std::string_view s) {
  if (s == "trivial") return Character::trivial;
  if (s == "sign_length" || s == "length") return Character::sign_length;
  if (s == "sign_neg" || s == "neg") return Character::sign_neg;
  if (s == "sign_length_neg" || s == "length_neg") return Character::sign_length_neg;
  throw std::invalid_argument("unknown character '" + std::string(s) + "'");
}

void check_character(Character c, Family f) {
  if ((c == Character::sign_neg || c == Character::sign_length_neg) && f != Family::B) {
    throw std::invalid_argument(std::string(character_name(c)) + " is a character of B_n only");
  }
}

StatBinding StatBinding::parse(std::string_view text) {
  StatBinding b;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = text.substr(start, comma - start);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == item.size()) {
      throw std::invalid_argument("binding item '" + std::string(item) + "' is not stat:var");
    }
    const auto var = std::string(item.substr(colon + 1));
    if (!std::isalpha(static_cast<unsigned char>(var[0]))) {
      throw std::invalid_argument("variable name '" + var + "' must start with a letter");
    }
    b.terms.emplace_back(parse_stat(item.substr(0, colon)), var);
    start = comma + 1;
  }
  return b;
}

std::string StatBinding::to_string() const {
  std::string out;
  for (const auto& [s, v] : terms) {
    if (!out.empty()) out += ",";
    out += std::string(stat_name(s)) + ":" + v;
  }
  return out;
}

void check_binding(const StatBinding& b, Family f) {
  std::set<std::string> seen;
  for (const auto& [s, v] : b.terms) {
    if (!seen.insert(v).second) throw std::invalid_argument("variable '" + v + "' bound twice");
    if (f == Family::A && !legal_on_perm(s)) {
      throw std::invalid_argument(std::string(stat_name(s)) + " is not a statistic on S_n");
    }
    if (f != Family::A && !legal_on_signed(s)) {
      throw std::invalid_argument(std::string(stat_name(s)) + " is not a statistic on signed permutations");
    }
    if (f == Family::B && s == Stat::lenD) throw std::invalid_argument("lenD needs family D");
  }
  if (b.terms.size() > 8) throw std::invalid_argument("at most 8 bound statistics are supported");
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

using Packed = std::unordered_map<std::uint64_t, std::int64_t>;

struct ChunkResult {
  std::vector<Packed> cells;
  std::vector<std::uint64_t> counts;
};

int character_sign(Character chi, Family f, StatEvaluator& ev) {
  int parity = 0;
  switch (chi) {
    case Character::trivial: return 1;
    case Character::sign_length:
      parity = f == Family::A ? ev.length_A() : (f == Family::B ? ev.length_B() : ev.length_D());
      break;
    case Character::sign_neg: parity = std::popcount(ev.neg_mask()); break;
    case Character::sign_length_neg: parity = ev.length_B() + std::popcount(ev.neg_mask()); break;
  }
  return parity % 2 == 0 ? 1 : -1;
}

MultiPoly unpack(const std::map<std::uint64_t, std::int64_t>& acc, const StatBinding& b) {
  std::vector<std::string> vars;
  for (const auto& [s, v] : b.terms) vars.push_back(v);
  MultiPoly::Terms t;
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    MultiPoly::Exponents e(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) e[i] = static_cast<std::uint32_t>((key >> (8 * i)) & 0xFFu);
    t.emplace(std::move(e), c);
  }
  return MultiPoly(std::move(vars), std::move(t));
}

}  // namespace

SweepResult classified_genfun(const GroupSpec& spec, Character chi, const StatBinding& binding, int cells,
                              const Classifier& classify, int jobs) {
  validate(spec);
  check_character(chi, spec.family);
  check_binding(binding, spec.family);
  if (cells < 1) throw std::invalid_argument("need at least one cell");
  const bool is_signed = spec.family != Family::A;
  const int threads = resolve_jobs(jobs);
  const auto chunks = make_chunks(spec.n, threads * 4);
  std::vector<ChunkResult> results(chunks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      while (true) {
        const std::size_t k = next.fetch_add(1);
        if (k >= chunks.size()) break;
        ChunkResult& r = results[k];
        r.cells.resize(static_cast<std::size_t>(cells));
        r.counts.assign(static_cast<std::size_t>(cells), 0);
        for_each_element(spec, chunks[k], [&](std::span<const int> w) {
          const int cell = classify ? classify(w) : 0;
          if (cell < 0) return;
          if (cell >= cells) throw std::logic_error("classifier returned an out-of-range cell");
          ++r.counts[static_cast<std::size_t>(cell)];
          StatEvaluator ev(w, is_signed);
          const int sign = character_sign(chi, spec.family, ev);
          std::uint64_t key = 0;
          for (std::size_t i = 0; i < binding.terms.size(); ++i) {
            const int e = ev(binding.terms[i].first);
            if (e > 255) throw std::overflow_error("statistic value exceeds the packed exponent range");
            key |= static_cast<std::uint64_t>(e) << (8 * i);
          }
          r.cells[static_cast<std::size_t>(cell)][key] += sign;
        });
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(chunks.size());
    }
  };

  if (threads <= 1 || chunks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int spawn = std::min<int>(threads, static_cast<int>(chunks.size()));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  SweepResult out;
  out.cell_counts.assign(static_cast<std::size_t>(cells), 0);
  std::vector<std::map<std::uint64_t, std::int64_t>> merged(static_cast<std::size_t>(cells));
  for (const auto& r : results) {
    for (std::size_t c = 0; c < r.cells.size(); ++c) {
      out.cell_counts[c] += r.counts[c];
      out.count += r.counts[c];
      for (const auto& [key, v] : r.cells[c]) merged[c][key] += v;
    }
  }
  for (const auto& m : merged) out.cells.push_back(unpack(m, binding));
  return out;
}

SweepResult twisted_genfun_counted(const GroupSpec& spec, Character chi, const StatBinding& binding, int jobs) {
  return classified_genfun(spec, chi, binding, 1, nullptr, jobs);
}

MultiPoly twisted_genfun(const GroupSpec& spec, Character chi, const StatBinding& binding, int jobs) {
  return twisted_genfun_counted(spec, chi, binding, jobs).cells.front();
}

MultiPoly descent_set_genfun(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("descent_set_genfun supports 1 <= n <= 8");
  std::map<std::uint32_t, std::int64_t> counts;
  for_each_element(GroupSpec::full(Family::A, n), [&](std::span<const int> w) { ++counts[descent_set_A(w).mask()]; });
  std::vector<std::string> vars;
  for (int i = 1; i < n; ++i) vars.push_back("x" + std::to_string(i));
  MultiPoly::Terms t;
  for (auto [mask, c] : counts) {
    MultiPoly::Exponents e(vars.size(), 0);
    for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i - 1)] = (mask >> i) & 1u;
    t.emplace(std::move(e), c);
  }
  return MultiPoly(std::move(vars), std::move(t));
}

MultiPoly odd_length_distribution_A(int n, const std::string& var) {
  return twisted_genfun(GroupSpec::full(Family::A, n), Character::trivial, StatBinding{{{Stat::oddlenA, var}}}, 1);
}

MultiPoly odd_length_distribution_B(int n, const std::string& var) {
  return twisted_genfun(GroupSpec::full(Family::B, n), Character::trivial, StatBinding{{{Stat::oddlenB, var}}}, 1);
}

}  // namespace weylstat
