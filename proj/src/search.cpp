#include "pentparity/search.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "pentparity/errors.hpp"
#include "pentparity/factor.hpp"
#include "pentparity/swan.hpp"

namespace pentparity {

ShapeRange::ShapeRange(int n_lo, int n_hi, SParity s_parity, NFilter n_filter)
    : n_lo_(n_lo), n_hi_(std::max(n_lo, n_hi)), s_parity_(s_parity), n_filter_(n_filter) {
  if (n_lo < 7) throw DomainError("enumerate: n_lo must be >= 7");
}

int ShapeRange::column_size(int n) const {
  if (n < n_lo_ || n >= n_hi_ || !takes_n(n)) return 0;
  const int s_max = (n - 1) / 3;  // largest s with 3s < n
  if (s_max < first_s()) return 0;
  return (s_max - first_s()) / 2 + 1;
}

std::uint64_t ShapeRange::size() const {
  std::uint64_t total = 0;
  for (int n = n_lo_; n < n_hi_; ++n) total += static_cast<std::uint64_t>(column_size(n));
  return total;
}

ShapeRange::iterator ShapeRange::begin() const {
  iterator it(this, n_lo_, first_s());
  it.settle();
  return it;
}

ShapeRange::iterator ShapeRange::end() const { return iterator(this, n_hi_, 0); }

void ShapeRange::iterator::settle() {
  while (n_ < range_->n_hi_ && (!range_->takes_n(n_) || 3 * s_ >= n_)) {
    ++n_;
    s_ = range_->first_s();
  }
  if (n_ >= range_->n_hi_) {
    n_ = range_->n_hi_;
    s_ = 0;
  }
}

ShapeRange::iterator& ShapeRange::iterator::operator++() {
  s_ += 2;
  settle();
  return *this;
}

ShapeRange enumerate(int n_lo, int n_hi, SParity s_parity, NFilter n_filter) {
  return ShapeRange(n_lo, n_hi, s_parity, n_filter);
}

std::string_view outcome_code(Outcome o) {
  switch (o) {
    case Outcome::irreducible: return "irr";
    case Outcome::reducible_certified: return "red_thm1";
    case Outcome::reducible_square: return "red_square";
    case Outcome::reducible_factor: return "red_smallfac";
    case Outcome::reducible_full: return "red_full";
    case Outcome::error: return "err";
  }
  return "err";
}

std::optional<Outcome> outcome_from_code(std::string_view code) {
  for (Outcome o : {Outcome::irreducible, Outcome::reducible_certified, Outcome::reducible_square,
                    Outcome::reducible_factor, Outcome::reducible_full, Outcome::error}) {
    if (outcome_code(o) == code) return o;
  }
  return std::nullopt;
}

SearchRecord survey_one(const PentShape& shape, const SurveyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SearchRecord rec;
  rec.n = shape.n();
  rec.s = shape.s();
  const bool s_even = shape.s() % 2 == 0;
  try {
    if (options.prune && s_even && pent_certified_reducible(shape)) {
      rec.outcome = Outcome::reducible_certified;
    } else if (s_even && shape.n() % 2 == 0) {
      rec.outcome = Outcome::reducible_square;
    } else {
      const BitPoly f = pent_poly(shape);
      std::optional<int> small;
      if (options.prefilter_depth > 0 && shape.n() > options.prefilter_depth) {
        small = smallest_factor_degree(f, options.prefilter_depth);
      }
      if (small) {
        rec.outcome = Outcome::reducible_factor;
        rec.factor_degree = *small;
      } else {
        rec.outcome = is_irreducible(f) ? Outcome::irreducible : Outcome::reducible_full;
      }
    }
  } catch (const std::exception&) {
    rec.outcome = Outcome::error;
  }
  rec.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return rec;
}

namespace {

std::vector<SearchRecord> survey_column(const ShapeRange& shapes, int n,
                                        const SurveyOptions& options) {
  std::vector<SearchRecord> out;
  out.reserve(static_cast<std::size_t>(shapes.column_size(n)));
  for (int s = shapes.first_s(); 3 * s < n; s += 2) {
    out.push_back(survey_one(PentShape::create(n, s), options));
  }
  return out;
}

}  // namespace

void survey(const ShapeRange& shapes, const SurveyOptions& options,
            const std::function<void(std::span<const SearchRecord>)>& sink) {
  std::vector<int> columns;
  for (int n = shapes.n_lo(); n < shapes.n_hi(); ++n) {
    if (shapes.column_size(n) > 0) columns.push_back(n);
  }
  const std::size_t jobs =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(1, options.jobs)), columns.size());
  if (jobs <= 1) {
    for (int n : columns) sink(survey_column(shapes, n, options));
    return;
  }

  // Workers claim whole n-columns; the calling thread is the only ordering
  // point and hands columns to the sink in ascending n.
  std::vector<std::optional<std::vector<SearchRecord>>> slots(columns.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex mu;
  std::condition_variable ready;

  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (std::size_t w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= columns.size() || abort.load()) return;
        auto recs = survey_column(shapes, columns[i], options);
        {
          std::lock_guard lock(mu);
          slots[i] = std::move(recs);
        }
        ready.notify_all();
      }
    });
  }

  std::exception_ptr failure;
  try {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::vector<SearchRecord> recs;
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return slots[i].has_value(); });
        recs = std::move(*slots[i]);
        slots[i].reset();
      }
      sink(recs);
    }
  } catch (...) {
    failure = std::current_exception();
    abort = true;
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<SearchRecord> survey(const ShapeRange& shapes, const SurveyOptions& options) {
  std::vector<SearchRecord> out;
  survey(shapes, options,
         [&](std::span<const SearchRecord> col) { out.insert(out.end(), col.begin(), col.end()); });
  return out;
}

std::vector<SearchRecord> certificate_violations(std::span<const SearchRecord> records) {
  std::vector<SearchRecord> out;
  for (const SearchRecord& r : records) {
    const int res = r.n % 8;
    if (r.outcome == Outcome::irreducible && r.s % 2 == 0 && res != 1 && res != 7) {
      out.push_back(r);
    }
  }
  return out;
}

double SurveyStats::frequency() const {
  return total_checked == 0 ? 0.0
                            : static_cast<double>(total_irreducible) /
                                  static_cast<double>(total_checked);
}

double SurveyStats::frequency_n_pm1() const {
  return checked_n_pm1 == 0 ? 0.0
                            : static_cast<double>(total_irreducible) /
                                  static_cast<double>(checked_n_pm1);
}

SurveyStats stats(std::span<const SearchRecord> records) {
  SurveyStats st;
  std::set<int> all_n;
  std::set<int> irr_n;
  for (const SearchRecord& r : records) {
    ++st.total_checked;
    all_n.insert(r.n);
    if (r.n % 8 == 1 || r.n % 8 == 7) ++st.checked_n_pm1;
    if (r.outcome != Outcome::irreducible) continue;
    ++st.total_irreducible;
    ++st.n_mod8[static_cast<std::size_t>(r.n % 8)];
    ++st.s_mod8[static_cast<std::size_t>(r.s % 8)];
    irr_n.insert(r.n);
  }
  st.distinct_n_checked = all_n.size();
  st.distinct_n_with_irr = irr_n.size();
  return st;
}

ResumePoint plan_resume(std::span<const SearchRecord> existing, const ShapeRange& shapes) {
  ResumePoint rp{0, shapes.n_lo()};
  std::size_t pos = 0;
  for (int n = shapes.n_lo(); n < shapes.n_hi(); ++n) {
    const int want = shapes.column_size(n);
    if (want == 0) {
      rp.next_n = n + 1;
      continue;
    }
    bool complete = pos + static_cast<std::size_t>(want) <= existing.size();
    for (int i = 0; complete && i < want; ++i) {
      const SearchRecord& r = existing[pos + static_cast<std::size_t>(i)];
      complete = r.n == n && r.s == shapes.first_s() + 2 * i;
    }
    if (!complete) break;
    pos += static_cast<std::size_t>(want);
    rp.keep_records = pos;
    rp.next_n = n + 1;
  }
  return rp;
}

}  // namespace pentparity
