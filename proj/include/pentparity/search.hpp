#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pentparity/bitpoly.hpp"

namespace pentparity {

enum class SParity { even, odd };
enum class NFilter { odd_only, all };

// Lazily enumerates every (n, s) with n_lo <= n < n_hi, s of the requested
// parity, n > 3s and n matching the filter, ascending by n then s.
class ShapeRange {
 public:
  ShapeRange(int n_lo, int n_hi, SParity s_parity, NFilter n_filter);

  class iterator {
   public:
    using value_type = PentShape;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    PentShape operator*() const { return PentShape::create(n_, s_); }
    iterator& operator++();
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.n_ == b.n_ && a.s_ == b.s_;
    }

   private:
    friend class ShapeRange;
    iterator(const ShapeRange* r, int n, int s) : range_(r), n_(n), s_(s) {}
    void settle();

    const ShapeRange* range_ = nullptr;
    int n_ = 0;
    int s_ = 0;
  };

  iterator begin() const;
  iterator end() const;

  // Number of shapes, without materialising them.
  std::uint64_t size() const;

  int n_lo() const { return n_lo_; }
  int n_hi() const { return n_hi_; }
  SParity s_parity() const { return s_parity_; }
  NFilter n_filter() const { return n_filter_; }

  // Shapes in the column of a single n.
  int first_s() const { return s_parity_ == SParity::even ? 2 : 1; }
  bool takes_n(int n) const { return n_filter_ == NFilter::all || n % 2 != 0; }
  int column_size(int n) const;

 private:
  int n_lo_;
  int n_hi_;
  SParity s_parity_;
  NFilter n_filter_;
};

ShapeRange enumerate(int n_lo, int n_hi, SParity s_parity, NFilter n_filter);

enum class Outcome {
  irreducible,        // irr
  reducible_certified, // red_thm1: closed-form certificate, no polynomial work
  reducible_square,   // red_square: n and s both even
  reducible_factor,   // red_smallfac: prefilter found a factor of degree <= depth
  reducible_full,     // red_full: Rabin test failed
  error,              // err: the item could not be evaluated
};

std::string_view outcome_code(Outcome o);
std::optional<Outcome> outcome_from_code(std::string_view code);

struct SearchRecord {
  int n = 0;
  int s = 0;
  Outcome outcome = Outcome::error;
  int factor_degree = 0;  // smallest factor degree for reducible_factor, else 0
  std::chrono::microseconds elapsed{0};

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

struct SurveyOptions {
  bool prune = true;
  int prefilter_depth = 13;  // 0 disables
  int jobs = 1;
};

// Evaluates each shape. Records are delivered to `sink` in input order, one
// n-column at a time, whatever the number of workers.
void survey(const ShapeRange& shapes, const SurveyOptions& options,
            const std::function<void(std::span<const SearchRecord>)>& sink);
std::vector<SearchRecord> survey(const ShapeRange& shapes, const SurveyOptions& options);

// Single-shape evaluation used by the survey.
SearchRecord survey_one(const PentShape& shape, const SurveyOptions& options);

// Records contradicting the certificate: irreducible with even s and
// n != +-1 (mod 8). Empty in a correct run.
std::vector<SearchRecord> certificate_violations(std::span<const SearchRecord> records);

// Frequency of irreducibility among arbitrary binary polynomials of these
// degrees, quoted for comparison; not derived here.
inline constexpr double kArbitraryPolynomialBaseline = 0.0013;

struct SurveyStats {
  std::uint64_t total_checked = 0;
  std::uint64_t total_irreducible = 0;
  std::array<std::uint64_t, 8> n_mod8{};  // irreducible records by n mod 8
  std::array<std::uint64_t, 8> s_mod8{};  // irreducible records by s mod 8
  std::uint64_t distinct_n_checked = 0;
  std::uint64_t distinct_n_with_irr = 0;
  std::uint64_t checked_n_pm1 = 0;  // records with n = +-1 (mod 8)

  double frequency() const;         // irreducible / checked
  double frequency_n_pm1() const;   // irreducible / checked_n_pm1

  friend bool operator==(const SurveyStats&, const SurveyStats&) = default;
};

SurveyStats stats(std::span<const SearchRecord> records);

// --- flat-file formats -------------------------------------------------------

inline constexpr std::string_view kCsvHeader = "n,s,outcome,elapsed_us";

void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, std::span<const SearchRecord> records);
void write_jsonl(std::ostream& out, std::span<const SearchRecord> records);

// Parses a CSV with the header above. Throws ParseError on malformed rows.
std::vector<SearchRecord> read_csv(std::istream& in);

std::string stats_json(const SurveyStats& st);

// Resume support: given the rows already written for `shapes`, the number of
// leading complete n-columns' rows to keep and the n to restart from.
struct ResumePoint {
  std::size_t keep_records = 0;
  int next_n = 0;
};
ResumePoint plan_resume(std::span<const SearchRecord> existing, const ShapeRange& shapes);

}  // namespace pentparity
