#pragma once

#include <string>
#include <vector>

namespace cojump {

struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  // Days since 1970-01-01, proleptic Gregorian.
  long serial() const;
  static Date from_serial(long days);
  static Date parse(const std::string& iso);  // "YYYY-MM-DD"
  std::string to_string() const;

  friend bool operator==(const Date& a, const Date& b) {
    return a.year == b.year && a.month == b.month && a.day == b.day;
  }
  friend bool operator<(const Date& a, const Date& b) {
    return a.serial() < b.serial();
  }
};

enum class Units { decimal, percent };

std::string to_string(Units u);
Units units_from_string(const std::string& s);

// Dated positive price observations. Dates strictly increasing.
struct PriceSeries {
  std::vector<Date> dates;
  std::vector<double> prices;

  void validate() const;  // throws std::invalid_argument on violation
  std::size_t size() const { return prices.size(); }
};

// Dated returns with a units tag. Rescaling keeps the pre-conversion
// values so that a round trip restores the original bit patterns.
struct ReturnSeries {
  std::vector<Date> dates;
  std::vector<double> values;
  Units units = Units::decimal;

  std::size_t size() const { return values.size(); }

  // Stash left behind by rescale(); empty for freshly built series.
  std::vector<double> stash_values;
  Units stash_units = Units::decimal;
  bool has_stash = false;
};

ReturnSeries to_log_returns(const PriceSeries& p);
ReturnSeries rescale(const ReturnSeries& r, Units target);

// Synthetic consecutive calendar dates, used by simulators.
std::vector<Date> make_dates(Date start, std::size_t n);

}  // namespace cojump
