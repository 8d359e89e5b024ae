#pragma once

#include <string>
#include <vector>

#include "cojump/series.hpp"

namespace cojump {

// Shortest round-trip representation via std::to_chars; locale independent
// and byte-stable across runs.
std::string format_double(double x);
double parse_double(const std::string& s);  // locale independent

// Input CSV with header "date,price", ISO-8601 dates.
PriceSeries read_price_csv(const std::string& path);
void write_price_csv(const std::string& path, const PriceSeries& p);

ReturnSeries read_return_csv(const std::string& path);
void write_return_csv(const std::string& path, const ReturnSeries& r);

// Minute-price CSV with header "timestamp,price" at fixed spacing.
std::vector<double> read_intraday_prices(const std::string& path);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);
void write_csv(const std::string& path, const CsvTable& t);

std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace cojump
