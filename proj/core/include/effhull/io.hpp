#pragma once

#include <string>
#include <vector>

#include "effhull/matrix.hpp"
#include "effhull/tolerance.hpp"
#include "effhull/types.hpp"

namespace effhull {

// Raw matrix rows from a .csv (n lines of n comma-separated numbers) or
// .json ({"n": int, "rows": [[...], ...]}) file, chosen by extension.
std::vector<std::vector<double>> read_raw_matrix(const std::string& path);

// read_raw_matrix followed by reciprocity validation.
ReciprocalMatrix read_matrix(const std::string& path, const ToleranceConfig& cfg = {});

// All numbers in a CSV file (any line layout) in reading order.
std::vector<double> read_numbers(const std::string& path);

PositiveVector read_positive_vector(const std::string& path);
WeightVector read_weight_vector(const std::string& path);

// Shortest decimal form with 12 significant digits (printf %.12g).
std::string format_number(double v);

// Round to the value format_number would reparse; keeps emitted JSON numbers
// byte-stable across platforms with identical doubles.
double round12(double v);

// One CSV line, comma-separated, no trailing newline.
std::string vector_csv(const std::vector<double>& v);

// n CSV lines, one per row, each newline-terminated.
std::string matrix_csv(const ReciprocalMatrix& A);

// JSON text {"n": ..., "rows": [[...], ...]} with rounded numbers.
std::string matrix_json(const ReciprocalMatrix& A);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace effhull
