#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cli.hpp"

namespace isores::cli {

struct Absent {};
// A residual-sized number: printed in scientific notation in text and CSV.
struct Small {
    double value;
};

using Value = std::variant<Absent, double, Small, long long, bool, std::string>;

struct Field {
    std::string key;
    Value value;
};

// Ordered key/value list; the order is the output order in every format.
class Record {
public:
    Record& add(std::string key, Value v);
    const std::vector<Field>& fields() const noexcept { return fields_; }

private:
    std::vector<Field> fields_;
};

// Six decimals, "inf" for infinities.
std::string fixed6(double x);

// One record: "key value" lines, a one-row CSV, or a JSON object.
void write_record(std::ostream& out, Format format, const Record& r);
// Records sharing the first record's keys: aligned columns, CSV rows, or a
// JSON array.
void write_table(std::ostream& out, Format format, const std::vector<Record>& rows);

}  // namespace isores::cli
