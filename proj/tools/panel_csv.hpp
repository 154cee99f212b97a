#pragma once

#include <iosfwd>
#include <string>

#include "fpdea/errors.hpp"
#include "fpdea/panel.hpp"

namespace fpdea::cli {

// A panel file failed to parse; messages carry 1-based line numbers.
class CsvError : public Error {
  public:
    using Error::Error;
};

// Header must be dmu,x1..xM,y1..yS with at least one input and one
// output; every data row needs a label and M+S plain decimal numbers.
DmuPanel load_panel_csv(std::istream& in);
DmuPanel load_panel_csv_file(const std::string& path);

}  // namespace fpdea::cli
