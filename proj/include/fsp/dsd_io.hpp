#pragma once

#include <string>

#include "fsp/ds_diagram.hpp"

namespace fsp {

// Line-oriented `.dsd` text. Throws ParseError with the offending line.
DsDiagram parse_diagram(const std::string& text);
std::string write_diagram(const DsDiagram& d, const std::string& comment = {});

DsDiagram read_diagram_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fsp
