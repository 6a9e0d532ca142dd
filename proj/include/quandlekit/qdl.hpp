#pragma once

#include <quandlekit/quandle.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace quandlekit {

// ".qdl" text tables:
//
//   # optional comment lines
//   n
//   1*1 1*2 ... 1*n
//   ...
//   n*1 n*2 ... n*n
//
// Entries are separated by single spaces on output; any whitespace is
// accepted on input. Comment lines are kept and written back at the top.
struct QdlDocument {
    std::vector<std::string> comments; // full lines, leading '#' included
    RawTable rows;
};

class QdlParseError : public QuandleError {
public:
    QdlParseError(std::size_t line, const std::string & message) :
        QuandleError(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message),
        _line(line)
    {
    }

    auto line() const -> std::size_t { return _line; }

private:
    std::size_t _line;
};

auto parse_qdl(std::string_view text) -> QdlDocument;
auto read_qdl_file(const std::filesystem::path & path) -> QdlDocument;

auto format_qdl(const QdlDocument & doc) -> std::string;
auto format_qdl(const QuandleTable & q, const std::vector<std::string> & comments = {}) -> std::string;
void write_qdl_file(const std::filesystem::path & path, const QuandleTable & q,
    const std::vector<std::string> & comments = {});

} // namespace quandlekit
