#include <quandlekit/qdl.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace quandlekit {

namespace {
    auto split_lines(std::string_view text) -> std::vector<std::string_view>
    {
        std::vector<std::string_view> lines;
        std::size_t start = 0;
        while (start < text.size()) {
            auto end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            auto line = text.substr(start, end - start);
            if (! line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            lines.push_back(line);
            start = end + 1;
        }
        return lines;
    }

    auto is_blank(std::string_view line) -> bool
    {
        return line.find_first_not_of(" \t") == std::string_view::npos;
    }

    auto tokens(std::string_view line, std::size_t line_no) -> std::vector<std::int64_t>
    {
        std::vector<std::int64_t> values;
        std::size_t pos = 0;
        while (true) {
            pos = line.find_first_not_of(" \t", pos);
            if (pos == std::string_view::npos)
                break;
            auto end = line.find_first_of(" \t", pos);
            if (end == std::string_view::npos)
                end = line.size();
            auto token = line.substr(pos, end - pos);
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw QdlParseError(line_no, "not an integer: '" + std::string{token} + "'");
            values.push_back(value);
            pos = end;
        }
        return values;
    }
}

auto parse_qdl(std::string_view text) -> QdlDocument
{
    QdlDocument doc;
    auto lines = split_lines(text);
    std::size_t n = 0;
    bool have_n = false;
    std::size_t last_line = 0;

    for (std::size_t k = 0; k < lines.size(); ++k) {
        const auto line_no = k + 1;
        auto line = lines[k];
        if (! line.empty() && line.front() == '#') {
            doc.comments.emplace_back(line);
            continue;
        }
        if (is_blank(line))
            continue;
        last_line = line_no;
        auto values = tokens(line, line_no);
        if (! have_n) {
            if (values.size() != 1 || values[0] < 1)
                throw QdlParseError(line_no, "expected the order n (a positive integer)");
            n = static_cast<std::size_t>(values[0]);
            have_n = true;
            continue;
        }
        if (doc.rows.size() == n)
            throw QdlParseError(line_no, "more than " + std::to_string(n) + " table rows");
        if (values.size() != n)
            throw QdlParseError(line_no,
                "expected " + std::to_string(n) + " entries, found " + std::to_string(values.size()));
        doc.rows.push_back(std::move(values));
    }
    if (! have_n)
        throw QdlParseError(lines.size() + 1, "empty table: missing order line");
    if (doc.rows.size() != n)
        throw QdlParseError(last_line + 1,
            "expected " + std::to_string(n) + " table rows, found " + std::to_string(doc.rows.size()));
    return doc;
}

auto read_qdl_file(const std::filesystem::path & path) -> QdlDocument
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw QuandleError(ErrorKind::ParseError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_qdl(buffer.str());
}

auto format_qdl(const QdlDocument & doc) -> std::string
{
    std::string out;
    for (const auto & c : doc.comments)
        out += c + '\n';
    out += std::to_string(doc.rows.size()) + '\n';
    for (const auto & row : doc.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j != 0)
                out += ' ';
            out += std::to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

auto format_qdl(const QuandleTable & q, const std::vector<std::string> & comments) -> std::string
{
    return format_qdl(QdlDocument{comments, q.to_rows()});
}

void write_qdl_file(const std::filesystem::path & path, const QuandleTable & q, const std::vector<std::string> & comments)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw QuandleError(ErrorKind::ParseError, "cannot write " + path.string());
    out << format_qdl(q, comments);
}

} // namespace quandlekit
