#include "cxh/io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace cxh {

namespace {

struct Line {
    std::string text;   // content with any comment stripped
    std::string comment;  // text after '#', if any
    int number;         // 1-based position in the input
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        std::string content = raw, comment;
        if (auto pos = raw.find('#'); pos != std::string::npos) {
            content = raw.substr(0, pos);
            comment = raw.substr(pos + 1);
        }
        bool blank = content.find_first_not_of(" \t\r") == std::string::npos;
        if (blank && comment.empty()) continue;
        out.push_back({blank ? std::string() : content, comment, number});
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw parse_error("edge list, line " + std::to_string(line) + ": " + what);
}

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
    std::istringstream in(s);
    std::string extra;
    if (!(in >> a >> b)) return false;
    if (in >> extra) return false;
    return true;
}

// "# v <id> <label...>": the reserved label-comment form.
bool parse_label_comment(const std::string& comment, int n, int& id, std::string& label) {
    std::istringstream in(comment);
    std::string tag;
    if (!(in >> tag) || tag != "v") return false;
    long long v;
    if (!(in >> v) || v < 0 || v >= n) return false;
    std::getline(in, label);
    auto start = label.find_first_not_of(" \t");
    label = start == std::string::npos ? std::string() : label.substr(start);
    id = int(v);
    return true;
}

const char* const kGraph6Prefix = ">>graph6<<";

}  // namespace

Graph parse_edge_list(const std::string& text) {
    auto lines = significant_lines(text);
    std::size_t at = 0;
    while (at < lines.size() && lines[at].text.empty()) ++at;  // comment-only lines
    if (at == lines.size()) throw parse_error("edge list: missing header");

    long long n, m;
    if (!parse_two_ints(lines[at].text, n, m) || n < 0 || m < 0)
        fail(lines[at].number, "malformed header, expected \"n m\"");
    Graph g(static_cast<int>(n));
    ++at;

    long long read = 0;
    for (; at < lines.size(); ++at) {
        const Line& line = lines[at];
        if (line.text.empty()) {
            int id;
            std::string label;
            if (parse_label_comment(line.comment, g.order(), id, label))
                g.set_label(id, label);
            continue;
        }
        if (read == m) fail(line.number, "trailing content after " + std::to_string(m) + " edges");
        long long u, v;
        if (!parse_two_ints(line.text, u, v))
            fail(line.number, "malformed edge line, expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n) fail(line.number, "vertex id out of range");
        if (u == v) fail(line.number, "self-loop");
        if (u > v) std::swap(u, v);
        if (g.adjacent(int(u), int(v))) fail(line.number, "duplicate edge");
        g.add_edge(int(u), int(v));
        ++read;
    }
    if (read != m)
        throw parse_error("edge list: unexpected end of input, expected " + std::to_string(m) +
                          " edges, found " + std::to_string(read));
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    if (g.has_labels())
        for (int v = 0; v < g.order(); ++v)
            if (!g.label(v).empty()) out << "# v " << v << ' ' << g.label(v) << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    if (s.rfind(kGraph6Prefix, 0) == 0) s = s.substr(std::string(kGraph6Prefix).size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.empty()) throw parse_error("graph6: empty input");

    std::size_t at = 0;
    auto sextet = [&]() -> int {
        if (at >= s.size()) throw parse_error("graph6: truncated input");
        unsigned char c = s[at++];
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range");
        return c - 63;
    };

    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        ++at;
        if (at < s.size() && static_cast<unsigned char>(s[at]) == 126)
            throw parse_error("graph6: order exceeds 64");  // 8-byte form starts beyond 258047
        long long a = sextet(), b = sextet(), c = sextet();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sextet();
    }
    if (n > 64) throw parse_error("graph6: order exceeds 64");

    Graph g(static_cast<int>(n));
    long long bits = n * (n - 1) / 2;
    int buffer = 0, have = 0;
    for (long long j = 1; j < n; ++j)
        for (long long i = 0; i < j; ++i) {
            if (have == 0) {
                buffer = sextet();
                have = 6;
            }
            if ((buffer >> (have - 1)) & 1) g.add_edge(int(i), int(j));
            --have;
        }
    if (have > 0 && (buffer & ((1 << have) - 1)) != 0)
        throw parse_error("graph6: nonzero padding bits");
    if (at != s.size()) throw parse_error("graph6: trailing content");
    (void)bits;
    return g;
}

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > 64) throw std::invalid_argument("encode_graph6: order exceeds 64");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back(char(126));
        out.push_back(char(((n >> 12) & 63) + 63));
        out.push_back(char(((n >> 6) & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int buffer = 0, have = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            buffer = (buffer << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++have == 6) {
                out.push_back(char(buffer + 63));
                buffer = 0;
                have = 0;
            }
        }
    if (have > 0) out.push_back(char((buffer << (6 - have)) + 63));
    return out;
}

}  // namespace cxh
