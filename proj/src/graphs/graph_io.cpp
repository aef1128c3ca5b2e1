#include "pursuit/graph_io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\n' || c == '\r' || c == '\t'; }

int sextet(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) throw ParseError("graph6 record truncated", pos);
    int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.starts_with(kHeader)) pos = kHeader.size();
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (pos >= text.size()) throw ParseError("empty graph6 record", pos);

    long long n = 0;
    if (text[pos] != 126) {
        n = sextet(text, pos++);
    } else if (pos + 1 < text.size() && text[pos + 1] == 126) {
        pos += 2;
        for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(text, pos++);
    } else {
        pos += 1;
        for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(text, pos++);
    }
    if (n > (1 << 20)) throw ParseError("graph6 order too large", pos);

    const long long bits = n * (n - 1) / 2;
    const auto need = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != need)
        throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                             std::to_string(need),
                         text.size() < pos + need ? text.size() : pos + need);
    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t at = pos + static_cast<std::size_t>(k / 6);
            if ((sextet(text, at) >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    // Padding bits must be zero.
    if (k % 6 != 0 && (sextet(text, pos + static_cast<std::size_t>(k / 6)) & ((1 << (6 - k % 6)) - 1)) != 0)
        throw ParseError("graph6 padding bits set", pos + static_cast<std::size_t>(k / 6));
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int i = 2; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int i = 5; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
    }
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = used = 0;
            }
        }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
    return out;
}

std::size_t for_each_graph6(std::istream& in, const std::function<void(const Graph&, std::size_t)>& sink) {
    std::string line;
    std::size_t lineno = 0, skipped = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const ParseError&) {
            ++skipped;
            continue;
        }
        sink(g, lineno);
    }
    return skipped;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = 0, m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list header must be \"n m\"", 0);
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) {
            auto at = in.eof() ? text.size() : static_cast<std::size_t>(in.tellg());
            throw ParseError("edge list ended after " + std::to_string(i) + " of " + std::to_string(m) + " edges", at);
        }
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("bad edge " + std::to_string(u) + " " + std::to_string(v),
                             static_cast<std::size_t>(in.tellg()));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open graph file", path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    bool g6 = path.ends_with(".g6");
    if (!g6 && !path.ends_with(".edges") && !path.ends_with(".txt")) {
        // Edge lists start with a digit; graph6 headers never contain spaces.
        auto first = text.find_first_not_of(" \t\r\n");
        g6 = first != std::string::npos && text.find(' ') == std::string::npos;
    }
    return g6 ? parse_graph6(text.substr(0, text.find('\n'))) : parse_edge_list(text);
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write graph file", path);
    if (path.ends_with(".g6"))
        out << write_graph6(g) << '\n';
    else
        out << write_edge_list(g);
    if (!out) throw IoError("write failed", path);
}

}  // namespace pursuit
