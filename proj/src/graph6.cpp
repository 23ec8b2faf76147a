#include "sgt/graph6.hpp"

#include <stdexcept>

namespace sgt {

namespace {
constexpr int kMaxN = 258047;

void check_byte(char c) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside 63..126");
}
}  // namespace

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxN) throw std::invalid_argument("graph6: graph too large");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, bits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph parse_graph6(const std::string& text) {
    // tolerate surrounding whitespace / trailing newline
    size_t begin = text.find_first_not_of(" \t\r\n");
    size_t end = text.find_last_not_of(" \t\r\n");
    if (begin == std::string::npos) throw std::invalid_argument("graph6: empty input");
    std::string s = text.substr(begin, end - begin + 1);

    for (char c : s) check_byte(c);
    size_t pos = 0;
    long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~') throw std::invalid_argument("graph6: 36-bit sizes not supported");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated size");
        n = (long(s[1] - 63) << 12) | (long(s[2] - 63) << 6) | long(s[3] - 63);
        pos = 4;
    } else {
        n = s[0] - 63;
        pos = 1;
    }
    if (n > kMaxN) throw std::invalid_argument("graph6: graph too large");

    const long pairs = n * (n - 1) / 2;
    const size_t need = static_cast<size_t>((pairs + 5) / 6);
    if (s.size() - pos != need) throw std::invalid_argument("graph6: payload length mismatch");

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = s[pos + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    // padding must be zero
    for (long b = bit; b < static_cast<long>(need) * 6; ++b) {
        int byte = s[pos + b / 6] - 63;
        if ((byte >> (5 - b % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace sgt
