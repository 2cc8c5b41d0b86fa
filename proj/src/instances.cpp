#include "vsmp/instances.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>

#include "vsmp/error.hpp"

namespace vsmp {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        if (current.back() == '\r') current.pop_back();
        lines.push_back(std::move(current));
    }
    return lines;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

long long parse_ll(const std::string& tok, std::size_t line, const std::string& what) {
    std::istringstream iss(tok);
    long long value = 0;
    char extra = 0;
    if (!(iss >> value) || (iss >> extra)) {
        throw ParseError(line, "expected " + what + ", got '" + tok + "'");
    }
    return value;
}

double parse_double(const std::string& tok, std::size_t line) {
    std::istringstream iss(tok);
    double value = 0;
    char extra = 0;
    if (!(iss >> value) || (iss >> extra)) {
        throw ParseError(line, "expected a numeric value, got '" + tok + "'");
    }
    return value;
}

int to_int_param(long long v, const std::string& what) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw InvalidParameter(what + " " + std::to_string(v) + " out of range");
    }
    return static_cast<int>(v);
}

} // namespace

Graph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw InvalidParameter("grid dimensions must be at least 1, got " +
                               std::to_string(rows) + "x" + std::to_string(cols));
    }
    const long long total = 1LL * rows * cols;
    if (total > std::numeric_limits<int>::max()) {
        throw InstanceTooLarge("grid " + std::to_string(rows) + "x" +
                               std::to_string(cols) + " has too many vertices");
    }
    const int n = static_cast<int>(total);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(2) * static_cast<std::size_t>(n));
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) {
            const Vertex v = (r - 1) * cols + c;
            if (c < cols) edges.emplace_back(v, v + 1);
            if (r < rows) edges.emplace_back(v, v + cols);
        }
    }
    return Graph(n, edges);
}

Graph gen_random_tree(int n, RandomSource& rng) {
    if (n < 1) {
        throw InvalidParameter("tree size must be at least 1, got " + std::to_string(n));
    }
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{1, 2}});

    std::vector<Vertex> prufer(static_cast<std::size_t>(n - 2));
    for (auto& a : prufer) a = static_cast<Vertex>(rng.next_uint(static_cast<std::uint64_t>(n))) + 1;

    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
    for (Vertex a : prufer) degree[static_cast<std::size_t>(a)] += 1;

    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<Vertex>> leaves;
    for (Vertex v = 1; v <= n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n - 1));
    for (Vertex a : prufer) {
        const Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, a);
        if (--degree[static_cast<std::size_t>(a)] == 1) leaves.push(a);
    }
    const Vertex u = leaves.top();
    leaves.pop();
    const Vertex v = leaves.top();
    edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph gen_path(int n) {
    if (n < 1) {
        throw InvalidParameter("path size must be at least 1, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph gen_cycle(int n) {
    if (n < 3) {
        throw InvalidParameter("cycle size must be at least 3, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(1, n);
    return Graph(n, edges);
}

Graph gen_complete(int n) {
    if (n < 1) {
        throw InvalidParameter("complete graph size must be at least 1, got " +
                               std::to_string(n));
    }
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph gen_star(int k) {
    if (k < 1) {
        throw InvalidParameter("star leaf count must be at least 1, got " +
                               std::to_string(k));
    }
    std::vector<Edge> edges;
    for (Vertex v = 2; v <= k + 1; ++v) edges.emplace_back(1, v);
    return Graph(k + 1, edges);
}

Graph parse_edge_list(const std::string& text) {
    const auto lines = split_lines(text);
    long long n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto toks = tokens_of(lines[i]);
        if (toks.empty() || toks.front().front() == '#') continue;
        if (n < 0) {
            if (toks.size() != 2) {
                throw ParseError(line_no, "expected header 'n m'");
            }
            n = parse_ll(toks[0], line_no, "a vertex count");
            m = parse_ll(toks[1], line_no, "an edge count");
            if (n < 1 || m < 0) {
                throw ParseError(line_no, "header 'n m' needs n >= 1 and m >= 0");
            }
            continue;
        }
        if (toks.size() != 2) {
            throw ParseError(line_no, "expected edge 'u v'");
        }
        const long long u = parse_ll(toks[0], line_no, "a vertex");
        const long long v = parse_ll(toks[1], line_no, "a vertex");
        if (u < 1 || u > n || v < 1 || v > n) {
            throw InvalidVertex("line " + std::to_string(line_no) + ": vertex " +
                                std::to_string(u < 1 || u > n ? u : v) +
                                " outside 1.." + std::to_string(n));
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (n < 0) {
        throw ParseError(lines.size() + 1, "missing header 'n m'");
    }
    Graph g(static_cast<int>(n), edges);
    if (g.num_edges() != m) {
        throw ParseError(lines.size() + 1,
                         "header declares " + std::to_string(m) + " edges, file has " +
                         std::to_string(g.num_edges()) + " distinct");
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
    return out.str();
}

Graph parse_matrix_market(const std::string& text) {
    const auto lines = split_lines(text);
    if (lines.empty() || lower(lines[0]).rfind("%%matrixmarket", 0) != 0) {
        throw UnsupportedFormat("missing %%MatrixMarket banner");
    }
    const auto banner = tokens_of(lower(lines[0]));
    if (banner.size() != 5) {
        throw UnsupportedFormat("banner needs 'object format field symmetry'");
    }
    const std::string& object = banner[1];
    const std::string& format = banner[2];
    const std::string& field = banner[3];
    const std::string& symmetry = banner[4];
    if (object != "matrix") {
        throw UnsupportedFormat("unsupported object '" + object + "'");
    }
    if (format != "coordinate") {
        throw UnsupportedFormat("unsupported format '" + format + "'");
    }
    std::size_t entry_tokens = 0;
    if (field == "pattern") entry_tokens = 2;
    else if (field == "real" || field == "integer") entry_tokens = 3;
    else if (field == "complex") entry_tokens = 4;
    else throw UnsupportedFormat("unsupported field '" + field + "'");
    if (symmetry != "symmetric" && symmetry != "general") {
        throw UnsupportedFormat("unsupported symmetry '" + symmetry + "'");
    }

    long long n = -1;
    long long nnz = -1;
    long long seen = 0;
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::size_t first = lines[i].find_first_not_of(" \t");
        if (first == std::string::npos || lines[i][first] == '%') continue;
        const auto toks = tokens_of(lines[i]);
        if (n < 0) {
            if (toks.size() != 3) {
                throw ParseError(line_no, "expected size line 'rows cols nnz'");
            }
            const long long rows = parse_ll(toks[0], line_no, "a row count");
            const long long cols = parse_ll(toks[1], line_no, "a column count");
            nnz = parse_ll(toks[2], line_no, "an entry count");
            if (rows < 1 || cols < 1 || nnz < 0) {
                throw ParseError(line_no, "size line needs positive dimensions");
            }
            if (rows != cols) {
                throw UnsupportedFormat("matrix is " + std::to_string(rows) + "x" +
                                        std::to_string(cols) + ", need square");
            }
            n = rows;
            continue;
        }
        if (seen == nnz) {
            throw ParseError(line_no, "unexpected content after " +
                             std::to_string(nnz) + " entries");
        }
        if (toks.size() != entry_tokens) {
            throw ParseError(line_no, "expected " + std::to_string(entry_tokens) +
                             " tokens per entry, got " + std::to_string(toks.size()));
        }
        const long long r = parse_ll(toks[0], line_no, "a row index");
        const long long c = parse_ll(toks[1], line_no, "a column index");
        for (std::size_t k = 2; k < entry_tokens; ++k) parse_double(toks[k], line_no);
        if (r < 1 || r > n || c < 1 || c > n) {
            throw ParseError(line_no, "entry (" + std::to_string(r) + ", " +
                             std::to_string(c) + ") outside the " +
                             std::to_string(n) + "x" + std::to_string(n) + " matrix");
        }
        ++seen;
        if (r == c) continue;
        edges.emplace_back(static_cast<Vertex>(std::min(r, c)),
                           static_cast<Vertex>(std::max(r, c)));
    }
    if (n < 0) {
        throw ParseError(lines.size() + 1, "missing size line 'rows cols nnz'");
    }
    if (seen != nnz) {
        throw ParseError(lines.size() + 1, "expected " + std::to_string(nnz) +
                         " entries, found " + std::to_string(seen));
    }
    return Graph(static_cast<int>(n), edges);
}

Graph load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("cannot read '" + path + "'");
    }
    const std::string text = buffer.str();
    const std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos &&
        lower(text.substr(start, 14)) == "%%matrixmarket") {
        return parse_matrix_market(text);
    }
    return parse_edge_list(text);
}

namespace {

const std::vector<std::string> kFamilies = {"grid", "path", "cycle",
                                            "complete", "star", "tree", "file"};

void check_param_count(const InstanceSpec& spec) {
    const std::string& f = spec.family;
    const std::size_t k = spec.params.size();
    const bool ok = (f == "grid" && k == 2) || (f == "tree" && (k == 1 || k == 2)) ||
                    ((f == "path" || f == "cycle" || f == "complete" || f == "star") && k == 1);
    if (!ok) {
        throw InvalidParameter("family '" + f + "' given " + std::to_string(k) +
                               " parameters");
    }
}

} // namespace

InstanceSpec parse_instance_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ':') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);

    InstanceSpec spec;
    spec.family = parts[0] == "random-tree" ? "tree" : parts[0];
    spec.class_tag = spec.family;
    if (spec.family == "file") {
        spec.path = text.size() > 5 ? text.substr(5) : "";
        if (spec.path.empty()) {
            throw InvalidParameter("file instance needs a path, e.g. file:graph.txt");
        }
        return spec;
    }
    if (std::find(kFamilies.begin(), kFamilies.end(), spec.family) == kFamilies.end()) {
        throw InvalidParameter("unknown instance family '" + parts[0] + "'");
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        try {
            spec.params.push_back(parse_ll(parts[i], 1, "an integer parameter"));
        } catch (const ParseError&) {
            throw InvalidParameter("parameter '" + parts[i] + "' in '" + text +
                                   "' is not an integer");
        }
    }
    check_param_count(spec);
    return spec;
}

std::string instance_id(const InstanceSpec& spec) {
    if (spec.family == "file") {
        const std::size_t slash = spec.path.find_last_of('/');
        return slash == std::string::npos ? spec.path : spec.path.substr(slash + 1);
    }
    check_param_count(spec);
    if (spec.family == "grid") {
        return "grid-" + std::to_string(spec.params[0]) + "x" +
               std::to_string(spec.params[1]);
    }
    if (spec.family == "tree") {
        const long long seed = spec.params.size() > 1 ? spec.params[1] : 1;
        return "tree-" + std::to_string(spec.params[0]) + "-s" + std::to_string(seed);
    }
    return spec.family + "-" + std::to_string(spec.params[0]);
}

Graph realize_instance(const InstanceSpec& spec) {
    if (spec.family == "file") return load_instance_file(spec.path);
    check_param_count(spec);
    if (spec.family == "grid") {
        return gen_grid(to_int_param(spec.params[0], "grid rows"),
                        to_int_param(spec.params[1], "grid cols"));
    }
    if (spec.family == "tree") {
        const auto seed = spec.params.size() > 1
                              ? static_cast<std::uint64_t>(spec.params[1])
                              : std::uint64_t{1};
        RandomSource rng(seed);
        return gen_random_tree(to_int_param(spec.params[0], "tree size"), rng);
    }
    const int p = to_int_param(spec.params[0], spec.family + " size");
    if (spec.family == "path") return gen_path(p);
    if (spec.family == "cycle") return gen_cycle(p);
    if (spec.family == "complete") return gen_complete(p);
    if (spec.family == "star") return gen_star(p);
    throw InvalidParameter("unknown instance family '" + spec.family + "'");
}

} // namespace vsmp
