#include "dec/error.hpp"
#include "dec/mesh_generation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dec {

MeshData mesh_data(const SimplicialComplex& complex)
{
    MeshData mesh;
    mesh.coords = complex.coords();
    const int n = complex.dim();
    mesh.cells.reserve(static_cast<std::size_t>(complex.count(n)));
    for (const auto& s : complex.simplices(n))
        mesh.cells.emplace_back(s.vertices().begin(), s.vertices().end());
    return mesh;
}

std::string format_mesh(const MeshData& mesh)
{
    const std::size_t n = mesh.coords.empty() ? 0 : mesh.coords.front().size();
    std::string out = fmt::format("{} {} {}\n", n, mesh.coords.size(), mesh.cells.size());
    for (const auto& p : mesh.coords) {
        for (std::size_t a = 0; a < p.size(); ++a)
            out += fmt::format("{}{:.17g}", a == 0 ? "" : " ", p[a]);
        out += '\n';
    }
    for (const auto& c : mesh.cells) {
        for (std::size_t a = 0; a < c.size(); ++a)
            out += fmt::format("{}{}", a == 0 ? "" : " ", c[a]);
        out += '\n';
    }
    return out;
}

void write_mesh(const MeshData& mesh, const std::filesystem::path& path)
{
    std::ofstream f(path);
    if (!f)
        throw FormatError(fmt::format("cannot open '{}' for writing", path.string()));
    f << format_mesh(mesh);
    if (!f)
        throw FormatError(fmt::format("failed writing '{}'", path.string()));
}

void write_mesh(const SimplicialComplex& complex, const std::filesystem::path& path)
{
    write_mesh(mesh_data(complex), path);
}

namespace {

class TokenReader {
public:
    explicit TokenReader(std::string_view text)
    {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = std::min(text.find('\n', pos), text.size());
            std::string_view line = text.substr(pos, eol - pos);
            ++line_no;
            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                    ++i;
                std::size_t j = i;
                while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
                    ++j;
                if (j > i)
                    tokens_.push_back({line.substr(i, j - i), line_no});
                i = j;
            }
            pos = eol + 1;
        }
    }

    template <class T>
    T next(const char* what)
    {
        if (at_ >= tokens_.size())
            throw FormatError(fmt::format("mesh file: unexpected end of input reading {}", what));
        const auto& [tok, line] = tokens_[at_++];
        T value{};
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw FormatError(fmt::format("mesh file line {}: invalid {} '{}'", line, what, tok));
        return value;
    }

    bool done() const { return at_ == tokens_.size(); }
    std::size_t line() const { return at_ < tokens_.size() ? tokens_[at_].second : 0; }

private:
    std::vector<std::pair<std::string_view, std::size_t>> tokens_;
    std::size_t at_ = 0;
};

}  // namespace

MeshData parse_mesh(std::string_view text)
{
    TokenReader r(text);
    const int n = r.next<int>("dimension");
    const long nv = r.next<long>("vertex count");
    const long nc = r.next<long>("cell count");
    if (n < 1 || n > 7 || nv < 0 || nc < 0)
        throw FormatError(fmt::format("mesh file: invalid header '{} {} {}'", n, nv, nc));
    MeshData mesh;
    mesh.coords.resize(static_cast<std::size_t>(nv), Point(static_cast<std::size_t>(n)));
    for (auto& p : mesh.coords)
        for (auto& x : p)
            x = r.next<double>("coordinate");
    mesh.cells.resize(static_cast<std::size_t>(nc), std::vector<int>(static_cast<std::size_t>(n) + 1));
    for (auto& c : mesh.cells)
        for (auto& v : c) {
            const std::size_t line = r.line();
            v = r.next<int>("vertex id");
            if (v < 0 || v >= nv)
                throw FormatError(fmt::format("mesh file line {}: vertex id {} out of range", line, v));
        }
    if (!r.done())
        throw FormatError(fmt::format("mesh file line {}: trailing data", r.line()));
    return mesh;
}

SimplicialComplex read_mesh(const std::filesystem::path& path)
{
    std::ifstream f(path);
    if (!f)
        throw FormatError(fmt::format("cannot open '{}'", path.string()));
    std::stringstream ss;
    ss << f.rdbuf();
    auto mesh = parse_mesh(ss.str());
    return build_complex(std::move(mesh.coords), mesh.cells);
}

}  // namespace dec
