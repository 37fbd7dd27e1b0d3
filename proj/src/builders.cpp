#include "etalab/builders.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace etalab {

namespace {

bool is_power_of_two(std::uint64_t v) { return v >= 1 && (v & (v - 1)) == 0; }

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > kMaxRepresentableOrder * 16)  // keep well clear of overflow
            throw ResourceError("requested order is far beyond representable range");
        r *= base;
    }
    return r;
}

}  // namespace

GroupSpec GroupSpec::cyclic(std::uint64_t m) {
    if (m < 1) throw UsageError("cyclic requires m >= 1");
    GroupSpec s;
    s.kind = Kind::Cyclic;
    s.m = m;
    return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
    if (factors.empty()) throw UsageError("product requires at least one factor");
    GroupSpec s;
    s.kind = Kind::Product;
    s.children = std::move(factors);
    return s;
}

GroupSpec GroupSpec::dihedral(std::uint64_t order) {
    if (order < 4 || order % 2 != 0)
        throw UsageError("dihedral requires an even order 2m with m >= 2");
    GroupSpec s;
    s.kind = Kind::Dihedral;
    s.m = order;
    return s;
}

GroupSpec GroupSpec::quaternion(std::uint64_t order) {
    if (order < 8 || !is_power_of_two(order))
        throw UsageError("quaternion requires order 2^k with k >= 3");
    GroupSpec s;
    s.kind = Kind::Quaternion;
    s.m = order;
    return s;
}

GroupSpec GroupSpec::semidihedral(std::uint64_t order) {
    if (order < 16 || !is_power_of_two(order))
        throw UsageError("semidihedral requires order 2^k with k >= 4");
    GroupSpec s;
    s.kind = Kind::Semidihedral;
    s.m = order;
    return s;
}

GroupSpec GroupSpec::heisenberg(std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw UsageError("heisenberg requires an odd prime");
    GroupSpec s;
    s.kind = Kind::Heisenberg;
    s.m = p;
    return s;
}

GroupSpec GroupSpec::modular(std::uint64_t p, std::uint64_t k) {
    if (!is_prime(p)) throw UsageError("modular requires a prime p");
    if (k < 3) throw UsageError("modular requires k >= 3");
    if (p == 2 && k == 3)
        throw UsageError("modular(2,3) is excluded (it coincides with dihedral(8))");
    GroupSpec s;
    s.kind = Kind::Modular;
    s.m = p;
    s.k = k;
    return s;
}

GroupSpec GroupSpec::table(std::string path) {
    if (path.empty()) throw UsageError("table requires a non-empty path");
    GroupSpec s;
    s.kind = Kind::Table;
    s.path = std::move(path);
    return s;
}

std::string print_spec(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            return "cyclic(" + std::to_string(spec.m) + ")";
        case GroupSpec::Kind::Product: {
            std::string out = "product(";
            for (std::size_t i = 0; i < spec.children.size(); ++i) {
                if (i) out += ",";
                out += print_spec(spec.children[i]);
            }
            return out + ")";
        }
        case GroupSpec::Kind::Dihedral:
            return "dihedral(" + std::to_string(spec.m) + ")";
        case GroupSpec::Kind::Quaternion:
            return "quaternion(" + std::to_string(spec.m) + ")";
        case GroupSpec::Kind::Semidihedral:
            return "semidihedral(" + std::to_string(spec.m) + ")";
        case GroupSpec::Kind::Heisenberg:
            return "heisenberg(" + std::to_string(spec.m) + ")";
        case GroupSpec::Kind::Modular:
            return "modular(" + std::to_string(spec.m) + "," +
                   std::to_string(spec.k) + ")";
        case GroupSpec::Kind::Table:
            return "table(" + spec.path + ")";
    }
    throw Error("unreachable spec kind");
}

namespace {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    GroupSpec parse() {
        GroupSpec s = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SpecParseError("unexpected trailing input", pos_);
        return s;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw SpecParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    std::string read_name() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw SpecParseError("expected a constructor name", pos_);
        return text_.substr(start, pos_ - start);
    }

    std::uint64_t read_int() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw SpecParseError("expected a decimal integer", pos_);
        return std::stoull(text_.substr(start, pos_ - start));
    }

    // Everything up to the closing ')', trimmed.
    std::string read_path() {
        skip_ws();
        std::size_t end = text_.find(')', pos_);
        if (end == std::string::npos)
            throw SpecParseError("expected ')' closing the path", pos_);
        std::string raw = text_.substr(pos_, end - pos_);
        pos_ = end;
        while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back())))
            raw.pop_back();
        return raw;
    }

    GroupSpec parse_expr() {
        skip_ws();
        std::size_t name_pos = pos_;
        std::string name = read_name();
        expect('(');
        GroupSpec result;
        if (name == "cyclic") {
            result = GroupSpec::cyclic(read_int());
        } else if (name == "dihedral") {
            result = GroupSpec::dihedral(read_int());
        } else if (name == "quaternion") {
            result = GroupSpec::quaternion(read_int());
        } else if (name == "semidihedral") {
            result = GroupSpec::semidihedral(read_int());
        } else if (name == "heisenberg") {
            result = GroupSpec::heisenberg(read_int());
        } else if (name == "modular") {
            std::uint64_t p = read_int();
            expect(',');
            std::uint64_t k = read_int();
            result = GroupSpec::modular(p, k);
        } else if (name == "product") {
            std::vector<GroupSpec> factors;
            factors.push_back(parse_expr());
            while (peek_is(',')) {
                expect(',');
                factors.push_back(parse_expr());
            }
            result = GroupSpec::product(std::move(factors));
        } else if (name == "table") {
            result = GroupSpec::table(read_path());
        } else {
            throw SpecParseError("unknown constructor '" + name + "'", name_pos);
        }
        expect(')');
        return result;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_spec(const std::string& text) { return SpecParser(text).parse(); }

std::uint64_t spec_order(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
        case GroupSpec::Kind::Dihedral:
        case GroupSpec::Kind::Quaternion:
        case GroupSpec::Kind::Semidihedral:
            return spec.m;
        case GroupSpec::Kind::Heisenberg:
            return checked_pow(spec.m, 3);
        case GroupSpec::Kind::Modular:
            return checked_pow(spec.m, spec.k);
        case GroupSpec::Kind::Product: {
            std::uint64_t n = 1;
            for (const GroupSpec& c : spec.children) {
                std::uint64_t f = spec_order(c);
                if (f == 0) return 0;
                if (n > (kMaxRepresentableOrder * 16) / f)
                    throw ResourceError("product order is far beyond representable range");
                n *= f;
            }
            return n;
        }
        case GroupSpec::Kind::Table:
            return 0;
    }
    throw Error("unreachable spec kind");
}

namespace {

std::vector<ElementId> build_cyclic(std::uint64_t m) {
    std::vector<ElementId> t(m * m);
    for (std::uint64_t i = 0; i < m; ++i)
        for (std::uint64_t j = 0; j < m; ++j)
            t[i * m + j] = static_cast<ElementId>((i + j) % m);
    return t;
}

// dihedral(2m): r^i s^j at index j*m + i; r^m = s^2 = 1, s r s = r^-1.
// (r^i s^j)(r^k s^l) = r^(i + k*(-1)^j) s^(j+l).
std::vector<ElementId> build_dihedral(std::uint64_t order) {
    const std::uint64_t m = order / 2;
    std::vector<ElementId> t(order * order);
    auto idx = [m](std::uint64_t i, std::uint64_t j) { return j * m + i; };
    for (std::uint64_t j = 0; j < 2; ++j)
        for (std::uint64_t i = 0; i < m; ++i)
            for (std::uint64_t l = 0; l < 2; ++l)
                for (std::uint64_t k = 0; k < m; ++k) {
                    std::uint64_t ii = (j == 0) ? (i + k) % m : (i + m - k % m) % m;
                    t[idx(i, j) * order + idx(k, l)] =
                        static_cast<ElementId>(idx(ii, (j + l) % 2));
                }
    return t;
}

// quaternion(2^c): a^i b^j at index j*2^(c-1) + i, j in {0,1};
// a^(2^(c-1)) = 1, b^2 = a^(2^(c-2)), b^-1 a b = a^-1.
std::vector<ElementId> build_quaternion(std::uint64_t order) {
    const std::uint64_t m = order / 2;  // order of a
    const std::uint64_t h = m / 2;      // b^2 = a^h
    std::vector<ElementId> t(order * order);
    auto idx = [m](std::uint64_t i, std::uint64_t j) { return j * m + i; };
    for (std::uint64_t j = 0; j < 2; ++j)
        for (std::uint64_t i = 0; i < m; ++i)
            for (std::uint64_t l = 0; l < 2; ++l)
                for (std::uint64_t k = 0; k < m; ++k) {
                    std::uint64_t ii, jj;
                    if (j == 0) {
                        ii = (i + k) % m;
                        jj = l;
                    } else if (l == 0) {
                        ii = (i + m - k % m) % m;
                        jj = 1;
                    } else {
                        ii = (i + m - k % m + h) % m;
                        jj = 0;
                    }
                    t[idx(i, j) * order + idx(k, l)] = static_cast<ElementId>(idx(ii, jj));
                }
    return t;
}

// semidihedral(2^c): a^i b^j, j in {0,1}; a^(2^(c-1)) = b^2 = 1,
// b^-1 a b = a^(2^(c-2) - 1).  b a^k = a^(t*k) b with t = 2^(c-2) - 1.
std::vector<ElementId> build_semidihedral(std::uint64_t order) {
    const std::uint64_t m = order / 2;
    const std::uint64_t tw = m / 2 - 1;
    std::vector<ElementId> t(order * order);
    auto idx = [m](std::uint64_t i, std::uint64_t j) { return j * m + i; };
    for (std::uint64_t j = 0; j < 2; ++j)
        for (std::uint64_t i = 0; i < m; ++i)
            for (std::uint64_t l = 0; l < 2; ++l)
                for (std::uint64_t k = 0; k < m; ++k) {
                    std::uint64_t ii = (j == 0) ? (i + k) % m : (i + tw * k) % m;
                    t[idx(i, j) * order + idx(k, l)] =
                        static_cast<ElementId>(idx(ii, (j + l) % 2));
                }
    return t;
}

// heisenberg(p): upper unitriangular 3x3 matrices over F_p; entry (x,y,z)
// at index x*p^2 + y*p + z; (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y').
std::vector<ElementId> build_heisenberg(std::uint64_t p) {
    const std::uint64_t n = p * p * p;
    std::vector<ElementId> t(n * n);
    for (std::uint64_t a = 0; a < n; ++a) {
        const std::uint64_t ax = a / (p * p), ay = (a / p) % p, az = a % p;
        for (std::uint64_t b = 0; b < n; ++b) {
            const std::uint64_t bx = b / (p * p), by = (b / p) % p, bz = b % p;
            const std::uint64_t cx = (ax + bx) % p;
            const std::uint64_t cy = (ay + by) % p;
            const std::uint64_t cz = (az + bz + ax * by) % p;
            t[a * n + b] = static_cast<ElementId>(cx * p * p + cy * p + cz);
        }
    }
    return t;
}

// modular(p,c): a^i b^j at index j*p^(c-1) + i; a^(p^(c-1)) = b^p = 1,
// b^-1 a b = a^u with u = 1 + p^(c-2).  Moving b left of a^k uses the
// inverse twist: b^j a^k = a^(k*v^j) b^j with v = u^-1 = u^(p-1) mod p^(c-1).
std::vector<ElementId> build_modular(std::uint64_t p, std::uint64_t c) {
    const std::uint64_t m = checked_pow(p, c - 1);
    const std::uint64_t u = 1 + checked_pow(p, c - 2);
    const std::uint64_t n = m * p;
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i + 1 < p; ++i) v = (v * u) % m;
    // v^j mod m for j < p
    std::vector<std::uint64_t> vpow(p, 1);
    for (std::uint64_t j = 1; j < p; ++j) vpow[j] = (vpow[j - 1] * v) % m;
    std::vector<ElementId> t(n * n);
    auto idx = [m](std::uint64_t i, std::uint64_t j) { return j * m + i; };
    for (std::uint64_t j = 0; j < p; ++j)
        for (std::uint64_t i = 0; i < m; ++i)
            for (std::uint64_t l = 0; l < p; ++l)
                for (std::uint64_t k = 0; k < m; ++k) {
                    std::uint64_t ii = (i + k * vpow[j]) % m;
                    t[idx(i, j) * n + idx(k, l)] =
                        static_cast<ElementId>(idx(ii, (j + l) % p));
                }
    return t;
}

// Direct product with lexicographic pair indexing: the first factor is the
// most significant digit.
std::vector<ElementId> build_product(const std::vector<FiniteGroup>& factors) {
    std::uint64_t n = 1;
    for (const FiniteGroup& f : factors) n *= f.order();
    const std::size_t k = factors.size();
    std::vector<std::uint64_t> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * factors[i].order();

    std::vector<ElementId> t(n * n);
    std::vector<std::uint32_t> xc(k), yc(k);
    for (std::uint64_t x = 0; x < n; ++x) {
        for (std::size_t i = 0; i < k; ++i)
            xc[i] = static_cast<std::uint32_t>((x / stride[i]) % factors[i].order());
        for (std::uint64_t y = 0; y < n; ++y) {
            for (std::size_t i = 0; i < k; ++i)
                yc[i] = static_cast<std::uint32_t>((y / stride[i]) % factors[i].order());
            std::uint64_t z = 0;
            for (std::size_t i = 0; i < k; ++i)
                z += std::uint64_t(factors[i].mul_raw(xc[i], yc[i])) * stride[i];
            t[x * n + y] = static_cast<ElementId>(z);
        }
    }
    return t;
}

}  // namespace

FiniteGroup realize(const GroupSpec& spec, const RealizeOptions& opts) {
    if (spec.kind == GroupSpec::Kind::Table) return read_table(spec.path, opts);

    const std::uint64_t n = spec_order(spec);
    if (n > opts.max_order)
        throw ResourceError("realized order " + std::to_string(n) +
                            " exceeds the configured maximum " +
                            std::to_string(opts.max_order));
    if (n > kMaxRepresentableOrder)
        throw ResourceError("realized order " + std::to_string(n) +
                            " exceeds the representable maximum");

    std::vector<ElementId> table;
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            table = build_cyclic(spec.m);
            break;
        case GroupSpec::Kind::Dihedral:
            table = build_dihedral(spec.m);
            break;
        case GroupSpec::Kind::Quaternion:
            table = build_quaternion(spec.m);
            break;
        case GroupSpec::Kind::Semidihedral:
            table = build_semidihedral(spec.m);
            break;
        case GroupSpec::Kind::Heisenberg:
            table = build_heisenberg(spec.m);
            break;
        case GroupSpec::Kind::Modular:
            table = build_modular(spec.m, spec.k);
            break;
        case GroupSpec::Kind::Product: {
            std::vector<FiniteGroup> factors;
            factors.reserve(spec.children.size());
            for (const GroupSpec& c : spec.children) factors.push_back(realize(c, opts));
            table = build_product(factors);
            break;
        }
        case GroupSpec::Kind::Table:
            break;  // handled above
    }
    return FiniteGroup(static_cast<std::uint32_t>(n), std::move(table),
                       print_spec(spec), opts.laws);
}

FiniteGroup read_table_stream(std::istream& in, const std::string& label,
                              const RealizeOptions& opts) {
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    if (content.empty())
        throw GtblError(GtblError::Kind::Header, "empty GTBL input");
    if (content.back() != '\n')
        throw GtblError(GtblError::Kind::Trailing, "missing trailing newline");

    std::istringstream ss(content);
    std::string line;
    // comments allowed before the header only
    while (std::getline(ss, line)) {
        if (!line.empty() && line[0] == '#') continue;
        break;
    }
    std::istringstream header(line);
    std::string magic;
    std::uint64_t version = 0, n = 0;
    if (!(header >> magic >> version >> n) || magic != "gtbl" || version != 1 || n == 0) {
        throw GtblError(GtblError::Kind::Header,
                        "malformed GTBL header (expected 'gtbl 1 <n>')");
    }
    std::string extra;
    if (header >> extra)
        throw GtblError(GtblError::Kind::Header, "trailing tokens in GTBL header");
    if (n > opts.max_order || n > kMaxRepresentableOrder)
        throw ResourceError("GTBL order " + std::to_string(n) +
                            " exceeds the configured maximum");

    std::vector<ElementId> table;
    table.reserve(n * n);
    for (std::uint64_t row = 0; row < n; ++row) {
        if (!std::getline(ss, line))
            throw GtblError(GtblError::Kind::Shape,
                            "expected " + std::to_string(n) + " rows, found " +
                                std::to_string(row));
        std::istringstream rs(line);
        std::uint64_t v = 0;
        std::uint64_t count = 0;
        while (rs >> v) {
            if (v >= n)
                throw GtblError(GtblError::Kind::Range,
                                "entry " + std::to_string(v) + " out of range in row " +
                                    std::to_string(row));
            table.push_back(static_cast<ElementId>(v));
            ++count;
        }
        if (!rs.eof())
            throw GtblError(GtblError::Kind::Range,
                            "non-numeric entry in row " + std::to_string(row));
        if (count != n)
            throw GtblError(GtblError::Kind::Shape,
                            "row " + std::to_string(row) + " has " +
                                std::to_string(count) + " entries, expected " +
                                std::to_string(n));
    }
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            throw GtblError(GtblError::Kind::Shape, "unexpected content after table rows");
    }
    // Group laws (including "element 0 is not the identity") verified here.
    return FiniteGroup(static_cast<std::uint32_t>(n), std::move(table), label,
                       opts.laws);
}

FiniteGroup read_table(const std::string& path, const RealizeOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open GTBL file: " + path);
    return read_table_stream(in, "table(" + path + ")", opts);
}

void write_table_stream(const FiniteGroup& g, std::ostream& out) {
    const std::uint32_t n = g.order();
    out << "gtbl 1 " << n << "\n";
    for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
            if (y) out << ' ';
            out << g.mul_raw(x, y);
        }
        out << '\n';
    }
}

void write_table(const FiniteGroup& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open file for writing: " + path);
    write_table_stream(g, out);
    if (!out) throw UsageError("failed writing GTBL file: " + path);
}

}  // namespace etalab
