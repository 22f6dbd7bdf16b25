#include "bfan/truth_table_io.hpp"

#include <fstream>
#include <sstream>

namespace bfan {

namespace {
constexpr char kMagic[8] = {'B', 'F', 'A', 'N', 'T', 'T', 'B', '1'};

[[noreturn]] void parse_fail(int line, const std::string& what) {
    fail(errc::parse_error, "line " + std::to_string(line) + ": " + what);
}
} // namespace

void write_tt1(std::ostream& os, const BooleanFunction& f) {
    os << "tt1 n=" << f.n() << "\n";
    for (uint64_t b = 0; b < f.table_size(); ++b) os.put(f.bit(b) ? '1' : '0');
    os.put('\n');
}

void write_ttb(std::ostream& os, const BooleanFunction& f) {
    os.write(kMagic, 8);
    os.put((char)(uint8_t)f.n());
    uint64_t nbytes = (f.table_size() + 7) >> 3;
    for (uint64_t i = 0; i < nbytes; ++i) {
        uint8_t byte = 0;
        for (int j = 0; j < 8; ++j) {
            uint64_t b = (i << 3) | (uint64_t)j;
            if (b < f.table_size() && f.bit(b)) byte |= (uint8_t)(1 << j);
        }
        os.put((char)byte);
    }
}

BooleanFunction read_tt1(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) parse_fail(1, "missing header");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    int n = 0;
    if (header.rfind("tt1 n=", 0) != 0) parse_fail(1, "expected 'tt1 n=<n>' header");
    try {
        size_t pos = 0;
        n = std::stoi(header.substr(6), &pos);
        if (pos != header.size() - 6) parse_fail(1, "trailing junk after n");
    } catch (const error&) {
        throw;
    } catch (...) {
        parse_fail(1, "bad dimension in header");
    }
    if (n < 1) parse_fail(1, "dimension must be >= 1");
    if (n > max_dimension())
        fail(errc::dimension_too_large,
             "n=" + std::to_string(n) + " exceeds cap " + std::to_string(max_dimension()));

    uint64_t rows = 1ULL << n;
    std::vector<uint8_t> bits(rows);
    for (uint64_t b = 0; b < rows; ++b) {
        int c = is.get();
        if (c == '0')
            bits[b] = 0;
        else if (c == '1')
            bits[b] = 1;
        else
            parse_fail(2, "expected 2^n characters '0'/'1', found " +
                              (c == EOF ? std::string("end of file")
                                        : "'" + std::string(1, (char)c) + "'") +
                              " at row " + std::to_string(b));
    }
    int c = is.get();
    if (c == '\r') c = is.get();
    if (c != EOF && c != '\n') parse_fail(2, "trailing data after table");
    return BooleanFunction::from_truth_table(bits, n);
}

BooleanFunction read_ttb(std::istream& is) {
    char magic[8];
    is.read(magic, 8);
    if (is.gcount() != 8 || !std::equal(magic, magic + 8, kMagic))
        fail(errc::parse_error, "bad TTB magic");
    int c = is.get();
    if (c == EOF) fail(errc::parse_error, "missing dimension byte");
    int n = c;
    if (n < 1) fail(errc::parse_error, "dimension must be >= 1");
    if (n > max_dimension())
        fail(errc::dimension_too_large,
             "n=" + std::to_string(n) + " exceeds cap " + std::to_string(max_dimension()));
    uint64_t rows = 1ULL << n;
    uint64_t nbytes = (rows + 7) >> 3;
    std::vector<uint8_t> bits(rows);
    for (uint64_t i = 0; i < nbytes; ++i) {
        int byte = is.get();
        if (byte == EOF) fail(errc::parse_error, "truncated TTB payload");
        for (int j = 0; j < 8; ++j) {
            uint64_t b = (i << 3) | (uint64_t)j;
            if (b < rows) bits[b] = (uint8_t)((byte >> j) & 1);
        }
    }
    return BooleanFunction::from_truth_table(bits, n);
}

BooleanFunction read_truth_table_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io_error, "cannot open " + path);
    char magic[8] = {};
    in.read(magic, 8);
    bool is_ttb = in.gcount() == 8 && std::equal(magic, magic + 8, kMagic);
    in.clear();
    in.seekg(0);
    return is_ttb ? read_ttb(in) : read_tt1(in);
}

void write_truth_table_file(const std::string& path, const BooleanFunction& f, bool binary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot open " + path + " for writing");
    if (binary)
        write_ttb(out, f);
    else
        write_tt1(out, f);
    if (!out) fail(errc::io_error, "write failed for " + path);
}

} // namespace bfan
