#include "ctc/code_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace ctc {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

Code parse_code(const std::string& text, const std::string& source) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int m = -1;
    std::string kind;
    std::vector<Word> words;
    auto fail = [&](const std::string& msg) {
        throw Error(source + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (m < 0) {
            std::istringstream hs(line);
            std::string a, b;
            hs >> a >> b;
            if (a.rfind("m=", 0) != 0 || b.rfind("kind=", 0) != 0)
                fail("expected header 'm=<int> kind=linear|explicit'");
            try {
                m = std::stoi(a.substr(2));
            } catch (...) {
                fail("bad length in header");
            }
            if (m < 1 || m > Word::kMaxLength) fail("length outside [1, 256]");
            kind = b.substr(5);
            if (kind != "linear" && kind != "explicit") fail("unknown kind '" + kind + "'");
            continue;
        }
        if (static_cast<int>(line.size()) != m)
            fail("word has " + std::to_string(line.size()) + " characters, expected " + std::to_string(m));
        try {
            words.push_back(Word::from_string(line));
        } catch (const Error& e) {
            fail(e.what());
        }
    }
    if (m < 0) throw Error(source + ": missing header");
    auto stem = std::filesystem::path(source).stem().string();
    if (kind == "linear") return Code::linear(m, words, stem);
    return Code::from_words(m, std::move(words), stem);
}

Code read_code_file(const std::string& path) { return parse_code(read_text_file(path), path); }

std::string format_code(const Code& c) {
    std::ostringstream out;
    out << "m=" << c.length() << " kind=" << (c.is_linear() ? "linear" : "explicit") << "\n";
    const auto& rows = c.is_linear() ? c.basis() : c.explicit_words();
    for (const auto& w : rows) out << w.to_string() << "\n";
    return out.str();
}

void write_code_file(const Code& c, const std::string& path) { write_text_file(path, format_code(c)); }

}  // namespace ctc
