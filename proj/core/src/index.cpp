#include "cbir/index.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cbir {

namespace {

bool valid_id(const std::string& id) {
    return !id.empty() && id.find('\t') == std::string::npos &&
           id.find('\n') == std::string::npos;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_real(const std::string& tok, int line) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + tok.size() || tok.empty())
        throw MalformedRecord("unparsable number '" + tok + "'", line);
    return v;
}

} // namespace

void IndexDb::add(IndexRecord rec) {
    if (!valid_id(rec.id))
        throw std::invalid_argument("record id must be non-empty without tab/newline");
    if (find(rec.id))
        throw DuplicateId("duplicate id '" + rec.id + "'");
    records_.push_back(std::move(rec));
}

void IndexDb::remove(const std::string& id) {
    const auto it = std::find_if(records_.begin(), records_.end(),
                                 [&](const IndexRecord& r) { return r.id == id; });
    if (it == records_.end())
        throw NotFound("no record with id '" + id + "'");
    records_.erase(it);
}

const IndexRecord* IndexDb::find(const std::string& id) const {
    const auto it = std::find_if(records_.begin(), records_.end(),
                                 [&](const IndexRecord& r) { return r.id == id; });
    return it == records_.end() ? nullptr : &*it;
}

std::string db_save(const IndexDb& db) {
    std::ostringstream out;
    out << "CBIRIDX " << IndexDb::kVersion << '\n';
    for (const IndexRecord& r : db.records()) {
        out << r.id << '\t' << r.source << '\t' << format_real(r.entropy);
        for (const double p : r.phi)
            out << '\t' << format_real(p);
        out << '\n';
    }
    return out.str();
}

IndexDb db_load(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    if (!std::getline(in, line) || line != "CBIRIDX 1")
        throw BadMagic("expected magic line 'CBIRIDX 1'");

    IndexDb db;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            throw MalformedRecord("empty record line", lineno);
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t tab = line.find('\t', pos);
            fields.push_back(line.substr(pos, tab - pos));
            if (tab == std::string::npos)
                break;
            pos = tab + 1;
        }
        if (fields.size() != 10)
            throw MalformedRecord("expected 10 tab-separated fields, got " +
                                      std::to_string(fields.size()),
                                  lineno);
        IndexRecord rec;
        rec.id = fields[0];
        rec.source = fields[1];
        if (!valid_id(rec.id))
            throw MalformedRecord("invalid id", lineno);
        rec.entropy = parse_real(fields[2], lineno);
        for (int i = 0; i < 7; ++i)
            rec.phi[static_cast<std::size_t>(i)] = parse_real(fields[3 + i], lineno);
        if (db.find(rec.id))
            throw MalformedRecord("duplicate id '" + rec.id + "'", lineno);
        db.add(std::move(rec));
    }
    return db;
}

IndexDb db_load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw NotFound("cannot open index '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return db_load(buf.str());
}

void db_save_file(const IndexDb& db, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot open '" + tmp.string() + "' for writing");
        const std::string data = db_save(db);
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out)
            throw Error("write failed for '" + tmp.string() + "'");
    }
    fs::rename(tmp, target);
}

} // namespace cbir
