#ifndef CBIR_INDEX_HPP
#define CBIR_INDEX_HPP

#include <array>
#include <string>
#include <vector>

#include "cbir/errors.hpp"

namespace cbir {

/// One persisted feature row. phi is stored raw; the log-scaled form is
/// derived at query time.
struct IndexRecord {
    std::string id;       // non-empty, no tab or newline, unique per db
    std::string source;   // path or label
    double entropy = 0.0; // bits, in [0, 8]
    std::array<double, 7> phi{};
};

/// Ordered feature database. Values are immutable snapshots in the sense
/// that copies are cheap to reason about: mutating members only touch the
/// object they are called on.
class IndexDb {
public:
    static constexpr int kVersion = 1;

    const std::vector<IndexRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    /// Appends a record. Throws DuplicateId.
    void add(IndexRecord rec);

    /// Removes the record with the given id. Throws NotFound.
    void remove(const std::string& id);

    const IndexRecord* find(const std::string& id) const;

private:
    std::vector<IndexRecord> records_;
};

/// Serializes to the CBIRIDX 1 text format: magic line, then one
/// tab-separated line per record (id, source, entropy, phi1..phi7) with
/// reals at 17 significant digits (round-trip exact for 64-bit floats).
std::string db_save(const IndexDb& db);

/// Parses the CBIRIDX 1 format. Throws BadMagic or MalformedRecord with
/// the offending line number.
IndexDb db_load(const std::string& bytes);

IndexDb db_load_file(const std::string& path);

/// Atomic with respect to the target path: writes a temp file in the same
/// directory and renames it over the destination.
void db_save_file(const IndexDb& db, const std::string& path);

} // namespace cbir

#endif
