#include <json.hpp>

#include "rppc/filling.hpp"

namespace rppc {

using nlohmann::json;

std::string to_json(const Filling& filling) {
    json doc;
    doc["outer"] = filling.shape().outer().parts();
    doc["inner"] = filling.shape().inner().parts();
    doc["max_entry"] = filling.max_entry();
    auto rows = json::array();
    const auto& shape = filling.shape();
    for (int r = 1; r <= shape.rows(); ++r) {
        auto row = json::array();
        for (int c = shape.row_begin(r) + 1; c <= shape.row_end(r); ++c)
            row.push_back(filling.at(r, c));
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump();
}

Filling filling_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("bad tableau JSON: ") + e.what());
    }
    try {
        SkewShape shape(Partition(doc.at("outer").get<std::vector<int>>()),
                        Partition(doc.value("inner", std::vector<int>{})));
        int max_entry = doc.at("max_entry").get<int>();
        auto rows = doc.at("rows").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(rows.size()) != shape.rows())
            throw ValidationError("tableau JSON: expected " +
                                  std::to_string(shape.rows()) + " rows, got " +
                                  std::to_string(rows.size()));
        std::vector<int> entries;
        entries.reserve(shape.cell_count());
        for (int r = 1; r <= shape.rows(); ++r) {
            int want = shape.row_end(r) - shape.row_begin(r);
            if (static_cast<int>(rows[r - 1].size()) != want)
                throw ValidationError("tableau JSON: row " + std::to_string(r) +
                                      " should have " + std::to_string(want) +
                                      " entries");
            entries.insert(entries.end(), rows[r - 1].begin(), rows[r - 1].end());
        }
        return Filling(std::move(shape), std::move(entries), max_entry);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad tableau JSON: ") + e.what());
    }
}

} // namespace rppc
