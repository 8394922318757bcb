#pragma once

#include <string>
#include <vector>

namespace fcon {

struct CheckItem {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string note; // witness or reason for skipping

    static CheckItem ok(std::string n, std::string note = "") {
        return {std::move(n), true, false, std::move(note)};
    }
    static CheckItem fail(std::string n, std::string witness) {
        return {std::move(n), false, false, std::move(witness)};
    }
    static CheckItem skip(std::string n, std::string reason) {
        return {std::move(n), false, true, std::move(reason)};
    }
};

struct Report {
    std::string title;
    std::vector<CheckItem> items;

    void add(CheckItem item) { items.push_back(std::move(item)); }
    void check(const std::string& name, bool pass, const std::string& witness = "") {
        items.push_back(pass ? CheckItem::ok(name) : CheckItem::fail(name, witness));
    }
    bool allPass() const {
        for (const auto& i : items)
            if (!i.skipped && !i.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& i : items)
            if (!i.skipped && !i.pass) ++n;
        return n;
    }
};

} // namespace fcon
