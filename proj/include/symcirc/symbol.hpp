#ifndef SYMCIRC_SYMBOL_HPP
#define SYMCIRC_SYMBOL_HPP

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace symcirc {

// Interned variable identifier. Ids are process-global and stable, so
// monomials can store plain integers.
using Symbol = uint32_t;

class SymbolTable {
public:
    static SymbolTable& instance() {
        static SymbolTable t;
        return t;
    }

    Symbol intern(const std::string& name) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = by_name_.find(name);
        if (it != by_name_.end()) return it->second;
        Symbol id = static_cast<Symbol>(names_.size());
        names_.push_back(name);
        by_name_.emplace(name, id);
        return id;
    }

    const std::string& name(Symbol id) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (id >= names_.size()) throw std::out_of_range("unknown symbol id");
        return names_[id];
    }

private:
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> by_name_;
};

inline Symbol sym(const std::string& name) { return SymbolTable::instance().intern(name); }
inline const std::string& sym_name(Symbol id) { return SymbolTable::instance().name(id); }

} // namespace symcirc

#endif
