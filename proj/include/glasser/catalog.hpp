#ifndef GLASSER_CATALOG_HPP
#define GLASSER_CATALOG_HPP

// Registry of every identity the engine verifies.

#include <glasser/catalog/core.hpp>
#include <glasser/catalog/ex6.hpp>
#include <glasser/catalog/crit2.hpp>
#include <glasser/catalog/fourpole.hpp>
#include <glasser/catalog/multiplicative.hpp>
#include <glasser/catalog/pairing.hpp>
#include <glasser/catalog/product.hpp>
#include <glasser/catalog/shifted.hpp>
#include <glasser/catalog/simple.hpp>
#include <glasser/catalog/trig.hpp>

#include <set>
#include <string>
#include <vector>

namespace glasser {

/// All entries, in registration order. Throws validation_error on a
/// duplicate id or a default outside its range.
inline std::vector<catalog_entry> load_catalog()
{
    std::vector<catalog_entry> out;
    cat::add_simple(out);
    cat::add_ex6(out);
    cat::add_shifted(out);
    cat::add_product(out);
    cat::add_fourpole(out);
    cat::add_crit2(out);
    cat::add_pairing(out);
    cat::add_multiplicative(out);
    cat::add_trig(out);

    std::set<std::string> seen;
    for (const catalog_entry& e : out) {
        if (!seen.insert(e.id).second)
            throw validation_error("catalog: duplicate id " + e.id);
        for (const param_range& p : e.params) {
            if (p.min > p.max)
                throw validation_error("catalog: " + e.id + ": empty range for " + p.name);
            if (!p.contains(p.default_value))
                throw validation_error("catalog: " + e.id + ": default of " + p.name + " outside its range");
        }
    }
    return out;
}

inline const std::vector<catalog_entry>& catalog()
{
    static const std::vector<catalog_entry> entries = load_catalog();
    return entries;
}

/// The identities the theorem is first illustrated with, plus Intf1.
inline const std::vector<std::string>& headline_ids()
{
    static const std::vector<std::string> ids = {"Intf1", "IntG3", "IntG5b", "K1d",  "Ex6ApB", "DiffSq", "ScMin",
                                                 "J1ab",  "Zid",    "Ct4bm1", "CritLim", "Ct2d", "FintG3",
                                                 "Jh",    "J8b",    "FintBx", "CR2b",  "Test2G"};
    return ids;
}

inline const catalog_entry& find_entry(const std::string& id)
{
    for (const catalog_entry& e : catalog())
        if (e.id == id)
            return e;
    throw domain_error("unknown catalog entry '" + id + "'");
}

inline std::vector<catalog_entry> headline_suite()
{
    std::vector<catalog_entry> out;
    for (const std::string& id : headline_ids())
        out.push_back(find_entry(id));
    return out;
}

inline std::vector<catalog_entry> family_suite(const std::string& family)
{
    std::vector<catalog_entry> out;
    for (const catalog_entry& e : catalog())
        if (e.family == family)
            out.push_back(e);
    if (out.empty())
        throw domain_error("unknown family '" + family + "'");
    return out;
}

} // namespace glasser

#endif
