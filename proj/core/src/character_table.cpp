#include "branchwork/character_table.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <json.hpp>

#include "branchwork/errors.hpp"

namespace branchwork {

namespace {

// Beta numbers b_i = shape_i + (k-1-i): strictly decreasing, one per row.
std::vector<int> beta_numbers(const std::vector<int>& shape) {
    const int k = static_cast<int>(shape.size());
    std::vector<int> beta(shape.size());
    for (int i = 0; i < k; ++i)
        beta[static_cast<size_t>(i)] = shape[static_cast<size_t>(i)] + (k - 1 - i);
    return beta;
}

std::vector<int> shape_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int k = static_cast<int>(beta.size());
    std::vector<int> shape;
    shape.reserve(beta.size());
    for (int i = 0; i < k; ++i) {
        int part = beta[static_cast<size_t>(i)] - (k - 1 - i);
        if (part > 0)
            shape.push_back(part);
    }
    return shape;
}

} // namespace

const mpz_class& MnEvaluator::value(const Partition& shape, const CycleType& rho) {
    if (shape.size() != rho.n())
        throw std::invalid_argument("mn_character: |shape| != |cycle type|");
    return eval(shape.parts(), rho.partition().parts());
}

const mpz_class& MnEvaluator::eval(const std::vector<int>& shape,
                                   const std::vector<int>& cycles) {
    std::vector<int> key;
    key.reserve(shape.size() + cycles.size() + 1);
    key.insert(key.end(), shape.begin(), shape.end());
    key.push_back(-1);
    key.insert(key.end(), cycles.begin(), cycles.end());
    auto it = memo_.find(key);
    if (it != memo_.end())
        return it->second;

    mpz_class total = 0;
    if (shape.empty()) {
        total = 1;
    } else {
        const int strip = cycles.front();
        const std::vector<int> rest(cycles.begin() + 1, cycles.end());
        const std::vector<int> beta = beta_numbers(shape);
        const int k = static_cast<int>(beta.size());
        for (int i = 0; i < k; ++i) {
            if (beta[static_cast<size_t>(i)] < strip)
                break; // beta is strictly decreasing
            const int target = beta[static_cast<size_t>(i)] - strip;
            int height = 0;
            bool occupied = false;
            for (int j = i + 1; j < k; ++j) {
                const int b = beta[static_cast<size_t>(j)];
                if (b > target) {
                    ++height;
                } else {
                    occupied = (b == target);
                    break;
                }
            }
            if (occupied)
                continue;
            std::vector<int> next_beta = beta;
            next_beta[static_cast<size_t>(i)] = target;
            const mpz_class& sub = eval(shape_from_beta(std::move(next_beta)), rest);
            if (height % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
    }
    return memo_.emplace(std::move(key), std::move(total)).first->second;
}

mpz_class mn_character(const Partition& shape, const CycleType& rho) {
    MnEvaluator ev;
    return ev.value(shape, rho);
}

CharacterTable CharacterTable::build(int n) {
    if (n < 0)
        throw std::invalid_argument("character table: n must be non-negative");
    CharacterTable t;
    t.n_ = n;
    t.shapes_ = partitions_of(n);
    t.classes_.reserve(t.shapes_.size());
    for (const auto& p : t.shapes_)
        t.classes_.emplace_back(p);
    for (std::size_t i = 0; i < t.shapes_.size(); ++i)
        t.index_.emplace(t.shapes_[i], i);
    MnEvaluator ev;
    t.values_.resize(t.shapes_.size());
    for (std::size_t r = 0; r < t.shapes_.size(); ++r) {
        t.values_[r].reserve(t.classes_.size());
        for (const auto& cls : t.classes_)
            t.values_[r].push_back(ev.value(t.shapes_[r], cls));
    }
    return t;
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument("character table: '" + p.to_string() +
                                    "' is not a partition of " + std::to_string(n_));
    return it->second;
}

std::string CharacterTable::to_json() const {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["n"] = n_;
    j["order"] = "desclex";
    nlohmann::ordered_json rows = nlohmann::ordered_json::object();
    for (std::size_t r = 0; r < shapes_.size(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const auto& v : values_[r])
            row.push_back(v.get_str());
        rows[shapes_[r].to_string()] = std::move(row);
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

CharacterTable CharacterTable::from_json(const std::string& text) {
    const auto j = nlohmann::ordered_json::parse(text);
    if (!j.is_object() || j.value("version", 0) != 1)
        throw std::runtime_error("unsupported cache version");
    if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<int>() < 0)
        throw std::runtime_error("bad n field");
    if (j.value("order", "") != std::string("desclex"))
        throw std::runtime_error("unexpected row order");
    const int n = j["n"].get<int>();

    CharacterTable t;
    t.n_ = n;
    t.shapes_ = partitions_of(n);
    for (const auto& p : t.shapes_)
        t.classes_.emplace_back(p);
    for (std::size_t i = 0; i < t.shapes_.size(); ++i)
        t.index_.emplace(t.shapes_[i], i);

    if (!j.contains("rows") || !j["rows"].is_object() ||
        j["rows"].size() != t.shapes_.size())
        throw std::runtime_error("row set does not match p(n)");
    t.values_.resize(t.shapes_.size());
    for (std::size_t r = 0; r < t.shapes_.size(); ++r) {
        const std::string key = t.shapes_[r].to_string();
        if (!j["rows"].contains(key))
            throw std::runtime_error("missing row " + key);
        const auto& row = j["rows"][key];
        if (!row.is_array() || row.size() != t.shapes_.size())
            throw std::runtime_error("row " + key + " has wrong length");
        t.values_[r].reserve(row.size());
        for (const auto& cell : row) {
            if (!cell.is_string())
                throw std::runtime_error("row " + key + " holds a non-string value");
            try {
                t.values_[r].emplace_back(cell.get<std::string>(), 10);
            } catch (const std::exception&) {
                throw std::runtime_error("row " + key + " holds a non-integer value");
            }
        }
    }
    // The identity column equals the hook-length dimension of each row; use
    // that as a value-level integrity check.
    const std::size_t identity = t.shapes_.size() - 1; // (1^n) is lex-smallest
    for (std::size_t r = 0; r < t.shapes_.size(); ++r)
        if (t.values_[r][identity] != hook_dimension(t.shapes_[r]))
            throw std::runtime_error("identity column fails the dimension check");
    return t;
}

std::filesystem::path CharacterTable::cache_file(const std::filesystem::path& dir) const {
    return dir / ("chartable-" + std::to_string(n_) + ".json");
}

void CharacterTable::save(const std::filesystem::path& cache_dir) const {
    std::filesystem::create_directories(cache_dir);
    const std::filesystem::path final_path = cache_file(cache_dir);
    const std::filesystem::path tmp_path =
        final_path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        out << to_json();
        if (!out)
            throw io_error("cannot write " + tmp_path.string());
    }
    std::filesystem::rename(tmp_path, final_path);
}

CharacterTable CharacterTable::load_or_build(int n, const std::filesystem::path& cache_dir) {
    const std::filesystem::path path =
        cache_dir / ("chartable-" + std::to_string(n) + ".json");
    if (std::filesystem::exists(path)) {
        try {
            std::ifstream in(path, std::ios::binary);
            std::ostringstream buffer;
            buffer << in.rdbuf();
            if (!in)
                throw std::runtime_error("unreadable file");
            CharacterTable t = from_json(buffer.str());
            if (t.n() != n)
                throw std::runtime_error("cached table is for a different n");
            return t;
        } catch (const std::exception& e) {
            std::cerr << "warning: character table cache " << path.string()
                      << " is invalid (" << e.what() << "); recomputing\n";
        }
    }
    CharacterTable t = build(n);
    t.save(cache_dir);
    return t;
}

namespace {

std::mutex g_registry_mutex;
std::optional<std::filesystem::path> g_cache_dir;

std::map<int, std::unique_ptr<CharacterTable>>& registry() {
    static std::map<int, std::unique_ptr<CharacterTable>> tables;
    return tables;
}

} // namespace

const CharacterTable& shared_character_table(int n) {
    std::lock_guard lock(g_registry_mutex);
    auto& reg = registry();
    auto it = reg.find(n);
    if (it == reg.end()) {
        CharacterTable t = g_cache_dir ? CharacterTable::load_or_build(n, *g_cache_dir)
                                       : CharacterTable::build(n);
        it = reg.emplace(n, std::make_unique<CharacterTable>(std::move(t))).first;
    }
    return *it->second;
}

void set_character_table_cache_dir(std::filesystem::path dir) {
    std::lock_guard lock(g_registry_mutex);
    g_cache_dir = std::move(dir);
}

} // namespace branchwork
