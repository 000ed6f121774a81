#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dsr/verifier.hpp"

namespace dsr {

namespace {

std::string cache_key(const std::string& g6, int r, int h)
{
    return g6 + '\t' + std::to_string(r) + '\t' + std::to_string(h);
}

std::string hexfloat(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

} // namespace

std::optional<GraphEvaluation> EvaluationCache::find(const std::string& g6, int r, int h) const
{
    const auto it = entries_.find(cache_key(g6, r, h));
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void EvaluationCache::store(const std::string& g6, int r, int h, const GraphEvaluation& e)
{
    entries_[cache_key(g6, r, h)] = e;
    dirty_ = true;
}

void EvaluationCache::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        return;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream fields(line);
        std::string g6, lambda, ck;
        int r = 0, h = 0;
        GraphEvaluation e;
        if (!(fields >> g6 >> r >> h >> lambda >> e.min_degree >> ck >> e.witness_components >>
              e.witness_min_component))
            throw Error("cache file " + path + " line " + std::to_string(lineno) + " is malformed");
        e.lambda1 = std::strtod(lambda.c_str(), nullptr);
        if (ck != "-")
            e.ckappa = std::stoi(ck);
        entries_[cache_key(g6, r, h)] = e;
    }
}

void EvaluationCache::save(const std::string& path) const
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw Error("cannot write cache file " + tmp);
        for (const auto& [key, e] : entries_)
            out << key << '\t' << hexfloat(e.lambda1) << '\t' << e.min_degree << '\t'
                << (e.ckappa ? std::to_string(*e.ckappa) : "-") << '\t' << e.witness_components
                << '\t' << e.witness_min_component << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot replace cache file " + path);
}

} // namespace dsr
