#include "symcurve/graded_module.hpp"

#include <json.hpp>

namespace symcurve {

GradedModule::GradedModule(int genus, int min_degree, std::vector<std::size_t> dims,
                           std::map<int, std::map<int, Matrix>> actions)
    : genus_(genus), min_degree_(min_degree), dims_(std::move(dims)), actions_(std::move(actions)) {
    if (genus < 0 || genus > kMaxGenus)
        throw ModuleError("module genus out of range");
    if (dims_.empty())
        throw ModuleError("module needs at least one degree");
    validate();
}

std::size_t GradedModule::dim(int d) const {
    if (!in_range(d))
        return 0;
    return dims_[static_cast<std::size_t>(d - min_degree_)];
}

Matrix GradedModule::generator_action(int generator, int d) const {
    const int shift = generator == z_index(genus_) ? 2 : 1;
    auto it = actions_.find(generator);
    if (it != actions_.end()) {
        auto jt = it->second.find(d);
        if (jt != it->second.end() && in_range(d) && in_range(d + shift))
            return jt->second;
    }
    return Matrix(dim(d + shift), dim(d));
}

Matrix GradedModule::element_action(const Element& a, int d) const {
    if (a.genus() != genus_)
        throw AmbientMismatch("module action: element genus differs from module genus");
    if (!a.is_homogeneous())
        throw std::invalid_argument("module action: inhomogeneous element");
    const int k = a.is_zero() ? 0 : a.degree();
    Matrix total(dim(d + k), dim(d));
    for (const auto& [mono, coeff] : a.terms()) {
        Matrix acc = Matrix::identity(dim(d));
        int deg = d;
        for (unsigned p = 0; p < mono.z_exponent; ++p) {
            acc = generator_action(z_index(genus_), deg) * acc;
            deg += 2;
        }
        auto idx = mono.indices();
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
            acc = generator_action(*it, deg) * acc;
            deg += 1;
        }
        total = total + coeff * acc;
    }
    return total;
}

void GradedModule::validate() const {
    for (const auto& [gen, by_degree] : actions_) {
        if (gen < 1 || gen > z_index(genus_))
            throw ModuleError("action for unknown generator index " + std::to_string(gen));
        const int shift = gen == z_index(genus_) ? 2 : 1;
        for (const auto& [d, m] : by_degree) {
            if (!in_range(d) || !in_range(d + shift))
                continue;
            if (m.rows() != dim(d + shift) || m.cols() != dim(d))
                throw ModuleError("action matrix for generator " + std::to_string(gen) + " at degree " +
                                  std::to_string(d) + " has wrong shape");
        }
    }
    const int zi = z_index(genus_);
    for (int d = min_degree(); d <= max_degree(); ++d) {
        for (int i = 1; i <= 2 * genus_; ++i) {
            if (in_range(d + 2) && !(generator_action(i, d + 1) * generator_action(i, d)).is_zero())
                throw ModuleError("e" + std::to_string(i) + " does not square to zero at degree " +
                                  std::to_string(d));
            for (int j = i + 1; j <= 2 * genus_ && in_range(d + 2); ++j) {
                Matrix ij = generator_action(i, d + 1) * generator_action(j, d);
                Matrix ji = generator_action(j, d + 1) * generator_action(i, d);
                if (!(ij + ji).is_zero())
                    throw ModuleError("e" + std::to_string(i) + " and e" + std::to_string(j) +
                                      " do not anticommute at degree " + std::to_string(d));
            }
            if (in_range(d + 3)) {
                Matrix ze = generator_action(zi, d + 1) * generator_action(i, d);
                Matrix ez = generator_action(i, d + 2) * generator_action(zi, d);
                if (!(ze - ez).is_zero())
                    throw ModuleError("z and e" + std::to_string(i) + " do not commute at degree " +
                                      std::to_string(d));
            }
        }
    }
}

GradedModule ring_module(int genus, int max_degree) {
    std::vector<std::size_t> dims;
    for (int d = 0; d <= max_degree; ++d)
        dims.push_back(degree_dimension(genus, d));
    std::map<int, std::map<int, Matrix>> actions;
    for (int i = 1; i <= 2 * genus; ++i)
        for (int d = 0; d + 1 <= max_degree; ++d)
            actions[i][d] = multiplication_map(Element::generator(genus, i), d).matrix;
    for (int d = 0; d + 2 <= max_degree; ++d)
        actions[GradedModule::z_index(genus)][d] = multiplication_map(Element::z(genus), d).matrix;
    return GradedModule(genus, 0, std::move(dims), std::move(actions));
}

GradedModule shifted(const GradedModule& m, int shift) {
    std::vector<std::size_t> dims;
    for (int d = m.min_degree(); d <= m.max_degree(); ++d)
        dims.push_back(m.dim(d));
    std::map<int, std::map<int, Matrix>> actions;
    for (const auto& [gen, by_degree] : m.actions())
        for (const auto& [d, mat] : by_degree)
            actions[gen][d + shift] = mat;
    return GradedModule(m.genus(), m.min_degree() + shift, std::move(dims), std::move(actions));
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
    if (a.genus() != b.genus())
        throw AmbientMismatch("direct_sum: modules over different genera");
    const int lo = std::min(a.min_degree(), b.min_degree());
    const int hi = std::max(a.max_degree(), b.max_degree());
    std::vector<std::size_t> dims;
    for (int d = lo; d <= hi; ++d)
        dims.push_back(a.dim(d) + b.dim(d));
    std::map<int, std::map<int, Matrix>> actions;
    for (int gen = 1; gen <= GradedModule::z_index(a.genus()); ++gen) {
        const int shift = gen == GradedModule::z_index(a.genus()) ? 2 : 1;
        for (int d = lo; d + shift <= hi; ++d) {
            Matrix ma = a.generator_action(gen, d);
            Matrix mb = b.generator_action(gen, d);
            Matrix block(ma.rows() + mb.rows(), ma.cols() + mb.cols());
            for (std::size_t i = 0; i < ma.rows(); ++i)
                for (std::size_t j = 0; j < ma.cols(); ++j)
                    block(i, j) = ma(i, j);
            for (std::size_t i = 0; i < mb.rows(); ++i)
                for (std::size_t j = 0; j < mb.cols(); ++j)
                    block(ma.rows() + i, ma.cols() + j) = mb(i, j);
            if (!block.is_zero())
                actions[gen][d] = std::move(block);
        }
    }
    return GradedModule(a.genus(), lo, std::move(dims), std::move(actions));
}

namespace {

Subspace image_of(const Matrix& action, std::size_t target_dim) {
    if (action.cols() == 0 || action.rows() == 0)
        return Subspace::zero(target_dim);
    return Subspace::column_space(action);
}

}  // namespace

Subspace submodule_degree_component(const GradedModule& m, const IdealSpec& spec, int d) {
    if (spec.genus() != m.genus())
        throw AmbientMismatch("submodule: ideal and module over different genera");
    const std::size_t target = m.dim(d);
    if (spec.kind == IdealKind::Principal) {
        Element gen = spec.generator * Element::z(spec.genus(), spec.parameter);
        return image_of(m.element_action(gen, d - gen.degree()), target);
    }
    // I * M is spanned by x * M over the generators x of I.
    std::vector<Vector> columns;
    for (const auto& x : ideal_generators(spec, d - m.min_degree())) {
        const int from = d - x.degree();
        if (!m.in_range(from) || m.dim(from) == 0)
            continue;
        Matrix a = m.element_action(x, from);
        for (std::size_t j = 0; j < a.cols(); ++j)
            columns.push_back(a.column(j));
    }
    if (columns.empty() || target == 0)
        return Subspace::zero(target);
    return Subspace(target, Matrix::from_rows(columns, target));
}

Subspace module_colon_component(const GradedModule& m, const IdealSpec& spec, int d) {
    if (spec.genus() != m.genus())
        throw AmbientMismatch("module colon: ideal and module over different genera");
    const unsigned k = spec.kind == IdealKind::Colon ? spec.parameter : 0;
    const int lifted = d + 2 * static_cast<int>(k);
    if (!m.in_range(lifted) || !m.in_range(d))
        throw std::out_of_range("module colon needs degree " + std::to_string(lifted) + " inside the module range");
    Element gen = spec.generator;
    if (spec.kind == IdealKind::Principal)
        gen = gen * Element::z(spec.genus(), spec.parameter);
    Subspace target = image_of(m.element_action(gen, lifted - gen.degree()), m.dim(lifted));
    if (k == 0)
        return target;
    return image_and_preimage(m.element_action(Element::z(spec.genus(), k), d), target).preimage;
}

namespace {

int parse_generator(const std::string& name, int genus) {
    if (name == "z")
        return GradedModule::z_index(genus);
    if (name.size() >= 2 && name[0] == 'e') {
        int i = 0;
        try {
            i = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw ModuleError("bad generator name '" + name + "'");
        }
        if (i >= 1 && i <= 2 * genus)
            return i;
    }
    throw ModuleError("bad generator name '" + name + "'");
}

Rational parse_entry(const nlohmann::json& v) {
    if (v.is_string())
        return Rational::parse(v.get<std::string>());
    if (v.is_number_integer())
        return Rational(v.get<long>());
    throw ModuleError("matrix entries must be rational strings \"p/q\" or integers");
}

}  // namespace

GradedModule module_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ModuleError(std::string("module JSON: ") + e.what());
    }
    try {
        if (doc.value("schema_version", 0) != 1)
            throw ModuleError("module JSON: unsupported schema_version");
        const int genus = doc.at("genus").get<int>();
        const int min_degree = doc.value("min_degree", 0);
        std::vector<std::size_t> dims = doc.at("dims").get<std::vector<std::size_t>>();
        std::map<int, std::map<int, Matrix>> actions;
        for (const auto& a : doc.value("actions", nlohmann::json::array())) {
            const int gen = parse_generator(a.at("generator").get<std::string>(), genus);
            const int d = a.at("source_degree").get<int>();
            const auto& rows = a.at("matrix");
            std::vector<Vector> parsed;
            std::size_t cols = 0;
            for (const auto& r : rows) {
                Vector v;
                for (const auto& e : r)
                    v.push_back(parse_entry(e));
                cols = v.size();
                parsed.push_back(std::move(v));
            }
            Matrix mat = Matrix::from_rows(parsed, cols);
            const int shift = gen == GradedModule::z_index(genus) ? 2 : 1;
            const auto in = [&](int x) {
                return x >= min_degree && x < min_degree + static_cast<int>(dims.size());
            };
            std::size_t src = in(d) ? dims[static_cast<std::size_t>(d - min_degree)] : 0;
            std::size_t dst = in(d + shift) ? dims[static_cast<std::size_t>(d + shift - min_degree)] : 0;
            if (parsed.empty())
                mat = Matrix(dst, src);
            actions[gen][d] = std::move(mat);
        }
        return GradedModule(genus, min_degree, std::move(dims), std::move(actions));
    } catch (const nlohmann::json::exception& e) {
        throw ModuleError(std::string("module JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ModuleError(std::string("module JSON: ") + e.what());
    }
}

std::string module_to_json(const GradedModule& m) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["genus"] = m.genus();
    doc["min_degree"] = m.min_degree();
    std::vector<std::size_t> dims;
    for (int d = m.min_degree(); d <= m.max_degree(); ++d)
        dims.push_back(m.dim(d));
    doc["dims"] = dims;
    doc["actions"] = nlohmann::ordered_json::array();
    for (const auto& [gen, by_degree] : m.actions())
        for (const auto& [d, mat] : by_degree) {
            nlohmann::ordered_json a;
            a["generator"] = gen == GradedModule::z_index(m.genus()) ? std::string("z") : "e" + std::to_string(gen);
            a["source_degree"] = d;
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < mat.rows(); ++i) {
                nlohmann::ordered_json r = nlohmann::ordered_json::array();
                for (std::size_t j = 0; j < mat.cols(); ++j)
                    r.push_back(mat(i, j).to_string());
                rows.push_back(std::move(r));
            }
            a["matrix"] = std::move(rows);
            doc["actions"].push_back(std::move(a));
        }
    return doc.dump(2);
}

}  // namespace symcurve
