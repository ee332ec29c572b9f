#include "sharp/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sharp/svd.hpp"

namespace sharp {

namespace {

template <class T>
T zero_of() {
    return T{};
}

template <class T>
T one_of() {
    if constexpr (std::is_same_v<T, Gaussian>)
        return Gaussian(1);
    else
        return Complex(1.0, 0.0);
}

bool is_zero_entry(const Gaussian& g) { return g.is_zero(); }
bool is_zero_entry(const Complex& z) { return z == Complex(0.0, 0.0); }

Gaussian conj_entry(const Gaussian& g) { return g.conj(); }
Complex conj_entry(const Complex& z) { return std::conj(z); }

template <class T>
std::vector<T> multiply(const std::vector<T>& a, const std::vector<T>& b, std::size_t n, std::size_t k,
                        std::size_t m) {
    std::vector<T> out(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            const T& ail = a[i * k + l];
            if (is_zero_entry(ail)) continue;
            for (std::size_t j = 0; j < m; ++j) {
                const T& blj = b[l * m + j];
                if (is_zero_entry(blj)) continue;
                out[i * m + j] += ail * blj;
            }
        }
    }
    return out;
}

void require_same_mode(const Matrix& a, const Matrix& b, const char* what) {
    if (a.mode() != b.mode())
        throw Error(ErrorCode::ModeMismatch, std::string(what) + ": operands mix exact and float modes");
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }

void Tolerance::validate() const {
    if (!(rel > 0.0) || !(rank_threshold_factor > 0.0))
        throw Error(ErrorCode::InvalidArgument, "tolerances must be positive");
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, Mode mode) {
    if (mode == Mode::exact) return Matrix(rows, cols, ExactData(rows * cols));
    return Matrix(rows, cols, FloatData(rows * cols));
}

Matrix Matrix::identity(std::size_t n, Mode mode) {
    Matrix m = zero(n, n, mode);
    for (std::size_t i = 0; i < n; ++i) {
        if (mode == Mode::exact)
            m.set(i, i, Gaussian(1));
        else
            m.set(i, i, Complex(1.0));
    }
    return m;
}

Matrix Matrix::exact(std::size_t rows, std::size_t cols, ExactData entries) {
    if (entries.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
    return Matrix(rows, cols, std::move(entries));
}

Matrix Matrix::floating(std::size_t rows, std::size_t cols, FloatData entries) {
    if (entries.size() != rows * cols) throw Error(ErrorCode::ShapeMismatch, "entry count does not match shape");
    return Matrix(rows, cols, std::move(entries));
}

Matrix Matrix::exact(std::initializer_list<std::initializer_list<Gaussian>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ExactData data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged initializer");
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
}

Matrix Matrix::floating(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    FloatData data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) throw Error(ErrorCode::ShapeMismatch, "ragged initializer");
        data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
}

Matrix Matrix::diagonal(const std::vector<Gaussian>& d) {
    Matrix m = zero(d.size(), d.size(), Mode::exact);
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
}

const Matrix::ExactData& Matrix::exact_data() const {
    if (auto p = std::get_if<ExactData>(&data_)) return *p;
    throw Error(ErrorCode::ModeMismatch, "exact entries requested from a float matrix");
}

const Matrix::FloatData& Matrix::float_data() const {
    if (auto p = std::get_if<FloatData>(&data_)) return *p;
    throw Error(ErrorCode::ModeMismatch, "float entries requested from an exact matrix");
}

Complex Matrix::value(std::size_t i, std::size_t j) const {
    if (mode() == Mode::exact) return exact_at(i, j).to_complex();
    return float_at(i, j);
}

Scalar Matrix::at(std::size_t i, std::size_t j) const {
    if (mode() == Mode::exact) return exact_at(i, j);
    return float_at(i, j);
}

void Matrix::set(std::size_t i, std::size_t j, const Gaussian& v) {
    if (auto p = std::get_if<ExactData>(&data_))
        (*p)[i * cols_ + j] = v;
    else
        std::get<FloatData>(data_)[i * cols_ + j] = v.to_complex();
}

void Matrix::set(std::size_t i, std::size_t j, const Complex& v) {
    if (auto p = std::get_if<FloatData>(&data_))
        (*p)[i * cols_ + j] = v;
    else
        throw Error(ErrorCode::ModeMismatch, "float entry written into an exact matrix");
}

Matrix Matrix::to_float() const {
    if (mode() == Mode::floating) return *this;
    FloatData out;
    out.reserve(rows_ * cols_);
    for (const auto& g : exact_data()) out.push_back(g.to_complex());
    return Matrix(rows_, cols_, std::move(out));
}

Matrix Matrix::to_exact() const {
    if (mode() == Mode::exact) return *this;
    ExactData out;
    out.reserve(rows_ * cols_);
    for (const auto& z : float_data()) out.push_back(Gaussian::from_complex(z));
    return Matrix(rows_, cols_, std::move(out));
}

Matrix Matrix::adjoint() const {
    return std::visit(
        [&](const auto& d) {
            using V = std::decay_t<decltype(d)>;
            V out(d.size());
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = conj_entry(d[i * cols_ + j]);
            return Matrix(cols_, rows_, std::move(out));
        },
        data_);
}

Matrix Matrix::transpose() const {
    return std::visit(
        [&](const auto& d) {
            using V = std::decay_t<decltype(d)>;
            V out(d.size());
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j) out[j * rows_ + i] = d[i * cols_ + j];
            return Matrix(cols_, rows_, std::move(out));
        },
        data_);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
    return std::visit(
        [&](const auto& d) {
            using V = std::decay_t<decltype(d)>;
            V out;
            out.reserve(nr * nc);
            for (std::size_t i = 0; i < nr; ++i)
                for (std::size_t j = 0; j < nc; ++j) out.push_back(d[(r0 + i) * cols_ + c0 + j]);
            return Matrix(nr, nc, std::move(out));
        },
        data_);
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw Error(ErrorCode::ShapeMismatch, "block out of range");
    require_same_mode(*this, m, "set_block");
    std::visit(
        [&](auto& d) {
            using V = std::decay_t<decltype(d)>;
            const V& src = std::get<V>(m.data_);
            for (std::size_t i = 0; i < m.rows_; ++i)
                for (std::size_t j = 0; j < m.cols_; ++j) d[(r0 + i) * cols_ + c0 + j] = src[i * m.cols_ + j];
        },
        data_);
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    if (mode() == Mode::exact) {
        for (const auto& g : exact_data()) s += std::norm(g.to_complex());
    } else {
        for (const auto& z : float_data()) s += std::norm(z);
    }
    return std::sqrt(s);
}

Scalar Matrix::trace() const {
    require_square(*this, "trace");
    return std::visit(
        [&](const auto& d) -> Scalar {
            using T = typename std::decay_t<decltype(d)>::value_type;
            T t = zero_of<T>();
            for (std::size_t i = 0; i < rows_; ++i) t += d[i * cols_ + i];
            return t;
        },
        data_);
}

bool Matrix::is_zero() const {
    return std::visit(
        [](const auto& d) { return std::all_of(d.begin(), d.end(), [](const auto& x) { return is_zero_entry(x); }); },
        data_);
}

std::string Matrix::debug_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            if (mode() == Mode::exact) {
                const auto& g = exact_at(i, j);
                os << g.re.str();
                if (!g.im.is_zero()) os << "+" << g.im.str() << "i";
            } else {
                os << float_at(i, j);
            }
        }
    }
    os << "]";
    return os.str();
}

Matrix Matrix::operator-() const {
    return std::visit(
        [&](const auto& d) {
            using V = std::decay_t<decltype(d)>;
            V out;
            out.reserve(d.size());
            for (const auto& x : d) out.push_back(-x);
            return Matrix(rows_, cols_, std::move(out));
        },
        data_);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "addition");
    require_same_mode(a, b, "addition");
    return std::visit(
        [&](const auto& d) {
            using V = std::decay_t<decltype(d)>;
            const V& e = std::get<V>(b.data_);
            V out(d);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += e[i];
            return Matrix(a.rows_, a.cols_, std::move(out));
        },
        a.data_);
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "subtraction");
    require_same_mode(a, b, "subtraction");
    return std::visit(
        [&](const auto& d) {
            using V = std::decay_t<decltype(d)>;
            const V& e = std::get<V>(b.data_);
            V out(d);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] -= e[i];
            return Matrix(a.rows_, a.cols_, std::move(out));
        },
        a.data_);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw Error(ErrorCode::ShapeMismatch, "product of " + std::to_string(a.rows_) + "x" +
                                                  std::to_string(a.cols_) + " and " + std::to_string(b.rows_) +
                                                  "x" + std::to_string(b.cols_));
    require_same_mode(a, b, "product");
    return std::visit(
        [&](const auto& d) {
            using V = std::decay_t<decltype(d)>;
            return Matrix(a.rows_, b.cols_, multiply(d, std::get<V>(b.data_), a.rows_, a.cols_, b.cols_));
        },
        a.data_);
}

Matrix operator*(const Gaussian& s, const Matrix& m) {
    if (m.mode() == Mode::floating) return s.to_complex() * m;
    Matrix::ExactData out;
    out.reserve(m.rows_ * m.cols_);
    for (const auto& x : m.exact_data()) out.push_back(s * x);
    return Matrix(m.rows_, m.cols_, std::move(out));
}

Matrix operator*(const Complex& s, const Matrix& m) {
    if (m.mode() == Mode::exact) throw Error(ErrorCode::ModeMismatch, "float scalar times exact matrix");
    Matrix::FloatData out;
    out.reserve(m.rows_ * m.cols_);
    for (const auto& x : m.float_data()) out.push_back(s * x);
    return Matrix(m.rows_, m.cols_, std::move(out));
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "hstack row mismatch");
    require_same_mode(a, b, "hstack");
    Matrix out = Matrix::zero(a.rows(), a.cols() + b.cols(), a.mode());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "vstack column mismatch");
    require_same_mode(a, b, "vstack");
    Matrix out = Matrix::zero(a.rows() + b.rows(), a.cols(), a.mode());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

Matrix block_diag(const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    Mode mode = Mode::exact;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
        if (b.mode() == Mode::floating) mode = Mode::floating;
    }
    Matrix out = Matrix::zero(r, c, mode);
    std::size_t i = 0, j = 0;
    for (const auto& b : blocks) {
        out.set_block(i, j, b.with_mode(mode));
        i += b.rows();
        j += b.cols();
    }
    return out;
}

Matrix blocks2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    return vstack(hstack(a, b), hstack(c, d));
}

Matrix power(const Matrix& m, unsigned k) {
    require_square(m, "power");
    Matrix out = Matrix::identity(m.rows(), m.mode());
    for (unsigned i = 0; i < k; ++i) out = out * m;
    return out;
}

void unify_modes(Matrix& a, Matrix& b) {
    if (a.mode() != b.mode()) {
        a = a.to_float();
        b = b.to_float();
    }
}

void require_square(const Matrix& m, const char* what) {
    if (!m.is_square())
        throw Error(ErrorCode::NonSquare, std::string(what) + ": expected a square matrix, got " +
                                              std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::ShapeMismatch, std::string(what) + ": shapes differ");
}

Echelon echelon(const Matrix& m) {
    if (m.mode() != Mode::exact) throw Error(ErrorCode::ModeMismatch, "echelon form is exact-only");
    std::vector<Gaussian> a = m.exact_data();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        const Gaussian inv = Gaussian(1) / a[r * cols + c];
        for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = a[r * cols + j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i * cols + c].is_zero()) continue;
            const Gaussian f = a[i * cols + c];
            for (std::size_t j = c; j < cols; ++j) {
                if (!a[r * cols + j].is_zero()) a[i * cols + j] -= f * a[r * cols + j];
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {Matrix::exact(rows, cols, std::move(a)), std::move(pivots)};
}

std::size_t rank(const Matrix& m, const Tolerance& tol) {
    if (m.empty()) return 0;
    if (m.mode() == Mode::exact) return echelon(m).pivots.size();
    tol.validate();
    const auto s = svd(m).sigma;
    if (s.empty() || s.front() == 0.0) return 0;
    const double cut = tol.rank_threshold_factor * s.front();
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double x) { return x > cut; }));
}

bool is_projector(const Matrix& m, const Tolerance& tol) {
    require_square(m, "is_projector");
    const Matrix sq = m * m;
    if (m.mode() == Mode::exact) return sq == m;
    const double n = m.frobenius_norm();
    return (sq - m).frobenius_norm() <= tol.rel * std::max(1.0, n * n);
}

bool approx_eq(const Matrix& x, const Matrix& y, const Tolerance& tol) {
    require_same_shape(x, y, "approx_eq");
    require_same_mode(x, y, "approx_eq");
    if (x.mode() == Mode::exact) return x == y;
    const double scale = std::max({1.0, x.frobenius_norm(), y.frobenius_norm()});
    return (x - y).frobenius_norm() <= tol.rel * scale;
}

bool commutes(const Matrix& x, const Matrix& y, const Tolerance& tol) { return approx_eq(x * y, y * x, tol); }

Matrix inverse(const Matrix& m, const Tolerance& tol) {
    require_square(m, "inverse");
    const std::size_t n = m.rows();
    if (m.mode() == Mode::exact) {
        const Echelon e = echelon(hstack(m, Matrix::identity(n, Mode::exact)));
        if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
        return e.reduced.block(0, n, n, n);
    }
    tol.validate();
    std::vector<Complex> a = m.float_data();
    std::vector<Complex> inv = Matrix::identity(n, Mode::floating).float_data();
    double scale = 0.0;
    for (const auto& z : a) scale = std::max(scale, std::abs(z));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(a[i * n + c]) > std::abs(a[p * n + c])) p = i;
        if (std::abs(a[p * n + c]) <= 1e-14 * static_cast<double>(n) * scale || scale == 0.0)
            throw Error(ErrorCode::Singular, "matrix is numerically singular");
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a[p * n + j], a[c * n + j]);
                std::swap(inv[p * n + j], inv[c * n + j]);
            }
        }
        const Complex d = 1.0 / a[c * n + c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c * n + j] *= d;
            inv[c * n + j] *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            const Complex f = a[i * n + c];
            if (f == Complex(0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a[i * n + j] -= f * a[c * n + j];
                inv[i * n + j] -= f * inv[c * n + j];
            }
        }
    }
    return Matrix::floating(n, n, std::move(inv));
}

bool is_nonsingular(const Matrix& m, const Tolerance& tol) {
    require_square(m, "is_nonsingular");
    return rank(m, tol) == m.rows();
}

}  // namespace sharp
