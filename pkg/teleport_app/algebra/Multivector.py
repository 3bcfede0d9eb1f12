import functools
import logging
import numbers

import numpy as np

logger = logging.getLogger(__name__)

# 2^16 係数まで (密な配列で持つ上限)
MAX_DIM = 16
# 符号表を丸ごと前計算する上限. これより大きい次元は行ごとに計算
TABLE_MAX_DIM = 8


def grade_of(word):
    """ ブレードの次数 = 立っているビット数 """
    return bin(word).count('1')


def blade_label(word):
    """ b_1b_3 形式のブレード名を返す (0 -> '1', 0b101 -> 'b13') """
    if word == 0:
        return '1'
    digits = []
    k = 1
    while word:
        if word & 1:
            digits.append(str(k))
        word >>= 1
        k += 1
    return 'b' + ''.join(digits)


def _check_word(word, dim):
    if word < 0 or word >= 1 << dim:
        raise ValueError(f'blade index {word} not in range to {(1 << dim) - 1}')


def reorder_sign(m1, m2):
    """ b^{m1} b^{m2} を昇順に並べ替える時の符号

    m2の各ビットkについて, m1のkより上位のビット数だけ互換が必要
    """
    swaps = 0
    a = m1 >> 1
    while a:
        swaps += bin(a & m2).count('1')
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(m1, m2, dim):
    """ 基底ブレード同士の幾何積

    Euclid計量なので b_k^2 = +1. 結果のブレードはXOR, 符号は並べ替えで決まる
    """
    _check_word(m1, dim)
    _check_word(m2, dim)
    return m1 ^ m2, reorder_sign(m1, m2)


@functools.lru_cache(maxsize=None)
def _popcounts(dim):
    words = np.arange(1 << dim)
    counts = np.zeros(1 << dim, dtype=np.int64)
    for k in range(dim):
        counts += (words >> k) & 1
    return counts


def _sign_row(m1, dim):
    words = np.arange(1 << dim)
    popcounts = _popcounts(dim)
    swaps = np.zeros(1 << dim, dtype=np.int64)
    a = m1 >> 1
    while a:
        swaps += popcounts[a & words]
        a >>= 1
    return np.where(swaps & 1, -1.0, 1.0)


@functools.lru_cache(maxsize=None)
def _sign_table(dim):
    table = np.stack([_sign_row(m1, dim) for m1 in range(1 << dim)])
    table.flags.writeable = False
    logger.debug({'action': 'sign_table', 'status': 'built', 'dim': dim})
    return table


def _signs(m1, dim):
    if dim <= TABLE_MAX_DIM:
        return _sign_table(dim)[m1]
    return _sign_row(m1, dim)


class Multivector(object):
    """ Cl(n) の多重ベクトル

    coeffs[m] がブレード m の係数. ビット k-1 が b_k の有無 (b_1 <-> 0b001)
    生成後は変更しない
    """
    def __init__(self, coeffs):
        coeffs = np.array(coeffs, dtype=float)
        if coeffs.ndim != 1:
            raise ValueError(f'coefficients must be a flat sequence, got shape {coeffs.shape}')
        size = coeffs.shape[0]
        dim = size.bit_length() - 1
        if size < 2 or size != 1 << dim:
            raise ValueError(f'{size} coefficients is not 2^n for 1 <= n')
        if dim > MAX_DIM:
            raise ValueError(f'dimension {dim} exceeds {MAX_DIM}')
        if not np.all(np.isfinite(coeffs)):
            raise ValueError('coefficients must be finite')
        coeffs.flags.writeable = False
        self._coeffs = coeffs
        self.dim = dim

    @classmethod
    def zero(cls, dim):
        _check_dim(dim)
        return cls(np.zeros(1 << dim))

    @classmethod
    def scalar(cls, value, dim):
        return cls.blade(0, dim, value)

    @classmethod
    def blade(cls, word, dim, value=1.0):
        _check_dim(dim)
        _check_word(word, dim)
        coeffs = np.zeros(1 << dim)
        coeffs[word] = value
        return cls(coeffs)

    @classmethod
    def basis_vector(cls, k, dim):
        """ b_k (1始まり) """
        if k < 1 or k > dim:
            raise ValueError(f'basis vector b_{k} not in Cl({dim})')
        return cls.blade(1 << (k - 1), dim)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def size(self):
        return self._coeffs.shape[0]

    def __getitem__(self, word):
        _check_word(word, self.dim)
        return float(self._coeffs[word])

    def __repr__(self):
        terms = [f'{c!r}*{blade_label(m)}' if m else repr(c)
                 for m, c in enumerate(self._coeffs.tolist()) if c != 0.0]
        body = ' + '.join(terms) if terms else '0'
        return f'Multivector({body})_Cl{self.dim}'

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self._coeffs, other._coeffs)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    __hash__ = None

    def allclose(self, other, atol=1e-12):
        _check_same_dim(self, other)
        return bool(np.allclose(self._coeffs, other._coeffs, rtol=0.0, atol=atol))

    def max_deviation(self, other):
        _check_same_dim(self, other)
        return float(np.max(np.abs(self._coeffs - other._coeffs)))

    def norm(self):
        """ 係数列のEuclidノルム """
        return float(np.linalg.norm(self._coeffs))

    def grade(self, g):
        return grade_projection(self, g)

    # +
    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        _check_same_dim(self, other)
        return self.__class__(self._coeffs + other._coeffs)

    # -
    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        _check_same_dim(self, other)
        return self.__class__(self._coeffs - other._coeffs)

    def __neg__(self):
        return self.__class__(-self._coeffs)

    # * 多重ベクトル同士なら幾何積, 実数ならスカラー倍
    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, numbers.Real):
            return self.__class__(self._coeffs * other)
        return NotImplemented

    # 係数をかけた時
    def __rmul__(self, coefficient):
        if isinstance(coefficient, numbers.Real):
            return self.__class__(self._coeffs * coefficient)
        return NotImplemented

    # /
    def __truediv__(self, divisor):
        if isinstance(divisor, numbers.Real):
            return self.__class__(self._coeffs / divisor)
        return NotImplemented


def _check_dim(dim):
    if dim < 1 or dim > MAX_DIM:
        raise ValueError(f'dimension {dim} not in range 1 to {MAX_DIM}')


def _check_same_dim(a, b):
    if a.dim != b.dim:
        raise TypeError(f'Cannot combine multivectors of Cl({a.dim}) and Cl({b.dim})')


def geometric_product(a, b):
    """ 幾何積 ab. blade_product の双線形拡張 """
    _check_same_dim(a, b)
    words = np.arange(a.size)
    out = np.zeros(a.size)
    bc = b.coeffs
    # 0係数の行は寄与しない
    for m1 in np.flatnonzero(a.coeffs):
        out[m1 ^ words] += a.coeffs[m1] * _signs(int(m1), a.dim) * bc
    return Multivector(out)


def inner_product(a, b):
    """ (ab + ba)/2

    ベクトル同士の定義を任意の次数の対称化積に広げたもの
    """
    _check_same_dim(a, b)
    return (geometric_product(a, b) + geometric_product(b, a)) / 2.0


def outer_product(a, b):
    """ (ab - ba)/2. inner_product と同じく反対称化積として定義 """
    _check_same_dim(a, b)
    return (geometric_product(a, b) - geometric_product(b, a)) / 2.0


def grade_projection(a, g):
    """ 次数gのブレードの係数だけ残す """
    if g < 0 or g > a.dim:
        raise ValueError(f'grade {g} not in range 0 to {a.dim}')
    mask = _popcounts(a.dim) == g
    return Multivector(np.where(mask, a.coeffs, 0.0))
