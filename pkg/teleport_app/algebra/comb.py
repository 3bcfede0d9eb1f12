""" 櫛 (comb) による2進列と多重ベクトルの対応

c_{A_1...A_n} = b_1^{A_1} ... b_n^{A_n}, b_k^0 = 1
ビット列 (A_1, ..., A_n) はブレード番号のビット k-1 に A_k を置いたものと同一視する
"""
import math

import numpy as np

from .Multivector import Multivector, reorder_sign

SQRT1_2 = 1 / math.sqrt(2)


def bits_of(key):
    """ '101' や (1, 0, 1) をタプル (A_1, ..., A_n) にそろえる """
    if isinstance(key, str):
        if not key or any(ch not in '01' for ch in key):
            raise ValueError(f'bit string {key!r} must be made of 0 and 1')
        return tuple(int(ch) for ch in key)
    bits = tuple(int(b) for b in key)
    if not bits or any(b not in (0, 1) for b in bits):
        raise ValueError(f'bit string {key!r} must be made of 0 and 1')
    return bits


def comb(bits):
    """ ビット列 -> ブレード番号 """
    word = 0
    for k, a in enumerate(bits_of(bits)):
        word |= a << k
    return word


def bits_of_word(word, dim):
    """ comb の逆 """
    if word < 0 or word >= 1 << dim:
        raise ValueError(f'blade index {word} not in range to {(1 << dim) - 1}')
    return tuple((word >> k) & 1 for k in range(dim))


def key_of(bits):
    """ ファイル形式で使う 'A1A2...An' 文字列 """
    return ''.join(str(a) for a in bits_of(bits))


def encode(table, dim):
    """ 係数表 {ビット列: 実数} -> 多重ベクトル. 無いキーは0 """
    coeffs = np.zeros(1 << dim)
    for key, value in table.items():
        bits = bits_of(key)
        if len(bits) != dim:
            raise ValueError(f'key {key!r} has {len(bits)} bits, expected {dim}')
        coeffs[comb(bits)] = value
    return Multivector(coeffs)


def decode(mv):
    """ 多重ベクトル -> 全ブレード分の係数表 (ブレード番号順) """
    return {bits_of_word(m, mv.dim): float(c) for m, c in enumerate(mv.coeffs)}


def single_bit(alpha, beta, bit=1, dim=3):
    """ alpha + beta b_bit, つまり alpha c_0 + beta c_1 """
    return encode({(0,) * dim: alpha,
                   tuple(int(k == bit) for k in range(1, dim + 1)): beta}, dim)


def bell_basis(first=1, second=2, dim=3):
    """ 2ビット (first, second) のBell基底に相当する4つの多重ベクトル

    (1 + b_i b_j)/√2, (1 - b_i b_j)/√2, (b_i + b_j)/√2, (b_i - b_j)/√2
    """
    if first == second:
        raise ValueError(f'Bell pair needs two different bits, got {first} twice')
    for k in (first, second):
        if k < 1 or k > dim:
            raise ValueError(f'bit {k} not in range 1 to {dim}')
    i = 1 << (first - 1)
    j = 1 << (second - 1)
    # b_i b_j をブレード i|j に直すときの符号
    order = reorder_sign(i, j)
    pairs = ((0, i | j, order), (0, i | j, -order), (i, j, 1.0), (i, j, -1.0))
    basis = []
    for m1, m2, sign in pairs:
        coeffs = np.zeros(1 << dim)
        coeffs[m1] = SQRT1_2
        coeffs[m2] = sign * SQRT1_2
        basis.append(Multivector(coeffs))
    return tuple(basis)


def bell_carrier():
    """ Φ_23 = (1 + b_2 b_3)/√2 """
    return bell_basis(2, 3)[0]
